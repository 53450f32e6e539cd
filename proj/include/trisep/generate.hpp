#pragma once

// Deterministic scene generators. Every output satisfies the scene
// invariants and builds an arrangement without general-position failures.

#include "trisep/scene.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace trisep {

// Uniform integer in [lo, hi] by rejection, identical on every platform.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

enum class EnvShape { convex, star };

struct RandomSceneParams {
    std::uint64_t seed = 1;
    std::size_t blue = 8;
    std::size_t red = 4;
    std::size_t vertices = 8;
    EnvShape shape = EnvShape::convex;
    // Permit red points inside the blue hull (negative tests).
    bool allow_red_inside = false;
};

Scene generate_random(const RandomSceneParams& params);

// Three groups of t red points, each group far out along t lines fanned
// around one vertex of a blue triangle. Any choice of one fan line per
// vertex bounds a separator, so the count grows at least like t^3.
Scene generate_lower_bound(std::size_t t);

// Blue points on a circle, red points on a slightly larger circle and a
// convex environment too snug for any triangle around the blue hull.
// Needs at least four blue points. Verified separator-free by brute force.
Scene generate_tight_ring(std::size_t blue, std::size_t red, std::uint64_t seed = 1);

} // namespace trisep
