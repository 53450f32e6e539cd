#pragma once

#include "trisep/geometry.hpp"

#include <cstdint>
#include <vector>

namespace trisep {

inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 31;

// Blue points B, red points R and the environment polygon P (counterclockwise).
struct Scene {
    std::vector<IPoint> blue;
    std::vector<IPoint> red;
    std::vector<IPoint> polygon;

    friend bool operator==(const Scene&, const Scene&) = default;
};

struct ValidationOptions {
    // The O(n^3) collinearity scan; benchmark-sized scenes switch it off.
    bool general_position = true;
};

// Throws Error naming the first violated invariant: coordinate range,
// polygon simplicity and orientation, strict interiority of every point,
// and (optionally) no three collinear points among B, R and the polygon.
void validate_scene(const Scene& scene, const ValidationOptions& options = {});

// Reverses a clockwise polygon; leaves counterclockwise input untouched.
void orient_counterclockwise(Scene& scene);

bool polygon_is_simple(std::span<const IPoint> polygon);
bool polygon_is_convex(std::span<const IPoint> polygon);
Int128 polygon_signed_area2(std::span<const IPoint> polygon);

} // namespace trisep
