#pragma once

// Scene files: a JSON object {"version": 1, "polygon": [[x, y], ...],
// "blue": [...], "red": [...]} with integer coordinates.

#include "trisep/enumerate.hpp"
#include "trisep/maxsep.hpp"
#include "trisep/scene.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace trisep {

inline constexpr int kSceneFormatVersion = 1;

// Clockwise polygons are reversed before validation. Throws Syntax for
// malformed text and the scene validation errors otherwise.
Scene parse_scene(std::string_view text, const ValidationOptions& options = {});
// Canonical form: fixed key order, one point per line.
std::string write_scene(const Scene& scene);

Scene load_scene(const std::filesystem::path& path, const ValidationOptions& options = {});
void save_scene(const std::filesystem::path& path, const Scene& scene);

// FNV-1a over the canonical text, as 16 hex digits.
std::string scene_digest(const Scene& scene);
std::uint64_t fnv1a64(std::string_view bytes);

// One JSON object per line, exact coordinates as "p/q" strings.
std::string triangle_json(const CanonicalTriangle& t);
std::string point_json(const Point& p);

} // namespace trisep
