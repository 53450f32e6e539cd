#pragma once

#include "trisep/scene.hpp"

#include <span>
#include <string>

namespace trisep {

enum class Overlay { hull, arrangement, ranks, separators, convex_separator, result };

// Polygon and points, plus the requested overlays computed from the scene.
// An overlay that cannot be computed for this scene is replaced by a comment.
// Coordinates are rounded for display only.
std::string render_svg(const Scene& scene, std::span<const Overlay> overlays = {});

} // namespace trisep
