#include "trisep/scene.hpp"

#include "trisep/error.hpp"

#include <algorithm>
#include <string>

namespace trisep {

namespace {

bool on_segment(const IPoint& a, const IPoint& b, const IPoint& p)
{
    return orient_sign(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d)
{
    const int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    const int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        return true;
    }
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

std::string show(const IPoint& p)
{
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

} // namespace

Int128 polygon_signed_area2(std::span<const IPoint> polygon)
{
    Int128 area = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const IPoint& a = polygon[i];
        const IPoint& b = polygon[(i + 1) % polygon.size()];
        area += static_cast<Int128>(a.x) * b.y - static_cast<Int128>(b.x) * a.y;
    }
    return area;
}

bool polygon_is_simple(std::span<const IPoint> polygon)
{
    const std::size_t n = polygon.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const IPoint& a = polygon[i];
        const IPoint& b = polygon[(i + 1) % n];
        if (a == b) {
            return false;
        }
        // Consecutive edges may only share their common vertex.
        const IPoint& c = polygon[(i + 2) % n];
        if (orient_sign(a, b, c) == 0 && (on_segment(a, b, c) || on_segment(b, c, a))) {
            return false;
        }
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) {
                continue;
            }
            if (segments_touch(a, b, polygon[j], polygon[(j + 1) % n])) {
                return false;
            }
        }
    }
    return polygon_signed_area2(polygon) != 0;
}

bool polygon_is_convex(std::span<const IPoint> polygon)
{
    const auto pts = to_points(polygon);
    return is_strictly_convex_ccw(pts);
}

void orient_counterclockwise(Scene& scene)
{
    if (polygon_signed_area2(scene.polygon) < 0) {
        std::reverse(scene.polygon.begin(), scene.polygon.end());
    }
}

void validate_scene(const Scene& scene, const ValidationOptions& options)
{
    auto check_range = [](const std::vector<IPoint>& pts, const char* what) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
                throw Error(ErrorKind::Syntax, std::string(what) + " coordinate out of range at " + show(p), i);
            }
        }
    };
    check_range(scene.polygon, "polygon");
    check_range(scene.blue, "blue");
    check_range(scene.red, "red");

    if (scene.blue.size() < 3) {
        throw Error(ErrorKind::FewerThanThreePoints, "at least three blue points are required");
    }
    if (scene.polygon.size() < 3) {
        throw Error(ErrorKind::NonSimplePolygon, "environment polygon has fewer than three vertices");
    }

    if (!polygon_is_simple(scene.polygon)) {
        throw Error(ErrorKind::NonSimplePolygon, "environment polygon is not simple");
    }
    if (polygon_signed_area2(scene.polygon) < 0) {
        throw Error(ErrorKind::NonSimplePolygon, "environment polygon is clockwise");
    }

    const auto poly = to_points(scene.polygon);
    auto check_inside = [&](const std::vector<IPoint>& pts, const char* what) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (point_in_simple_polygon(Point(pts[i]), poly) != PolygonLocation::inside) {
                throw Error(ErrorKind::PointOutsideEnvironment,
                            std::string(what) + " point " + std::to_string(i) + " " + show(pts[i]) +
                                " is not strictly inside the environment",
                            i);
            }
        }
    };
    check_inside(scene.blue, "blue");
    check_inside(scene.red, "red");
    if (convex_hull(std::span<const IPoint>(scene.blue)).size() < 3) {
        throw Error(ErrorKind::AllCollinear, "blue points are collinear");
    }

    if (!options.general_position) {
        return;
    }
    std::vector<IPoint> all;
    all.reserve(scene.blue.size() + scene.red.size() + scene.polygon.size());
    all.insert(all.end(), scene.blue.begin(), scene.blue.end());
    all.insert(all.end(), scene.red.begin(), scene.red.end());
    all.insert(all.end(), scene.polygon.begin(), scene.polygon.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i] == all[j]) {
                throw Error(ErrorKind::GeneralPositionViolation, "duplicate point " + show(all[i]), i);
            }
            for (std::size_t k = j + 1; k < all.size(); ++k) {
                if (orient_sign(all[i], all[j], all[k]) == 0) {
                    throw Error(ErrorKind::GeneralPositionViolation,
                                "collinear triple " + show(all[i]) + " " + show(all[j]) + " " + show(all[k]), i);
                }
            }
        }
    }
}

} // namespace trisep
