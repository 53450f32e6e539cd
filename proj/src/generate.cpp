#include "trisep/generate.hpp"

#include "trisep/arrangement.hpp"
#include "trisep/enumerate.hpp"
#include "trisep/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace trisep {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi)
{
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(rng());
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

namespace {

constexpr int kAttempts = 200;
constexpr std::int64_t kAngleSteps = 1 << 20;

double angle_of(std::int64_t step)
{
    return 2.0 * std::numbers::pi * static_cast<double>(step) / static_cast<double>(kAngleSteps);
}

IPoint polar(double radius, double angle)
{
    return IPoint{std::llround(radius * std::cos(angle)), std::llround(radius * std::sin(angle))};
}

std::vector<std::int64_t> sorted_angles(std::mt19937_64& rng, std::size_t k)
{
    std::vector<std::int64_t> a;
    while (a.size() < k) {
        a.push_back(uniform_int(rng, 0, kAngleSteps - 1));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return a;
}

// Largest circular gap between consecutive sorted angles.
std::int64_t max_gap(const std::vector<std::int64_t>& a)
{
    std::int64_t gap = a.front() + kAngleSteps - a.back();
    for (std::size_t i = 1; i < a.size(); ++i) {
        gap = std::max(gap, a[i] - a[i - 1]);
    }
    return gap;
}

bool builds_cleanly(const Scene& scene)
{
    try {
        build_arrangement(scene);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::GeneralPositionViolation) {
            return false;
        }
        throw;
    }
}

bool valid_scene(const Scene& scene, bool general_position)
{
    try {
        validate_scene(scene, ValidationOptions{general_position});
        return true;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

Scene generate_random(const RandomSceneParams& params)
{
    if (params.blue < 3) {
        throw Error(ErrorKind::FewerThanThreePoints, "at least three blue points are required");
    }
    if (params.vertices < 3) {
        throw Error(ErrorKind::InvalidArgument, "the environment needs at least three vertices");
    }
    const std::size_t n = params.blue + params.red;
    const bool small = n <= 64;
    const double radius = small ? 10000.0 : static_cast<double>(1 << 20);
    const std::int64_t cluster = static_cast<std::int64_t>(radius / 5);
    std::mt19937_64 rng(params.seed);

    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Scene s;
        const auto angles = sorted_angles(rng, params.vertices);
        if (max_gap(angles) >= kAngleSteps / 2) {
            continue;
        }
        for (std::int64_t a : angles) {
            const double r = params.shape == EnvShape::convex
                                 ? radius
                                 : static_cast<double>(uniform_int(rng, static_cast<std::int64_t>(radius * 0.3),
                                                                   static_cast<std::int64_t>(radius)));
            s.polygon.push_back(polar(r, angle_of(a)));
        }
        if (!polygon_is_simple(s.polygon) || (params.shape == EnvShape::convex && !polygon_is_convex(s.polygon))) {
            continue;
        }
        const auto poly = to_points(s.polygon);
        auto inside = [&poly](const IPoint& p) {
            return point_in_simple_polygon(Point(p), poly) == PolygonLocation::inside;
        };

        int budget = 100000;
        while (s.blue.size() < params.blue && --budget > 0) {
            const IPoint p{uniform_int(rng, -cluster, cluster), uniform_int(rng, -cluster, cluster)};
            if (p.x * p.x + p.y * p.y <= cluster * cluster && inside(p)) {
                s.blue.push_back(p);
            }
        }
        if (s.blue.size() < params.blue) {
            continue;
        }
        const ConvexChain hull = convex_hull(std::span<const IPoint>(s.blue));
        if (hull.size() < 3) {
            continue;
        }
        if (params.allow_red_inside && params.red > 0) {
            // Centroid of three hull vertices, strictly inside the hull.
            const IPoint a = *hull[0].as_integer();
            const IPoint b = *hull[1].as_integer();
            const IPoint c = *hull[2].as_integer();
            s.red.push_back(IPoint{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3});
        }
        const std::int64_t reach = static_cast<std::int64_t>(radius);
        while (s.red.size() < params.red && --budget > 0) {
            const IPoint p{uniform_int(rng, -reach, reach), uniform_int(rng, -reach, reach)};
            if (!inside(p)) {
                continue;
            }
            if (!params.allow_red_inside && locate_in_hull(Point(p), hull) != HullLocation::outside) {
                continue;
            }
            s.red.push_back(p);
        }
        if (s.red.size() < params.red || !valid_scene(s, small)) {
            continue;
        }
        if (small && !params.allow_red_inside && !builds_cleanly(s)) {
            continue;
        }
        return s;
    }
    throw Error(ErrorKind::GenerationFailed, "no valid random scene after " + std::to_string(kAttempts) + " attempts");
}

Scene generate_lower_bound(std::size_t t)
{
    if (t < 2) {
        throw Error(ErrorKind::InvalidArgument, "lower-bound family needs t >= 2");
    }
    const std::array<IPoint, 3> hull{IPoint{0, 20}, IPoint{-17, -10}, IPoint{17, -10}};
    std::mt19937_64 rng(t);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Scene s;
        s.polygon = {{-20000, -20000}, {20000, -20000}, {20000, 20000}, {-20000, 20000}};
        s.blue.assign(hull.begin(), hull.end());
        for (std::size_t g = 0; g < 3; ++g) {
            const IPoint& apex = hull[g];
            const IPoint& p = hull[(g + 1) % 3];
            const IPoint& q = hull[(g + 2) % 3];
            // Fan around the direction of the opposite edge.
            const std::int64_t dx = q.x - p.x;
            const std::int64_t dy = q.y - p.y;
            for (std::size_t j = 0; j < t; ++j) {
                const std::int64_t off = 2 * static_cast<std::int64_t>(j) - static_cast<std::int64_t>(t - 1);
                const std::int64_t fx = 10 * dx - off * dy;
                const std::int64_t fy = 10 * dy + off * dx;
                const std::int64_t m = uniform_int(rng, 5, 12) * (j % 2 ? -1 : 1);
                s.red.push_back(IPoint{apex.x + m * fx, apex.y + m * fy});
            }
        }
        if (valid_scene(s, true) && builds_cleanly(s)) {
            return s;
        }
    }
    throw Error(ErrorKind::GenerationFailed, "no general-position lower-bound scene for t = " + std::to_string(t));
}

Scene generate_tight_ring(std::size_t blue, std::size_t red, std::uint64_t seed)
{
    if (blue < 3) {
        throw Error(ErrorKind::FewerThanThreePoints, "at least three blue points are required");
    }
    if (blue < 4) {
        throw Error(ErrorKind::InvalidArgument, "three blue points are their own triangular separator");
    }
    if (red < 8) {
        throw Error(ErrorKind::InvalidArgument, "a tight ring needs at least 8 red points");
    }
    constexpr double rho = 1000.0;
    const std::size_t k = std::max<std::size_t>(12, red);
    std::mt19937_64 rng(seed);
    auto jittered = [&rng](std::size_t i, std::size_t count, double phase) {
        const std::int64_t slot = kAngleSteps / static_cast<std::int64_t>(count);
        const std::int64_t base = static_cast<std::int64_t>((static_cast<double>(i) + phase) * static_cast<double>(slot));
        return angle_of(base + uniform_int(rng, -slot / 4, slot / 4));
    };
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Scene s;
        const double turn = angle_of(uniform_int(rng, 0, kAngleSteps - 1));
        for (std::size_t i = 0; i < k; ++i) {
            s.polygon.push_back(polar(1.45 * rho, turn + angle_of(static_cast<std::int64_t>(i) * kAngleSteps /
                                                                   static_cast<std::int64_t>(k))));
        }
        for (std::size_t i = 0; i < blue; ++i) {
            s.blue.push_back(polar(rho, jittered(i, blue, 0.0)));
        }
        for (std::size_t i = 0; i < red; ++i) {
            s.red.push_back(polar(1.2 * rho, jittered(i, red, 0.5)));
        }
        if (!valid_scene(s, true) || !builds_cleanly(s)) {
            continue;
        }
        if (brute_force_separators(build_arrangement(s)).empty()) {
            return s;
        }
    }
    throw Error(ErrorKind::GenerationFailed, "no separator-free ring found");
}

} // namespace trisep
