#include "fixtures.hpp"

#include "trisep/geometry.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace trisep;
using fixtures::error_kind;

namespace {

std::vector<Point> square4()
{
    return {Point(0, 0), Point(4, 0), Point(4, 4), Point(0, 4)};
}

// Cyclic sequence equality.
bool same_cycle(const std::vector<Point>& a, const std::vector<Point>& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            ok = a[(s + i) % a.size()] == b[i];
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

// Every hull vertex on the closed side of the line p -> v.
bool supports(const Point& p, const Point& v, const std::vector<Point>& pts, int side)
{
    return std::all_of(pts.begin(), pts.end(), [&](const Point& q) { return orient_sign(p, v, q) * side >= 0; });
}

} // namespace

TEST_CASE("points normalize to lowest terms")
{
    const Point p = Point::from_rational(mpq_class(2, 4), mpq_class(-3, 6));
    CHECK(p == Point::from_homogeneous(1, -1, 2));
    CHECK(p == Point::from_homogeneous(-3, 3, -6));
    CHECK(p.str() == "(1/2, -1/2)");
    CHECK(rational_text(mpq_class(3)) == "3/1");
    CHECK(Point(3, 5).as_integer() == IPoint{3, 5});
    CHECK_FALSE(p.as_integer());
    CHECK(error_kind([] { Point::from_homogeneous(1, 1, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("orientation")
{
    CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation::left);
    CHECK(orientation(Point(0, 0), Point(1, 0), Point(0, -1)) == Orientation::right);
    CHECK(orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == Orientation::collinear);
    CHECK(orient_sign(IPoint{0, 0}, IPoint{1, 0}, IPoint{0, 1}) == 1);

    const std::int64_t big = std::int64_t{1} << 31;
    CHECK(orient_sign(IPoint{-big, -big}, IPoint{big, big - 1}, IPoint{big - 1, big}) == 1);
}

TEST_CASE("orientation is antisymmetric under swaps")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int i = 0; i < 2000; ++i) {
        const Point p(d(rng), d(rng)), q(d(rng), d(rng)), r(d(rng), d(rng));
        const int s = orient_sign(p, q, r);
        CHECK(orient_sign(q, p, r) == -s);
        CHECK(orient_sign(p, r, q) == -s);
        CHECK(orient_sign(q, r, p) == s);
    }
}

TEST_CASE("convex hull")
{
    std::vector<Point> pts = square4();
    pts.emplace_back(2, 2);
    const ConvexChain h = convex_hull(std::span<const Point>(pts));
    CHECK(same_cycle(h.vertices, square4()));
    CHECK(h.source.size() == 4);

    const std::vector<Point> tri{Point(0, 0), Point(3, 0), Point(0, 3)};
    CHECK(convex_hull(std::span<const Point>(tri)).vertices == tri);

    const std::vector<Point> line{Point(0, 0), Point(1, 1), Point(2, 2)};
    CHECK(error_kind([&] { convex_hull(std::span<const Point>(line)); }) == ErrorKind::AllCollinear);
    const std::vector<Point> two{Point(0, 0), Point(1, 1)};
    CHECK(error_kind([&] { convex_hull(std::span<const Point>(two)); }) == ErrorKind::FewerThanThreePoints);
}

TEST_CASE("convex hull ignores input order and contains every point")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-100, 100);
    for (int round = 0; round < 50; ++round) {
        std::vector<Point> pts;
        for (int i = 0; i < 25; ++i) {
            pts.emplace_back(d(rng), d(rng));
        }
        const ConvexChain h = convex_hull(std::span<const Point>(pts));
        CHECK(is_strictly_convex_ccw(h.vertices));
        for (const Point& p : pts) {
            CHECK(locate_in_hull(p, h) != HullLocation::outside);
        }
        for (int k = 0; k < 3; ++k) {
            std::shuffle(pts.begin(), pts.end(), rng);
            CHECK(same_cycle(convex_hull(std::span<const Point>(pts)).vertices, h.vertices));
        }
    }
}

TEST_CASE("tangents from an outside point")
{
    const auto sq = square4();
    const ConvexChain h = convex_hull(std::span<const Point>(sq));

    const TangentPair t = tangents_from_point(Point(8, 2), h);
    CHECK(h[t.left] == Point(4, 0));
    CHECK(h[t.right] == Point(4, 4));

    CHECK(error_kind([&] { tangents_from_point(Point(2, 2), h); }) == ErrorKind::PointInsideHull);
    CHECK(error_kind([&] { tangents_from_point(Point(4, 2), h); }) == ErrorKind::PointOnHullBoundary);

    // Brute force: the tangent vertices are exactly those with the whole hull
    // on one closed side.
    const Point p(-3, 9);
    std::vector<Point> left, right;
    for (const Point& v : sq) {
        if (supports(p, v, sq, -1)) {
            left.push_back(v);
        }
        if (supports(p, v, sq, 1)) {
            right.push_back(v);
        }
    }
    REQUIRE(left.size() == 1);
    REQUIRE(right.size() == 1);
    const TangentPair u = tangents_from_point(p, h);
    CHECK(h[u.left] == left[0]);
    CHECK(h[u.right] == right[0]);
    const std::set<Point> pair{left[0], right[0]};
    CHECK(pair == std::set<Point>{Point(0, 0), Point(4, 4)});
}

TEST_CASE("tangents match brute force on random hulls")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> d(-30, 30), far(-200, 200);
    for (int round = 0; round < 200; ++round) {
        std::vector<Point> pts;
        for (int i = 0; i < 12; ++i) {
            pts.emplace_back(d(rng), d(rng));
        }
        const ConvexChain h = convex_hull(std::span<const Point>(pts));
        Point p(far(rng), far(rng));
        if (locate_in_hull(p, h) != HullLocation::outside) {
            continue;
        }
        const TangentPair t = tangents_from_point(p, h);
        CHECK(supports(p, h[t.left], h.vertices, -1));
        CHECK(supports(p, h[t.right], h.vertices, 1));
    }
}

TEST_CASE("point in triangle")
{
    const Triangle t{Point(0, 0), Point(4, 0), Point(0, 4)};
    CHECK(point_in_triangle(Point(1, 1), t, Containment::open));
    CHECK_FALSE(point_in_triangle(Point(2, 0), t, Containment::open));
    CHECK(point_in_triangle(Point(2, 0), t, Containment::closed));
    CHECK(point_in_triangle(Point(2, 2), t, Containment::closed));
    CHECK_FALSE(point_in_triangle(Point(3, 3), t, Containment::closed));
    const Triangle cw{Point(0, 0), Point(0, 4), Point(4, 0)};
    CHECK(point_in_triangle(Point(1, 1), cw, Containment::open));
    const Triangle flat{Point(0, 0), Point(1, 1), Point(2, 2)};
    CHECK(error_kind([&] { point_in_triangle(Point(1, 1), flat, Containment::closed); }) ==
          ErrorKind::DegenerateTriangle);
}

TEST_CASE("point in simple polygon")
{
    const auto sq = square4();
    CHECK(point_in_simple_polygon(Point(2, 2), sq) == PolygonLocation::inside);
    CHECK(point_in_simple_polygon(Point(4, 2), sq) == PolygonLocation::boundary);
    CHECK(point_in_simple_polygon(Point(0, 0), sq) == PolygonLocation::boundary);
    CHECK(point_in_simple_polygon(Point(5, 2), sq) == PolygonLocation::outside);

    const auto f1 = to_points(fixtures::f1());
    CHECK(point_in_simple_polygon(Point(6, 6), f1) == PolygonLocation::outside);
    CHECK(point_in_simple_polygon(Point(6, 2), f1) == PolygonLocation::inside);
    CHECK(point_in_simple_polygon(Point(2, 6), f1) == PolygonLocation::inside);
    CHECK(point_in_simple_polygon(Point(4, 3), f1) == PolygonLocation::boundary);
    CHECK(point_in_simple_polygon(Point(7, 3), f1) == PolygonLocation::boundary);
}

TEST_CASE("first polygon hit")
{
    const std::vector<Point> box{Point(-10, -10), Point(10, -10), Point(10, 10), Point(-10, 10)};
    CHECK(first_polygon_hit(Point(0, 0), Vector{1, 0}, box).point == Point(10, 0));
    const RayHit corner = first_polygon_hit(Point(0, 0), Vector{1, 1}, box);
    CHECK(corner.point == Point(10, 10));
    CHECK(corner.t == 10);
    CHECK(error_kind([&] { first_polygon_hit(Point(20, 0), Vector{1, 0}, box); }) == ErrorKind::OriginOutside);
    CHECK(error_kind([&] { first_polygon_hit(Point(0, 0), Vector{0, 0}, box); }) == ErrorKind::InvalidArgument);

    // Oracle: the smallest positive ray parameter over all edges.
    const auto f1 = to_points(fixtures::f1());
    const mpq_class ox = 0, oy = 0, dx = 2, dy = 1;
    std::optional<mpq_class> best;
    for (std::size_t i = 0; i < f1.size(); ++i) {
        const Point& a = f1[i];
        const Point& b = f1[(i + 1) % f1.size()];
        const mpq_class ex = b.x() - a.x(), ey = b.y() - a.y();
        const mpq_class den = dx * ey - dy * ex;
        if (den == 0) {
            continue;
        }
        const mpq_class wx = a.x() - ox, wy = a.y() - oy;
        const mpq_class t = (wx * ey - wy * ex) / den;
        const mpq_class s = (wx * dy - wy * dx) / den;
        if (t > 0 && s >= 0 && s <= 1 && (!best || t < *best)) {
            best = t;
        }
    }
    REQUIRE(best);
    const RayHit h = first_polygon_hit(Point(0, 0), Vector{2, 1}, f1);
    CHECK(h.t == *best);
    CHECK(h.point == Point(6, 3));
    CHECK(h.edge == 2);
}

TEST_CASE("triangle inside polygon")
{
    const std::vector<Point> box{Point(-10, -10), Point(10, -10), Point(10, 10), Point(-10, 10)};
    CHECK(triangle_inside_polygon(Triangle{Point(0, 0), Point(5, 0), Point(0, 5)}, box));
    CHECK(triangle_inside_polygon(Triangle{Point(-10, -10), Point(10, -10), Point(0, 10)}, box));
    CHECK_FALSE(triangle_inside_polygon(Triangle{Point(0, 0), Point(15, 0), Point(0, 5)}, box));

    const auto f1 = to_points(fixtures::f1());
    // Corners inside, one side across the notch.
    CHECK_FALSE(triangle_inside_polygon(Triangle{Point(0, 0), Point(8, 0), Point(2, 8)}, f1));
    CHECK(triangle_inside_polygon(Triangle{Point(0, 0), Point(8, 0), Point(3, 3)}, f1));
    // A side along the notch boundary stays inside.
    CHECK(triangle_inside_polygon(Triangle{Point(4, 3), Point(10, 3), Point(4, -5)}, f1));
}
