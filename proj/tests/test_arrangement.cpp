#include "fixtures.hpp"

#include "trisep/arrangement.hpp"
#include "trisep/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace trisep;
using fixtures::error_kind;

namespace {

using Labelled = std::map<Point, VertexType>;

// Vertex set recomputed from the tangent lines alone: touch points, clip
// ends and every pairwise crossing inside both clipped segments.
Labelled oracle_vertices(const Scene& scene, const std::vector<TangentLine>& lines)
{
    Labelled out;
    std::set<Point> clips;
    for (const auto& l : lines) {
        clips.insert(l.clip_a);
        clips.insert(l.clip_b);
    }
    auto type_of = [&](const Point& p) {
        if (const auto ip = p.as_integer()) {
            if (std::find(scene.red.begin(), scene.red.end(), *ip) != scene.red.end()) {
                return VertexType::I;
            }
            if (std::find(scene.blue.begin(), scene.blue.end(), *ip) != scene.blue.end()) {
                return VertexType::II;
            }
        }
        return clips.count(p) ? VertexType::III : VertexType::IV;
    };
    auto within = [](const mpq_class& t, const TangentLine& l) { return t >= l.t_a && t <= l.t_b; };
    for (const auto& l : lines) {
        for (const Point* p : {&l.clip_a, &l.clip_b}) {
            out[*p] = type_of(*p);
        }
        out[Point(l.blue_touch)] = type_of(Point(l.blue_touch));
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const TangentLine& a = lines[i];
            const TangentLine& b = lines[j];
            // touch_a + s * da = touch_b + u * db
            const mpq_class adx(a.dx()), ady(a.dy()), bdx(b.dx()), bdy(b.dy());
            const mpq_class den = adx * bdy - ady * bdx;
            REQUIRE(den != 0);
            const mpq_class wx(b.blue_touch.x - a.blue_touch.x), wy(b.blue_touch.y - a.blue_touch.y);
            const mpq_class s = (wx * bdy - wy * bdx) / den;
            const mpq_class u = (wx * ady - wy * adx) / den;
            if (within(s, a) && within(u, b)) {
                const Point p = Point::from_rational(a.blue_touch.x + s * adx, a.blue_touch.y + s * ady);
                out[p] = type_of(p);
            }
        }
    }
    return out;
}

Labelled graph_vertices(const ArrangementGraph& g)
{
    Labelled out;
    for (const auto& v : g.vertices) {
        out[v.position] = v.type;
    }
    return out;
}

} // namespace

TEST_CASE("tangent lines of two reds against a square")
{
    Scene s;
    s.blue = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    s.red = {{8, 2}, {-4, 8}};
    s.polygon = {{-20, -20}, {20, -20}, {20, 20}, {-20, 20}};
    const ConvexChain hull = convex_hull(std::span<const IPoint>(s.blue));
    const auto poly = to_points(s.polygon);
    const auto lines = build_tangent_lines(s, hull, poly);
    REQUIRE(lines.size() == 4);

    // Hand-derived: touch point and both clip ends on the square boundary.
    const std::set<std::array<Point, 3>> expected{
        {Point(4, 0), Point(-20, -12), Point(20, 8)},
        {Point(4, 4), Point(-20, 16), Point(20, -4)},
        {Point(0, 0), Point(10, -20), Point(-10, 20)},
        {Point(4, 4), Point(20, -4), Point(-20, 16)},
    };
    std::set<std::array<Point, 3>> got;
    for (const auto& l : lines) {
        CHECK(l.t_a < 0);
        CHECK(l.t_b > 1);
        got.insert({Point(l.blue_touch), l.clip_a, l.clip_b});
        for (const auto& h : hull.vertices) {
            CHECK(l.equation.side(h) * l.hull_side >= 0);
        }
    }
    CHECK(got == expected);

    s.red.push_back({2, 2});
    CHECK(error_kind([&] { build_tangent_lines(s, hull, poly); }) == ErrorKind::RedInsideHull);
    s.red = {{2, 2}};
    try {
        build_tangent_lines(s, hull, poly);
        FAIL("expected RedInsideHull");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RedInsideHull);
        CHECK(e.index() == std::size_t{0});
    }
}

TEST_CASE("one red point")
{
    const ArrangementGraph g = build_arrangement(fixtures::one_red());
    CHECK(g.lines.size() == 2);
    CHECK(g.vertices.size() == 7);
    CHECK(g.count_type(VertexType::I) == 1);
    CHECK(g.count_type(VertexType::II) == 2);
    CHECK(g.count_type(VertexType::III) == 4);
    CHECK(g.count_type(VertexType::IV) == 0);
    CHECK(g.edge_count() == 6);
    for (const auto& l : g.lines) {
        CHECK(l.red_pos == l.touch_pos + 1);
    }
}

TEST_CASE("square scene matches the pairwise crossing oracle")
{
    const Scene s = fixtures::s1();
    const ArrangementGraph g = build_arrangement(s);
    CHECK(g.lines.size() == 8);
    CHECK(graph_vertices(g) == oracle_vertices(s, g.lines));
    CHECK(g.vertices.size() == 42);
    CHECK(g.count_type(VertexType::I) == 4);
    CHECK(g.count_type(VertexType::II) == 4);
    CHECK(g.count_type(VertexType::III) == 16);
    CHECK(g.count_type(VertexType::IV) == 18);

    // A snug environment cuts some crossings off.
    Scene small = s;
    small.polygon = {{-9, -10}, {12, -13}, {12, 13}, {-13, 8}};
    const ArrangementGraph h = build_arrangement(small);
    CHECK(graph_vertices(h) == oracle_vertices(small, h.lines));
    CHECK(h.count_type(VertexType::IV) < g.count_type(VertexType::IV));
}

TEST_CASE("crossing table agrees with the vertex incidences")
{
    const ArrangementGraph g = build_arrangement(fixtures::s1());
    for (std::size_t a = 0; a < g.lines.size(); ++a) {
        for (std::size_t b = 0; b < g.lines.size(); ++b) {
            const std::size_t pos = g.crossing_pos(a, b);
            if (a == b || pos == npos) {
                continue;
            }
            const ArrVertex& v = g.vertex(g.vertex_at(a, pos));
            REQUIRE(v.on_line(b) != nullptr);
            CHECK(g.vertex_at(b, v.on_line(b)->pos) == v.id);
        }
    }
}

TEST_CASE("random arrangements: oracle, order, bounds, permutation")
{
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        RandomSceneParams p;
        p.seed = seed;
        p.blue = 3 + seed % 6;
        p.red = 1 + seed % 7;
        p.shape = seed % 2 ? EnvShape::convex : EnvShape::star;
        const Scene s = generate_random(p);
        const ArrangementGraph g = build_arrangement(s);
        const std::size_t r = s.red.size();
        CAPTURE(seed);
        CHECK(graph_vertices(g) == oracle_vertices(s, g.lines));
        CHECK(g.count_type(VertexType::III) <= 4 * r);
        CHECK(g.vertices.size() <= r * (2 * r - 1) + 6 * r);
        for (const auto& l : g.lines) {
            CHECK(std::is_sorted(l.params.begin(), l.params.end()));
            CHECK(std::adjacent_find(l.params.begin(), l.params.end()) == l.params.end());
            CHECK(g.vertex(l.vertex_order.front()).type == VertexType::III);
            CHECK(g.vertex(l.vertex_order.back()).type == VertexType::III);
            CHECK(l.params[l.touch_pos] == 0);
        }
        for (const auto& v : g.vertices) {
            if (v.type == VertexType::II) {
                CHECK(locate_in_hull(v.position, g.hull) == HullLocation::boundary);
            }
        }

        Scene shuffled = s;
        std::shuffle(shuffled.red.begin(), shuffled.red.end(), rng);
        CHECK(graph_vertices(build_arrangement(shuffled)) == graph_vertices(g));
    }
}

TEST_CASE("parallel tangent lines are rejected")
{
    Scene s = fixtures::one_red();
    s.red.push_back({-6, 3}); // its tangent through (0, 0) is parallel to the one from (8, 2) through (4, 4)
    CHECK(error_kind([&] { build_arrangement(s); }) == ErrorKind::GeneralPositionViolation);
}

TEST_CASE("semi-triangle emptiness")
{
    const ArrangementGraph g = build_arrangement(fixtures::s1());
    CHECK_FALSE(semi_triangle_red_empty(Point(16, 2), g));
    CHECK(semi_triangle_red_empty(Point(8, 2), g));
    CHECK(error_kind([&] { semi_triangle_red_empty(Point(0, 0), g); }) == ErrorKind::InsideHull);
    CHECK(error_kind([&] { semi_triangle_red_empty(Point(4, 0), g); }) == ErrorKind::InsideHull);

    for (const auto& v : g.vertices) {
        if (v.type == VertexType::I) {
            CHECK(semi_triangle_red_empty(v.id, g));
        }
    }
}
