#include "fixtures.hpp"

#include "trisep/generate.hpp"
#include "trisep/ranking.hpp"

#include <algorithm>
#include <sstream>

using namespace trisep;

namespace {

std::vector<Scene> ranking_scenes()
{
    std::vector<Scene> out{fixtures::s1(), fixtures::one_red(), generate_lower_bound(2)};
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        RandomSceneParams p;
        p.seed = seed;
        p.blue = 3 + seed % 8;
        p.red = 2 + seed % 7;
        p.shape = seed % 2 ? EnvShape::convex : EnvShape::star;
        out.push_back(generate_random(p));
    }
    return out;
}

} // namespace

TEST_CASE("one red: ancestors and ranks")
{
    const ArrangementGraph g = build_arrangement(fixtures::one_red());
    const RankLabels labels = rank_arrangement(g);

    std::vector<std::size_t> expected;
    for (const auto& l : g.lines) {
        expected.push_back(l.vertex_order[l.touch_pos - 1]);
        expected.push_back(l.vertex_order[l.touch_pos + 1]);
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(labels.ancestors == expected);
    CHECK(labels.ancestors.size() == 3);

    for (const auto& v : g.vertices) {
        REQUIRE(labels.rank[v.id]);
        CHECK(*labels.rank[v.id] < 2);
        if (v.type == VertexType::I) {
            CHECK(*labels.rank[v.id] == 0);
        }
    }
}

TEST_CASE("ancestors follow the line of smaller angle")
{
    // Two tangents through the apex (0, 0): directions (7, 4) and (-7, 4),
    // at about 30 and 150 degrees.
    Scene s;
    s.blue = {{0, 0}, {-10, -20}, {10, -20}};
    s.red = {{14, 8}, {-14, 8}};
    s.polygon = {{-47, -47}, {47, -53}, {47, 49}, {-47, 48}};
    const ArrangementGraph g = build_arrangement(s);

    std::size_t shallow = npos, steep = npos;
    for (const auto& l : g.lines) {
        if (l.blue_touch == IPoint{0, 0}) {
            (l.red_point == IPoint{14, 8} ? shallow : steep) = l.line_id;
        }
    }
    REQUIRE(shallow != npos);
    REQUIRE(steep != npos);

    const auto phi = initialize_ancestors(g);
    const TangentLine& l = g.lines[shallow];
    for (std::size_t pos : {l.touch_pos - 1, l.touch_pos + 1}) {
        CHECK(std::binary_search(phi.begin(), phi.end(), l.vertex_order[pos]));
    }
    const TangentLine& m = g.lines[steep];
    CHECK_FALSE(std::binary_search(phi.begin(), phi.end(), m.vertex_order[m.touch_pos + 1]));
}

TEST_CASE("ranking agrees with the semi-triangle oracle")
{
    for (const Scene& s : ranking_scenes()) {
        const ArrangementGraph g = build_arrangement(s);
        const RankLabels labels = rank_arrangement(g);
        for (std::size_t a : labels.ancestors) {
            CHECK(labels.rank[a] == 0);
            CHECK(semi_triangle_red_empty(a, g));
        }
        for (const auto& v : g.vertices) {
            if (v.type == VertexType::II) {
                CHECK(labels.rank[v.id] == 0);
                continue;
            }
            const bool empty = semi_triangle_red_empty(v.id, g);
            // Every empty semi-triangle stays a candidate corner.
            if (empty) {
                CHECK(labels.candidate(v.id));
            }
        }
    }
}

TEST_CASE("directional extremes")
{
    for (const Scene& s : ranking_scenes()) {
        const ArrangementGraph g = build_arrangement(s);
        const RankLabels labels = rank_arrangement(g);
        for (const auto& l : g.lines) {
            for (int half = 0; half < 2; ++half) {
                const std::size_t e = labels.directional_extreme[l.line_id][half];
                const int dir = half ? 1 : -1;
                std::size_t pos = l.touch_pos;
                if (e == npos) {
                    // The first vertex past the tangent point is already excluded.
                    const auto first = half ? l.touch_pos + 1 : l.touch_pos - 1;
                    CHECK_FALSE(labels.candidate(l.vertex_order[first]));
                    continue;
                }
                const std::size_t epos = g.vertex(e).on_line(l.line_id)->pos;
                CHECK(l.half(epos) == dir);
                for (pos = l.touch_pos + dir; pos != epos; pos += dir) {
                    CHECK(labels.candidate(l.vertex_order[pos]));
                }
                // One step beyond the extreme: excluded, or past the clip end.
                if (const auto beyond = l.outward(epos)) {
                    CHECK_FALSE(labels.candidate(l.vertex_order[*beyond]));
                } else {
                    CHECK(g.vertex(e).type == VertexType::III);
                }
            }
        }
    }
}

TEST_CASE("oracle labels and the rank table")
{
    const ArrangementGraph g = build_arrangement(fixtures::s1());
    const RankLabels oracle = oracle_labels(g);
    for (const auto& v : g.vertices) {
        REQUIRE(oracle.rank[v.id]);
        if (v.type != VertexType::II) {
            CHECK((*oracle.rank[v.id] == 0) == semi_triangle_red_empty(v.id, g));
        }
    }

    const RankLabels labels = rank_arrangement(g);
    std::istringstream table(rank_table(g, labels));
    std::string row;
    std::size_t rows = 0;
    while (std::getline(table, row)) {
        CHECK(std::count(row.begin(), row.end(), '\t') == 4);
        ++rows;
    }
    CHECK(rows == g.vertices.size() + 1);
}
