#include "trisep/enumerate.hpp"

#include "trisep/error.hpp"

#include <algorithm>
#include <thread>

namespace trisep {

CanonicalTriangle make_canonical(const ArrangementGraph& g, std::array<std::size_t, 3> corners,
                                 std::array<std::size_t, 3> lines)
{
    std::sort(corners.begin(), corners.end(), [&g](std::size_t a, std::size_t b) {
        return g.vertex(a).position < g.vertex(b).position;
    });
    std::sort(lines.begin(), lines.end());
    CanonicalTriangle t;
    t.corners = corners;
    t.support_lines = lines;
    for (std::size_t i = 0; i < 3; ++i) {
        t.positions[i] = g.vertex(corners[i]).position;
    }
    return t;
}

std::string SeparatorReport::str() const
{
    switch (violation) {
    case Violation::none: return "valid";
    case Violation::missing_blue: return "blue point " + std::to_string(index) + " outside the triangle";
    case Violation::red_inside: return "red point " + std::to_string(index) + " inside the triangle";
    case Violation::outside_environment:
        return "triangle leaves the environment near edge " + std::to_string(index);
    }
    return "?";
}

SeparatorReport validate_separator(const Triangle& t, const Scene& scene)
{
    if (t.degenerate()) {
        throw Error(ErrorKind::DegenerateTriangle, "triangle has zero area");
    }
    for (std::size_t i = 0; i < scene.blue.size(); ++i) {
        if (!point_in_triangle(Point(scene.blue[i]), t, Containment::closed)) {
            return {false, Violation::missing_blue, i};
        }
    }
    for (std::size_t i = 0; i < scene.red.size(); ++i) {
        if (point_in_triangle(Point(scene.red[i]), t, Containment::open)) {
            return {false, Violation::red_inside, i};
        }
    }
    const std::vector<Point> poly = to_points(scene.polygon);
    if (!triangle_inside_polygon(t, poly)) {
        std::size_t edge = 0;
        for (const Point* c : {&t.a, &t.b, &t.c}) {
            if (point_in_simple_polygon(*c, poly) == PolygonLocation::outside) {
                break;
            }
            ++edge;
        }
        return {false, Violation::outside_environment, edge};
    }
    return {};
}

namespace {

// Three arrangement vertices pairwise joined along three tangent lines. The
// corners are vertices of the clipped segments, so the sides stay inside the
// environment; what remains is orientation against the hull and the reds.
bool supported_separator(const ArrangementGraph& g, const std::array<std::size_t, 3>& lines,
                         const std::array<std::size_t, 3>& opposite)
{
    for (std::size_t k = 0; k < 3; ++k) {
        const TangentLine& l = g.lines[lines[k]];
        if (l.equation.side(g.vertex(opposite[k]).position) != l.hull_side) {
            return false;
        }
    }
    for (const IPoint& r : g.scene.red) {
        bool inside = true;
        for (std::size_t k = 0; k < 3 && inside; ++k) {
            const TangentLine& l = g.lines[lines[k]];
            inside = l.equation.side(r) == l.hull_side;
        }
        if (inside) {
            return false;
        }
    }
    return true;
}

struct Walker {
    const ArrangementGraph& g;
    const RankLabels& labels;
    EnumerationStats stats;
    std::vector<CanonicalTriangle> out;

    // First position on `line` in half `side` whose parameter is at least as
    // far out as `s`.
    std::size_t start_position(const TangentLine& line, int side, const mpq_class& s) const
    {
        const auto& p = line.params;
        if (side > 0) {
            auto first = p.begin() + static_cast<std::ptrdiff_t>(line.touch_pos + 1);
            if (sgn(s) <= 0) {
                return line.touch_pos + 1;
            }
            return static_cast<std::size_t>(std::lower_bound(first, p.end(), s) - p.begin());
        }
        if (line.touch_pos == 0) {
            return npos;
        }
        if (sgn(s) >= 0) {
            return line.touch_pos - 1;
        }
        auto last = p.begin() + static_cast<std::ptrdiff_t>(line.touch_pos);
        auto it = std::upper_bound(p.begin(), last, s);
        return it == p.begin() ? npos : static_cast<std::size_t>(it - p.begin()) - 1;
    }

    void walk(std::size_t v, std::size_t li, int side_u, std::size_t lj, int side_w)
    {
        const TangentLine& l = g.lines[li];
        const TangentLine& lw = g.lines[lj];
        std::size_t uj = labels.directional_extreme[li][side_u > 0 ? 1 : 0];
        if (uj == npos) {
            return;
        }
        ++stats.walks;

        std::size_t pos_u = g.vertex(uj).on_line(li)->pos;
        while (g.vertex(g.vertex_at(li, pos_u)).incident.size() < 2) {
            pos_u = side_u > 0 ? pos_u - 1 : pos_u + 1;
            if (pos_u == l.touch_pos) {
                return;
            }
        }
        const ArrVertex& u = g.vertex(g.vertex_at(li, pos_u));
        std::size_t lu = npos;
        for (const auto& inc : u.incident) {
            if (inc.line != li) {
                lu = inc.line;
                break;
            }
        }
        std::size_t pos = lu == lj ? (side_w > 0 ? lw.touch_pos + 1 : (lw.touch_pos ? lw.touch_pos - 1 : npos))
                                   : start_position(lw, side_w, crossing_param(lw, g.lines[lu]));

        for (; pos != npos && pos < lw.vertex_order.size(); pos = side_w > 0 ? pos + 1 : (pos ? pos - 1 : npos)) {
            if (lw.half(pos) != side_w) {
                break;
            }
            const std::size_t w = lw.vertex_order[pos];
            ++stats.walk_steps;
            if (!labels.candidate(w)) {
                break;
            }
            for (const auto& inc : g.vertex(w).incident) {
                if (inc.line == lj || inc.line == li) {
                    continue;
                }
                const std::size_t pu = g.crossing_pos(li, inc.line);
                if (pu == npos || l.half(pu) != side_u) {
                    continue;
                }
                const std::size_t u2 = l.vertex_order[pu];
                if (!labels.candidate(u2)) {
                    continue;
                }
                ++stats.formed;
                // Corner opposite each support line.
                const std::array<std::size_t, 3> lines{li, lj, inc.line};
                const std::array<std::size_t, 3> opposite{w, u2, v};
                if (supported_separator(g, lines, opposite)) {
                    ++stats.emitted;
                    out.push_back(make_canonical(g, {v, w, u2}, lines));
                } else {
                    ++stats.rejected;
                }
            }
        }
    }

    void corner(std::size_t v)
    {
        const ArrVertex& vert = g.vertex(v);
        ++stats.corners;
        for (const auto& a : vert.incident) {
            for (const auto& b : vert.incident) {
                if (a.line == b.line) {
                    continue;
                }
                const int ha = g.lines[a.line].half(a.pos);
                const int hb = g.lines[b.line].half(b.pos);
                if (ha != 0 && hb != 0) {
                    walk(v, a.line, -ha, b.line, -hb);
                    continue;
                }
                for (int su : {-1, 1}) {
                    if (ha != 0 && su != -ha) {
                        continue;
                    }
                    for (int sw : {-1, 1}) {
                        if (hb != 0 && sw != -hb) {
                            continue;
                        }
                        walk(v, a.line, su, b.line, sw);
                    }
                }
            }
        }
    }
};

void add_stats(EnumerationStats& into, const EnumerationStats& s)
{
    into.corners += s.corners;
    into.walks += s.walks;
    into.walk_steps += s.walk_steps;
    into.formed += s.formed;
    into.rejected += s.rejected;
    into.emitted += s.emitted;
}

} // namespace

EnumerationResult enumerate_separators(const ArrangementGraph& g, const RankLabels& labels, unsigned threads)
{
    std::vector<std::size_t> corners;
    for (const auto& v : g.vertices) {
        if (v.incident.size() >= 2 && labels.candidate(v.id)) {
            corners.push_back(v.id);
        }
    }
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(corners.size(), 1))));

    std::vector<Walker> walkers;
    walkers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        walkers.push_back(Walker{g, labels, {}, {}});
    }
    auto run = [&](unsigned t) {
        for (std::size_t i = t; i < corners.size(); i += threads) {
            walkers[t].corner(corners[i]);
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(run, t);
        }
    }

    EnumerationResult result;
    for (auto& w : walkers) {
        add_stats(result.stats, w.stats);
        result.triangles.insert(result.triangles.end(), std::make_move_iterator(w.out.begin()),
                                std::make_move_iterator(w.out.end()));
    }
    std::sort(result.triangles.begin(), result.triangles.end());
    result.triangles.erase(std::unique(result.triangles.begin(), result.triangles.end()), result.triangles.end());
    const auto valid_end = std::stable_partition(result.triangles.begin(), result.triangles.end(),
                                                 [&g](const CanonicalTriangle& t) {
                                                     return validate_separator(t.triangle(), g.scene).valid;
                                                 });
    result.stats.invalid = static_cast<std::size_t>(result.triangles.end() - valid_end);
    result.triangles.erase(valid_end, result.triangles.end());
    return result;
}

EnumerationResult enumerate_separators(const ArrangementGraph& g, Backend backend, unsigned threads)
{
    const RankLabels labels = backend == Backend::rank ? rank_arrangement(g) : oracle_labels(g);
    return enumerate_separators(g, labels, threads);
}

std::vector<CanonicalTriangle> brute_force_separators(const ArrangementGraph& g)
{
    const std::size_t n = g.lines.size();
    // Crossing point of every pair when it lies on both clipped segments.
    std::vector<std::optional<Point>> meet(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const TangentLine& a = g.lines[i];
            const TangentLine& b = g.lines[j];
            const mpq_class ta = crossing_param(a, b);
            const mpq_class tb = crossing_param(b, a);
            if (ta < a.t_a || ta > a.t_b || tb < b.t_a || tb > b.t_b) {
                continue;
            }
            meet[i * n + j] = meet[j * n + i] = point_at(a, ta);
        }
    }
    auto id_of = [&g](std::size_t a, std::size_t b) { return g.vertex_at(a, g.crossing_pos(a, b)); };

    std::vector<CanonicalTriangle> found;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!meet[i * n + j]) {
                continue;
            }
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!meet[i * n + k] || !meet[j * n + k]) {
                    continue;
                }
                const Triangle t{*meet[i * n + j], *meet[j * n + k], *meet[i * n + k]};
                if (t.degenerate()) {
                    continue;
                }
                bool hull_in = true;
                for (const Point& h : g.hull.vertices) {
                    if (!point_in_triangle(h, t, Containment::closed)) {
                        hull_in = false;
                        break;
                    }
                }
                if (!hull_in || !validate_separator(t, g.scene).valid) {
                    continue;
                }
                found.push_back(make_canonical(g, {id_of(i, j), id_of(j, k), id_of(i, k)}, {i, j, k}));
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace trisep
