#include "trisep/maxsep.hpp"

#include "trisep/error.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace trisep {

namespace {

// a*x + b*y <= c
struct HalfPlane {
    mpz_class a, b, c;
    std::size_t label;
};

mpz_class eval(const HalfPlane& h, const Point& p)
{
    return h.a * p.hx() + h.b * p.hy() - h.c * p.hw();
}

struct ClipVertex {
    Point p;
    std::size_t label; // of the edge leaving p
};

std::vector<ClipVertex> clip(const std::vector<ClipVertex>& poly, const HalfPlane& h)
{
    std::vector<ClipVertex> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const ClipVertex& cur = poly[i];
        const ClipVertex& nxt = poly[(i + 1) % n];
        const mpz_class gc = eval(h, cur.p);
        const mpz_class gn = eval(h, nxt.p);
        const bool in_c = sgn(gc) <= 0;
        const bool in_n = sgn(gn) <= 0;
        auto crossing = [&] {
            mpz_class x = gc * nxt.p.hx() - gn * cur.p.hx();
            mpz_class y = gc * nxt.p.hy() - gn * cur.p.hy();
            mpz_class w = gc * nxt.p.hw() - gn * cur.p.hw();
            if (sgn(w) < 0) {
                x = -x;
                y = -y;
                w = -w;
            }
            return Point::from_homogeneous(x, y, w);
        };
        if (in_c) {
            out.push_back(cur);
            if (!in_n) {
                if (sgn(gc) == 0) {
                    out.back().label = h.label;
                } else {
                    out.push_back({crossing(), h.label});
                }
            }
        } else if (in_n) {
            if (sgn(gn) != 0) {
                out.push_back({crossing(), cur.label});
            }
        }
    }
    return out;
}

// Drops repeated and collinear vertices.
std::vector<ClipVertex> strict_cycle(std::vector<ClipVertex> poly)
{
    bool changed = true;
    while (changed && poly.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < poly.size() && poly.size() >= 3; ++i) {
            const std::size_t n = poly.size();
            const ClipVertex& prev = poly[(i + n - 1) % n];
            const ClipVertex& cur = poly[i];
            const ClipVertex& nxt = poly[(i + 1) % n];
            if (cur.p == nxt.p) {
                poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else if (orient_sign(prev.p, cur.p, nxt.p) == 0) {
                poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            }
        }
    }
    return poly;
}

std::array<Point, 3> dedup_key(const Triangle& t)
{
    std::array<Point, 3> k{t.a, t.b, t.c};
    std::sort(k.begin(), k.end());
    return k;
}

// More blue points first, then the smaller key.
bool better(const ScoredTriangle& a, const ScoredTriangle& b)
{
    if (a.blue_count != b.blue_count) {
        return a.blue_count > b.blue_count;
    }
    return dedup_key(a.triangle) < dedup_key(b.triangle);
}

ScoredTriangle best_of(const ConvexSeparator& c, const std::vector<std::array<std::size_t, 3>>& triples,
                       const Scene& scene, unsigned threads = 1)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(triples.size(), 1))));
    std::vector<std::optional<ScoredTriangle>> best(threads);
    auto run = [&](unsigned t) {
        for (std::size_t i = t; i < triples.size(); i += threads) {
            const auto& [x, y, z] = triples[i];
            ScoredTriangle s{Triangle{c.vertices[x], c.vertices[y], c.vertices[z]}, 0};
            s.blue_count = count_blue_closed(s.triangle, scene);
            if (!best[t] || better(s, *best[t])) {
                best[t] = std::move(s);
            }
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
    std::optional<ScoredTriangle> out;
    for (auto& b : best) {
        if (b && (!out || better(*b, *out))) {
            out = std::move(b);
        }
    }
    if (!out) {
        throw Error(ErrorKind::InvalidArgument, "convex separator has fewer than three vertices");
    }
    return *out;
}

void require_triangle(const ConvexSeparator& c)
{
    if (c.size() < 3) {
        throw Error(ErrorKind::InvalidArgument, "convex separator has fewer than three vertices");
    }
}

} // namespace

ConvexSeparator build_enlarged_separator(const Scene& scene)
{
    if (!polygon_is_convex(scene.polygon)) {
        throw Error(ErrorKind::NonConvexEnvironment, "environment polygon is not convex");
    }
    const ConvexChain hull = convex_hull(std::span<const IPoint>(scene.blue));
    for (std::size_t i = 0; i < scene.red.size(); ++i) {
        if (locate_in_hull(Point(scene.red[i]), hull) != HullLocation::outside) {
            throw Error(ErrorKind::RedInsideHull, "red point " + std::to_string(i) + " lies in the blue hull", i);
        }
    }

    const std::size_t k = scene.polygon.size();
    std::vector<ClipVertex> region;
    for (std::size_t i = 0; i < k; ++i) {
        region.push_back({Point(scene.polygon[i]), i});
    }

    // Labels below k are polygon edges; k + e is hull edge e.
    std::vector<EdgeWitness> hull_witness(hull.size());
    for (std::size_t e = 0; e < hull.size(); ++e) {
        const IPoint p = *hull[e].as_integer();
        const IPoint q = *hull[hull.next(e)].as_integer();
        const Int128 nx = static_cast<Int128>(q.y) - p.y;
        const Int128 ny = static_cast<Int128>(p.x) - q.x;
        auto f = [&](const IPoint& x) { return nx * (x.x - p.x) + ny * (x.y - p.y); };
        std::optional<Int128> d;
        for (std::size_t i = 0; i < scene.red.size(); ++i) {
            const Int128 v = f(scene.red[i]);
            if (v > 0 && (!d || v < *d)) {
                d = v;
                hull_witness[e] = {EdgeWitness::Kind::red, i};
            }
        }
        if (!d) {
            for (std::size_t i = 0; i < k; ++i) {
                const Int128 v = f(scene.polygon[i]);
                if (!d || v > *d) {
                    d = v;
                    hull_witness[e] = {EdgeWitness::Kind::boundary, i};
                }
            }
        }
        const Int128 c = nx * p.x + ny * p.y + *d;
        region = clip(region, HalfPlane{to_mpz(nx), to_mpz(ny), to_mpz(c), k + e});
    }
    region = strict_cycle(std::move(region));

    ConvexSeparator out;
    for (const auto& v : region) {
        out.vertices.push_back(v.p);
        out.witness.push_back(v.label < k ? EdgeWitness{EdgeWitness::Kind::boundary, v.label}
                                          : hull_witness[v.label - k]);
    }
    return out;
}

CandidateFamily candidate_family(const ConvexSeparator& c, std::size_t apex)
{
    require_triangle(c);
    const std::size_t m = c.size();
    CandidateFamily fam;
    fam.apex = apex;
    std::vector<std::size_t> gaps{0};
    for (std::size_t d = 1; d <= m; d *= 2) {
        gaps.push_back(d);
    }
    const std::size_t chain = m - 1;
    for (std::size_t i = 0; i < chain; ++i) {
        for (std::size_t d : gaps) {
            const std::size_t j = i + d + 1;
            if (j >= chain) {
                continue;
            }
            fam.triangles.push_back({apex, (apex + 1 + i) % m, (apex + 1 + j) % m});
        }
    }
    return fam;
}

std::size_t count_blue_closed(const Triangle& t, const Scene& scene)
{
    std::size_t n = 0;
    for (const auto& b : scene.blue) {
        n += point_in_triangle(Point(b), t, Containment::closed) ? 1 : 0;
    }
    return n;
}

MaxSepResult approx_max_separator(const Scene& scene, const ConvexSeparator& c, ApexPolicy policy, unsigned threads)
{
    require_triangle(c);
    std::vector<std::size_t> apexes;
    if (policy == ApexPolicy::lowest_vertex) {
        apexes.push_back(static_cast<std::size_t>(std::min_element(c.vertices.begin(), c.vertices.end()) -
                                                  c.vertices.begin()));
    } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
            apexes.push_back(i);
        }
    }
    std::optional<MaxSepResult> out;
    std::optional<ScoredTriangle> best;
    for (std::size_t u : apexes) {
        const CandidateFamily fam = candidate_family(c, u);
        const ScoredTriangle s = best_of(c, fam.triangles, scene, threads);
        if (!best || better(s, *best)) {
            best = s;
            out = MaxSepResult{s.triangle, s.blue_count, c.vertices[u], u, fam.triangles.size()};
        }
    }
    return *out;
}

MaxSepResult approx_max_separator(const Scene& scene, ApexPolicy policy, unsigned threads)
{
    return approx_max_separator(scene, build_enlarged_separator(scene), policy, threads);
}

ScoredTriangle exact_vertex_optimum(const ConvexSeparator& c, const Scene& scene)
{
    require_triangle(c);
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            for (std::size_t k = j + 1; k < c.size(); ++k) {
                triples.push_back({i, j, k});
            }
        }
    }
    return best_of(c, triples, scene);
}

ScoredTriangle exact_apex_optimum(const ConvexSeparator& c, std::size_t apex, const Scene& scene)
{
    require_triangle(c);
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            if (i != apex && j != apex) {
                triples.push_back({apex, i, j});
            }
        }
    }
    return best_of(c, triples, scene);
}

ScoredTriangle family_optimum(const ConvexSeparator& c, std::size_t apex, const Scene& scene)
{
    return best_of(c, candidate_family(c, apex).triangles, scene);
}

ScoredTriangle line_family_optimum(const Scene& scene)
{
    std::vector<IPoint> pts(scene.blue);
    pts.insert(pts.end(), scene.red.begin(), scene.red.end());
    if (pts.size() > kLineFamilyLimit) {
        throw Error(ErrorKind::SceneTooLarge, "line family search is limited to " +
                                                  std::to_string(kLineFamilyLimit) + " points");
    }
    const std::size_t nb = scene.blue.size();
    std::vector<IntLine> lines;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            lines.push_back(IntLine::through(pts[i], pts[j]));
        }
    }
    const std::size_t L = lines.size();
    std::vector<signed char> at_point(L * pts.size());
    for (std::size_t l = 0; l < L; ++l) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            at_point[l * pts.size() + i] = static_cast<signed char>(lines[l].side(pts[i]));
        }
    }

    // Crossings of every non-parallel pair, their containment in the
    // environment, and the side of every line at every crossing.
    const std::vector<Point> poly = to_points(scene.polygon);
    std::vector<std::optional<Point>> meet(L * L);
    std::vector<char> inside(L * L, 0);
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = i + 1; j < L; ++j) {
            const IntLine& p = lines[i];
            const IntLine& q = lines[j];
            const mpz_class w = to_mpz(p.a) * to_mpz(q.b) - to_mpz(q.a) * to_mpz(p.b);
            if (sgn(w) == 0) {
                continue;
            }
            mpz_class x = to_mpz(p.b) * to_mpz(q.c) - to_mpz(q.b) * to_mpz(p.c);
            mpz_class y = to_mpz(q.a) * to_mpz(p.c) - to_mpz(p.a) * to_mpz(q.c);
            mpz_class ww = w;
            if (sgn(ww) < 0) {
                x = -x;
                y = -y;
                ww = -ww;
            }
            Point pt = Point::from_homogeneous(x, y, ww);
            inside[i * L + j] = inside[j * L + i] = point_in_simple_polygon(pt, poly) != PolygonLocation::outside;
            meet[i * L + j] = meet[j * L + i] = std::move(pt);
        }
    }
    const bool convex = polygon_is_convex(scene.polygon);

    std::optional<ScoredTriangle> best;
    std::vector<std::size_t> ls(3);
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = i + 1; j < L; ++j) {
            if (!meet[i * L + j] || !inside[i * L + j]) {
                continue;
            }
            for (std::size_t k = j + 1; k < L; ++k) {
                if (!meet[i * L + k] || !meet[j * L + k] || !inside[i * L + k] || !inside[j * L + k]) {
                    continue;
                }
                const int si = lines[i].side(*meet[j * L + k]);
                const int sj = lines[j].side(*meet[i * L + k]);
                const int sk = lines[k].side(*meet[i * L + j]);
                if (si == 0 || sj == 0 || sk == 0) {
                    continue;
                }
                bool red_inside = false;
                std::size_t blue = 0;
                for (std::size_t p = 0; p < pts.size(); ++p) {
                    const int a = at_point[i * pts.size() + p];
                    const int b = at_point[j * pts.size() + p];
                    const int c = at_point[k * pts.size() + p];
                    if (p < nb) {
                        blue += (a == 0 || a == si) && (b == 0 || b == sj) && (c == 0 || c == sk);
                    } else if (a == si && b == sj && c == sk) {
                        red_inside = true;
                        break;
                    }
                }
                if (red_inside || (best && blue < best->blue_count)) {
                    continue;
                }
                ScoredTriangle s{Triangle{*meet[i * L + j], *meet[j * L + k], *meet[i * L + k]}, blue};
                if (best && !better(s, *best)) {
                    continue;
                }
                if (!convex && !triangle_inside_polygon(s.triangle, poly)) {
                    continue;
                }
                best = std::move(s);
            }
        }
    }
    if (!best) {
        return ScoredTriangle{Triangle{}, 0};
    }
    return *best;
}

std::vector<LemmaCheck> lemma_chain_checks(const Scene& scene, const ConvexSeparator& c, const MaxSepResult& result)
{
    std::vector<LemmaCheck> checks;
    auto add = [&checks](std::string name, std::size_t lhs, std::size_t rhs) {
        checks.push_back(LemmaCheck{std::move(name), lhs, rhs, lhs <= rhs});
    };
    const std::size_t vertex = exact_vertex_optimum(c, scene).blue_count;
    for (std::size_t u = 0; u < c.size(); ++u) {
        const std::size_t apex = exact_apex_optimum(c, u, scene).blue_count;
        const std::size_t family = family_optimum(c, u, scene).blue_count;
        const std::string at = "[u=" + std::to_string(u) + "]";
        add("vertex_opt <= 2*apex_opt" + at, vertex, 2 * apex);
        add("family_max <= apex_opt" + at, family, apex);
        add("apex_opt <= 2*family_max" + at, apex, 2 * family);
    }
    if (scene.blue.size() + scene.red.size() <= kLineFamilyLimit) {
        add("line_family_opt <= 28*result", line_family_optimum(scene).blue_count, 28 * result.blue_count);
    }
    return checks;
}

} // namespace trisep
