#include "trisep/arrangement.hpp"

#include "trisep/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace trisep {

const char* type_name(VertexType t)
{
    switch (t) {
    case VertexType::I: return "I";
    case VertexType::II: return "II";
    case VertexType::III: return "III";
    case VertexType::IV: return "IV";
    }
    return "?";
}

std::optional<std::size_t> TangentLine::outward(std::size_t pos) const
{
    if (pos > touch_pos) {
        return pos + 1 < vertex_order.size() ? std::optional<std::size_t>(pos + 1) : std::nullopt;
    }
    if (pos < touch_pos) {
        return pos > 0 ? std::optional<std::size_t>(pos - 1) : std::nullopt;
    }
    return std::nullopt;
}

const Incidence* ArrVertex::on_line(std::size_t line) const
{
    for (const auto& inc : incident) {
        if (inc.line == line) {
            return &inc;
        }
    }
    return nullptr;
}

std::size_t ArrangementGraph::edge_count() const
{
    std::size_t edges = 0;
    for (const auto& l : lines) {
        edges += l.vertex_order.empty() ? 0 : l.vertex_order.size() - 1;
    }
    return edges;
}

std::size_t ArrangementGraph::count_type(VertexType t) const
{
    return static_cast<std::size_t>(
        std::count_if(vertices.begin(), vertices.end(), [t](const ArrVertex& v) { return v.type == t; }));
}

mpq_class crossing_param(const TangentLine& line, const TangentLine& other)
{
    const Int128 den = static_cast<Int128>(line.dx()) * other.dy() - static_cast<Int128>(line.dy()) * other.dx();
    if (den == 0) {
        throw Error(ErrorKind::GeneralPositionViolation,
                    "tangent lines " + std::to_string(line.line_id) + " and " + std::to_string(other.line_id) +
                        " are parallel");
    }
    const Int128 wx = static_cast<Int128>(other.blue_touch.x) - line.blue_touch.x;
    const Int128 wy = static_cast<Int128>(other.blue_touch.y) - line.blue_touch.y;
    const Int128 num = wx * other.dy() - wy * other.dx();
    mpq_class t(to_mpz(num), to_mpz(den));
    t.canonicalize();
    return t;
}

Point point_at(const TangentLine& line, const mpq_class& t)
{
    const mpz_class& n = t.get_num();
    const mpz_class& d = t.get_den();
    return Point::from_homogeneous(mpz_class(line.blue_touch.x) * d + n * line.dx(),
                                   mpz_class(line.blue_touch.y) * d + n * line.dy(), d);
}

std::vector<TangentLine> build_tangent_lines(const Scene& scene, const ConvexChain& hull,
                                             std::span<const Point> polygon)
{
    std::vector<TangentLine> lines;
    lines.reserve(2 * scene.red.size());
    for (std::size_t i = 0; i < scene.red.size(); ++i) {
        const Point red(scene.red[i]);
        if (locate_in_hull(red, hull) != HullLocation::outside) {
            throw Error(ErrorKind::RedInsideHull, "red point " + std::to_string(i) + " lies in the blue hull", i);
        }
    }
    for (std::size_t i = 0; i < scene.red.size(); ++i) {
        const Point red(scene.red[i]);
        const TangentPair touch = tangents_from_point(red, hull);
        for (TangentSide side : {TangentSide::left, TangentSide::right}) {
            TangentLine l;
            l.line_id = lines.size();
            l.red_index = i;
            l.side = side;
            l.hull_index = side == TangentSide::left ? touch.left : touch.right;
            l.blue_touch = *hull[l.hull_index].as_integer();
            l.red_point = scene.red[i];
            l.equation = IntLine::through(l.blue_touch, l.red_point);
            for (const auto& h : hull.vertices) {
                if (const int s = l.equation.side(h); s != 0) {
                    l.hull_side = s;
                    break;
                }
            }
            const Point origin(l.blue_touch);
            const RayHit forward = first_polygon_hit(origin, Vector{mpz_class(l.dx()), mpz_class(l.dy())}, polygon);
            const RayHit backward =
                first_polygon_hit(origin, Vector{mpz_class(-l.dx()), mpz_class(-l.dy())}, polygon);
            l.clip_b = forward.point;
            l.t_b = forward.t;
            l.edge_b = forward.edge;
            l.clip_a = backward.point;
            l.t_a = -backward.t;
            l.edge_a = backward.edge;
            lines.push_back(std::move(l));
        }
    }
    return lines;
}

namespace {

struct Entry {
    mpq_class t;
    Point point;
    bool clip = false;
    std::size_t partner = npos; // crossing line, if a crossing
};

} // namespace

ArrangementGraph build_arrangement(const Scene& scene, const ArrangementOptions& options)
{
    validate_scene(scene, ValidationOptions{options.validate_general_position});

    ArrangementGraph g;
    g.scene = scene;
    g.hull = convex_hull(std::span<const IPoint>(scene.blue));
    g.polygon = to_points(scene.polygon);
    g.lines = build_tangent_lines(scene, g.hull, g.polygon);

    const std::size_t n_lines = g.lines.size();
    std::vector<std::vector<Entry>> entries(n_lines);
    for (auto& l : g.lines) {
        auto& e = entries[l.line_id];
        e.push_back(Entry{mpq_class(0), Point(l.blue_touch), false, npos});
        e.push_back(Entry{l.t_a, l.clip_a, true, npos});
        e.push_back(Entry{l.t_b, l.clip_b, true, npos});
    }
    for (std::size_t i = 0; i < n_lines; ++i) {
        const TangentLine& li = g.lines[i];
        for (std::size_t j = i + 1; j < n_lines; ++j) {
            const TangentLine& lj = g.lines[j];
            const mpq_class ti = crossing_param(li, lj);
            if (ti < li.t_a || ti > li.t_b) {
                continue;
            }
            const mpq_class tj = crossing_param(lj, li);
            if (tj < lj.t_a || tj > lj.t_b) {
                continue;
            }
            Point p = point_at(li, ti);
            entries[i].push_back(Entry{ti, p, false, j});
            entries[j].push_back(Entry{tj, std::move(p), false, i});
        }
    }

    std::map<IPoint, std::size_t> red_at, blue_at;
    for (std::size_t i = 0; i < scene.red.size(); ++i) {
        red_at.emplace(scene.red[i], i);
    }
    for (std::size_t i = 0; i < scene.blue.size(); ++i) {
        blue_at.emplace(scene.blue[i], i);
    }

    std::map<Point, std::size_t> ids;
    std::vector<bool> on_boundary;
    for (std::size_t i = 0; i < n_lines; ++i) {
        auto& e = entries[i];
        std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.t < b.t; });
        TangentLine& line = g.lines[i];
        for (std::size_t k = 0; k < e.size();) {
            std::size_t end = k;
            bool clip = false;
            std::size_t partners = 0;
            while (end < e.size() && e[end].t == e[k].t) {
                clip = clip || e[end].clip;
                partners += e[end].partner != npos;
                ++end;
            }
            const Point& p = e[k].point;
            auto [it, fresh] = ids.emplace(p, g.vertices.size());
            if (fresh) {
                ArrVertex v;
                v.id = g.vertices.size();
                v.position = p;
                if (const auto ip = p.as_integer()) {
                    if (auto r = red_at.find(*ip); r != red_at.end()) {
                        v.red_index = r->second;
                    }
                    if (auto b = blue_at.find(*ip); b != blue_at.end()) {
                        v.blue_index = b->second;
                    }
                }
                g.vertices.push_back(std::move(v));
                on_boundary.push_back(false);
            }
            ArrVertex& v = g.vertices[it->second];
            if (partners >= 2 && v.blue_index == npos) {
                throw Error(ErrorKind::GeneralPositionViolation,
                            "three tangent lines meet at " + p.str() + " away from a scene point");
            }
            on_boundary[v.id] = on_boundary[v.id] || clip;
            const std::size_t pos = line.vertex_order.size();
            v.incident.push_back(Incidence{i, pos});
            line.vertex_order.push_back(v.id);
            line.params.push_back(e[k].t);
            if (sgn(e[k].t) == 0) {
                line.touch_pos = pos;
            }
            if (v.red_index == line.red_index) {
                line.red_pos = pos;
            }
            k = end;
        }
    }

    for (auto& v : g.vertices) {
        if (v.red_index != npos) {
            v.type = VertexType::I;
        } else if (v.blue_index != npos) {
            v.type = VertexType::II;
        } else if (on_boundary[v.id]) {
            v.type = VertexType::III;
        } else {
            v.type = VertexType::IV;
        }
    }

    std::vector<std::size_t> table(n_lines * n_lines, npos);
    for (const auto& v : g.vertices) {
        for (const auto& a : v.incident) {
            for (const auto& b : v.incident) {
                if (a.line != b.line) {
                    table[a.line * n_lines + b.line] = a.pos;
                }
            }
        }
    }
    g.set_crossings(std::move(table));
    return g;
}

bool semi_triangle_red_empty(const Point& p, const ArrangementGraph& g)
{
    if (locate_in_hull(p, g.hull) != HullLocation::outside) {
        throw Error(ErrorKind::InsideHull, "semi-triangle apex " + p.str() + " is not outside the hull");
    }
    const TangentPair touch = tangents_from_point(p, g.hull);
    const Triangle wedge{p, g.hull[touch.left], g.hull[touch.right]};
    for (const auto& r : g.scene.red) {
        const Point red(r);
        if (point_in_triangle(red, wedge, Containment::open) && locate_in_hull(red, g.hull) == HullLocation::outside) {
            return false;
        }
    }
    return true;
}

bool semi_triangle_red_empty(std::size_t vertex_id, const ArrangementGraph& g)
{
    return semi_triangle_red_empty(g.vertex(vertex_id).position, g);
}

} // namespace trisep
