#include "trisep/ranking.hpp"

#include <algorithm>
#include <sstream>

namespace trisep {

namespace {

// Direction of a line folded into the angle range [0, pi).
std::pair<Int128, Int128> folded_direction(const TangentLine& l)
{
    Int128 dx = l.dx(), dy = l.dy();
    if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return {dx, dy};
}

bool smaller_angle(const TangentLine& a, const TangentLine& b)
{
    const auto [ax, ay] = folded_direction(a);
    const auto [bx, by] = folded_direction(b);
    return ax * by - ay * bx > 0;
}

// v sits on `line` strictly beyond the line's red point.
bool beyond_red(const TangentLine& line, std::size_t pos)
{
    return line.red_pos != npos && pos > line.red_pos;
}

} // namespace

std::size_t RankLabels::extreme_on(const ArrangementGraph& g, std::size_t v, std::size_t line) const
{
    const auto& inc = g.vertex(v).incident;
    for (std::size_t k = 0; k < inc.size(); ++k) {
        if (inc[k].line == line) {
            return extreme[v][k];
        }
    }
    return npos;
}

std::vector<std::size_t> initialize_ancestors(const ArrangementGraph& g)
{
    std::vector<std::size_t> phi;
    for (const auto& v : g.vertices) {
        if (v.type != VertexType::II) {
            continue;
        }
        const TangentLine* chosen = nullptr;
        for (const auto& inc : v.incident) {
            const TangentLine& l = g.lines[inc.line];
            if (!chosen || smaller_angle(l, *chosen)) {
                chosen = &l;
            }
        }
        if (chosen->touch_pos > 0) {
            phi.push_back(chosen->vertex_order[chosen->touch_pos - 1]);
        }
        if (chosen->touch_pos + 1 < chosen->vertex_order.size()) {
            phi.push_back(chosen->vertex_order[chosen->touch_pos + 1]);
        }
    }
    std::sort(phi.begin(), phi.end());
    phi.erase(std::unique(phi.begin(), phi.end()), phi.end());
    return phi;
}

RankLabels propagate_ranks(const ArrangementGraph& g, const std::vector<std::size_t>& ancestors)
{
    RankLabels labels;
    const std::size_t n = g.vertices.size();
    labels.rank.assign(n, std::nullopt);
    labels.level.assign(n, std::nullopt);
    labels.ancestors = ancestors;
    labels.red_parent.assign(g.lines.size(), npos);
    for (const auto& l : g.lines) {
        if (l.red_pos != npos) {
            labels.red_parent[l.line_id] = l.vertex_order[l.red_pos];
        }
    }

    // A tangent point's semi-triangle is degenerate, hence empty.
    for (const auto& v : g.vertices) {
        if (v.type == VertexType::II) {
            labels.rank[v.id] = 0;
            labels.level[v.id] = 0;
        }
    }
    std::vector<char> pinned(n, 0);
    for (const auto& v : g.vertices) {
        pinned[v.id] = v.type == VertexType::II;
    }
    for (std::size_t a : ancestors) {
        labels.rank[a] = 0;
        labels.level[a] = 0;
        pinned[a] = 1;
    }

    // Steps only go away from the tangent point of the line they follow, so
    // the semi-triangle strictly grows along every path and the walk is a DAG.
    std::vector<std::size_t> frontier = ancestors;
    std::vector<char> queued(n, 0);
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t v : frontier) {
            queued[v] = 0;
        }
        for (std::size_t v : frontier) {
            const ArrVertex& vert = g.vertex(v);
            if (vert.type == VertexType::III && vert.incident.size() < 2) {
                continue;
            }
            const int r = *labels.rank[v];
            const int lv = *labels.level[v];
            for (const auto& inc : vert.incident) {
                const TangentLine& line = g.lines[inc.line];
                const auto step = line.outward(inc.pos);
                if (!step) {
                    continue;
                }
                const std::size_t z = line.vertex_order[*step];
                if (pinned[z]) {
                    continue;
                }
                int nr = r + (g.vertex(z).type == VertexType::I ? 1 : 0);
                for (const auto& other : vert.incident) {
                    if (other.line != inc.line && labels.red_parent[other.line] != npos &&
                        beyond_red(g.lines[other.line], other.pos)) {
                        ++nr;
                        break;
                    }
                }
                if (!labels.rank[z] || nr > *labels.rank[z]) {
                    labels.rank[z] = nr;
                    labels.level[z] = lv + 1;
                    ++labels.assignments;
                    if (!queued[z]) {
                        queued[z] = 1;
                        next.push_back(z);
                    }
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return labels;
}

void compute_extremes(const ArrangementGraph& g, RankLabels& labels)
{
    labels.directional_extreme.assign(g.lines.size(), {npos, npos});
    labels.monotonicity_violations = 0;
    for (const auto& line : g.lines) {
        for (int half = 0; half < 2; ++half) {
            std::size_t last = npos;
            int prev_rank = 0;
            bool blocked = false;
            const std::size_t size = line.vertex_order.size();
            for (std::size_t step = 1;; ++step) {
                std::size_t pos;
                if (half) {
                    if (line.touch_pos + step >= size) {
                        break;
                    }
                    pos = line.touch_pos + step;
                } else {
                    if (step > line.touch_pos) {
                        break;
                    }
                    pos = line.touch_pos - step;
                }
                const std::size_t v = line.vertex_order[pos];
                if (labels.rank[v]) {
                    if (*labels.rank[v] < prev_rank) {
                        ++labels.monotonicity_violations;
                    }
                    prev_rank = std::max(prev_rank, *labels.rank[v]);
                }
                if (!blocked) {
                    if (labels.candidate(v)) {
                        last = v;
                    } else {
                        blocked = true;
                    }
                }
            }
            labels.directional_extreme[line.line_id][half] = last;
        }
    }

    labels.extreme.assign(g.vertices.size(), {});
    for (const auto& v : g.vertices) {
        auto& ex = labels.extreme[v.id];
        ex.assign(v.incident.size(), npos);
        if (v.incident.size() < 2) {
            continue;
        }
        for (std::size_t k = 0; k < v.incident.size(); ++k) {
            const TangentLine& line = g.lines[v.incident[k].line];
            const int h = line.half(v.incident[k].pos);
            if (h != 0) {
                ex[k] = labels.directional_extreme[line.line_id][h > 0 ? 0 : 1];
            }
        }
    }
}

RankLabels rank_arrangement(const ArrangementGraph& g)
{
    RankLabels labels = propagate_ranks(g, initialize_ancestors(g));
    compute_extremes(g, labels);
    return labels;
}

RankLabels oracle_labels(const ArrangementGraph& g)
{
    RankLabels labels;
    const std::size_t n = g.vertices.size();
    labels.rank.assign(n, 0);
    labels.level.assign(n, std::nullopt);
    labels.red_parent.assign(g.lines.size(), npos);
    for (const auto& v : g.vertices) {
        if (v.type != VertexType::II && !semi_triangle_red_empty(v.id, g)) {
            labels.rank[v.id] = 2;
        }
    }
    compute_extremes(g, labels);
    return labels;
}

std::string rank_table(const ArrangementGraph& g, const RankLabels& labels)
{
    std::ostringstream out;
    out << "vertex\ttype\trank\tlevel\textreme\n";
    for (const auto& v : g.vertices) {
        out << 'v' << v.id << '\t' << type_name(v.type) << '\t';
        out << (labels.rank[v.id] ? std::to_string(*labels.rank[v.id]) : "-") << '\t';
        out << (labels.level[v.id] ? std::to_string(*labels.level[v.id]) : "-") << '\t';
        std::string ex;
        for (std::size_t e : labels.extreme[v.id]) {
            if (e != npos) {
                ex += (ex.empty() ? "v" : ",v") + std::to_string(e);
            }
        }
        out << (ex.empty() ? "-" : ex) << '\n';
    }
    return out.str();
}

} // namespace trisep
