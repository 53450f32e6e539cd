#include "trisep/svg.hpp"

#include "trisep/arrangement.hpp"
#include "trisep/enumerate.hpp"
#include "trisep/error.hpp"
#include "trisep/maxsep.hpp"
#include "trisep/ranking.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>

namespace trisep {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

class Canvas {
public:
    explicit Canvas(const Scene& scene)
    {
        min_x_ = max_x_ = static_cast<double>(scene.polygon.front().x);
        min_y_ = max_y_ = static_cast<double>(scene.polygon.front().y);
        for (const auto& p : scene.polygon) {
            min_x_ = std::min(min_x_, static_cast<double>(p.x));
            max_x_ = std::max(max_x_, static_cast<double>(p.x));
            min_y_ = std::min(min_y_, static_cast<double>(p.y));
            max_y_ = std::max(max_y_, static_cast<double>(p.y));
        }
        const double extent = std::max(max_x_ - min_x_, max_y_ - min_y_);
        margin_ = extent / 20;
        unit_ = extent / 400;
    }

    double width() const { return max_x_ - min_x_ + 2 * margin_; }
    double height() const { return max_y_ - min_y_ + 2 * margin_; }
    double unit() const { return unit_; }
    std::string x(double v) const { return num(v - min_x_ + margin_); }
    std::string y(double v) const { return num(max_y_ - v + margin_); }

    std::string xy(const Point& p) const { return x(p.approx_x()) + "," + y(p.approx_y()); }

    std::string polygon(const std::vector<Point>& pts, const std::string& style) const
    {
        std::string s = "<polygon points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            s += (i ? " " : "") + xy(pts[i]);
        }
        return s + "\" " + style + "/>\n";
    }

    std::string line(const Point& a, const Point& b, const std::string& style) const
    {
        return "<line x1=\"" + x(a.approx_x()) + "\" y1=\"" + y(a.approx_y()) + "\" x2=\"" + x(b.approx_x()) +
               "\" y2=\"" + y(b.approx_y()) + "\" " + style + "/>\n";
    }

    std::string dot(const Point& p, double r, const std::string& fill) const
    {
        return "<circle cx=\"" + x(p.approx_x()) + "\" cy=\"" + y(p.approx_y()) + "\" r=\"" + num(r) +
               "\" fill=\"" + fill + "\"/>\n";
    }

    std::string label(const Point& p, const std::string& text) const
    {
        return "<text x=\"" + x(p.approx_x() + unit_ * 2) + "\" y=\"" + y(p.approx_y() + unit_ * 2) +
               "\" font-size=\"" + num(unit_ * 8) + "\">" + text + "</text>\n";
    }

private:
    double min_x_, max_x_, min_y_, max_y_;
    double margin_ = 0, unit_ = 1;
};

std::string stroke(const Canvas& c, const char* color, double width, const char* fill = "none")
{
    return std::string("fill=\"") + fill + "\" stroke=\"" + color + "\" stroke-width=\"" + num(c.unit() * width) + "\"";
}

} // namespace

std::string render_svg(const Scene& scene, std::span<const Overlay> overlays)
{
    const Canvas c(scene);
    auto wants = [&overlays](Overlay o) { return std::find(overlays.begin(), overlays.end(), o) != overlays.end(); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(c.width()) << "\" height=\"" << num(c.height())
        << "\" viewBox=\"0 0 " << num(c.width()) << ' ' << num(c.height()) << "\">\n";
    out << c.polygon(to_points(scene.polygon), stroke(c, "black", 1, "#f4f4f4"));

    std::optional<ArrangementGraph> graph;
    auto arrangement = [&]() -> const ArrangementGraph& {
        if (!graph) {
            graph = build_arrangement(scene);
        }
        return *graph;
    };

    for (Overlay o : {Overlay::convex_separator, Overlay::separators, Overlay::hull, Overlay::arrangement,
                      Overlay::result, Overlay::ranks}) {
        if (!wants(o)) {
            continue;
        }
        try {
            switch (o) {
            case Overlay::hull:
                out << c.polygon(convex_hull(std::span<const IPoint>(scene.blue)).vertices, stroke(c, "#1f5fbf", 1));
                break;
            case Overlay::arrangement:
                for (const auto& l : arrangement().lines) {
                    out << c.line(l.clip_a, l.clip_b, stroke(c, "#888888", 0.5));
                }
                break;
            case Overlay::separators:
                for (const auto& t : enumerate_separators(arrangement(), Backend::rank).triangles) {
                    out << c.polygon({t.positions.begin(), t.positions.end()},
                                     stroke(c, "#2a9d4a", 0.6, "#2a9d4a") + " fill-opacity=\"0.08\"");
                }
                break;
            case Overlay::convex_separator:
                out << c.polygon(build_enlarged_separator(scene).vertices, stroke(c, "#b07d00", 1, "#fff3c4"));
                break;
            case Overlay::result: {
                const MaxSepResult r = approx_max_separator(scene);
                out << c.polygon({r.triangle.a, r.triangle.b, r.triangle.c}, stroke(c, "#7b2cbf", 1.5));
                break;
            }
            case Overlay::ranks: {
                const ArrangementGraph& g = arrangement();
                const RankLabels labels = rank_arrangement(g);
                for (const auto& v : g.vertices) {
                    out << c.label(v.position, labels.rank[v.id] ? std::to_string(*labels.rank[v.id]) : "-");
                }
                break;
            }
            }
        } catch (const Error& e) {
            out << "<!-- overlay skipped: " << to_string(e.kind()) << " -->\n";
        }
    }

    for (const auto& p : scene.blue) {
        out << c.dot(Point(p), c.unit() * 3, "#1f5fbf");
    }
    for (const auto& p : scene.red) {
        out << c.dot(Point(p), c.unit() * 3, "#d62828");
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace trisep
