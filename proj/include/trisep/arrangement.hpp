#pragma once

// The arrangement of the 2r tangent lines drawn from every red point to the
// blue hull, each clipped to the environment at the first boundary hit on
// either side of its tangent point, viewed as a geometric graph.

#include "trisep/geometry.hpp"
#include "trisep/scene.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace trisep {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class TangentSide { left, right };

enum class VertexType { I, II, III, IV };

const char* type_name(VertexType t);

// Points on a line are parameterized as touch + t * (red - touch): the
// tangent point sits at t = 0 and the source red point at t = 1.
struct TangentLine {
    std::size_t line_id = 0;
    std::size_t red_index = 0;
    TangentSide side = TangentSide::left;
    std::size_t hull_index = 0;
    IPoint blue_touch;
    IPoint red_point;
    IntLine equation;  // through blue_touch and red_point
    int hull_side = 0; // sign of `equation` over the hull interior
    Point clip_a;      // t < 0 end
    Point clip_b;      // t > 0 end
    mpq_class t_a;
    mpq_class t_b;
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;

    std::vector<std::size_t> vertex_order; // vertex ids by increasing t
    std::vector<mpq_class> params;         // t of each entry of vertex_order
    std::size_t touch_pos = 0;             // position of blue_touch in vertex_order
    std::size_t red_pos = npos;            // position of the red point, if inside the segment

    std::int64_t dx() const { return red_point.x - blue_touch.x; }
    std::int64_t dy() const { return red_point.y - blue_touch.y; }

    // Position one step further from the tangent point, if any.
    std::optional<std::size_t> outward(std::size_t pos) const;
    // Which half of the line a position lies on: -1, 0 (the touch), +1.
    int half(std::size_t pos) const { return pos < touch_pos ? -1 : (pos > touch_pos ? 1 : 0); }
};

struct Incidence {
    std::size_t line = 0;
    std::size_t pos = 0;
};

struct ArrVertex {
    std::size_t id = 0;
    Point position;
    VertexType type = VertexType::IV;
    std::vector<Incidence> incident;
    std::size_t red_index = npos;
    std::size_t blue_index = npos;

    std::size_t degree_lines() const { return incident.size(); }
    // Incidence on the given line; npos position if absent.
    const Incidence* on_line(std::size_t line) const;
};

struct ArrangementOptions {
    // Scene validation runs first; benchmark scenes skip the O(n^3) scan.
    bool validate_general_position = true;
};

class ArrangementGraph {
public:
    Scene scene;
    ConvexChain hull;
    std::vector<Point> polygon;
    std::vector<TangentLine> lines;
    std::vector<ArrVertex> vertices;

    std::size_t line_count() const { return lines.size(); }
    const ArrVertex& vertex(std::size_t id) const { return vertices[id]; }
    std::size_t vertex_at(std::size_t line, std::size_t pos) const { return lines[line].vertex_order[pos]; }

    // Position on line `a` of its crossing with line `b`, when that crossing
    // is a vertex (inside both clipped segments); npos otherwise. O(1).
    std::size_t crossing_pos(std::size_t a, std::size_t b) const { return crossing_[a * lines.size() + b]; }

    std::size_t edge_count() const;
    std::size_t count_type(VertexType t) const;

    void set_crossings(std::vector<std::size_t> table) { crossing_ = std::move(table); }

private:
    std::vector<std::size_t> crossing_;
};

std::vector<TangentLine> build_tangent_lines(const Scene& scene, const ConvexChain& hull,
                                             std::span<const Point> polygon);

ArrangementGraph build_arrangement(const Scene& scene, const ArrangementOptions& options = {});

// Parameter t on `line` where it meets `other` (the lines are never parallel
// in a valid arrangement).
mpq_class crossing_param(const TangentLine& line, const TangentLine& other);
Point point_at(const TangentLine& line, const mpq_class& t);

// Emptiness of the open semi-triangle based on p: the region bounded by the
// two tangent segments from p and the hull chain facing p. A red point on
// the boundary (including p itself) does not count.
bool semi_triangle_red_empty(const Point& p, const ArrangementGraph& g);
bool semi_triangle_red_empty(std::size_t vertex_id, const ArrangementGraph& g);

} // namespace trisep
