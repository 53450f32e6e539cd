#pragma once

// Approximate maximum triangular separator in a convex environment: enlarge
// the blue hull until every edge touches a red point or the boundary, pick an
// apex on the enlarged region and take the best triangle of a dyadic family
// of apex triangles. The exact oracles bound each step of the approximation.

#include "trisep/geometry.hpp"
#include "trisep/scene.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace trisep {

struct EdgeWitness {
    enum class Kind { red, boundary };
    Kind kind = Kind::boundary;
    // Red index, or the index of a polygon vertex (for a hull edge pushed to
    // the boundary) or polygon edge (for an edge of the environment).
    std::size_t index = 0;
};

// Strictly convex, counterclockwise. witness[i] belongs to the edge from
// vertices[i] to vertices[i + 1].
struct ConvexSeparator {
    std::vector<Point> vertices;
    std::vector<EdgeWitness> witness;

    std::size_t size() const { return vertices.size(); }
};

ConvexSeparator build_enlarged_separator(const Scene& scene);

struct CandidateFamily {
    std::size_t apex = 0;                          // index into the separator
    std::vector<std::array<std::size_t, 3>> triangles; // (apex, a, b) vertex indices
};

CandidateFamily candidate_family(const ConvexSeparator& c, std::size_t apex);

std::size_t count_blue_closed(const Triangle& t, const Scene& scene);

struct ScoredTriangle {
    Triangle triangle;
    std::size_t blue_count = 0;
};

enum class ApexPolicy { lowest_vertex, all_vertices };

struct MaxSepResult {
    Triangle triangle;
    std::size_t blue_count = 0;
    Point apex_used;
    std::size_t apex_index = 0;
    std::size_t family_size = 0;
};

MaxSepResult approx_max_separator(const Scene& scene, ApexPolicy policy = ApexPolicy::lowest_vertex,
                                  unsigned threads = 1);
MaxSepResult approx_max_separator(const Scene& scene, const ConvexSeparator& c, ApexPolicy policy,
                                  unsigned threads = 1);

// Best triangle on three vertices of the separator.
ScoredTriangle exact_vertex_optimum(const ConvexSeparator& c, const Scene& scene);
// Best triangle on the apex and two other vertices.
ScoredTriangle exact_apex_optimum(const ConvexSeparator& c, std::size_t apex, const Scene& scene);
// Best member of the candidate family.
ScoredTriangle family_optimum(const ConvexSeparator& c, std::size_t apex, const Scene& scene);

inline constexpr std::size_t kLineFamilyLimit = 12;

// Best red-free triangle inside the environment whose side lines each pass
// through two scene points. Throws SceneTooLarge beyond kLineFamilyLimit
// points.
ScoredTriangle line_family_optimum(const Scene& scene);

// "lhs <= rhs" with the factor already applied to rhs.
struct LemmaCheck {
    std::string name;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool ok = true;
};

// For every apex u: vertex optimum <= 2 * apex optimum, family maximum <=
// apex optimum <= 2 * family maximum; and, for small scenes, the line family
// optimum <= 28 * result.
std::vector<LemmaCheck> lemma_chain_checks(const Scene& scene, const ConvexSeparator& c, const MaxSepResult& result);

} // namespace trisep
