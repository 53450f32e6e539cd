#pragma once

// Two-step ranking of arrangement vertices: ancestors next to the hull
// tangent points start at rank 0, then ranks spread outward level by level,
// growing by one at each red point and at each deviation from a line beyond
// its red point. rank(v) >= 2 certifies a red point inside the semi-triangle
// of v; rank(v) < 2 makes v a candidate separator corner.

#include "trisep/arrangement.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace trisep {

struct RankLabels {
    std::vector<std::optional<int>> rank;  // per vertex; empty if never reached
    std::vector<std::optional<int>> level; // per vertex
    std::vector<std::size_t> ancestors;    // sorted vertex ids
    std::vector<std::size_t> red_parent;   // per line; vertex id or npos

    // Per line, for the t < 0 half ([0]) and the t > 0 half ([1]): the last
    // vertex, walking outward from the tangent point, before the first one
    // of rank >= 2. npos when the very first vertex already has rank >= 2.
    std::vector<std::array<std::size_t, 2>> directional_extreme;
    // Per vertex, parallel to ArrVertex::incident: the directional extreme
    // on the far side of that line's tangent point; npos if none.
    std::vector<std::vector<std::size_t>> extreme;

    std::size_t assignments = 0;             // successful rank writes during propagation
    std::size_t monotonicity_violations = 0; // outward rank decreases observed

    // Unreached vertices are not excluded: nothing certifies a red inside them.
    bool candidate(std::size_t v) const { return !rank[v] || *rank[v] < 2; }
    std::size_t extreme_on(const ArrangementGraph& g, std::size_t v, std::size_t line) const;
};

std::vector<std::size_t> initialize_ancestors(const ArrangementGraph& g);

RankLabels propagate_ranks(const ArrangementGraph& g, const std::vector<std::size_t>& ancestors);

void compute_extremes(const ArrangementGraph& g, RankLabels& labels);

// initialize_ancestors + propagate_ranks + compute_extremes.
RankLabels rank_arrangement(const ArrangementGraph& g);

// Labels from the semi-triangle oracle instead of propagation: 0 for empty
// (and for hull tangent points), 2 otherwise. Extremes are filled.
RankLabels oracle_labels(const ArrangementGraph& g);

// "id type rank level extreme" rows, one per vertex.
std::string rank_table(const ArrangementGraph& g, const RankLabels& labels);

} // namespace trisep
