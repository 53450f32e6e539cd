#pragma once

#include "trisep/arrangement.hpp"
#include "trisep/ranking.hpp"

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace trisep {

// A separator whose sides lie on three tangent lines of the arrangement and
// whose corners are arrangement vertices. Corners are stored sorted by
// position, which doubles as the deduplication key.
struct CanonicalTriangle {
    std::array<std::size_t, 3> corners{};       // vertex ids
    std::array<Point, 3> positions;             // ascending
    std::array<std::size_t, 3> support_lines{}; // ascending line ids

    Triangle triangle() const { return Triangle{positions[0], positions[1], positions[2]}; }

    friend bool operator==(const CanonicalTriangle& a, const CanonicalTriangle& b)
    {
        return a.positions == b.positions && a.support_lines == b.support_lines;
    }
    friend std::strong_ordering operator<=>(const CanonicalTriangle& a, const CanonicalTriangle& b)
    {
        for (std::size_t i = 0; i < 3; ++i) {
            if (auto c = a.positions[i] <=> b.positions[i]; c != 0) {
                return c;
            }
        }
        return a.support_lines <=> b.support_lines;
    }
};

CanonicalTriangle make_canonical(const ArrangementGraph& g, std::array<std::size_t, 3> corners,
                                 std::array<std::size_t, 3> lines);

enum class Backend { rank, oracle };

struct EnumerationStats {
    std::size_t corners = 0;    // candidate corners processed
    std::size_t walks = 0;      // (corner, line pair, direction) walks started
    std::size_t walk_steps = 0; // vertices visited along the second line
    std::size_t formed = 0;     // triangles assembled
    std::size_t rejected = 0;   // assembled but failed validation
    std::size_t emitted = 0;    // before deduplication
    std::size_t invalid = 0;    // unique triangles dropped by validate_separator
};

struct EnumerationResult {
    std::vector<CanonicalTriangle> triangles; // unique, ascending
    EnumerationStats stats;
};

// Walks the labeled arrangement from every candidate corner. Every emitted
// triangle has been checked against the separator conditions. `threads`
// partitions corners; the result does not depend on it.
EnumerationResult enumerate_separators(const ArrangementGraph& g, const RankLabels& labels, unsigned threads = 1);
EnumerationResult enumerate_separators(const ArrangementGraph& g, Backend backend, unsigned threads = 1);

enum class Violation { none, missing_blue, red_inside, outside_environment };

struct SeparatorReport {
    bool valid = true;
    Violation violation = Violation::none;
    std::size_t index = 0; // blue/red index, or polygon edge for outside_environment

    std::string str() const;
};

// (a) every blue point in the closed triangle, (b) no red point in the open
// triangle, (c) the closed triangle inside the environment. Throws
// DegenerateTriangle for zero area.
SeparatorReport validate_separator(const Triangle& t, const Scene& scene);

// All triples of tangent lines, checked directly. Independent of ranking.
std::vector<CanonicalTriangle> brute_force_separators(const ArrangementGraph& g);

} // namespace trisep
