#ifndef BIPMIN_LAMAN_HPP
#define BIPMIN_LAMAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipmin/bigraph.hpp"

namespace bipmin {

// A (2,2)-Laman graph has both sides >= 2, exactly 2(|A|+|B|)-4 edges, and
// every vertex subset X with |X| >= 3 spans at most 2|X|-4 edges. Induced
// subgraphs are the binding case, so recognition scans subsets.

struct SubsetScanBest {
    int max_excess = 0;        // max over |X|>=3 of E(X) - (2|X|-4); 0 when no subsets
    std::uint64_t argmax = 0;  // smallest mask attaining max_excess, 0 if none
    bool any = false;
    bool operator==(const SubsetScanBest&) const = default;
};

inline constexpr int kScanVertexCap = 26; // 2^n DP table, one byte per subset

// Reference kernel: recounts E(X) from scratch for every subset. Slow and
// obviously correct; the parallel kernel is tested against it.
SubsetScanBest subset_scan_serial(const BiGraph& g);

// DP kernel: E(m) = E(m - top bit) + |N(top) ∩ (m - top bit)|, filled chunk
// by chunk over the top bit so each chunk is an independent OpenMP loop.
SubsetScanBest subset_scan(const BiGraph& g);

struct Violation {
    std::vector<std::string> vertices;
    int excess = 0;
};

struct LamanReport {
    bool verdict = false;
    bool global_count_ok = false;
    std::pair<int, int> side_sizes{0, 0};
    std::optional<Violation> worst_violation;
};

// Throws SideTooSmall unless both sides have >= 2 vertices.
LamanReport is_laman(const BiGraph& g);

// All X with 3 <= |X| <= max_size and E(X) = 2|X|-4, ascending by subset mask.
std::vector<std::vector<std::string>> critical_sets(const BiGraph& g, int max_size);

struct DegreeReport {
    bool min_degree_at_least_2 = false;
    bool some_degree_at_most_3 = false;
    std::vector<int> degrees; // sorted ascending
};

// Requires a Laman graph (throws NotLaman); a flag coming back false would
// falsify the degree lemmas.
DegreeReport degree_profile_checks(const BiGraph& g);

// G - v for a degree-2 vertex of a Laman graph other than K22; the result is
// Laman again.
BiGraph reduce_degree2(const BiGraph& g, const std::string& v);

struct ReductionMove {
    std::string v, x, y, p;
    BiGraph result; // (G - v) + xp
};

// All valid (x,y,p) triples for a degree-3 vertex v of a min-degree-3 Laman
// graph. Theorem: never empty; callers treat emptiness as a falsification.
std::vector<ReductionMove> reduce_step(const BiGraph& g, const std::string& v);

// Inverse move: delete edge xp, add a fresh vertex on p's side adjacent to
// the three new_neighbors (which must include x and lie on x's side).
// Returns nullopt when the result is not Laman.
std::optional<BiGraph> extend(const BiGraph& g, const std::string& x, const std::string& p,
                              const std::vector<std::string>& new_neighbors);

// Closure of {K22} under degree-2 additions and extend moves, filtered by
// is_laman and deduplicated by canonical key; graphs come back canonically
// relabeled, ordered by (vertex count, key).
std::vector<BiGraph> enumerate_laman(int max_vertices, int cap = 12);

} // namespace bipmin

#endif
