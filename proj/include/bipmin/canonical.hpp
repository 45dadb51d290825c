#ifndef BIPMIN_CANONICAL_HPP
#define BIPMIN_CANONICAL_HPP

#include <optional>
#include <string>
#include <unordered_map>

#include "bipmin/bigraph.hpp"

namespace bipmin {

// Canonical byte string: equal keys iff the graphs are isomorphic by a
// color-preserving bijection, with the global red/blue swap allowed unless
// disabled. Stable across runs: [n0, n1, packed adjacency rows] minimized
// over the labelings reachable by partition refinement + individualization.
std::string canonical_key(const BiGraph& g, bool allow_swap = true);

// Independent of canonical_key: direct backtracking bijection search.
bool is_isomorphic(const BiGraph& g, const BiGraph& h, bool allow_swap = true);

// Injective color-class-respecting map carrying every pattern edge to a host
// edge (host may have extra edges). Keys are pattern names, values host names.
std::optional<std::unordered_map<std::string, std::string>>
find_subgraph_map(const BiGraph& host, const BiGraph& pattern, bool allow_swap = true);

// Validates an explicit correspondence as a full isomorphism from g onto h.
bool is_isomorphism_map(const BiGraph& g, const BiGraph& h,
                        const std::unordered_map<std::string, std::string>& map_g_to_h,
                        bool allow_swap = true);

// Decodes a key back into its representative graph, vertices named r1..rk
// and b1..bm in key order. canonical_key(from_canonical_key(k)) == k.
BiGraph from_canonical_key(const std::string& key);

} // namespace bipmin

#endif
