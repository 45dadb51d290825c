#ifndef BIPMIN_CORPUS_HPP
#define BIPMIN_CORPUS_HPP

#include <random>
#include <vector>

#include "bipmin/bigraph.hpp"

namespace bipmin {

// Every bipartite graph with 1..max_vertices vertices up to isomorphism
// (red/blue swap collapsed), as canonical representatives ordered by
// (vertex count, canonical key). Enumerates side splits a >= b and all edge
// masks, then dedupes; fine up to ~9 vertices.
std::vector<BiGraph> all_bipartite_graphs(int max_vertices, bool connected_only);

// G(a,b,p) with the documented PRNG mapping: pairs enumerated red-major, one
// mt19937_64 draw each, edge present iff the top 53 bits as a uniform in
// [0,1) fall below p. Reproducible from the seed across implementations.
BiGraph random_bipartite(int reds, int blues, double edge_prob, std::mt19937_64& rng);

// Sample used by the equivalence harness when sampling is requested:
// n uniform in [min_vertices, max_vertices], red side uniform in [2, n-2],
// edge probability uniform in [0.15, 0.5].
std::vector<BiGraph> sample_bipartite(int count, int min_vertices, int max_vertices,
                                      std::uint64_t seed);

} // namespace bipmin

#endif
