#ifndef BIPMIN_PLANARITY_HPP
#define BIPMIN_PLANARITY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipmin/graph.hpp"

namespace bipmin {

struct KuratowskiWitness {
    std::string pattern; // "K5" or "K33"
    SubdivisionWitness subdivision;
};

struct PlanarityVerdict {
    bool planar = false;
    std::optional<KuratowskiWitness> kuratowski_witness;
};

// Left-right (LR partition) planarity test; accepts general graphs since the
// cone of a bipartite graph is not bipartite. The Kuratowski witness comes
// from the independent subdivision search, not from the LR data structures,
// so the two routes cross-validate each other.
PlanarityVerdict is_planar(const Graph& g, bool want_witness = false);
PlanarityVerdict is_planar(const BiGraph& g, bool want_witness = false);
bool is_planar_quick(const Graph& g);

bool is_outerplanar(const BiGraph& g);
bool is_forest(const BiGraph& g);

} // namespace bipmin

#endif
