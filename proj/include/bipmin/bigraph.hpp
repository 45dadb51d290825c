#ifndef BIPMIN_BIGRAPH_HPP
#define BIPMIN_BIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bipmin/errors.hpp"

namespace bipmin {

// Immutable simple graph with a fixed proper 2-coloring (red/blue parts).
// Vertices are identified by name; internally they map to indices 0..n-1 and
// adjacency is kept as one 64-bit mask per vertex, so n is capped at 64.
// Every operation returns a new value; nothing mutates shared state.
class BiGraph {
public:
    static constexpr int kMaxVertices = 64;

    BiGraph() = default;

    static BiGraph make(const std::vector<std::string>& reds,
                        const std::vector<std::string>& blues,
                        const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const;
    int red_count() const;
    int blue_count() const { return vertex_count() - red_count(); }

    bool empty() const { return names_.empty(); }
    bool has_vertex(const std::string& name) const;
    bool has_edge(const std::string& u, const std::string& v) const;
    bool is_red(const std::string& name) const;
    int degree(const std::string& name) const;

    std::vector<std::string> red_names() const;
    std::vector<std::string> blue_names() const;
    const std::vector<std::string>& all_names() const { return names_; }
    // Neighbor names in stored vertex order.
    std::vector<std::string> neighbors(const std::string& name) const;

    BiGraph delete_vertex(const std::string& v) const;
    BiGraph delete_edge(const std::string& u, const std::string& v) const;
    // Identifies `merge` with `into` (same side); `into` keeps its name and
    // inherits the union of both neighborhoods. Double edges collapse.
    BiGraph contract(const std::string& merge, const std::string& into) const;
    BiGraph induced_subgraph(const std::vector<std::string>& keep) const;
    // Adds a fresh degree-`attach.size()` vertex. Used by laman moves.
    BiGraph add_vertex(const std::string& name, bool red,
                       const std::vector<std::string>& attach) const;
    BiGraph add_edge(const std::string& u, const std::string& v) const;

    struct Components {
        int count = 0;
        std::vector<std::vector<std::string>> parts;
    };
    Components components() const;
    int component_count() const;

    // Index-level accessors for algorithm kernels.
    int index_of(const std::string& name) const; // throws UnknownVertex
    std::optional<int> find_index(const std::string& name) const;
    const std::string& name_of(int i) const { return names_[static_cast<size_t>(i)]; }
    std::uint64_t adj_bits(int i) const { return adj_[static_cast<size_t>(i)]; }
    std::uint64_t red_bits() const { return red_mask_; }
    std::uint64_t blue_bits() const { return full_bits() & ~red_mask_; }
    std::uint64_t full_bits() const;
    bool red_at(int i) const { return (red_mask_ >> i) & 1u; }
    int degree_at(int i) const;
    int edges_within(std::uint64_t subset) const;
    int components_within(std::uint64_t subset) const;

    // Exact labeled equality (names, colors, adjacency). Vertex order is
    // ignored; use is_isomorphic for structural comparison.
    bool equal_labeled(const BiGraph& other) const;

    struct Builder; // internal construction without re-validation

private:
    std::vector<std::string> names_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t red_mask_ = 0;
    std::unordered_map<std::string, int> index_;

    void rebuild_index();
    friend struct BiGraphBuilder;
};

// Unchecked assembly from index-level data; callers guarantee validity.
struct BiGraphBuilder {
    std::vector<std::string> names;
    std::vector<std::uint64_t> adj;
    std::uint64_t red_mask = 0;
    BiGraph build() &&;
};

} // namespace bipmin

#endif
