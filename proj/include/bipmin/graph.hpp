#ifndef BIPMIN_GRAPH_HPP
#define BIPMIN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bipmin/bigraph.hpp"

namespace bipmin {

// Uncolored simple graph. The cone over a bipartite graph is never bipartite,
// so the planarity and subdivision machinery works on this type.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

    static Graph from_bigraph(const BiGraph& g);
    static Graph complete(int n);           // vertices u1..un
    static Graph complete_bipartite(int a, int b);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const;
    const std::string& name_of(int i) const { return names_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& all_names() const { return names_; }
    std::uint64_t adj_bits(int i) const { return adj_[static_cast<size_t>(i)]; }
    std::uint64_t full_bits() const;
    int degree_at(int i) const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    int index_of(const std::string& name) const;

    std::vector<std::pair<int, int>> edges() const;
    Graph add_apex(const std::string& apex_name) const;

private:
    std::vector<std::string> names_;
    std::vector<std::uint64_t> adj_;
};

// G plus one new vertex adjacent to everything; G outerplanar iff cone planar.
// The apex name is "apex", suffixed with primes until fresh.
Graph cone(const BiGraph& g);

// A subgraph of the host homeomorphic to the pattern: one branch vertex per
// pattern vertex plus internally disjoint paths, one per pattern edge.
struct SubdivisionWitness {
    std::vector<std::string> branch;                    // pattern index -> host name
    std::vector<std::vector<std::string>> paths;        // one path per pattern edge
    std::vector<std::pair<std::string, std::string>> subgraph_edges() const;
};

// Exact backtracking search for a subdivision of `pattern` inside `host`.
// Budget counts search-tree nodes; exhaustion throws BudgetExhausted.
std::optional<SubdivisionWitness> find_subdivision(const Graph& host, const Graph& pattern,
                                                   long long budget = 20'000'000);

} // namespace bipmin

#endif
