#include "bipmin/graph.hpp"

#include <algorithm>
#include <bit>

namespace bipmin {

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
    if (names_.size() > kMaxVertices) fail(Err::CapExceeded, "vertex cap 64");
    adj_.assign(names_.size(), 0);
    for (auto [u, v] : edges) {
        if (u == v) fail(Err::SelfLoop, names_[u]);
        adj_[u] |= 1ull << v;
        adj_[v] |= 1ull << u;
    }
}

Graph Graph::from_bigraph(const BiGraph& g) {
    Graph out;
    out.names_ = g.all_names();
    out.adj_.resize(out.names_.size());
    for (int i = 0; i < g.vertex_count(); ++i)
        out.adj_[i] = g.adj_bits(i);
    return out;
}

Graph Graph::complete(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) names.push_back("u" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(std::move(names), edges);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int j = 0; j < b; ++j) names.push_back("y" + std::to_string(j + 1));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(std::move(names), edges);
}

int Graph::edge_count() const {
    int total = 0;
    for (auto m : adj_) total += std::popcount(m);
    return total / 2;
}

std::uint64_t Graph::full_bits() const {
    size_t n = names_.size();
    return n == 64 ? ~0ull : (1ull << n) - 1;
}

int Graph::degree_at(int i) const { return std::popcount(adj_[static_cast<size_t>(i)]); }

int Graph::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    fail(Err::UnknownVertex, name);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < vertex_count(); ++i) {
        std::uint64_t row = adj_[i] >> (i + 1) << (i + 1);
        while (row) {
            int j = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(i, j);
        }
    }
    return out;
}

Graph Graph::add_apex(const std::string& apex_name) const {
    if (vertex_count() + 1 > kMaxVertices) fail(Err::CapExceeded, "vertex cap 64");
    Graph out = *this;
    int id = out.vertex_count();
    out.names_.push_back(apex_name);
    out.adj_.push_back((1ull << id) - 1);
    for (int i = 0; i < id; ++i) out.adj_[i] |= 1ull << id;
    return out;
}

Graph cone(const BiGraph& g) {
    std::string apex = "apex";
    while (g.has_vertex(apex)) apex += "'";
    return Graph::from_bigraph(g).add_apex(apex);
}

std::vector<std::pair<std::string, std::string>> SubdivisionWitness::subgraph_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i)
            out.emplace_back(p[i], p[i + 1]);
    return out;
}

namespace {

struct SubdivSearch {
    const Graph& host;
    const Graph& pattern;
    long long budget;
    std::vector<int> branch;                 // pattern vertex -> host vertex
    std::uint64_t used = 0;                  // branch images + path internals
    std::vector<std::pair<int, int>> pedges; // pattern edges, endpoints as pattern ids
    std::vector<std::vector<int>> paths;     // host ids, one per pattern edge

    bool tick() {
        if (--budget < 0) fail(Err::BudgetExhausted, "subdivision search");
        return true;
    }

    bool route(size_t edge_idx) {
        if (edge_idx == pedges.size()) return true;
        auto [pa, pb] = pedges[edge_idx];
        int from = branch[pa], to = branch[pb];
        std::vector<int>& path = paths[edge_idx];
        path.assign(1, from);
        return extend(edge_idx, from, to);
    }

    bool extend(size_t edge_idx, int at, int to) {
        tick();
        std::uint64_t nbrs = host.adj_bits(at);
        if ((nbrs >> to) & 1u) {
            paths[edge_idx].push_back(to);
            if (route(edge_idx + 1)) return true;
            paths[edge_idx].pop_back();
        }
        std::uint64_t cand = nbrs & ~used;
        while (cand) {
            int y = std::countr_zero(cand);
            cand &= cand - 1;
            if (y == to) continue;
            used |= 1ull << y;
            paths[edge_idx].push_back(y);
            if (extend(edge_idx, y, to)) return true;
            paths[edge_idx].pop_back();
            used &= ~(1ull << y);
        }
        return false;
    }

    bool assign(size_t k, const std::vector<int>& order) {
        if (k == order.size()) {
            paths.assign(pedges.size(), {});
            return route(0);
        }
        tick();
        int p = order[k];
        for (int h = 0; h < host.vertex_count(); ++h) {
            if ((used >> h) & 1u) continue;
            if (host.degree_at(h) < pattern.degree_at(p)) continue;
            branch[p] = h;
            used |= 1ull << h;
            if (assign(k + 1, order)) return true;
            used &= ~(1ull << h);
        }
        branch[p] = -1;
        return false;
    }
};

} // namespace

std::optional<SubdivisionWitness> find_subdivision(const Graph& host, const Graph& pattern,
                                                   long long budget) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;

    SubdivSearch s{host, pattern, budget, {}, 0, {}, {}};
    s.branch.assign(pattern.vertex_count(), -1);
    s.pedges = pattern.edges();
    // High-degree pattern vertices first: they have the fewest host candidates.
    std::vector<int> order(pattern.vertex_count());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree_at(a) > pattern.degree_at(b);
    });

    if (!s.assign(0, order)) return std::nullopt;

    SubdivisionWitness w;
    for (int i = 0; i < pattern.vertex_count(); ++i)
        w.branch.push_back(host.name_of(s.branch[i]));
    for (const auto& path : s.paths) {
        std::vector<std::string> names;
        for (int v : path) names.push_back(host.name_of(v));
        w.paths.push_back(std::move(names));
    }
    return w;
}

} // namespace bipmin
