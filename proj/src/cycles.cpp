#include "bipmin/cycles.hpp"

#include <algorithm>
#include <bit>

namespace bipmin {

namespace {

std::uint64_t cycle_mask(const BiGraph& g, const Cycle& c) {
    std::uint64_t m = 0;
    for (const auto& name : c) {
        auto i = g.find_index(name);
        if (!i) fail(Err::NotACycle, "unknown vertex " + name);
        if ((m >> *i) & 1u) fail(Err::NotACycle, "repeated vertex " + name);
        m |= 1ull << *i;
    }
    return m;
}

} // namespace

void validate_cycle(const BiGraph& g, const Cycle& c) {
    if (c.size() < 4) fail(Err::NotACycle, "length " + std::to_string(c.size()) + " < 4");
    if (c.size() % 2 != 0) fail(Err::NotACycle, "odd length in a bipartite graph");
    cycle_mask(g, c);
    for (size_t i = 0; i < c.size(); ++i) {
        const auto& a = c[i];
        const auto& b = c[(i + 1) % c.size()];
        if (!g.has_edge(a, b)) fail(Err::NotACycle, "missing edge " + a + "-" + b);
    }
}

bool is_induced_cycle(const BiGraph& g, const Cycle& c) {
    validate_cycle(g, c);
    std::uint64_t mask = cycle_mask(g, c);
    size_t k = c.size();
    for (size_t i = 0; i < k; ++i) {
        int vi = g.index_of(c[i]);
        std::uint64_t allowed = 0;
        allowed |= 1ull << g.index_of(c[(i + 1) % k]);
        allowed |= 1ull << g.index_of(c[(i + k - 1) % k]);
        if (g.adj_bits(vi) & mask & ~(1ull << vi) & ~allowed) return false;
    }
    return true;
}

bool is_non_separating(const BiGraph& g, const Cycle& c) {
    validate_cycle(g, c);
    std::uint64_t rest = g.full_bits() & ~cycle_mask(g, c);
    return g.components_within(rest) <= g.component_count();
}

bool is_peripheral(const BiGraph& g, const Cycle& c) {
    return is_induced_cycle(g, c) && is_non_separating(g, c);
}

namespace {

struct PeripheralDfs {
    const BiGraph& g;
    long long budget;
    int u;                       // closing vertex (path start)
    std::uint64_t on_path = 0;
    std::vector<int> path;
    std::vector<std::vector<int>> sorted_adj; // neighbor ids in name order
    int base_components;

    explicit PeripheralDfs(const BiGraph& graph, long long b) : g(graph), budget(b) {
        int n = g.vertex_count();
        sorted_adj.resize(static_cast<size_t>(n));
        std::vector<int> by_name(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) by_name[i] = i;
        std::sort(by_name.begin(), by_name.end(),
                  [&](int a, int b2) { return g.name_of(a) < g.name_of(b2); });
        for (int i = 0; i < n; ++i)
            for (int j : by_name)
                if ((g.adj_bits(i) >> j) & 1u) sorted_adj[i].push_back(j);
        base_components = g.component_count();
    }

    // Path invariant: induced (the only adjacencies among path vertices are
    // consecutive). A neighbor y of the tip extends iff its adjacency into
    // the path is exactly {tip}; it closes iff exactly {tip, u}.
    bool dfs() {
        if (--budget < 0) fail(Err::BudgetExhausted, "peripheral cycle search");
        int tip = path.back();
        for (int y : sorted_adj[tip]) {
            if ((on_path >> y) & 1u) continue;
            std::uint64_t hits = g.adj_bits(y) & on_path;
            std::uint64_t close_pattern = (1ull << tip) | (1ull << u);
            if (hits == close_pattern) {
                std::uint64_t cmask = on_path | (1ull << y);
                if (g.components_within(g.full_bits() & ~cmask) <= base_components) {
                    path.push_back(y);
                    return true;
                }
            } else if (hits == (1ull << tip)) {
                path.push_back(y);
                on_path |= 1ull << y;
                if (dfs()) return true;
                on_path &= ~(1ull << y);
                path.pop_back();
            }
        }
        return false;
    }
};

} // namespace

std::optional<Cycle> find_peripheral_through_path(const BiGraph& g, const std::string& u,
                                                  const std::string& w, const std::string& v,
                                                  long long budget) {
    int iu = g.index_of(u), iw = g.index_of(w), iv = g.index_of(v);
    if (iu == iv) fail(Err::NotAPath, "endpoints coincide: " + u);
    if (!g.has_edge(u, w)) fail(Err::NotAPath, "missing edge " + u + "-" + w);
    if (!g.has_edge(w, v)) fail(Err::NotAPath, "missing edge " + w + "-" + v);

    PeripheralDfs dfs(g, budget);
    dfs.u = iu;
    dfs.path = {iu, iw, iv};
    dfs.on_path = (1ull << iu) | (1ull << iw) | (1ull << iv);
    if (!dfs.dfs()) return std::nullopt;
    Cycle out;
    for (int i : dfs.path) out.push_back(g.name_of(i));
    return out;
}

std::optional<CycleWitness> admissible_witness(const BiGraph& g, const std::string& u,
                                               const std::string& v, long long budget) {
    int iu = g.index_of(u), iv = g.index_of(v);
    if (iu == iv) fail(Err::SameVertex, u);
    if (g.red_at(iu) != g.red_at(iv)) fail(Err::DifferentSides, u + " vs " + v);
    std::uint64_t common = g.adj_bits(iu) & g.adj_bits(iv);
    std::vector<std::string> ws;
    while (common) {
        int i = std::countr_zero(common);
        common &= common - 1;
        ws.push_back(g.name_of(i));
    }
    std::sort(ws.begin(), ws.end());
    for (const auto& w : ws)
        if (auto cycle = find_peripheral_through_path(g, u, w, v, budget))
            return CycleWitness{w, *cycle};
    return std::nullopt;
}

ContractionResult admissible_contract(const BiGraph& g, const std::string& merge,
                                      const std::string& into, long long budget) {
    auto witness = admissible_witness(g, merge, into, budget);
    if (!witness) {
        bool have_common = g.adj_bits(g.index_of(merge)) & g.adj_bits(g.index_of(into));
        fail(Err::NotAdmissible,
             merge + " with " + into +
                 (have_common ? ": no peripheral cycle through any common neighbor"
                              : ": no common neighbor"));
    }
    return ContractionResult{g.contract(merge, into), *witness};
}

nlohmann::json witness_to_json(const CycleWitness& w) {
    return {{"common", w.common}, {"cycle", w.cycle}};
}

CycleWitness witness_from_json(const nlohmann::json& j) {
    CycleWitness w;
    w.common = j.at("common").get<std::string>();
    w.cycle = j.at("cycle").get<std::vector<std::string>>();
    return w;
}

} // namespace bipmin
