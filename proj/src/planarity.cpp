#include "bipmin/planarity.hpp"

#include <algorithm>
#include <bit>

namespace bipmin {

namespace {

// Left-right planarity test after Brandes' formulation: orientation DFS
// computing lowpoints and nesting order, then a constraint DFS maintaining a
// stack of conflict pairs of back-edge intervals. Only the verdict is needed,
// so the embedding side assignment is omitted.
struct LRPlanarity {
    const Graph& g;
    int n;

    std::vector<int> esrc, edst;      // oriented edges
    std::vector<int> lowpt, lowpt2, nesting, ref, lowpt_edge, stack_bottom;
    std::vector<int> height;          // -1 = unvisited
    std::vector<int> parent_edge;     // oriented edge id or -1
    std::vector<std::vector<int>> out; // outgoing oriented edge ids per vertex
    std::vector<std::uint64_t> oriented; // undirected edge already oriented

    struct Interval {
        int low = -1, high = -1;
        bool empty() const { return low == -1 && high == -1; }
    };
    struct ConflictPair {
        Interval L, R;
    };
    std::vector<ConflictPair> S;

    explicit LRPlanarity(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    int new_edge(int v, int w) {
        esrc.push_back(v);
        edst.push_back(w);
        lowpt.push_back(height[v]);
        lowpt2.push_back(height[v]);
        nesting.push_back(0);
        int id = static_cast<int>(esrc.size()) - 1;
        out[v].push_back(id);
        oriented[v] |= 1ull << w;
        oriented[w] |= 1ull << v;
        return id;
    }

    void dfs_orient(int v) {
        int e = parent_edge[v];
        std::uint64_t nbrs = g.adj_bits(v);
        while (nbrs) {
            int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if ((oriented[v] >> w) & 1u) continue;
            int id = new_edge(v, w);
            if (height[w] == -1) { // tree edge
                parent_edge[w] = id;
                height[w] = height[v] + 1;
                dfs_orient(w);
            } else { // back edge
                lowpt[id] = height[w];
            }
            nesting[id] = 2 * lowpt[id];
            if (lowpt2[id] < height[v]) nesting[id] += 1; // chordal
            if (e != -1) {
                if (lowpt[id] < lowpt[e]) {
                    lowpt2[e] = std::min(lowpt[e], lowpt2[id]);
                    lowpt[e] = lowpt[id];
                } else if (lowpt[id] > lowpt[e]) {
                    lowpt2[e] = std::min(lowpt2[e], lowpt[id]);
                } else {
                    lowpt2[e] = std::min(lowpt2[e], lowpt2[id]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const {
        return !i.empty() && lowpt[i.high] > lowpt[b];
    }

    int lowest(const ConflictPair& p) const {
        if (p.L.empty()) return lowpt[p.R.low];
        if (p.R.empty()) return lowpt[p.L.low];
        return std::min(lowpt[p.L.low], lowpt[p.R.low]);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        // merge return edges of ei into P.R
        do {
            ConflictPair Q = S.back();
            S.pop_back();
            if (!Q.L.empty()) std::swap(Q.L, Q.R);
            if (!Q.L.empty()) return false; // interlacing on both sides
            if (Q.R.low != -1 && lowpt[Q.R.low] > lowpt[e]) {
                if (P.R.empty()) P.R.high = Q.R.high;
                else ref[P.R.low] = Q.R.high;
                P.R.low = Q.R.low;
            } else if (Q.R.low != -1) {
                ref[Q.R.low] = lowpt_edge[e]; // aligns with the lowest return edge
            }
        } while (static_cast<int>(S.size()) > stack_bottom[ei]);
        // merge conflicting return edges of earlier siblings into P.L
        while (!S.empty() && (conflicting(S.back().L, ei) || conflicting(S.back().R, ei))) {
            ConflictPair Q = S.back();
            S.pop_back();
            if (conflicting(Q.R, ei)) std::swap(Q.L, Q.R);
            if (conflicting(Q.R, ei)) return false;
            if (P.R.low != -1) ref[P.R.low] = Q.R.high;
            if (Q.R.low != -1) P.R.low = Q.R.low;
            if (P.L.empty()) P.L.high = Q.L.high;
            else ref[P.L.low] = Q.L.high;
            P.L.low = Q.L.low;
        }
        if (!(P.L.empty() && P.R.empty())) S.push_back(P);
        return true;
    }

    void remove_back_edges(int e) {
        int u = esrc[e];
        // drop conflict pairs whose lowest return reaches only the parent
        while (!S.empty() && lowest(S.back()) == height[u])
            S.pop_back();
        if (!S.empty()) {
            ConflictPair P = S.back();
            S.pop_back();
            while (P.L.high != -1 && edst[P.L.high] == u) P.L.high = ref[P.L.high];
            if (P.L.high == -1 && P.L.low != -1) {
                ref[P.L.low] = P.R.low;
                P.L.low = -1;
            }
            while (P.R.high != -1 && edst[P.R.high] == u) P.R.high = ref[P.R.high];
            if (P.R.high == -1 && P.R.low != -1) {
                ref[P.R.low] = P.L.low;
                P.R.low = -1;
            }
            S.push_back(P);
        }
        if (lowpt[e] < height[u] && !S.empty()) { // e has a return edge
            int hl = S.back().L.high;
            int hr = S.back().R.high;
            ref[e] = (hl != -1 && (hr == -1 || lowpt[hl] > lowpt[hr])) ? hl : hr;
        }
    }

    bool dfs_test(int v) {
        int e = parent_edge[v];
        bool first = true;
        for (int ei : out[v]) {
            stack_bottom[ei] = static_cast<int>(S.size());
            int w = edst[ei];
            if (parent_edge[w] == ei) { // tree edge
                if (!dfs_test(w)) return false;
            } else { // back edge
                lowpt_edge[ei] = ei;
                S.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
            }
            if (lowpt[ei] < height[v]) { // ei has a return edge
                if (first) {
                    if (e != -1) lowpt_edge[e] = lowpt_edge[ei];
                } else if (!add_constraints(ei, e)) {
                    return false;
                }
            }
            first = false;
        }
        if (e != -1) remove_back_edges(e);
        return true;
    }

    bool run() {
        if (n < 5) return true;
        if (g.edge_count() > 3 * n - 6) return false;
        height.assign(n, -1);
        parent_edge.assign(n, -1);
        out.assign(n, {});
        oriented.assign(n, 0);
        std::vector<int> roots;
        for (int v = 0; v < n; ++v)
            if (height[v] == -1) {
                height[v] = 0;
                roots.push_back(v);
                dfs_orient(v);
            }
        for (int v = 0; v < n; ++v)
            std::stable_sort(out[v].begin(), out[v].end(),
                             [&](int a, int b) { return nesting[a] < nesting[b]; });
        size_t m = esrc.size();
        ref.assign(m, -1);
        lowpt_edge.assign(m, -1);
        stack_bottom.assign(m, 0);
        for (int r : roots)
            if (!dfs_test(r)) return false;
        return true;
    }
};

} // namespace

bool is_planar_quick(const Graph& g) {
    LRPlanarity lr(g);
    return lr.run();
}

PlanarityVerdict is_planar(const Graph& g, bool want_witness) {
    PlanarityVerdict verdict;
    verdict.planar = is_planar_quick(g);
    if (!verdict.planar && want_witness) {
        if (auto w = find_subdivision(g, Graph::complete_bipartite(3, 3)))
            verdict.kuratowski_witness = KuratowskiWitness{"K33", *w};
        else if (auto w5 = find_subdivision(g, Graph::complete(5)))
            verdict.kuratowski_witness = KuratowskiWitness{"K5", *w5};
    }
    return verdict;
}

PlanarityVerdict is_planar(const BiGraph& g, bool want_witness) {
    return is_planar(Graph::from_bigraph(g), want_witness);
}

bool is_outerplanar(const BiGraph& g) {
    return is_planar_quick(cone(g));
}

bool is_forest(const BiGraph& g) {
    return g.edge_count() == g.vertex_count() - g.component_count();
}

} // namespace bipmin
