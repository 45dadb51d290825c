#include "bipmin/corpus.hpp"

#include <algorithm>
#include <map>

#include "bipmin/canonical.hpp"

namespace bipmin {

std::vector<BiGraph> all_bipartite_graphs(int max_vertices, bool connected_only) {
    if (max_vertices > 9)
        fail(Err::CapExceeded, "exhaustive enumeration capped at 9 vertices");
    std::map<std::string, BiGraph> seen;
    for (int n = 1; n <= max_vertices; ++n) {
        for (int a = (n + 1) / 2; a <= n; ++a) {
            int b = n - a;
            std::vector<std::string> reds, blues;
            for (int i = 1; i <= a; ++i) reds.push_back("r" + std::to_string(i));
            for (int j = 1; j <= b; ++j) blues.push_back("b" + std::to_string(j));
            int bits = a * b;
            for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
                std::vector<std::pair<std::string, std::string>> edges;
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j)
                        if ((mask >> (i * b + j)) & 1u)
                            edges.emplace_back(reds[i], blues[j]);
                BiGraph g = BiGraph::make(reds, blues, edges);
                if (connected_only && g.component_count() != 1) continue;
                std::string key = canonical_key(g);
                if (!seen.count(key)) seen.emplace(key, from_canonical_key(key));
            }
        }
    }
    std::vector<BiGraph> out;
    for (auto& [key, g] : seen) out.push_back(g);
    std::sort(out.begin(), out.end(), [](const BiGraph& x, const BiGraph& y) {
        if (x.vertex_count() != y.vertex_count()) return x.vertex_count() < y.vertex_count();
        return canonical_key(x) < canonical_key(y);
    });
    return out;
}

namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

BiGraph random_bipartite(int reds, int blues, double edge_prob, std::mt19937_64& rng) {
    if (reds < 0 || blues < 0) fail(Err::BadParameter, "negative side size");
    if (edge_prob < 0.0 || edge_prob > 1.0) fail(Err::BadParameter, "edge_prob outside [0,1]");
    std::vector<std::string> r, b;
    for (int i = 1; i <= reds; ++i) r.push_back("r" + std::to_string(i));
    for (int j = 1; j <= blues; ++j) b.push_back("b" + std::to_string(j));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < reds; ++i)
        for (int j = 0; j < blues; ++j)
            if (unit_draw(rng) < edge_prob) edges.emplace_back(r[i], b[j]);
    return BiGraph::make(r, b, edges);
}

std::vector<BiGraph> sample_bipartite(int count, int min_vertices, int max_vertices,
                                      std::uint64_t seed) {
    if (min_vertices < 4 || max_vertices < min_vertices)
        fail(Err::BadParameter, "need 4 <= min_vertices <= max_vertices");
    std::mt19937_64 rng(seed);
    std::vector<BiGraph> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        int span = max_vertices - min_vertices + 1;
        int n = min_vertices + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
        int a = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 3));
        double p = 0.15 + 0.35 * unit_draw(rng);
        out.push_back(random_bipartite(a, n - a, p, rng));
    }
    return out;
}

} // namespace bipmin
