#include "bipmin/canonical.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace bipmin {

namespace {

using Cells = std::vector<std::vector<int>>;

struct Canon {
    const BiGraph& g;
    int n;
    std::string best;
    bool have_best = false;

    explicit Canon(const BiGraph& graph) : g(graph), n(graph.vertex_count()) {}

    std::uint64_t cell_mask(const std::vector<int>& cell) const {
        std::uint64_t m = 0;
        for (int v : cell) m |= 1ull << v;
        return m;
    }

    // Equitable refinement: split every cell by neighbor counts into every
    // other cell until stable. Split order is position+count based, so the
    // result is isomorphism-equivariant.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t s = 0; s < cells.size() && !changed; ++s) {
                std::uint64_t smask = cell_mask(cells[s]);
                for (size_t c = 0; c < cells.size() && !changed; ++c) {
                    if (cells[c].size() <= 1) continue;
                    auto& cell = cells[c];
                    int first_count = std::popcount(g.adj_bits(cell[0]) & smask);
                    bool uniform = true;
                    for (int v : cell)
                        if (std::popcount(g.adj_bits(v) & smask) != first_count) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
                        return std::popcount(g.adj_bits(a) & smask) <
                               std::popcount(g.adj_bits(b) & smask);
                    });
                    Cells groups;
                    for (int v : cell) {
                        int cnt = std::popcount(g.adj_bits(v) & smask);
                        if (groups.empty() ||
                            std::popcount(g.adj_bits(groups.back()[0]) & smask) != cnt)
                            groups.emplace_back();
                        groups.back().push_back(v);
                    }
                    cells.erase(cells.begin() + c);
                    cells.insert(cells.begin() + c, groups.begin(), groups.end());
                    changed = true;
                }
            }
        }
    }

    void encode_leaf(const Cells& cells, int n0) {
        std::vector<int> pos(static_cast<size_t>(n));
        std::vector<int> order;
        order.reserve(static_cast<size_t>(n));
        for (const auto& cell : cells) {
            pos[cell[0]] = static_cast<int>(order.size());
            order.push_back(cell[0]);
        }
        size_t row_bytes = static_cast<size_t>((n + 7) / 8);
        std::string key;
        key.reserve(2 + static_cast<size_t>(n) * row_bytes);
        key.push_back(static_cast<char>(n0));
        key.push_back(static_cast<char>(n - n0));
        for (int k = 0; k < n; ++k) {
            std::string row(row_bytes, '\0');
            std::uint64_t bits = g.adj_bits(order[k]);
            while (bits) {
                int w = std::countr_zero(bits);
                bits &= bits - 1;
                int p = pos[w];
                row[p / 8] = static_cast<char>(row[p / 8] | (1 << (p % 8)));
            }
            key += row;
        }
        if (!have_best || key < best) {
            best = std::move(key);
            have_best = true;
        }
    }

    void search(Cells cells, int n0) {
        refine(cells);
        size_t target = cells.size();
        size_t smallest = static_cast<size_t>(n) + 1;
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && cells[i].size() < smallest) {
                smallest = cells[i].size();
                target = i;
            }
        if (target == cells.size()) {
            encode_leaf(cells, n0);
            return;
        }
        // Vertices with identical neighborhoods are interchangeable by a
        // transposition automorphism; individualize one per twin class.
        std::vector<std::uint64_t> seen;
        const auto cell = cells[target];
        for (int v : cell) {
            std::uint64_t m = g.adj_bits(v);
            if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
            seen.push_back(m);
            Cells next = cells;
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            next[target] = {v};
            next.insert(next.begin() + target + 1, std::move(rest));
            search(std::move(next), n0);
        }
    }
};

Cells initial_cells(const BiGraph& g, bool reds_first) {
    std::vector<int> a, b;
    for (int i = 0; i < g.vertex_count(); ++i)
        (g.red_at(i) == reds_first ? a : b).push_back(i);
    Cells cells;
    if (!a.empty()) cells.push_back(std::move(a));
    if (!b.empty()) cells.push_back(std::move(b));
    return cells;
}

} // namespace

std::string canonical_key(const BiGraph& g, bool allow_swap) {
    if (g.vertex_count() == 0) return std::string("\0\0", 2);
    Canon canon(g);
    canon.search(initial_cells(g, true), g.red_count());
    if (allow_swap)
        canon.search(initial_cells(g, false), g.blue_count());
    return canon.best;
}

namespace {

// Backtracking monomorphism: pattern vertex i maps into host preserving
// colors (per fixed orientation), degrees, and adjacency of mapped pairs.
// With exact=true non-adjacency is preserved too, and sizes must match,
// which makes a completed map an isomorphism.
struct Matcher {
    const BiGraph& host;
    const BiGraph& pattern;
    bool exact;
    bool swapped;
    std::vector<int> order;  // pattern ids, most-constrained first
    std::vector<int> image;  // pattern id -> host id
    std::uint64_t used = 0;

    bool color_ok(int p, int h) const {
        bool pr = pattern.red_at(p);
        return swapped ? pr != host.red_at(h) : pr == host.red_at(h);
    }

    bool run() {
        image.assign(pattern.vertex_count(), -1);
        return place(0);
    }

    bool place(size_t k) {
        if (k == order.size()) return true;
        int p = order[k];
        for (int h = 0; h < host.vertex_count(); ++h) {
            if ((used >> h) & 1u) continue;
            if (!color_ok(p, h)) continue;
            if (exact ? host.degree_at(h) != pattern.degree_at(p)
                      : host.degree_at(h) < pattern.degree_at(p))
                continue;
            bool ok = true;
            std::uint64_t prow = pattern.adj_bits(p);
            for (size_t j = 0; j < k && ok; ++j) {
                int q = order[j];
                bool padj = (prow >> q) & 1u;
                bool hadj = (host.adj_bits(h) >> image[q]) & 1u;
                if (exact ? padj != hadj : (padj && !hadj)) ok = false;
            }
            if (!ok) continue;
            image[p] = h;
            used |= 1ull << h;
            if (place(k + 1)) return true;
            used &= ~(1ull << h);
            image[p] = -1;
        }
        return false;
    }
};

std::vector<int> matching_order(const BiGraph& pattern) {
    std::vector<int> order(static_cast<size_t>(pattern.vertex_count()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.degree_at(a) > pattern.degree_at(b);
    });
    return order;
}

} // namespace

bool is_isomorphic(const BiGraph& g, const BiGraph& h, bool allow_swap) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    for (bool swapped : {false, true}) {
        if (swapped && !allow_swap) break;
        int reds_needed = swapped ? g.blue_count() : g.red_count();
        if (h.red_count() != reds_needed) continue;
        Matcher m{h, g, /*exact=*/true, swapped, matching_order(g), {}};
        if (m.run()) return true;
    }
    return false;
}

std::optional<std::unordered_map<std::string, std::string>>
find_subgraph_map(const BiGraph& host, const BiGraph& pattern, bool allow_swap) {
    if (pattern.vertex_count() > host.vertex_count() ||
        pattern.edge_count() > host.edge_count())
        return std::nullopt;
    for (bool swapped : {false, true}) {
        if (swapped && !allow_swap) break;
        int pr = pattern.red_count(), pb = pattern.blue_count();
        int hr = host.red_count(), hb = host.blue_count();
        if (swapped ? (pr > hb || pb > hr) : (pr > hr || pb > hb)) continue;
        Matcher m{host, pattern, /*exact=*/false, swapped, matching_order(pattern), {}};
        if (m.run()) {
            std::unordered_map<std::string, std::string> out;
            for (int p = 0; p < pattern.vertex_count(); ++p)
                out[pattern.name_of(p)] = host.name_of(m.image[p]);
            return out;
        }
    }
    return std::nullopt;
}

BiGraph from_canonical_key(const std::string& key) {
    if (key.size() < 2) fail(Err::BadParameter, "canonical key too short");
    int n0 = static_cast<unsigned char>(key[0]);
    int n1 = static_cast<unsigned char>(key[1]);
    int n = n0 + n1;
    size_t row_bytes = static_cast<size_t>((n + 7) / 8);
    if (key.size() != 2 + static_cast<size_t>(n) * row_bytes)
        fail(Err::BadParameter, "canonical key has wrong length");
    std::vector<std::string> reds, blues;
    for (int i = 0; i < n0; ++i) reds.push_back("r" + std::to_string(i + 1));
    for (int i = 0; i < n1; ++i) blues.push_back("b" + std::to_string(i + 1));
    auto name_at = [&](int k) {
        return k < n0 ? reds[static_cast<size_t>(k)] : blues[static_cast<size_t>(k - n0)];
    };
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
        const char* row = key.data() + 2 + static_cast<size_t>(i) * row_bytes;
        for (int j = i + 1; j < n; ++j)
            if ((static_cast<unsigned char>(row[j / 8]) >> (j % 8)) & 1u)
                edges.emplace_back(name_at(i), name_at(j));
    }
    return BiGraph::make(reds, blues, edges);
}

bool is_isomorphism_map(const BiGraph& g, const BiGraph& h,
                        const std::unordered_map<std::string, std::string>& map_g_to_h,
                        bool allow_swap) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (map_g_to_h.size() != static_cast<size_t>(g.vertex_count())) return false;
    std::uint64_t hit = 0;
    bool any_same = false, any_diff = false;
    for (const auto& [gname, hname] : map_g_to_h) {
        auto gi = g.find_index(gname);
        auto hi = h.find_index(hname);
        if (!gi || !hi) return false;
        if ((hit >> *hi) & 1u) return false;
        hit |= 1ull << *hi;
        (g.red_at(*gi) == h.red_at(*hi) ? any_same : any_diff) = true;
    }
    if (any_same && any_diff) return false; // must be globally consistent
    if (any_diff && !allow_swap) return false;
    for (const auto& [gname, hname] : map_g_to_h) {
        int gi = g.index_of(gname);
        std::uint64_t row = g.adj_bits(gi);
        while (row) {
            int gj = std::countr_zero(row);
            row &= row - 1;
            auto it = map_g_to_h.find(g.name_of(gj));
            if (it == map_g_to_h.end()) return false;
            if (!h.has_edge(hname, it->second)) return false;
        }
    }
    return true;
}

} // namespace bipmin
