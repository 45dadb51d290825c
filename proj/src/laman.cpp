#include "bipmin/laman.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>

#include <omp.h>

#include "bipmin/canonical.hpp"

namespace bipmin {

namespace {

int excess_of(int edges, int popcount) { return edges - (2 * popcount - 4); }

// (max excess, then smallest mask) so serial and parallel kernels agree bit
// for bit on the reported witness.
void fold(SubsetScanBest& best, int excess, std::uint64_t mask) {
    if (!best.any || excess > best.max_excess ||
        (excess == best.max_excess && mask < best.argmax)) {
        best.any = true;
        best.max_excess = excess;
        best.argmax = mask;
    }
}

void merge_best(SubsetScanBest& into, const SubsetScanBest& from) {
    if (!from.any) return;
    fold(into, from.max_excess, from.argmax);
}

} // namespace

SubsetScanBest subset_scan_serial(const BiGraph& g) {
    int n = g.vertex_count();
    if (n > kScanVertexCap) fail(Err::CapExceeded, "subset scan capped at 26 vertices");
    SubsetScanBest best;
    std::uint64_t full = g.full_bits();
    for (std::uint64_t m = 0; m <= full; ++m) {
        int pc = std::popcount(m);
        if (pc < 3) {
            if (m == full) break;
            continue;
        }
        int edges = 0;
        std::uint64_t rest = m;
        while (rest) {
            int i = std::countr_zero(rest);
            rest &= rest - 1;
            edges += std::popcount(g.adj_bits(i) & rest);
        }
        fold(best, excess_of(edges, pc), m);
        if (m == full) break;
    }
    return best;
}

SubsetScanBest subset_scan(const BiGraph& g) {
    int n = g.vertex_count();
    if (n > kScanVertexCap) fail(Err::CapExceeded, "subset scan capped at 26 vertices");
    if (n == 0) return {};
    size_t size = 1ull << n;
    std::vector<std::uint8_t> table(size);
    table[0] = 0;
    for (int k = 0; k < n; ++k) {
        std::int64_t base = 1ll << k;
        std::uint64_t adjk = g.adj_bits(k);
#pragma omp parallel for schedule(static) if (k >= 18)
        for (std::int64_t r = 0; r < base; ++r)
            table[base + r] =
                static_cast<std::uint8_t>(table[r] + std::popcount(adjk & static_cast<std::uint64_t>(r)));
    }
    SubsetScanBest best;
#pragma omp parallel if (n >= 18)
    {
        SubsetScanBest local;
#pragma omp for schedule(static) nowait
        for (std::int64_t m = 0; m < static_cast<std::int64_t>(size); ++m) {
            int pc = std::popcount(static_cast<std::uint64_t>(m));
            if (pc < 3) continue;
            fold(local, excess_of(table[m], pc), static_cast<std::uint64_t>(m));
        }
#pragma omp critical(bipmin_scan_merge)
        merge_best(best, local);
    }
    return best;
}

namespace {

std::vector<std::string> mask_names(const BiGraph& g, std::uint64_t mask) {
    std::vector<std::string> out;
    while (mask) {
        int i = std::countr_zero(mask);
        mask &= mask - 1;
        out.push_back(g.name_of(i));
    }
    return out;
}

} // namespace

LamanReport is_laman(const BiGraph& g) {
    int r = g.red_count(), b = g.blue_count();
    if (r < 2 || b < 2)
        fail(Err::SideTooSmall, "sides are (" + std::to_string(r) + "," + std::to_string(b) +
                                    "), need both >= 2");
    LamanReport report;
    report.side_sizes = {r, b};
    report.global_count_ok = g.edge_count() == 2 * g.vertex_count() - 4;
    SubsetScanBest best = subset_scan(g);
    if (best.any && best.max_excess > 0)
        report.worst_violation = Violation{mask_names(g, best.argmax), best.max_excess};
    report.verdict = report.global_count_ok && !report.worst_violation;
    return report;
}

std::vector<std::vector<std::string>> critical_sets(const BiGraph& g, int max_size) {
    int n = g.vertex_count();
    if (n > kScanVertexCap) fail(Err::CapExceeded, "subset scan capped at 26 vertices");
    std::vector<std::vector<std::string>> out;
    if (n == 0) return out;
    size_t size = 1ull << n;
    std::vector<std::uint8_t> table(size);
    table[0] = 0;
    for (int k = 0; k < n; ++k) {
        std::int64_t base = 1ll << k;
        std::uint64_t adjk = g.adj_bits(k);
#pragma omp parallel for schedule(static) if (k >= 18)
        for (std::int64_t r = 0; r < base; ++r)
            table[base + r] =
                static_cast<std::uint8_t>(table[r] + std::popcount(adjk & static_cast<std::uint64_t>(r)));
    }
    for (std::uint64_t m = 0; m < size; ++m) {
        int pc = std::popcount(m);
        if (pc < 3 || pc > max_size) continue;
        if (table[m] == 2 * pc - 4) out.push_back(mask_names(g, m));
    }
    return out;
}

DegreeReport degree_profile_checks(const BiGraph& g) {
    if (!is_laman(g).verdict) fail(Err::NotLaman, "degree profile requires a Laman graph");
    DegreeReport report;
    for (int i = 0; i < g.vertex_count(); ++i) report.degrees.push_back(g.degree_at(i));
    std::sort(report.degrees.begin(), report.degrees.end());
    report.min_degree_at_least_2 = report.degrees.front() >= 2;
    report.some_degree_at_most_3 = report.degrees.front() <= 3;
    return report;
}

namespace {

BiGraph make_k22() {
    return BiGraph::make({"a1", "a2"}, {"b1", "b2"},
                         {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"}});
}

std::string fresh_name(const BiGraph& g) {
    for (int k = 0;; ++k) {
        std::string name = "n" + std::to_string(k);
        if (!g.has_vertex(name)) return name;
    }
}

} // namespace

BiGraph reduce_degree2(const BiGraph& g, const std::string& v) {
    if (!is_laman(g).verdict) fail(Err::NotLaman, "reduce_degree2 requires a Laman graph");
    if (g.degree(v) != 2)
        fail(Err::WrongDegree, v + " has degree " + std::to_string(g.degree(v)) + ", need 2");
    if (is_isomorphic(g, make_k22())) fail(Err::IsK22, "K22 does not reduce");
    BiGraph reduced = g.delete_vertex(v);
    if (!is_laman(reduced).verdict)
        fail(Err::NotLaman, "degree-2 lemma falsified: G - " + v + " is not Laman");
    return reduced;
}

std::vector<ReductionMove> reduce_step(const BiGraph& g, const std::string& v) {
    if (!is_laman(g).verdict) fail(Err::NotLaman, "reduce_step requires a Laman graph");
    int min_deg = INT_MAX;
    for (int i = 0; i < g.vertex_count(); ++i) min_deg = std::min(min_deg, g.degree_at(i));
    if (min_deg != 3)
        fail(Err::MinDegreeNot3, "minimum degree is " + std::to_string(min_deg));
    if (g.degree(v) != 3)
        fail(Err::WrongDegree, v + " has degree " + std::to_string(g.degree(v)) + ", need 3");

    std::vector<std::string> nbrs = g.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    std::vector<std::string> all = g.all_names();
    std::sort(all.begin(), all.end());

    std::vector<ReductionMove> moves;
    BiGraph without_v = g.delete_vertex(v);
    for (const auto& x : nbrs)
        for (const auto& y : nbrs) {
            if (x == y) continue;
            for (const auto& p : all) {
                if (p == v) continue;
                if (!g.has_edge(y, p)) continue;
                if (g.has_edge(x, p)) continue;
                BiGraph candidate = without_v.add_edge(x, p);
                if (is_laman(candidate).verdict)
                    moves.push_back(ReductionMove{v, x, y, p, std::move(candidate)});
            }
        }
    return moves;
}

std::optional<BiGraph> extend(const BiGraph& g, const std::string& x, const std::string& p,
                              const std::vector<std::string>& new_neighbors) {
    if (!is_laman(g).verdict) fail(Err::NotLaman, "extend requires a Laman graph");
    if (!g.has_edge(x, p)) fail(Err::UnknownEdge, x + "-" + p);
    if (new_neighbors.size() != 3) fail(Err::BadSides, "need exactly 3 new neighbors");
    bool x_red = g.is_red(x);
    bool saw_x = false;
    for (const auto& name : new_neighbors) {
        if (g.is_red(name) != x_red)
            fail(Err::BadSides, name + " is not on the side of " + x);
        if (name == x) saw_x = true;
    }
    if (!saw_x) fail(Err::BadSides, "new neighbors must include " + x);
    auto unique = new_neighbors;
    std::sort(unique.begin(), unique.end());
    if (std::adjacent_find(unique.begin(), unique.end()) != unique.end())
        fail(Err::BadSides, "new neighbors repeat a vertex");

    BiGraph cut = g.delete_edge(x, p);
    BiGraph grown = cut.add_vertex(fresh_name(g), g.is_red(p), new_neighbors);
    if (!is_laman(grown).verdict) return std::nullopt;
    return grown;
}

std::vector<BiGraph> enumerate_laman(int max_vertices, int cap) {
    if (max_vertices > cap)
        fail(Err::CapExceeded, "max_vertices " + std::to_string(max_vertices) +
                                   " exceeds cap " + std::to_string(cap));
    std::vector<BiGraph> result;
    if (max_vertices < 4) return result;

    std::map<std::string, BiGraph> seen; // key -> canonical representative
    BiGraph k22 = make_k22();
    seen.emplace(canonical_key(k22), from_canonical_key(canonical_key(k22)));

    std::vector<BiGraph> level{seen.begin()->second};
    for (int n = 4; n < max_vertices; ++n) {
        std::vector<BiGraph> next;
        int count = static_cast<int>(level.size());
#pragma omp parallel
        {
            std::vector<BiGraph> local;
#pragma omp for schedule(dynamic) nowait
            for (int gi = 0; gi < count; ++gi) {
                const BiGraph& g = level[static_cast<size_t>(gi)];
                std::string fresh = fresh_name(g);
                // (a) attach a degree-2 vertex to two vertices of one side
                for (bool red_side : {true, false}) {
                    auto side = red_side ? g.red_names() : g.blue_names();
                    std::sort(side.begin(), side.end());
                    for (size_t i = 0; i < side.size(); ++i)
                        for (size_t j = i + 1; j < side.size(); ++j) {
                            BiGraph cand = g.add_vertex(fresh, !red_side, {side[i], side[j]});
                            if (is_laman(cand).verdict) local.push_back(std::move(cand));
                        }
                }
                // (b) extend moves over every edge and neighbor triple
                for (const auto& r : g.red_names())
                    for (const auto& b : g.neighbors(r))
                        for (auto [x, p] : {std::pair{r, b}, std::pair{b, r}}) {
                            auto side = g.is_red(x) ? g.red_names() : g.blue_names();
                            std::sort(side.begin(), side.end());
                            for (size_t i = 0; i < side.size(); ++i) {
                                if (side[i] == x) continue;
                                for (size_t j = i + 1; j < side.size(); ++j) {
                                    if (side[j] == x) continue;
                                    if (auto grown = extend(g, x, p, {x, side[i], side[j]}))
                                        local.push_back(std::move(*grown));
                                }
                            }
                        }
            }
#pragma omp critical(bipmin_enum_merge)
            for (auto& cand : local) {
                std::string key = canonical_key(cand);
                if (seen.emplace(key, from_canonical_key(key)).second)
                    next.push_back(seen.at(key));
            }
        }
        level = std::move(next);
        if (level.empty()) break;
    }

    for (auto& [key, g] : seen)
        if (g.vertex_count() <= max_vertices) result.push_back(g);
    std::sort(result.begin(), result.end(), [](const BiGraph& a, const BiGraph& b) {
        if (a.vertex_count() != b.vertex_count()) return a.vertex_count() < b.vertex_count();
        return canonical_key(a) < canonical_key(b);
    });
    return result;
}

} // namespace bipmin
