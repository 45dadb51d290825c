// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <omp.h>

#include "bipmin/canonical.hpp"
#include "bipmin/catalog.hpp"
#include "bipmin/corpus.hpp"
#include "bipmin/cycles.hpp"
#include "bipmin/harness.hpp"
#include "bipmin/io.hpp"
#include "bipmin/laman.hpp"
#include "bipmin/minors.hpp"
#include "bipmin/planarity.hpp"

using namespace bipmin;

namespace {

constexpr std::uint64_t kSampleSeed = 20250810;
constexpr long long kStateBudget = 10'000'000;
constexpr int kRandomHosts = 500;

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

// ---- criterion 1: appendix replay ------------------------------------------

Outcome criterion_appendix() {
    auto cases = catalog::appendix_scripts();
    if (cases.size() != 9) return {false, "expected 9 cases"};
    int passed = 0;
    std::string first_bad;
    for (const auto& ac : cases) {
        VerifyReport report = verify_certificate(ac.host, ac.certificate);
        bool ok = report.passed && report.final_graph &&
                  is_isomorphic(*report.final_graph, catalog::k33());
        if (ok) ++passed;
        else if (first_bad.empty()) first_bad = ac.name + ": " + report.first_failure;
    }
    if (passed == 9) return {true, "9/9 scripts verified (witnesses induced + non-separating)"};
    return {false, std::to_string(passed) + "/9 (" + first_bad + ")"};
}

// ---- criteria 2,3,4: equivalence harnesses ----------------------------------

Outcome criterion_equivalence(Theorem t, bool with_sample) {
    MinorSearchOptions opts;
    opts.budget = kStateBudget;
    auto corpus = all_bipartite_graphs(8, /*connected_only=*/true);
    size_t exhaustive_count = corpus.size();
    HarnessReport report = run_equivalence_harness(t, std::move(corpus), opts);
    if (!report.clean())
        return {false, "exhaustive <=8: " + std::to_string(report.discrepancies.size()) +
                           " discrepancies, " + std::to_string(report.budget_exhausted.size()) +
                           " exhaustions, " + std::to_string(report.certificate_failures.size()) +
                           " bad certificates"};
    std::string detail = std::to_string(exhaustive_count) + " connected graphs <=8 clean";
    if (with_sample) {
        HarnessReport sampled = run_equivalence_harness(
            t, sample_bipartite(kRandomHosts, 9, 12, kSampleSeed), opts);
        if (!sampled.clean())
            return {false, "9-12 sample: " + std::to_string(sampled.discrepancies.size()) +
                               " discrepancies, " +
                               std::to_string(sampled.budget_exhausted.size()) + " exhaustions"};
        detail += ", " + std::to_string(kRandomHosts) + " random 9-12 vertex graphs clean";
    }
    return {true, detail};
}

// criterion 3 extra: certificates for the nine outerplanar case graphs with
// three red and two blue final vertices (strict colors)
Outcome criterion_outerplanar_cases() {
    std::vector<std::pair<std::string, BiGraph>> hosts;
    for (int i : {4, 3, 2})
        hosts.emplace_back("H(" + std::to_string(i) + ")", catalog::build_Hi(i));
    for (auto [i, j] : {std::pair{2, 3}, {1, 3}, {0, 3}, {2, 2}, {1, 2}, {2, 1}})
        hosts.emplace_back("H(" + std::to_string(i) + "," + std::to_string(j) + ")",
                           catalog::build_Hij(i, j));
    BiGraph target = catalog::complete_bipartite(3, 2); // three red, two blue
    MinorSearchOptions strict;
    strict.allow_swap = false;
    strict.budget = kStateBudget;
    for (const auto& [name, host] : hosts) {
        auto cert = find_minor_certificate(host, target, strict);
        if (!cert) return {false, name + ": no certificate found"};
        VerifyReport rep = verify_certificate(host, *cert, /*allow_swap=*/false);
        if (!rep.passed) return {false, name + ": " + rep.first_failure};
        if (rep.final_graph->red_count() != 3 || rep.final_graph->blue_count() != 2)
            return {false, name + ": wrong final part sizes"};
    }
    return {true, "9/9 case graphs yield K23 with 3 red + 2 blue, verified strictly"};
}

// ---- criterion 5: gadget properties -----------------------------------------

Outcome criterion_gadget() {
    for (int n = 2; n <= 5; ++n) {
        BiGraph g = catalog::build_gadget(n);
        if (g.vertex_count() != 4 * n + 2 || g.edge_count() != 8 * n)
            return {false, "gadget(" + std::to_string(n) + ") counts wrong"};
        if (!is_laman(g).verdict)
            return {false, "gadget(" + std::to_string(n) + ") not recognized as Laman"};
        if (is_planar(g).planar)
            return {false, "gadget(" + std::to_string(n) + ") reported planar"};
    }
    MinorSearchOptions opts;
    opts.budget = kStateBudget;
    SearchOutcome out = contains_bipartite_minor(catalog::build_gadget(2), catalog::k33(), opts);
    if (out.verdict != MinorVerdict::Contains) return {false, "gadget(2) K33 minor not found"};
    if (!verify_certificate(catalog::build_gadget(2), *out.certificate).passed)
        return {false, "gadget(2) certificate failed verification"};
    return {true, "n=2..5 counts exact, Laman yes, planar no; K33 certificate verified"};
}

// ---- criterion 6: the remark about baryK5 -----------------------------------

Outcome criterion_remark() {
    BiGraph bary = catalog::bary_k5();
    if (contains_subdivision(bary, catalog::k33()))
        return {false, "baryK5 reported to contain a K33 subdivision"};
    auto cases = catalog::appendix_scripts();
    const auto& case1 = cases.front();
    if (case1.name != "G(5)") return {false, "case order changed"};
    VerifyReport rep = verify_certificate(case1.host, case1.certificate);
    if (!rep.passed) return {false, "case G(5) certificate: " + rep.first_failure};
    return {true, "no K33 subdivision, yet the Case-1 minor certificate verifies"};
}

// ---- criteria 7+8: Laman enumeration, Theorem 3.1, degree lemmas -------------

struct LamanSweep {
    std::vector<BiGraph> graphs10;
    Outcome thm31;
    Outcome degrees;
};

bool brute_force_equals_enumeration(std::string& detail) {
    std::set<std::string> expected;
    for (int n = 4; n <= 8; ++n) {
        int want = 2 * n - 4;
        for (int a = (n + 1) / 2; a <= n - 2; ++a) {
            int b = n - a;
            if (b < 2 || a * b < want) continue;
            std::vector<std::string> reds, blues;
            for (int i = 1; i <= a; ++i) reds.push_back("r" + std::to_string(i));
            for (int j = 1; j <= b; ++j) blues.push_back("b" + std::to_string(j));
            for (std::uint64_t mask = 0; mask < (1ull << (a * b)); ++mask) {
                if (std::popcount(mask) != want) continue;
                std::vector<std::pair<std::string, std::string>> edges;
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j)
                        if ((mask >> (i * b + j)) & 1u) edges.emplace_back(reds[i], blues[j]);
                BiGraph g = BiGraph::make(reds, blues, edges);
                if (g.edge_count() != want) continue;
                SubsetScanBest best = subset_scan_serial(g);
                if (!best.any || best.max_excess <= 0) expected.insert(canonical_key(g));
            }
        }
    }
    std::set<std::string> produced;
    for (const auto& g : enumerate_laman(8)) produced.insert(canonical_key(g));
    detail = std::to_string(produced.size()) + " graphs <=8";
    return produced == expected;
}

LamanSweep laman_sweep() {
    LamanSweep sweep;
    sweep.graphs10 = enumerate_laman(10);

    // Theorem 3.1: every degree-3 vertex of every min-degree-3 member moves
    long long vertices_checked = 0, moves_total = 0;
    for (const auto& g : sweep.graphs10) {
        int min_deg = 99;
        for (int i = 0; i < g.vertex_count(); ++i) min_deg = std::min(min_deg, g.degree_at(i));
        if (min_deg != 3) continue;
        for (const auto& v : g.all_names()) {
            if (g.degree(v) != 3) continue;
            auto moves = reduce_step(g, v);
            if (moves.empty()) {
                sweep.thm31 = {false, "falsification: no move for a degree-3 vertex of " +
                                          to_json(g).dump()};
                return sweep;
            }
            ++vertices_checked;
            moves_total += static_cast<long long>(moves.size());
        }
    }
    std::string brute_detail;
    if (!brute_force_equals_enumeration(brute_detail)) {
        sweep.thm31 = {false, "enumeration disagrees with the brute-force filter at <=8"};
        return sweep;
    }
    sweep.thm31 = {true, std::to_string(sweep.graphs10.size()) + " graphs <=10; " +
                             std::to_string(vertices_checked) + " degree-3 vertices all have moves (" +
                             std::to_string(moves_total) + " total); recursion = brute force at <=8 (" +
                             brute_detail + ")"};

    // degree lemmas over the same enumeration
    BiGraph k22 = catalog::k22();
    for (const auto& g : sweep.graphs10) {
        DegreeReport dr = degree_profile_checks(g);
        if (!dr.min_degree_at_least_2 || !dr.some_degree_at_most_3) {
            sweep.degrees = {false, "degree lemma fails on " + to_json(g).dump()};
            return sweep;
        }
        if (is_isomorphic(g, k22)) continue;
        for (const auto& v : g.all_names())
            if (g.degree(v) == 2 && !is_laman(g.delete_vertex(v)).verdict) {
                sweep.degrees = {false, "degree-2 deletion loses Laman on " + to_json(g).dump()};
                return sweep;
            }
    }
    sweep.degrees = {true, "min degree in [2,3] and degree-2 deletions stay Laman across " +
                               std::to_string(sweep.graphs10.size()) + " graphs"};
    return sweep;
}

// ---- criterion 9: the C8 contraction example ---------------------------------

Outcome criterion_c8() {
    auto result = admissible_contract(catalog::cycle(8), "a1", "a2");
    BiGraph expected = BiGraph::make(
        {"x1", "x2", "x3"}, {"y1", "y2", "y3", "pend"},
        {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x3", "y2"}, {"x3", "y3"}, {"x1", "y3"},
         {"x1", "pend"}});
    if (!is_isomorphic(result.graph, expected))
        return {false, "contracted C8 is not a 6-cycle with one pendant edge"};
    if (!is_peripheral(catalog::cycle(8), result.witness.cycle))
        return {false, "witness cycle not peripheral"};
    return {true, "C8 contraction gives C6 plus a pendant edge, exact isomorphism"};
}

// ---- criterion 10: property suites -------------------------------------------

// one uniformly random op among every deletion and admissible contraction
bool random_closure(bool outerplanar_mode, int hosts, std::mt19937_64& rng, std::string& err) {
    int done = 0;
    while (done < hosts) {
        int a = 3 + static_cast<int>(rng() % 3);
        int b = 3 + static_cast<int>(rng() % 3);
        double p = 0.25 + 0.25 * static_cast<double>(rng() % 3);
        BiGraph g = random_bipartite(a, b, p, rng);
        bool ok = outerplanar_mode ? is_outerplanar(g) : is_planar(g).planar;
        if (!ok) continue;
        ++done;
        for (int step = 0; step < 10; ++step) {
            struct Op {
                int kind; // 0 delete_vertex, 1 delete_edge, 2 contract
                std::string u, v;
            };
            std::vector<Op> ops;
            for (const auto& v : g.all_names()) ops.push_back({0, v, ""});
            for (const auto& r : g.red_names())
                for (const auto& bb : g.neighbors(r)) ops.push_back({1, r, bb});
            int n = g.vertex_count();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (g.red_at(i) != g.red_at(j)) continue;
                    if (!(g.adj_bits(i) & g.adj_bits(j))) continue;
                    if (admissible_witness(g, g.name_of(i), g.name_of(j)))
                        ops.push_back({2, g.name_of(i), g.name_of(j)});
                }
            if (ops.empty()) break;
            const Op& op = ops[rng() % ops.size()];
            switch (op.kind) {
                case 0: g = g.delete_vertex(op.u); break;
                case 1: g = g.delete_edge(op.u, op.v); break;
                case 2: g = admissible_contract(g, op.u, op.v).graph; break;
            }
            // closure of the construction invariants: rebuild with validation
            std::vector<std::pair<std::string, std::string>> edges;
            for (const auto& r : g.red_names())
                for (const auto& bb : g.neighbors(r)) edges.emplace_back(r, bb);
            BiGraph revalidated = BiGraph::make(g.red_names(), g.blue_names(), edges);
            if (!revalidated.equal_labeled(g)) {
                err = "op output failed re-validation";
                return false;
            }
            bool still = outerplanar_mode ? is_outerplanar(g) : is_planar(g).planar;
            if (!still) {
                err = std::string(outerplanar_mode ? "outerplanarity" : "planarity") +
                      " lost after a " +
                      (op.kind == 0 ? "vertex deletion"
                                    : op.kind == 1 ? "edge deletion" : "contraction");
                return false;
            }
        }
    }
    return true;
}

Outcome criterion_properties() {
    std::mt19937_64 rng(kSampleSeed ^ 0xabcdef);
    std::string err;
    if (!random_closure(false, 100, rng, err)) return {false, "planar closure: " + err};
    if (!random_closure(true, 100, rng, err)) return {false, "outerplanar closure: " + err};

    // certificate soundness on random hosts against all three targets
    std::mt19937_64 rng2(kSampleSeed ^ 0x55aa);
    int verified = 0;
    for (int t = 0; t < 60; ++t) {
        BiGraph g = random_bipartite(3 + static_cast<int>(rng2() % 3),
                                     3 + static_cast<int>(rng2() % 3), 0.45, rng2);
        for (const BiGraph& target : {catalog::k22(), catalog::k23(), catalog::k33()}) {
            SearchOutcome out = contains_bipartite_minor(g, target);
            if (out.verdict != MinorVerdict::Contains) continue;
            if (!verify_certificate(g, *out.certificate).passed)
                return {false, "a contains-verdict certificate failed verification"};
            ++verified;
        }
    }

    // contraction edge-count identity on 1000 random contractions
    std::mt19937_64 rng3(kSampleSeed ^ 0x1234);
    int done = 0;
    while (done < 1000) {
        int a = 2 + static_cast<int>(rng3() % 5);
        int b = 2 + static_cast<int>(rng3() % 5);
        BiGraph g = random_bipartite(a, b, 0.4, rng3);
        bool red_side = rng3() % 2 == 0;
        auto side = red_side ? g.red_names() : g.blue_names();
        int i = static_cast<int>(rng3() % side.size());
        int j = static_cast<int>(rng3() % side.size());
        if (i == j) continue;
        int shared = std::popcount(g.adj_bits(g.index_of(side[i])) &
                                   g.adj_bits(g.index_of(side[j])));
        BiGraph h = g.contract(side[i], side[j]);
        if (h.edge_count() != g.edge_count() - shared)
            return {false, "contraction edge identity violated"};
        ++done;
    }
    return {true, "closure on 200 hosts, " + std::to_string(verified) +
                      " certificates verified, 1000 contraction identities exact"};
}

} // namespace

int main() {
    omp_set_num_threads(omp_get_max_threads());
    struct Row {
        std::string name;
        Outcome outcome;
        double secs;
    };
    std::vector<Row> rows;
    auto run = [&](const std::string& name, auto&& fn) {
        auto t0 = Clock::now();
        Outcome o = fn();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        rows.push_back({name, o, secs});
        std::printf("[%s] %s (%.1fs) — %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
    };

    run("criterion 1: appendix replay", criterion_appendix);
    run("criterion 2: wagner equivalence (exhaustive <=8 + 500 random 9-12)",
        [] { return criterion_equivalence(Theorem::Wagner, true); });
    run("criterion 3a: outerplanar equivalence (exhaustive <=8)",
        [] { return criterion_equivalence(Theorem::Outerplanar, false); });
    run("criterion 3b: outerplanar case certificates", criterion_outerplanar_cases);
    run("criterion 4: forest equivalence (exhaustive <=8)",
        [] { return criterion_equivalence(Theorem::Forest, false); });
    run("criterion 5: gadget properties", criterion_gadget);
    run("criterion 6: baryK5 remark", criterion_remark);
    LamanSweep sweep = laman_sweep();
    rows.push_back({"criterion 7: theorem 3.1 sweep", sweep.thm31, 0});
    std::printf("[%s] criterion 7: theorem 3.1 sweep — %s\n", sweep.thm31.pass ? "PASS" : "FAIL",
                sweep.thm31.detail.c_str());
    rows.push_back({"criterion 8: degree lemmas", sweep.degrees, 0});
    std::printf("[%s] criterion 8: degree lemmas — %s\n", sweep.degrees.pass ? "PASS" : "FAIL",
                sweep.degrees.detail.c_str());
    run("criterion 9: C8 contraction", criterion_c8);
    run("criterion 10: property suites", criterion_properties);

    int failed = 0;
    for (const auto& r : rows)
        if (!r.outcome.pass) ++failed;
    if (failed == 0)
        std::printf("acceptance: all %zu criteria passed\n", rows.size());
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failed);
    return failed == 0 ? 0 : 1;
}
