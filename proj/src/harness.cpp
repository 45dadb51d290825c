#include "bipmin/harness.hpp"

#include <chrono>

#include "bipmin/catalog.hpp"
#include "bipmin/io.hpp"
#include "bipmin/planarity.hpp"

namespace bipmin {

const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::Wagner: return "wagner";
        case Theorem::Outerplanar: return "outerplanar";
        case Theorem::Forest: return "forest";
    }
    return "?";
}

BiGraph theorem_target(Theorem t) {
    switch (t) {
        case Theorem::Wagner: return catalog::k33();
        case Theorem::Outerplanar: return catalog::k23();
        case Theorem::Forest: return catalog::k22();
    }
    fail(Err::BadParameter, "unknown theorem");
}

bool theorem_predicate(Theorem t, const BiGraph& g) {
    switch (t) {
        case Theorem::Wagner: return is_planar(g).planar;
        case Theorem::Outerplanar: return is_outerplanar(g);
        case Theorem::Forest: return is_forest(g);
    }
    fail(Err::BadParameter, "unknown theorem");
}

HarnessReport run_equivalence_harness(Theorem t, std::vector<BiGraph> corpus,
                                      const MinorSearchOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    HarnessReport report;
    report.theorem = t;
    BiGraph target = theorem_target(t);
    report.entries.assign(corpus.size(), {});

    int count = static_cast<int>(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
        const BiGraph& g = corpus[static_cast<size_t>(i)];
        HarnessEntry entry;
        entry.predicate = theorem_predicate(t, g);
        SearchOutcome outcome = contains_bipartite_minor(g, target, opts);
        entry.minor = outcome.verdict;
        if (outcome.verdict == MinorVerdict::Contains)
            entry.certificate_ok =
                outcome.certificate && verify_certificate(g, *outcome.certificate).passed;
        report.entries[static_cast<size_t>(i)] = entry;
    }

    for (size_t i = 0; i < report.entries.size(); ++i) {
        const HarnessEntry& e = report.entries[i];
        if (e.minor == MinorVerdict::BudgetExhausted) {
            report.budget_exhausted.push_back(i);
            continue;
        }
        bool has_minor = e.minor == MinorVerdict::Contains;
        if (e.predicate == has_minor) report.discrepancies.push_back(i);
        if (has_minor && !e.certificate_ok) report.certificate_failures.push_back(i);
    }
    report.corpus = std::move(corpus);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json harness_report_to_json(const HarnessReport& report, bool per_graph) {
    nlohmann::json j;
    j["theorem"] = theorem_name(report.theorem);
    j["graphs"] = report.corpus.size();
    j["elapsed_seconds"] = report.elapsed_seconds;
    j["clean"] = report.clean();
    auto index_list = [&](const std::vector<size_t>& idx) {
        auto arr = nlohmann::json::array();
        for (size_t i : idx) arr.push_back(to_json(report.corpus[i]));
        return arr;
    };
    j["discrepancies"] = index_list(report.discrepancies);
    j["certificate_failures"] = index_list(report.certificate_failures);
    j["budget_exhausted"] = index_list(report.budget_exhausted);
    if (per_graph) {
        auto arr = nlohmann::json::array();
        for (size_t i = 0; i < report.entries.size(); ++i) {
            const HarnessEntry& e = report.entries[i];
            arr.push_back({{"graph", to_json(report.corpus[i])},
                           {"predicate", e.predicate},
                           {"minor", verdict_name(e.minor)}});
        }
        j["per_graph"] = std::move(arr);
    }
    return j;
}

} // namespace bipmin
