#ifndef BIPMIN_HARNESS_HPP
#define BIPMIN_HARNESS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bipmin/bigraph.hpp"
#include "bipmin/minors.hpp"

namespace bipmin {

// The three forbidden-minor equivalences: planar <-> no K33, outerplanar <->
// no K23, forest <-> no K22 (always as bipartite minors).
enum class Theorem { Wagner, Outerplanar, Forest };

const char* theorem_name(Theorem t);
BiGraph theorem_target(Theorem t);
bool theorem_predicate(Theorem t, const BiGraph& g);

struct HarnessEntry {
    bool predicate = false;
    MinorVerdict minor = MinorVerdict::DoesNotContain;
    bool certificate_ok = true; // when minor == Contains
};

struct HarnessReport {
    Theorem theorem = Theorem::Wagner;
    std::vector<BiGraph> corpus;
    std::vector<HarnessEntry> entries;       // parallel to corpus
    std::vector<size_t> discrepancies;       // predicate vs minor verdict
    std::vector<size_t> certificate_failures; // contains-verdict whose script broke
    std::vector<size_t> budget_exhausted;
    double elapsed_seconds = 0.0;
    bool clean() const {
        return discrepancies.empty() && certificate_failures.empty() && budget_exhausted.empty();
    }
};

// Runs predicate and exact minor search per graph (OpenMP across the
// corpus), verifying every positive certificate on the fly.
HarnessReport run_equivalence_harness(Theorem t, std::vector<BiGraph> corpus,
                                      const MinorSearchOptions& opts = {});

nlohmann::json harness_report_to_json(const HarnessReport& report, bool per_graph = true);

} // namespace bipmin

#endif
