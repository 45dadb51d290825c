#ifndef BIPMIN_MINORS_HPP
#define BIPMIN_MINORS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "bipmin/bigraph.hpp"
#include "bipmin/cycles.hpp"

namespace bipmin {

struct MinorOp {
    enum class Kind { DeleteVertex, DeleteEdge, Contract };
    Kind kind = Kind::DeleteVertex;
    std::string a; // vertex / edge endpoint / merge
    std::string b; // edge endpoint / into
    std::optional<CycleWitness> witness; // required for Contract

    static MinorOp del_vertex(std::string v);
    static MinorOp del_edge(std::string u, std::string v);
    static MinorOp contract(std::string merge, std::string into, CycleWitness w);
    std::string describe() const;
};

// Replayable script: applying ops to the host in order yields a graph
// isomorphic to the target (red/blue swap allowed unless checked strictly).
struct MinorCertificate {
    std::optional<BiGraph> host; // context only; never serialized
    BiGraph target;
    std::vector<MinorOp> ops;
    // end-graph vertex name -> target vertex name
    std::optional<std::unordered_map<std::string, std::string>> final_map;
};

enum class MinorVerdict { Contains, DoesNotContain, BudgetExhausted };
const char* verdict_name(MinorVerdict v);

struct SearchStats {
    long long explored = 0;   // states expanded
    long long generated = 0;  // children produced
    long long dedup_hits = 0; // children discarded as already-seen
};

struct SearchOutcome {
    MinorVerdict verdict = MinorVerdict::DoesNotContain;
    std::optional<MinorCertificate> certificate;
    SearchStats stats;
};

struct MinorSearchOptions {
    long long budget = 10'000'000; // state expansions
    bool allow_swap = true;
    long long cycle_budget = kDefaultCycleBudget;
};

// Color-respecting injective map embedding every edge of h into g
// (h name -> g name), or nullopt.
std::optional<std::unordered_map<std::string, std::string>>
contains_subgraph(const BiGraph& g, const BiGraph& h, bool allow_swap = true);

// Exact decision of h <=_b g: breadth-first closure over canonical forms,
// expanding deletions and admissible contractions, terminating branches on a
// subgraph hit. `DoesNotContain` means the reachable space was exhausted.
SearchOutcome contains_bipartite_minor(const BiGraph& g, const BiGraph& h,
                                       const MinorSearchOptions& opts = {});

// As above but returns the certificate; throws BudgetExhausted when the
// search could not finish.
std::optional<MinorCertificate> find_minor_certificate(const BiGraph& g, const BiGraph& h,
                                                       const MinorSearchOptions& opts = {});

struct StepReport {
    int index = 0; // 0-based op index; ops.size() for the final iso check
    std::string description;
    bool ok = false;
    std::string reason;
};

struct VerifyReport {
    std::vector<StepReport> steps;
    bool passed = false;
    std::string first_failure;
    std::optional<BiGraph> final_graph;
};

// Replays every op on the evolving graph, re-validating each contraction's
// witness cycle (cycle, induced, non-separating, contains merge/common/into
// consecutively) in the graph at that step, then checks the end graph against
// the target. Failures become report entries, never exceptions.
VerifyReport verify_certificate(const BiGraph& host, const MinorCertificate& cert,
                                bool allow_swap = true,
                                long long cycle_budget = kDefaultCycleBudget);

// True iff g has a subgraph homeomorphic to h (colors ignored; subdivision
// parity makes color constraints meaningless for topological containment).
bool contains_subdivision(const BiGraph& g, const BiGraph& h,
                          long long budget = 20'000'000);

// Splices two verified scripts (outer: F -> G, inner: G -> H) into one
// F -> H script; both certificates must carry final maps.
MinorCertificate compose_certificates(const MinorCertificate& outer,
                                      const MinorCertificate& inner);

nlohmann::json op_to_json(const MinorOp& op);
MinorOp op_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const MinorCertificate& cert);
MinorCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json verify_report_to_json(const VerifyReport& report);

} // namespace bipmin

#endif
