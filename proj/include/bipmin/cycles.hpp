#ifndef BIPMIN_CYCLES_HPP
#define BIPMIN_CYCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipmin/bigraph.hpp"

namespace bipmin {

// A cycle as an ordered vertex list; the closing edge back to the first
// vertex is implied and the first vertex is not repeated.
using Cycle = std::vector<std::string>;

inline constexpr long long kDefaultCycleBudget = 1'000'000;

// Throws NotACycle on broken adjacency, repeated or unknown vertices, or
// odd/short length.
void validate_cycle(const BiGraph& g, const Cycle& c);

bool is_induced_cycle(const BiGraph& g, const Cycle& c);
bool is_non_separating(const BiGraph& g, const Cycle& c);
bool is_peripheral(const BiGraph& g, const Cycle& c);

// Some peripheral cycle containing u,w,v consecutively, or nullopt if none
// exists. DFS extends the induced path and prunes on chords; exact unless the
// budget (visited partial paths) runs out, which throws BudgetExhausted.
std::optional<Cycle> find_peripheral_through_path(const BiGraph& g, const std::string& u,
                                                  const std::string& w, const std::string& v,
                                                  long long budget = kDefaultCycleBudget);

struct CycleWitness {
    std::string common; // the shared neighbor w
    Cycle cycle;        // starts (u, w, v, ...)
};

// Scans common neighbors of u and v in lexicographic name order and returns
// the first with a peripheral cycle through (u,w,v); the choice is
// deterministic so certificates replay identically.
std::optional<CycleWitness> admissible_witness(const BiGraph& g, const std::string& u,
                                               const std::string& v,
                                               long long budget = kDefaultCycleBudget);

struct ContractionResult {
    BiGraph graph;
    CycleWitness witness;
};

// contract() guarded by admissibility; throws NotAdmissible naming the reason
// (no common neighbor vs. no peripheral cycle).
ContractionResult admissible_contract(const BiGraph& g, const std::string& merge,
                                      const std::string& into,
                                      long long budget = kDefaultCycleBudget);

nlohmann::json witness_to_json(const CycleWitness& w);
CycleWitness witness_from_json(const nlohmann::json& j);

} // namespace bipmin

#endif
