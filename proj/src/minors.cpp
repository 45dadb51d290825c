#include "bipmin/minors.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "bipmin/canonical.hpp"
#include "bipmin/graph.hpp"
#include "bipmin/io.hpp"

namespace bipmin {

MinorOp MinorOp::del_vertex(std::string v) {
    MinorOp op;
    op.kind = Kind::DeleteVertex;
    op.a = std::move(v);
    return op;
}

MinorOp MinorOp::del_edge(std::string u, std::string v) {
    MinorOp op;
    op.kind = Kind::DeleteEdge;
    op.a = std::move(u);
    op.b = std::move(v);
    return op;
}

MinorOp MinorOp::contract(std::string merge, std::string into, CycleWitness w) {
    MinorOp op;
    op.kind = Kind::Contract;
    op.a = std::move(merge);
    op.b = std::move(into);
    op.witness = std::move(w);
    return op;
}

std::string MinorOp::describe() const {
    switch (kind) {
        case Kind::DeleteVertex: return "delete_vertex " + a;
        case Kind::DeleteEdge: return "delete_edge " + a + "-" + b;
        case Kind::Contract: return "contract " + a + " into " + b;
    }
    return "?";
}

const char* verdict_name(MinorVerdict v) {
    switch (v) {
        case MinorVerdict::Contains: return "contains";
        case MinorVerdict::DoesNotContain: return "does_not_contain";
        case MinorVerdict::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

std::optional<std::unordered_map<std::string, std::string>>
contains_subgraph(const BiGraph& g, const BiGraph& h, bool allow_swap) {
    return find_subgraph_map(g, h, allow_swap);
}

namespace {

// Side sizes and edge count never grow under deletions and contractions, so
// a state that is too small in every allowed orientation is a dead end.
bool feasible(const BiGraph& g, const BiGraph& target, bool allow_swap) {
    if (g.edge_count() < target.edge_count()) return false;
    int gr = g.red_count(), gb = g.blue_count();
    int tr = target.red_count(), tb = target.blue_count();
    if (gr >= tr && gb >= tb) return true;
    if (allow_swap && gr >= tb && gb >= tr) return true;
    return false;
}

struct ParentLink {
    std::string parent_key; // empty at the root
    MinorOp op;             // op applied to the parent
};

// Deletion script carving an embedded copy of `target` out of `g`:
// delete every vertex outside the image, then every extra edge inside it.
void append_carving_ops(const BiGraph& g, const BiGraph& target,
                        const std::unordered_map<std::string, std::string>& embed,
                        std::vector<MinorOp>& ops) {
    std::unordered_map<std::string, std::string> g_to_target;
    for (const auto& [t, gname] : embed) g_to_target[gname] = t;

    std::vector<std::string> to_delete;
    for (const auto& name : g.all_names())
        if (!g_to_target.count(name)) to_delete.push_back(name);
    std::sort(to_delete.begin(), to_delete.end());
    for (auto& v : to_delete) ops.push_back(MinorOp::del_vertex(v));

    std::vector<std::pair<std::string, std::string>> extra;
    for (const auto& r : g.red_names()) {
        auto rt = g_to_target.find(r);
        if (rt == g_to_target.end()) continue;
        for (const auto& b : g.neighbors(r)) {
            auto bt = g_to_target.find(b);
            if (bt == g_to_target.end()) continue;
            if (!target.has_edge(rt->second, bt->second)) extra.emplace_back(r, b);
        }
    }
    std::sort(extra.begin(), extra.end());
    for (auto& [u, v] : extra) ops.push_back(MinorOp::del_edge(u, v));
}

struct MinorSearch {
    const BiGraph& host;
    const BiGraph& target;
    const MinorSearchOptions& opts;
    SearchStats stats;
    std::unordered_map<std::string, ParentLink> visited;
    std::deque<std::pair<std::string, BiGraph>> queue;

    std::optional<MinorCertificate> success(const std::string& key, const BiGraph& g,
                                            const std::unordered_map<std::string, std::string>& embed) {
        // walk the parent chain to recover the op script
        std::vector<MinorOp> ops;
        std::string at = key;
        while (true) {
            const ParentLink& link = visited.at(at);
            if (link.parent_key.empty()) break; // root
            ops.push_back(link.op);
            at = link.parent_key;
        }
        std::reverse(ops.begin(), ops.end());
        append_carving_ops(g, target, embed, ops);
        MinorCertificate cert;
        cert.host = host;
        cert.target = target;
        cert.ops = std::move(ops);
        std::unordered_map<std::string, std::string> fm;
        for (const auto& [t, gname] : embed) fm[gname] = t;
        cert.final_map = std::move(fm);
        return cert;
    }

    // Children in fixed order: vertex deletions, edge deletions, admissible
    // contractions (merge = lexicographically larger name). The order fixes
    // which shortest certificate the breadth-first search reports.
    std::vector<std::pair<MinorOp, BiGraph>> expand(const BiGraph& g) {
        std::vector<std::pair<MinorOp, BiGraph>> out;
        std::vector<std::string> names = g.all_names();
        std::sort(names.begin(), names.end());
        for (const auto& v : names)
            out.emplace_back(MinorOp::del_vertex(v), g.delete_vertex(v));
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& r : g.red_names())
            for (const auto& b : g.neighbors(r)) edges.emplace_back(r, b);
        std::sort(edges.begin(), edges.end());
        for (const auto& [u, v] : edges)
            out.emplace_back(MinorOp::del_edge(u, v), g.delete_edge(u, v));
        // same-side pairs with a common neighbor
        std::vector<std::pair<std::string, std::string>> pairs; // (into, merge)
        int n = g.vertex_count();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (g.red_at(i) != g.red_at(j)) continue;
                if (!(g.adj_bits(i) & g.adj_bits(j))) continue;
                const std::string &ni = g.name_of(i), &nj = g.name_of(j);
                pairs.emplace_back(std::min(ni, nj), std::max(ni, nj));
            }
        std::sort(pairs.begin(), pairs.end());
        for (const auto& [into, merge] : pairs) {
            auto w = admissible_witness(g, merge, into, opts.cycle_budget);
            if (!w) continue;
            out.emplace_back(MinorOp::contract(merge, into, *w), g.contract(merge, into));
        }
        return out;
    }

    SearchOutcome run() {
        SearchOutcome outcome;
        if (!feasible(host, target, opts.allow_swap)) {
            outcome.verdict = MinorVerdict::DoesNotContain;
            return outcome;
        }
        std::string root_key = canonical_key(host, opts.allow_swap);
        visited.emplace(root_key, ParentLink{});
        if (auto embed = contains_subgraph(host, target, opts.allow_swap)) {
            outcome.verdict = MinorVerdict::Contains;
            outcome.certificate = success(root_key, host, *embed);
            outcome.stats = stats;
            return outcome;
        }
        queue.emplace_back(root_key, host);
        while (!queue.empty()) {
            if (stats.explored >= opts.budget) {
                outcome.verdict = MinorVerdict::BudgetExhausted;
                outcome.stats = stats;
                return outcome;
            }
            auto [key, g] = std::move(queue.front());
            queue.pop_front();
            ++stats.explored;
            for (auto& [op, child] : expand(g)) {
                ++stats.generated;
                if (!feasible(child, target, opts.allow_swap)) continue;
                std::string child_key = canonical_key(child, opts.allow_swap);
                auto [it, inserted] = visited.emplace(child_key, ParentLink{key, op});
                if (!inserted) {
                    ++stats.dedup_hits;
                    continue;
                }
                if (auto embed = contains_subgraph(child, target, opts.allow_swap)) {
                    outcome.verdict = MinorVerdict::Contains;
                    outcome.certificate = success(child_key, child, *embed);
                    outcome.stats = stats;
                    return outcome;
                }
                queue.emplace_back(child_key, std::move(child));
            }
        }
        outcome.verdict = MinorVerdict::DoesNotContain;
        outcome.stats = stats;
        return outcome;
    }
};

} // namespace

SearchOutcome contains_bipartite_minor(const BiGraph& g, const BiGraph& h,
                                       const MinorSearchOptions& opts) {
    MinorSearch search{g, h, opts, {}, {}, {}};
    try {
        return search.run();
    } catch (const GraphError& e) {
        if (e.code() == Err::BudgetExhausted) {
            SearchOutcome outcome;
            outcome.verdict = MinorVerdict::BudgetExhausted;
            outcome.stats = search.stats;
            return outcome;
        }
        throw;
    }
}

std::optional<MinorCertificate> find_minor_certificate(const BiGraph& g, const BiGraph& h,
                                                       const MinorSearchOptions& opts) {
    SearchOutcome outcome = contains_bipartite_minor(g, h, opts);
    switch (outcome.verdict) {
        case MinorVerdict::Contains: return std::move(outcome.certificate);
        case MinorVerdict::DoesNotContain: return std::nullopt;
        case MinorVerdict::BudgetExhausted: break;
    }
    fail(Err::BudgetExhausted, "minor search budget exhausted after " +
                                   std::to_string(outcome.stats.explored) + " states");
}

namespace {

bool witness_path_consecutive(const Cycle& cycle, const std::string& merge,
                              const std::string& common, const std::string& into) {
    size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i) {
        if (cycle[i] != common) continue;
        const std::string& prev = cycle[(i + k - 1) % k];
        const std::string& next = cycle[(i + 1) % k];
        if ((prev == merge && next == into) || (prev == into && next == merge)) return true;
    }
    return false;
}

} // namespace

VerifyReport verify_certificate(const BiGraph& host, const MinorCertificate& cert,
                                bool allow_swap, long long cycle_budget) {
    (void)cycle_budget;
    VerifyReport report;
    BiGraph g = host;
    bool failed = false;
    for (size_t i = 0; i < cert.ops.size(); ++i) {
        const MinorOp& op = cert.ops[i];
        StepReport step;
        step.index = static_cast<int>(i);
        step.description = op.describe();
        if (failed) {
            step.ok = false;
            step.reason = "skipped after earlier failure";
            report.steps.push_back(std::move(step));
            continue;
        }
        try {
            switch (op.kind) {
                case MinorOp::Kind::DeleteVertex:
                    g = g.delete_vertex(op.a);
                    step.ok = true;
                    break;
                case MinorOp::Kind::DeleteEdge:
                    g = g.delete_edge(op.a, op.b);
                    step.ok = true;
                    break;
                case MinorOp::Kind::Contract: {
                    if (!op.witness) {
                        step.reason = "contract without witness";
                        break;
                    }
                    const CycleWitness& w = *op.witness;
                    try {
                        validate_cycle(g, w.cycle);
                    } catch (const GraphError& e) {
                        step.reason = std::string("witness: ") + e.what();
                        break;
                    }
                    if (!witness_path_consecutive(w.cycle, op.a, w.common, op.b)) {
                        step.reason = "witness cycle does not contain (merge, common, into) consecutively";
                        break;
                    }
                    if (!is_induced_cycle(g, w.cycle)) {
                        step.reason = "witness cycle not induced";
                        break;
                    }
                    if (!is_non_separating(g, w.cycle)) {
                        step.reason = "witness cycle separating";
                        break;
                    }
                    g = g.contract(op.a, op.b);
                    step.ok = true;
                    break;
                }
            }
        } catch (const GraphError& e) {
            step.ok = false;
            step.reason = e.what();
        }
        if (!step.ok) {
            failed = true;
            if (report.first_failure.empty())
                report.first_failure = "step " + std::to_string(i) + " (" + step.description +
                                       "): " + step.reason;
        }
        report.steps.push_back(std::move(step));
    }

    StepReport final_step;
    final_step.index = static_cast<int>(cert.ops.size());
    final_step.description = "end graph isomorphic to target";
    if (failed) {
        final_step.ok = false;
        final_step.reason = "skipped after earlier failure";
    } else if (cert.final_map) {
        final_step.ok = is_isomorphism_map(g, cert.target, *cert.final_map, allow_swap);
        if (!final_step.ok) final_step.reason = "final_map is not a color-respecting isomorphism";
    } else {
        final_step.ok = is_isomorphic(g, cert.target, allow_swap);
        if (!final_step.ok) final_step.reason = "end graph not isomorphic to target";
    }
    if (!final_step.ok && report.first_failure.empty())
        report.first_failure = final_step.description + ": " + final_step.reason;
    report.steps.push_back(final_step);
    report.passed = !failed && final_step.ok;
    report.final_graph = std::move(g);
    return report;
}

bool contains_subdivision(const BiGraph& g, const BiGraph& h, long long budget) {
    return find_subdivision(Graph::from_bigraph(g), Graph::from_bigraph(h), budget).has_value();
}

MinorCertificate compose_certificates(const MinorCertificate& outer,
                                      const MinorCertificate& inner) {
    if (!outer.final_map || !inner.final_map)
        fail(Err::BadParameter, "compose_certificates needs final maps on both certificates");
    // outer.final_map: end-of-outer name -> V(G) name; invert to rename
    // inner ops into the end-of-outer name space.
    std::unordered_map<std::string, std::string> inv;
    for (const auto& [end_name, g_name] : *outer.final_map) inv[g_name] = end_name;
    auto rename = [&](const std::string& g_name) -> std::string {
        auto it = inv.find(g_name);
        if (it == inv.end())
            fail(Err::UnknownVertex, "compose: " + g_name + " not covered by outer final_map");
        return it->second;
    };

    MinorCertificate out;
    out.host = outer.host;
    out.target = inner.target;
    out.ops = outer.ops;
    for (const MinorOp& op : inner.ops) {
        MinorOp r = op;
        if (!r.a.empty()) r.a = rename(r.a);
        if (!r.b.empty()) r.b = rename(r.b);
        if (r.witness) {
            r.witness->common = rename(r.witness->common);
            for (auto& name : r.witness->cycle) name = rename(name);
        }
        out.ops.push_back(std::move(r));
    }
    std::unordered_map<std::string, std::string> fm;
    for (const auto& [inner_end, target_name] : *inner.final_map)
        fm[rename(inner_end)] = target_name;
    out.final_map = std::move(fm);
    return out;
}

nlohmann::json op_to_json(const MinorOp& op) {
    switch (op.kind) {
        case MinorOp::Kind::DeleteVertex: return {{"op", "delete_vertex"}, {"v", op.a}};
        case MinorOp::Kind::DeleteEdge: return {{"op", "delete_edge"}, {"u", op.a}, {"v", op.b}};
        case MinorOp::Kind::Contract:
            return {{"op", "contract"},
                    {"merge", op.a},
                    {"into", op.b},
                    {"witness", op.witness ? witness_to_json(*op.witness) : nlohmann::json()}};
    }
    return {};
}

MinorOp op_from_json(const nlohmann::json& j) {
    std::string kind = j.at("op").get<std::string>();
    if (kind == "delete_vertex") return MinorOp::del_vertex(j.at("v").get<std::string>());
    if (kind == "delete_edge")
        return MinorOp::del_edge(j.at("u").get<std::string>(), j.at("v").get<std::string>());
    if (kind == "contract") {
        MinorOp op;
        op.kind = MinorOp::Kind::Contract;
        op.a = j.at("merge").get<std::string>();
        op.b = j.at("into").get<std::string>();
        if (j.contains("witness") && !j.at("witness").is_null())
            op.witness = witness_from_json(j.at("witness"));
        return op;
    }
    fail(Err::BadParameter, "unknown op kind '" + kind + "'");
}

nlohmann::json certificate_to_json(const MinorCertificate& cert) {
    nlohmann::json j;
    j["target"] = to_json(cert.target);
    auto ops = nlohmann::json::array();
    for (const auto& op : cert.ops) ops.push_back(op_to_json(op));
    j["ops"] = std::move(ops);
    if (cert.final_map) {
        nlohmann::json fm = nlohmann::json::object();
        for (const auto& [k, v] : *cert.final_map) fm[k] = v;
        j["final_map"] = std::move(fm);
    }
    return j;
}

MinorCertificate certificate_from_json(const nlohmann::json& j) {
    MinorCertificate cert;
    cert.target = bigraph_from_json(j.at("target"));
    for (const auto& opj : j.at("ops")) cert.ops.push_back(op_from_json(opj));
    if (j.contains("final_map") && !j.at("final_map").is_null()) {
        std::unordered_map<std::string, std::string> fm;
        for (auto it = j.at("final_map").begin(); it != j.at("final_map").end(); ++it)
            fm[it.key()] = it.value().get<std::string>();
        cert.final_map = std::move(fm);
    }
    return cert;
}

nlohmann::json verify_report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["passed"] = report.passed;
    if (!report.first_failure.empty()) j["first_failure"] = report.first_failure;
    auto steps = nlohmann::json::array();
    for (const auto& s : report.steps) {
        nlohmann::json sj{{"index", s.index}, {"description", s.description}, {"ok", s.ok}};
        if (!s.reason.empty()) sj["reason"] = s.reason;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    return j;
}

} // namespace bipmin
