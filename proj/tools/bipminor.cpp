// bipminor: command-line front end for the bipartite-minor toolkit.
// Exit codes: 0 verdict-true/pass, 1 verdict-false/fail, 2 usage or I/O
// error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
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

struct GlobalOpts {
    std::string format = "json";
    int jobs = 1;
    bool json() const { return format == "json"; }
};

BiGraph load_graph(const std::string& path) {
    if (path.empty() || path == "-") return read_bigraph(std::cin);
    return read_bigraph_file(path);
}

// --target takes a catalog alias (K33, C8, gadget(2), ...) or a file path.
BiGraph load_target(const std::string& spec) {
    try {
        return catalog::build(spec);
    } catch (const GraphError&) {
        return read_bigraph_file(spec);
    }
}

void emit(const GlobalOpts& g, const nlohmann::json& j, const std::string& text) {
    if (g.json())
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int verdict_exit(bool v) { return v ? 0 : 1; }

int run_app(int argc, char** argv) {
    CLI::App app{"bipartite-minor toolkit: minors, certificates, planarity, Laman graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // let --format/--jobs appear after the subcommand
    GlobalOpts global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", global.jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);

    std::string graph_path = "-";
    std::string target_spec, cert_path, case_name, vertex, theorem = "wagner";
    long long budget = 10'000'000;
    int max_size = 64, max_vertices = 8, sample = 0, reds = 0, blues = 0;
    std::uint64_t seed = 1;
    double edge_prob = 0.5;

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "graph file (JSON or text), '-' for stdin");
    };

    auto* planar = app.add_subcommand("check-planar", "planarity of the input graph");
    add_graph_arg(planar);
    auto* outer = app.add_subcommand("check-outerplanar", "outerplanarity of the input graph");
    add_graph_arg(outer);
    auto* forest = app.add_subcommand("check-forest", "acyclicity of the input graph");
    add_graph_arg(forest);

    auto* minor = app.add_subcommand("check-minor", "bipartite-minor containment");
    minor->add_option("--target", target_spec, "target graph (alias or file)")->required();
    minor->add_option("--budget", budget, "state budget");
    add_graph_arg(minor);

    auto* findcert = app.add_subcommand("find-certificate", "search and emit a minor certificate");
    findcert->add_option("--target", target_spec, "target graph (alias or file)")->required();
    findcert->add_option("--budget", budget, "state budget");
    add_graph_arg(findcert);

    auto* verify = app.add_subcommand("verify-certificate", "replay a certificate against a host");
    verify->add_option("--cert", cert_path, "certificate JSON file")->required();
    add_graph_arg(verify);

    auto* laman = app.add_subcommand("check-laman", "(2,2)-Laman recognition");
    add_graph_arg(laman);

    auto* crit = app.add_subcommand("critical-sets", "vertex sets X with E(X) = 2|X|-4");
    crit->add_option("--max-size", max_size, "largest set size reported");
    add_graph_arg(crit);

    auto* reduce = app.add_subcommand("reduce-laman", "degree-2 deletion or theorem reduction moves");
    reduce->add_option("--vertex", vertex, "vertex to remove")->required();
    add_graph_arg(reduce);

    auto* enumerate = app.add_subcommand("enumerate-laman", "all Laman graphs up to isomorphism");
    enumerate->add_option("--max-vertices", max_vertices, "vertex bound")->required();

    auto* appendix = app.add_subcommand("verify-appendix", "replay the nine published scripts");
    appendix->add_option("--case", case_name, "single case, e.g. G(3,2)");

    auto* cat = app.add_subcommand("catalog", "named constructions");
    auto* cat_list = cat->add_subcommand("list", "list catalog names");
    auto* cat_build = cat->add_subcommand("build", "emit a named graph");
    std::string cat_name;
    cat_build->add_option("name", cat_name, "catalog name")->required();
    cat->require_subcommand(1);

    auto* harness = app.add_subcommand("equivalence-harness", "predicate vs minor search");
    harness->add_option("--theorem", theorem, "wagner|outerplanar|forest")
        ->check(CLI::IsMember({"wagner", "outerplanar", "forest"}));
    harness->add_option("--max-vertices", max_vertices, "exhaustive corpus bound");
    harness->add_option("--sample", sample, "random graphs instead of the exhaustive corpus");
    harness->add_option("--seed", seed, "sample seed");
    harness->add_option("--budget", budget, "state budget per graph");

    auto* genrandom = app.add_subcommand("gen-random", "seeded random bipartite graph");
    genrandom->add_option("--reds", reds, "red side size")->required();
    genrandom->add_option("--blues", blues, "blue side size")->required();
    genrandom->add_option("--edge-prob", edge_prob, "edge probability")->required();
    genrandom->add_option("--seed", seed, "PRNG seed (mt19937_64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }
    omp_set_num_threads(global.jobs);

    if (planar->parsed()) {
        auto verdict = is_planar(load_graph(graph_path), true);
        nlohmann::json j{{"planar", verdict.planar}};
        if (verdict.kuratowski_witness) {
            nlohmann::json w{{"pattern", verdict.kuratowski_witness->pattern},
                             {"branch_vertices", verdict.kuratowski_witness->subdivision.branch},
                             {"paths", verdict.kuratowski_witness->subdivision.paths}};
            j["kuratowski_witness"] = std::move(w);
        }
        emit(global, j, verdict.planar ? "planar" : "non-planar");
        return verdict_exit(verdict.planar);
    }
    if (outer->parsed()) {
        bool v = is_outerplanar(load_graph(graph_path));
        emit(global, {{"outerplanar", v}}, v ? "outerplanar" : "not outerplanar");
        return verdict_exit(v);
    }
    if (forest->parsed()) {
        bool v = is_forest(load_graph(graph_path));
        emit(global, {{"forest", v}}, v ? "forest" : "not a forest");
        return verdict_exit(v);
    }
    if (minor->parsed()) {
        BiGraph g = load_graph(graph_path);
        MinorSearchOptions opts;
        opts.budget = budget;
        SearchOutcome outcome = contains_bipartite_minor(g, load_target(target_spec), opts);
        nlohmann::json j{{"verdict", verdict_name(outcome.verdict)},
                         {"states_explored", outcome.stats.explored},
                         {"dedup_hits", outcome.stats.dedup_hits}};
        if (outcome.certificate) j["certificate"] = certificate_to_json(*outcome.certificate);
        emit(global, j, verdict_name(outcome.verdict));
        if (outcome.verdict == MinorVerdict::BudgetExhausted) return 3;
        return verdict_exit(outcome.verdict == MinorVerdict::Contains);
    }
    if (findcert->parsed()) {
        BiGraph g = load_graph(graph_path);
        MinorSearchOptions opts;
        opts.budget = budget;
        auto cert = find_minor_certificate(g, load_target(target_spec), opts);
        if (!cert) {
            emit(global, {{"certificate", nullptr}}, "no certificate: minor not contained");
            return 1;
        }
        emit(global, certificate_to_json(*cert), "certificate found (use --format json)");
        return 0;
    }
    if (verify->parsed()) {
        std::ifstream in(cert_path);
        if (!in) fail(Err::BadParameter, "cannot open certificate " + cert_path);
        nlohmann::json cj = nlohmann::json::parse(in);
        MinorCertificate cert = certificate_from_json(cj);
        VerifyReport report = verify_certificate(load_graph(graph_path), cert);
        emit(global, verify_report_to_json(report),
             report.passed ? "certificate verified" : "FAILED: " + report.first_failure);
        return verdict_exit(report.passed);
    }
    if (laman->parsed()) {
        LamanReport report = is_laman(load_graph(graph_path));
        nlohmann::json j{{"verdict", report.verdict},
                         {"global_count_ok", report.global_count_ok},
                         {"side_sizes", {report.side_sizes.first, report.side_sizes.second}}};
        if (report.worst_violation)
            j["worst_violation"] = {{"vertices", report.worst_violation->vertices},
                                    {"excess", report.worst_violation->excess}};
        else
            j["worst_violation"] = nullptr;
        emit(global, j, report.verdict ? "(2,2)-Laman" : "not (2,2)-Laman");
        return verdict_exit(report.verdict);
    }
    if (crit->parsed()) {
        auto sets = critical_sets(load_graph(graph_path), max_size);
        nlohmann::json j = nlohmann::json::array();
        std::string text;
        for (const auto& s : sets) {
            j.push_back(s);
            for (const auto& v : s) text += v + " ";
            text += "\n";
        }
        emit(global, {{"critical_sets", j}}, text);
        return 0;
    }
    if (reduce->parsed()) {
        BiGraph g = load_graph(graph_path);
        int deg = g.degree(vertex);
        if (deg == 2) {
            BiGraph reduced = reduce_degree2(g, vertex);
            emit(global, {{"kind", "degree2"}, {"graph", to_json(reduced)}}, to_text(reduced));
            return 0;
        }
        auto moves = reduce_step(g, vertex);
        nlohmann::json arr = nlohmann::json::array();
        std::string text;
        for (const auto& m : moves) {
            arr.push_back({{"v", m.v}, {"x", m.x}, {"y", m.y}, {"p", m.p},
                           {"graph", to_json(m.result)}});
            text += "v=" + m.v + " x=" + m.x + " y=" + m.y + " p=" + m.p + "\n";
        }
        emit(global, {{"kind", "theorem_moves"}, {"moves", arr}}, text);
        return moves.empty() ? 1 : 0;
    }
    if (enumerate->parsed()) {
        for (const auto& g : enumerate_laman(max_vertices)) std::cout << to_json(g).dump() << "\n";
        return 0;
    }
    if (appendix->parsed()) {
        bool all_ok = true;
        bool matched = false;
        for (const auto& ac : catalog::appendix_scripts()) {
            if (!case_name.empty() && ac.name != case_name) continue;
            matched = true;
            VerifyReport report = verify_certificate(ac.host, ac.certificate);
            all_ok = all_ok && report.passed;
            std::cout << (report.passed ? "PASS " : "FAIL ") << ac.name << " ("
                      << ac.certificate.ops.size() << " ops)";
            if (!report.passed) std::cout << " — " << report.first_failure;
            std::cout << "\n";
        }
        if (!case_name.empty() && !matched) fail(Err::BadParameter, "no case " + case_name);
        return verdict_exit(all_ok);
    }
    if (cat->parsed()) {
        if (cat_list->parsed()) {
            for (const auto& name : catalog::list_names()) std::cout << name << "\n";
            return 0;
        }
        BiGraph g = catalog::build(cat_name);
        emit(global, to_json(g), to_text(g));
        return 0;
    }
    if (harness->parsed()) {
        Theorem t = theorem == "wagner"        ? Theorem::Wagner
                    : theorem == "outerplanar" ? Theorem::Outerplanar
                                               : Theorem::Forest;
        std::vector<BiGraph> corpus;
        if (sample > 0)
            corpus = sample_bipartite(sample, 9, std::max(9, max_vertices), seed);
        else
            corpus = all_bipartite_graphs(max_vertices, /*connected_only=*/true);
        MinorSearchOptions opts;
        opts.budget = budget;
        HarnessReport report = run_equivalence_harness(t, std::move(corpus), opts);
        emit(global, harness_report_to_json(report),
             std::string(theorem_name(t)) + ": " + std::to_string(report.corpus.size()) +
                 " graphs, " + std::to_string(report.discrepancies.size()) + " discrepancies, " +
                 std::to_string(report.budget_exhausted.size()) + " budget exhaustions");
        if (!report.budget_exhausted.empty() && report.discrepancies.empty() &&
            report.certificate_failures.empty())
            return 3;
        return verdict_exit(report.clean());
    }
    if (genrandom->parsed()) {
        std::mt19937_64 rng(seed);
        BiGraph g = random_bipartite(reds, blues, edge_prob, rng);
        nlohmann::json j = to_json(g);
        j["meta"] = {{"generator", "mt19937_64"},
                     {"seed", seed},
                     {"edge_prob", edge_prob},
                     {"draw", "edge iff (next() >> 11) * 2^-53 < p, red-major pair order"}};
        emit(global, j, to_text(g));
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run_app(argc, argv);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Err::BudgetExhausted ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
