#include <doctest.h>

#include <random>

#include "bipmin/catalog.hpp"
#include "bipmin/corpus.hpp"
#include "bipmin/cycles.hpp"
#include "bipmin/harness.hpp"
#include "bipmin/io.hpp"
#include "bipmin/minors.hpp"

using namespace bipmin;

TEST_CASE("graph json uses the fixed field names and red-first edges") {
    nlohmann::json j = to_json(catalog::k23());
    REQUIRE(j.contains("red"));
    REQUIRE(j.contains("blue"));
    REQUIRE(j.contains("edges"));
    CHECK(j["red"] == nlohmann::json({"a1", "a2"}));
    CHECK(j["blue"] == nlohmann::json({"b1", "b2", "b3"}));
    for (const auto& e : j["edges"]) {
        CHECK(e.size() == 2);
        CHECK(e[0].get<std::string>()[0] == 'a');
    }
    // extra keys are tolerated on input
    j["meta"] = {{"seed", 1}};
    CHECK(bigraph_from_json(j).edge_count() == 6);
}

TEST_CASE("witness json shape") {
    auto w = admissible_witness(catalog::cycle(8), "a1", "a2");
    REQUIRE(w);
    nlohmann::json j = witness_to_json(*w);
    CHECK(j.at("common") == "b1");
    CHECK(j.at("cycle").is_array());
    CycleWitness back = witness_from_json(j);
    CHECK(back.common == w->common);
    CHECK(back.cycle == w->cycle);
}

TEST_CASE("certificate json op shapes") {
    auto cases = catalog::appendix_scripts();
    nlohmann::json j = certificate_to_json(cases.front().certificate);
    bool saw_contract = false, saw_delete = false;
    for (const auto& opj : j.at("ops")) {
        std::string kind = opj.at("op").get<std::string>();
        if (kind == "contract") {
            saw_contract = true;
            CHECK(opj.contains("merge"));
            CHECK(opj.contains("into"));
            CHECK(opj.at("witness").contains("common"));
            CHECK(opj.at("witness").contains("cycle"));
        } else if (kind == "delete_vertex") {
            saw_delete = true;
            CHECK(opj.contains("v"));
        }
    }
    CHECK(saw_contract);
    CHECK(saw_delete);
    CHECK(j.contains("final_map"));
    CHECK(!j.contains("host")); // host is context, not payload
}

TEST_CASE("random generation is reproducible from the seed") {
    std::mt19937_64 a(2025), b(2025);
    BiGraph ga = random_bipartite(5, 6, 0.37, a);
    BiGraph gb = random_bipartite(5, 6, 0.37, b);
    CHECK(ga.equal_labeled(gb));
    CHECK(to_json(ga) == to_json(gb));

    auto s1 = sample_bipartite(10, 9, 12, 99);
    auto s2 = sample_bipartite(10, 9, 12, 99);
    REQUIRE(s1.size() == s2.size());
    for (size_t i = 0; i < s1.size(); ++i) CHECK(s1[i].equal_labeled(s2[i]));
}

TEST_CASE("harness report json") {
    auto corpus = all_bipartite_graphs(5, true);
    HarnessReport r = run_equivalence_harness(Theorem::Forest, corpus);
    nlohmann::json j = harness_report_to_json(r);
    CHECK(j.at("theorem") == "forest");
    CHECK(j.at("graphs").get<size_t>() == corpus.size());
    CHECK(j.at("clean") == true);
    CHECK(j.at("per_graph").size() == corpus.size());
    CHECK(j.contains("elapsed_seconds"));
    nlohmann::json brief = harness_report_to_json(r, false);
    CHECK(!brief.contains("per_graph"));
}
