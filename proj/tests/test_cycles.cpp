#include <doctest.h>

#include <algorithm>
#include <functional>

#include "bipmin/canonical.hpp"
#include "bipmin/catalog.hpp"
#include "bipmin/cycles.hpp"

using namespace bipmin;

namespace {

Err code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const GraphError& e) {
        return e.code();
    }
    FAIL("expected a GraphError");
    return Err::BadParameter;
}

Cycle c8_cycle() { return {"a1", "b1", "a2", "b2", "a3", "b3", "a4", "b4"}; }

// All 6-cycles of K33 visit every red and every blue vertex; enumerate them
// by brute force over orderings.
std::vector<Cycle> k33_six_cycles(const BiGraph& g) {
    std::vector<Cycle> out;
    std::vector<std::string> reds = g.red_names(), blues = g.blue_names();
    std::sort(blues.begin(), blues.end());
    do {
        out.push_back({reds[0], blues[0], reds[1], blues[1], reds[2], blues[2]});
    } while (std::next_permutation(blues.begin(), blues.end()));
    return out;
}

} // namespace

TEST_CASE("cycle validation") {
    BiGraph c8 = catalog::cycle(8);
    CHECK_NOTHROW(validate_cycle(c8, c8_cycle()));
    CHECK(code_of([&] { validate_cycle(c8, {"a1", "b1", "a2"}); }) == Err::NotACycle);
    CHECK(code_of([&] { validate_cycle(c8, {"a1", "b1", "a2", "b3"}); }) == Err::NotACycle);
    CHECK(code_of([&] { validate_cycle(c8, {"a1", "b1", "a1", "b4"}); }) == Err::NotACycle);
}

TEST_CASE("induced and peripheral predicates") {
    BiGraph c8 = catalog::cycle(8);
    CHECK(is_induced_cycle(c8, c8_cycle()));
    CHECK(is_non_separating(c8, c8_cycle())); // removal empties the graph
    CHECK(is_peripheral(c8, c8_cycle()));

    // every 6-cycle of K33 is chorded
    BiGraph k33 = catalog::k33();
    for (const auto& c : k33_six_cycles(k33)) {
        validate_cycle(k33, c);
        CHECK(!is_induced_cycle(k33, c));
        CHECK(!is_peripheral(k33, c));
    }

    // any 4-cycle in K22 is induced
    BiGraph k22 = catalog::k22();
    CHECK(is_induced_cycle(k22, {"a1", "b1", "a2", "b2"}));

    // faces of the cube are peripheral
    BiGraph q3 = catalog::cube_q3();
    Cycle face = {"q000", "q001", "q011", "q010"};
    CHECK(is_peripheral(q3, face));
}

TEST_CASE("non-separation counts components") {
    // two disjoint 4-cycles: removing either leaves one component (2 -> 1)
    BiGraph two = BiGraph::make({"a1", "a2", "c1", "c2"}, {"b1", "b2", "d1", "d2"},
                                {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"},
                                 {"c1", "d1"}, {"c1", "d2"}, {"c2", "d1"}, {"c2", "d2"}});
    CHECK(is_non_separating(two, {"a1", "b1", "a2", "b2"}));

    // theta-like: a chordless path attached at two opposite cycle vertices.
    // Its interior stays connected after the cycle goes, so the verdict must
    // match the direct component count (1 -> 1, non-separating).
    BiGraph theta = BiGraph::make({"a1", "a2", "p1"}, {"b1", "b2", "p2"},
                                  {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"},
                                   {"a1", "p2"}, {"p1", "p2"}, {"p1", "b1"}});
    Cycle four = {"a1", "b2", "a2", "b1"};
    CHECK(theta.component_count() == 1);
    CHECK(theta.induced_subgraph({"p1", "p2"}).component_count() == 1);
    CHECK(is_non_separating(theta, four));

    // two pendants hanging off different cycle vertices get stranded (1 -> 2)
    BiGraph pendants = BiGraph::make({"a1", "a2", "p1", "p2"}, {"b1", "b2"},
                                     {{"a1", "b1"}, {"a1", "b2"}, {"a2", "b1"}, {"a2", "b2"},
                                      {"p1", "b1"}, {"p2", "b2"}});
    CHECK(pendants.induced_subgraph({"p1", "p2"}).component_count() == 2);
    CHECK(!is_non_separating(pendants, four));
}

TEST_CASE("find_peripheral_through_path on C8") {
    BiGraph c8 = catalog::cycle(8);
    auto cycle = find_peripheral_through_path(c8, "a1", "b1", "a2");
    REQUIRE(cycle);
    CHECK(cycle->size() == 8);
    CHECK(is_peripheral(c8, *cycle));
    CHECK((*cycle)[0] == "a1");
    CHECK((*cycle)[1] == "b1");
    CHECK((*cycle)[2] == "a2");

    CHECK(code_of([&] { (void)find_peripheral_through_path(c8, "a1", "b1", "a1"); }) ==
          Err::NotAPath);
    CHECK(code_of([&] { (void)find_peripheral_through_path(c8, "a1", "b2", "a2"); }) ==
          Err::NotAPath);
}

TEST_CASE("paper witness in G(5)") {
    BiGraph g5 = catalog::build_G(5);
    auto cycle = find_peripheral_through_path(g5, "v15", "v1", "v13");
    REQUIRE(cycle);
    CHECK(is_peripheral(g5, *cycle));
    Cycle printed = {"v15", "v1", "v13", "v3", "v35", "v5"};
    CHECK(is_peripheral(g5, printed));
    CHECK(*cycle == printed); // lexicographic DFS happens to find the printed one
}

TEST_CASE("no cycle in a star") {
    BiGraph star = BiGraph::make({"c"}, {"l1", "l2", "l3"},
                                 {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}});
    CHECK(!find_peripheral_through_path(star, "l1", "c", "l2"));
}

TEST_CASE("admissible_witness picks the smallest common neighbor") {
    BiGraph c8 = catalog::cycle(8);
    auto w = admissible_witness(c8, "a1", "a2");
    REQUIRE(w);
    CHECK(w->common == "b1");
    CHECK(w->cycle.size() == 8);

    BiGraph k22 = catalog::k22();
    auto w22 = admissible_witness(k22, "a1", "a2");
    REQUIRE(w22);
    CHECK(w22->common == "b1");

    // no common neighbor: two reds in different components
    BiGraph two = BiGraph::make({"a", "c"}, {"b", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK(!admissible_witness(two, "a", "c"));
    CHECK(code_of([&] { (void)admissible_witness(two, "a", "d"); }) == Err::DifferentSides);
}

TEST_CASE("admissible_contract on C8 gives a 6-cycle plus a pendant edge") {
    BiGraph c8 = catalog::cycle(8);
    auto result = admissible_contract(c8, "a1", "a2");
    CHECK(result.witness.common == "b1");
    CHECK(result.graph.vertex_count() == 7);
    CHECK(result.graph.edge_count() == 7);

    BiGraph expected = BiGraph::make(
        {"x1", "x2", "x3"}, {"y1", "y2", "y3", "pend"},
        {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x3", "y2"}, {"x3", "y3"},
         {"x1", "y3"}, {"x1", "pend"}});
    CHECK(is_isomorphic(result.graph, expected));

    // two reds at distance >= 4 in a long cycle share no neighbor
    BiGraph c12 = catalog::cycle(12);
    CHECK_THROWS_AS((void)admissible_contract(c12, "a1", "a3"), GraphError);
}

TEST_CASE("appendix case 1 step 1 contraction is admissible") {
    BiGraph g5 = catalog::build_G(5);
    auto result = admissible_contract(g5, "v15", "v13");
    CHECK(result.witness.common == "v1");
    CHECK(result.graph.vertex_count() == 14);
}
