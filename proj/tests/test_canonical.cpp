#include <doctest.h>

#include <random>
#include <set>

#include "bipmin/canonical.hpp"
#include "bipmin/catalog.hpp"
#include "bipmin/corpus.hpp"

using namespace bipmin;

TEST_CASE("relabelings of K33 share a key") {
    BiGraph a = catalog::k33();
    BiGraph b = BiGraph::make({"x", "y", "z"}, {"p", "q", "r"},
                              {{"x", "p"}, {"x", "q"}, {"x", "r"},
                               {"y", "p"}, {"y", "q"}, {"y", "r"},
                               {"z", "p"}, {"z", "q"}, {"z", "r"}});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(is_isomorphic(a, b));
}

TEST_CASE("K22 vs path have different keys") {
    BiGraph c4 = catalog::k22();
    BiGraph p4 = c4.delete_edge("a1", "b1");
    CHECK(canonical_key(c4) != canonical_key(p4));
    CHECK(!is_isomorphic(c4, p4));
}

TEST_CASE("red/blue swap is collapsed unless disabled") {
    BiGraph g = BiGraph::make({"r1", "r2"}, {"b1"}, {{"r1", "b1"}, {"r2", "b1"}});
    BiGraph swapped = BiGraph::make({"b1"}, {"r1", "r2"}, {{"b1", "r1"}, {"b1", "r2"}});
    CHECK(canonical_key(g) == canonical_key(swapped));
    CHECK(canonical_key(g, false) != canonical_key(swapped, false));
    CHECK(is_isomorphic(g, swapped));
    CHECK(!is_isomorphic(g, swapped, false));
}

TEST_CASE("G(3,3) is symmetric under permuting the X side") {
    BiGraph base = catalog::build_Gij(3, 3);
    // swap the roles of v1 and v2 by relabeling, then compare keys
    std::vector<std::string> reds, blues;
    std::vector<std::pair<std::string, std::string>> edges;
    auto rename = [](std::string n) {
        for (auto& c : n) {
            if (c == '1') c = '2';
            else if (c == '2') c = '1';
        }
        // normalize v21 -> v12 style names
        if (n.size() == 3 && n[1] > n[2]) std::swap(n[1], n[2]);
        return n;
    };
    for (const auto& r : base.red_names()) reds.push_back(rename(r));
    for (const auto& b : base.blue_names()) blues.push_back(rename(b));
    for (const auto& r : base.red_names())
        for (const auto& b : base.neighbors(r)) edges.emplace_back(rename(r), rename(b));
    BiGraph permuted = BiGraph::make(reds, blues, edges);
    CHECK(canonical_key(base) == canonical_key(permuted));
}

TEST_CASE("canonical key round-trips through its representative") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        int a = 1 + static_cast<int>(rng() % 5);
        int b = 1 + static_cast<int>(rng() % 5);
        BiGraph g = random_bipartite(a, b, 0.4, rng);
        std::string key = canonical_key(g);
        BiGraph rep = from_canonical_key(key);
        CHECK(canonical_key(rep) == key);
        CHECK(is_isomorphic(g, rep));
    }
}

TEST_CASE("key equality agrees with the independent isomorphism search") {
    std::mt19937_64 rng(13);
    std::vector<BiGraph> pool;
    for (int t = 0; t < 60; ++t) {
        int a = 1 + static_cast<int>(rng() % 3);
        int b = 1 + static_cast<int>(rng() % 3);
        pool.push_back(random_bipartite(a, b, 0.5, rng));
    }
    for (const auto& g : pool)
        for (const auto& h : pool)
            CHECK((canonical_key(g) == canonical_key(h)) == is_isomorphic(g, h));
}

TEST_CASE("subgraph embedding") {
    BiGraph host = catalog::k33();
    auto self = find_subgraph_map(host, host);
    REQUIRE(self);
    CHECK(self->size() == 6);

    auto c4_in_k33 = find_subgraph_map(host, catalog::k22());
    CHECK(c4_in_k33);

    // C8 has no 4-cycle subgraph
    CHECK(!find_subgraph_map(catalog::cycle(8), catalog::k22()));
}

TEST_CASE("isomorphism is reflexive and symmetric on a random pool") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        BiGraph g = random_bipartite(2 + t % 3, 2 + t % 4, 0.5, rng);
        BiGraph h = random_bipartite(2 + t % 3, 2 + t % 4, 0.5, rng);
        CHECK(is_isomorphic(g, g));
        CHECK(is_isomorphic(g, h) == is_isomorphic(h, g));
    }
}
