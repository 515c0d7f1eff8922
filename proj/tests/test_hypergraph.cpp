#include <catch2/catch_amalgamated.hpp>

#include "vdw/hypergraph.hpp"

#include <set>

using namespace vdw;

namespace {

using Edges = std::vector<std::vector<int>>;

bool strictly_increasing(const std::vector<int>& e) {
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i - 1] >= e[i]) return false;
    return true;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("arithp on small vertex counts") {
    CHECK(arithp(3, 0).edges.empty());
    CHECK(arithp(3, 0).num_vertices == 0);
    CHECK(arithp(3, 2).edges.empty());
    CHECK(arithp(5, 4).edges.empty());

    // Progressions of length 1 are the singletons.
    Hypergraph h1 = arithp(1, 3);
    CHECK(h1.edges == Edges{{1}, {2}, {3}});

    Hypergraph h = arithp(3, 6);
    CHECK(h.num_vertices == 6);
    CHECK(h.edges == Edges{{1, 2, 3}, {2, 3, 4}, {1, 3, 5}, {3, 4, 5}, {2, 4, 6}, {4, 5, 6}});
}

TEST_CASE("arithp rejects bad arguments") {
    CHECK_THROWS_AS(arithp(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(arithp(3, -1), std::invalid_argument);
}

TEST_CASE("arithp edges are well-formed and colex-sorted") {
    for (int t : {2, 3, 4, 5}) {
        for (int n : {0, 1, 5, 13, 30}) {
            Hypergraph h = arithp(t, n);
            for (const auto& e : h.edges) {
                REQUIRE(strictly_increasing(e));
                REQUIRE((int)e.size() == t);
                REQUIRE(e.front() >= 1);
                REQUIRE(e.back() <= n);
            }
            for (size_t i = 1; i < h.edges.size(); ++i)
                REQUIRE(colex_less(h.edges[i - 1], h.edges[i]));
        }
    }
}

TEST_CASE("arithp edge counts match the closed form") {
    for (int t = 2; t <= 6; ++t)
        for (int n = 0; n <= 100; ++n)
            REQUIRE((long long)arithp(t, n).edges.size() == arithp_edge_count(t, n));
}

TEST_CASE("mirror folds onto the lower half") {
    CHECK(mirror(5, 4) == 2);
    CHECK(mirror(5, 3) == 3);
    CHECK(mirror(6, 6) == 1);
    CHECK(mirror(6, 3) == 3);
    CHECK(mirror(1, 1) == 1);
    CHECK_THROWS_AS(mirror(5, 0), std::out_of_range);
    CHECK_THROWS_AS(mirror(5, 6), std::out_of_range);

    for (int n = 1; n <= 12; ++n) {
        for (int v = 1; v <= n; ++v) {
            int m = mirror(n, v);
            CHECK(m >= 1);
            CHECK(m <= (n + 1) / 2);
            CHECK(mirror(n, n + 1 - v) == m);
        }
    }
}

TEST_CASE("pdarithp small cases") {
    CHECK(pdarithp(3, 5).edges == Edges{{1, 3}, {2, 3}});
    CHECK(pdarithp(3, 5).num_vertices == 3);

    CHECK(pdarithp(4, 9).edges == Edges{{2, 4}, {1, 3, 5}, {3, 4, 5}});

    Hypergraph h39 = pdarithp(3, 9);
    CHECK(h39.num_vertices == 5);
    CHECK(h39.edges == Edges{{1, 2, 3}, {2, 4}, {1, 3, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});

    CHECK(pdarithp(3, 0).edges.empty());
    CHECK(pdarithp(3, 0).num_vertices == 0);
}

TEST_CASE("pdarithp edges are subset-minimal and colex-sorted") {
    for (int t : {3, 4, 5}) {
        for (int n = 0; n <= 40; ++n) {
            Hypergraph h = pdarithp(t, n);
            for (size_t i = 1; i < h.edges.size(); ++i)
                REQUIRE(colex_less(h.edges[i - 1], h.edges[i]));
            for (size_t i = 0; i < h.edges.size(); ++i) {
                REQUIRE(strictly_increasing(h.edges[i]));
                REQUIRE(h.edges[i].front() >= 1);
                REQUIRE(h.edges[i].back() <= (n + 1) / 2);
                for (size_t j = 0; j < h.edges.size(); ++j) {
                    if (i == j) continue;
                    REQUIRE(!is_subset(h.edges[i], h.edges[j]));
                }
            }
        }
    }
}

TEST_CASE("shifting vertices by one embeds pdarithp(t,n) into pdarithp(t,n+2)") {
    for (int t = 2; t <= 6; ++t) {
        for (int n = 0; n <= 60; ++n) {
            Hypergraph small = pdarithp(t, n);
            Hypergraph big = pdarithp(t, n + 2);
            REQUIRE(big.num_vertices == small.num_vertices + 1);

            std::set<std::vector<int>> big_edges(big.edges.begin(), big.edges.end());
            size_t without_vertex_one = 0;
            for (const auto& e : big.edges)
                if (std::find(e.begin(), e.end(), 1) == e.end()) ++without_vertex_one;

            REQUIRE(without_vertex_one == small.edges.size());
            for (const auto& e : small.edges) {
                std::vector<int> shifted;
                for (int v : e) shifted.push_back(v + 1);
                REQUIRE(big_edges.count(shifted) == 1);
            }
        }
    }
}

TEST_CASE("pdarithp textual dump") {
    std::string dump = dump_pdarithp(3, 5);
    CHECK(dump == "palindromised hypergraph t=3 n=5\n1 3\n2 3\n");
}
