#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polarcog/cotree.hpp"
#include "polarcog/errors.hpp"
#include "polarcog/graph.hpp"

using namespace polarcog;

namespace {

const Graph kK1 = Graph::complete(1);
const Graph kK2 = Graph::complete(2);

}  // namespace

TEST_CASE("graph_from_edges builds the listed edges") {
    const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4 == Graph::cycle(4));
    CHECK(c4.edge_count() == 4);

    const Graph k1 = Graph::from_edges(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph p3 = Graph::from_edges(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3 == Graph::path(3));
}

TEST_CASE("graph_from_edges rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), InvalidInput);
    CHECK_THROWS_AS(Graph::empty(65), LimitExceeded);
    CHECK_THROWS_AS(Graph::from_rows({0b10, 0b00}), InvalidInput);
}

TEST_CASE("complement") {
    CHECK(complement(Graph::cycle(4)) == Graph::from_edges(4, {{0, 2}, {1, 3}}));
    CHECK(oracle::isomorphic(complement(Graph::cycle(4)), copies(2, kK2)));
    CHECK(oracle::isomorphic(complement(Graph::path(4)), Graph::path(4)));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + trial % 20, 0.4);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("disjoint union and join") {
    CHECK(disjoint_union({kK2, kK2}) == Graph::from_edges(4, {{0, 1}, {2, 3}}));
    const Graph first = disjoint_union({kK1, kK2, kK2});
    CHECK(first == Graph::from_edges(5, {{1, 2}, {3, 4}}));
    CHECK(disjoint_union({Graph::path(3), Graph::path(3)}) == Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));

    CHECK(oracle::isomorphic(join_graphs({Graph::empty(2), Graph::empty(2)}), Graph::cycle(4)));
    const Graph body = join_graphs({Graph::empty(2), Graph::complete(3)});
    CHECK(body.order() == 5);
    CHECK(body.edge_count() == 9);
    CHECK_FALSE(body.adjacent(0, 1));
    CHECK(join_graphs({kK1, kK1}) == kK2);

    CHECK_THROWS_AS(disjoint_union(std::span<const Graph>{}), InvalidInput);
    CHECK_THROWS_AS(join_graphs(std::span<const Graph>{}), InvalidInput);
}

TEST_CASE("union and join are associative up to isomorphism") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> size(1, 3);
        const Graph a = oracle::random_cograph(rng, size(rng));
        const Graph b = oracle::random_cograph(rng, size(rng));
        const Graph c = oracle::random_cograph(rng, size(rng));
        CHECK(canonical_key(disjoint_union({disjoint_union({a, b}), c})) ==
              canonical_key(disjoint_union({a, disjoint_union({b, c})})));
        CHECK(canonical_key(join_graphs({join_graphs({a, b}), c})) ==
              canonical_key(join_graphs({a, join_graphs({b, c})})));
    }
}

TEST_CASE("induced subgraphs") {
    const Graph c4 = Graph::cycle(4);
    CHECK(induced(c4, {0, 1, 2}) == Graph::path(3));
    CHECK(induced(c4, VertexSet(c4.all())) == c4);
    const Graph first = disjoint_union({kK1, kK2, kK2});
    CHECK(induced(first, {1, 2, 3, 4}) == copies(2, kK2));
    CHECK_THROWS_AS(induced(c4, {0, 4}), InvalidInput);
    CHECK(delete_vertex(Graph::path(3), 1) == Graph::empty(2));
}

TEST_CASE("find_induced_embedding examples") {
    const Graph first = disjoint_union({kK1, kK2, kK2});
    const auto phi = find_induced_embedding(first, copies(2, kK2));
    REQUIRE(phi.has_value());
    CHECK(*phi == std::vector<Vertex>{1, 2, 3, 4});

    CHECK_FALSE(find_induced_embedding(Graph::cycle(4), Graph::path(4)).has_value());
    CHECK(find_induced_embedding(copies(2, Graph::path(3)), disjoint_union({kK1, kK2})).has_value());
    CHECK_FALSE(find_induced_embedding(kK2, Graph::complete(3)).has_value());
}

TEST_CASE("find_induced_embedding returns a valid, lexicographically least map") {
    const Graph host = Graph::cycle(6);
    const auto phi = find_induced_embedding(host, Graph::path(3));
    REQUIRE(phi.has_value());
    CHECK(*phi == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("embedding search agrees with subset scan") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph host = oracle::random_graph(rng, 3 + trial % 6, 0.5);
        const Graph pattern = oracle::random_graph(rng, 2 + trial % 4, 0.5);
        const auto phi = find_induced_embedding(host, pattern);
        CHECK(phi.has_value() == oracle::contains_induced_brute(host, pattern));
        if (phi) {
            for (int u = 0; u < pattern.order(); ++u)
                for (int v = u + 1; v < pattern.order(); ++v)
                    CHECK(host.adjacent((*phi)[u], (*phi)[v]) == pattern.adjacent(u, v));
        }
    }
}

TEST_CASE("components") {
    const Graph g = disjoint_union({kK1, Graph::path(3), kK2});
    const auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == 0b1);
    CHECK(comps[1] == 0b1110);
    CHECK(comps[2] == 0b110000);
    CHECK_FALSE(g.is_connected());
    CHECK(Graph::cycle(5).is_connected());
}
