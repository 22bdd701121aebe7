#include "support.hpp"

#include <homcount/graph.hpp>

#include <doctest.h>

using namespace homcount;
using namespace test_support;

TEST_SUITE("graph")
{
    TEST_CASE("graphs reject loops, duplicates and bad endpoints")
    {
        CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInput);
        CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInput);
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
        CHECK_NOTHROW(Graph(3, {{2, 0}}));
        CHECK(Graph(3, {{2, 0}}).edges() == std::vector<Edge>{{0, 2}});
    }

    TEST_CASE("graph builder has set semantics")
    {
        GraphBuilder b(3);
        b.add_edge(0, 1);
        b.add_edge(1, 0);
        b.add_edge(1, 2);
        CHECK(b.build() == gen_path(3));
    }

    TEST_CASE("labeled graphs and partial labelings validate their values")
    {
        CHECK_THROWS_AS(LabeledGraph(gen_path(2), 2, {1, 3}), InvalidInput);
        CHECK_THROWS_AS(LabeledGraph(gen_path(2), 2, {1}), InvalidInput);
        CHECK_THROWS_AS(PartialLabeling(2, {0, 3}), InvalidInput);
        PartialLabeling chi(3, {0, 2, 0, 3});
        CHECK(chi.support() == vertices({1, 3}));
        CHECK_FALSE(chi.is_total());
        CHECK(PartialLabeling(3, {1, 2}).is_total());
    }

    TEST_CASE("induced subgraph examples")
    {
        CHECK(induced_subgraph(gen_clique(3), vertices({0, 1})) == gen_clique(2));
        CHECK(induced_subgraph(gen_cycle(5), std::vector<Vertex>{}) == Graph(0));
        CHECK(induced_subgraph(gen_cycle(4), vertices({0, 1, 2})) == gen_path(3));
        CHECK_THROWS_AS(induced_subgraph(gen_clique(3), vertices({0, 3})), InvalidInput);

        // Order-preserving renumbering: {1, 3} of the path 0-1-2-3 keeps 1 before 3.
        LabeledGraph g(gen_path(4), 3, {1, 2, 3, 1});
        auto sub = induced_subgraph(g, vertices({3, 1}));
        CHECK(sub.labels == std::vector<Label>{2, 1});
        CHECK(sub.graph.edge_count() == 0);
    }

    TEST_CASE("induced subgraph on all vertices is the identity")
    {
        Rng rng(11);
        for (int i = 0; i < 30; ++i) {
            auto g = random_graph(rng, static_cast<std::size_t>(i % 9), 0.4);
            std::vector<Vertex> all(g.vertex_count());
            std::iota(all.begin(), all.end(), Vertex{0});
            CHECK(induced_subgraph(g, all) == g);
        }
    }

    TEST_CASE("connected components")
    {
        auto matching = Graph(6, {{0, 1}, {2, 3}, {4, 5}});
        auto parts = connected_components(matching);
        REQUIRE(parts.size() == 3);
        for (const auto & p : parts)
            CHECK(p.size() == 2);
        CHECK(connected_components(gen_cycle(5)).size() == 1);
        CHECK(connected_components(Graph(4)).size() == 4);
        CHECK(connected_components(Graph(4, {{3, 0}}))[0] == vertices({0, 3}));
    }

    TEST_CASE("hypercube generator")
    {
        CHECK(gen_hypercube(0) == Graph(1));
        CHECK(gen_hypercube(2).vertex_count() == 4);
        CHECK(gen_hypercube(2).edge_count() == 4);
        CHECK(gen_hypercube(4).vertex_count() == 16);
        CHECK(gen_hypercube(4).edge_count() == 32);
        CHECK(gen_hypercube(3).has_edge(0b101, 0b100));
        CHECK_FALSE(gen_hypercube(3).has_edge(0b101, 0b110));
        CHECK_THROWS_AS(gen_hypercube(21), InvalidInput);
        CHECK_THROWS_AS(gen_hypercube(-1), InvalidInput);
        for (int n = 0; n <= 6; ++n) {
            auto g = gen_hypercube(n);
            CHECK(is_bipartite(g));
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                CHECK(g.degree(v) == static_cast<std::size_t>(n));
        }
    }

    TEST_CASE("Kneser generator")
    {
        auto p = gen_kneser(5, 2);
        CHECK(p.vertex_count() == 10);
        CHECK(p.edge_count() == 15);
        CHECK(degree_sequence(p) == std::vector<std::size_t>(10, 3));
        CHECK(gen_kneser(4, 2).vertex_count() == 6);
        CHECK(gen_kneser(4, 2).edge_count() == 3);
        CHECK(gen_kneser(3, 2).vertex_count() == 3);
        CHECK(gen_kneser(3, 2).edge_count() == 0);
        CHECK(gen_kneser(4, 1) == gen_clique(4));

        auto sets = kneser_vertex_sets(4, 2);
        CHECK(sets == std::vector<std::uint64_t>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
        CHECK_THROWS_AS(gen_kneser(40, 20), BudgetExceeded);
        CHECK_THROWS_AS(gen_kneser(0, 1), InvalidInput);
    }

    TEST_CASE("subdivided cliques")
    {
        auto p3 = subdivide_clique(2, gen_clique(1));
        CHECK(p3.graph.vertex_count() == 3);
        CHECK(p3.graph.edge_count() == 2);
        CHECK(p3.clique_vertices == vertices({0, 1}));
        CHECK(p3.subdivision_vertices == vertices({2}));
        CHECK(p3.graph.has_edge(0, 2));
        CHECK(p3.graph.has_edge(1, 2));

        auto s3 = subdivide_clique(3, gen_clique(1));
        CHECK(s3.graph.vertex_count() == 6);
        CHECK(s3.graph.edge_count() == 6);

        auto s2k2 = subdivide_clique(2, gen_clique(2));
        CHECK(s2k2.graph.vertex_count() == 4);
        CHECK(s2k2.graph.edge_count() == 5);

        // Copy for pair (1,3) of K_3 is the second copy.
        auto s = subdivide_clique(3, gen_path(2));
        CHECK(s.graph.has_edge(0, 5));
        CHECK(s.graph.has_edge(2, 5));
        CHECK_FALSE(s.graph.has_edge(1, 5));
        CHECK_THROWS_AS(subdivide_clique(0, gen_clique(1)), InvalidInput);
    }

    TEST_CASE("subdivided clique size formulas")
    {
        Rng rng(12);
        for (int n = 1; n <= 5; ++n)
            for (int t = 0; t < 4; ++t) {
                auto u = random_graph(rng, static_cast<std::size_t>(1 + t), 0.5);
                auto s = subdivide_clique(n, u).graph;
                const auto pairs = binomial(static_cast<std::uint64_t>(n), 2);
                CHECK(s.vertex_count() == static_cast<std::size_t>(n) + pairs * u.vertex_count());
                CHECK(s.edge_count() == pairs * (u.edge_count() + 2 * u.vertex_count()));
            }
    }

    TEST_CASE("blow-up examples")
    {
        CHECK(blowup(gen_clique(2), 2) == gen_clique(4));
        CHECK(blowup(gen_clique(1), 3) == gen_clique(3));
        CHECK(blowup(gen_cycle(4), 1) == gen_cycle(4));
        CHECK(blowup(gen_path(2), 2).has_edge(1, 2));
        CHECK_THROWS_AS(blowup(gen_clique(2), 0), InvalidInput);
    }

    TEST_CASE("blow-up size formulas")
    {
        Rng rng(13);
        for (int i = 0; i < 40; ++i) {
            auto g = random_graph(rng, static_cast<std::size_t>(i % 9), 0.4);
            for (int k = 1; k <= 3; ++k) {
                auto b = blowup(g, k);
                const auto kk = static_cast<std::size_t>(k);
                CHECK(b.vertex_count() == kk * g.vertex_count());
                CHECK(b.edge_count() == g.vertex_count() * kk * (kk - 1) / 2 + g.edge_count() * kk * kk);
            }
        }
    }

    TEST_CASE("complement, disjoint union, bipartiteness")
    {
        CHECK(complement(gen_clique(4)) == Graph(4));
        CHECK(complement(Graph(3)) == gen_clique(3));
        auto u = disjoint_union(gen_clique(2), gen_path(3));
        CHECK(u.vertex_count() == 5);
        CHECK(u.has_edge(2, 3));
        CHECK(u.has_edge(3, 4));
        CHECK_FALSE(u.has_edge(1, 2));
        CHECK(is_bipartite(gen_cycle(6)));
        CHECK_FALSE(is_bipartite(gen_cycle(5)));
        CHECK(is_independent(gen_cycle(4), 0b0101));
        CHECK_FALSE(is_independent(gen_cycle(4), 0b0011));
    }
}
