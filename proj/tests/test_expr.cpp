#include "support.hpp"

#include <homcount/expr.hpp>
#include <homcount/oracle.hpp>
#include <homcount/synthesis.hpp>

#include <doctest.h>

using namespace homcount;
using namespace test_support;

namespace
{
    const std::vector<BetaTuple> hypercube_tuples{
        {1, 1, 1, 1}, {2, 1, 2, 1}, {1, 1, 2, 1}, {2, 1, 1, 1}, {1, 0, 2, 1}, {2, 1, 1, 0}, {2, 0, 1, 1}, {1, 1, 2, 0}};

    auto hc1() -> ExtNodePtr
    {
        return ext::connect({{1, 2}}, ext::vertex(1), ext::vertex(2));
    }

    /// Every subexpression's value, together with the ids its vertices carry in the parent's value.
    struct Tracked
    {
        LabeledGraph value;
        std::vector<std::pair<LabeledGraph, std::vector<Vertex>>> parts;
    };

    auto track(const ExtNode & node, int k) -> Tracked
    {
        Tracked out;
        if (auto v = std::get_if<VertexOp>(&node.op))
            out.value = LabeledGraph(Graph(1), k, {v->label});
        else if (auto r = std::get_if<RelabelOp>(&node.op)) {
            out = track(*r->child, k);
            out.value = apply_relabel(out.value, r->from, r->to);
        }
        else if (auto c = std::get_if<ConnectOp>(&node.op)) {
            auto left = track(*c->left, k);
            auto right = track(*c->right, k);
            const auto offset = static_cast<Vertex>(left.value.vertex_count());
            out.parts = std::move(left.parts);
            for (auto & [g, ids] : right.parts) {
                for (auto & id : ids)
                    id += offset;
                out.parts.emplace_back(std::move(g), std::move(ids));
            }
            out.value = apply_connect(left.value, right.value, c->pairs);
        }
        else {
            const auto & b = std::get<BetaOp>(node.op);
            out = track(*b.child, k);
            out.value = apply_beta(out.value, b);
        }
        std::vector<Vertex> all(out.value.vertex_count());
        std::iota(all.begin(), all.end(), Vertex{0});
        out.parts.emplace_back(out.value, all);
        return out;
    }
}

TEST_SUITE("expr")
{
    TEST_CASE("connect of two vertices is an edge")
    {
        auto g = eval_ext(ExtExpr(2, hc1()));
        CHECK(g.graph == gen_clique(2));
        CHECK(g.labels == std::vector<Label>{1, 2});
        CHECK(eval_ext(ExtExpr(2, ext::connect({}, ext::vertex(1), ext::vertex(2)))).graph == Graph(2));
        CHECK(eval_ext(ExtExpr(2, ext::connect({{2, 1}}, ext::vertex(1), ext::vertex(2)))).graph == Graph(2));
    }

    TEST_CASE("beta with no copies is the identity")
    {
        Rng rng(21);
        for (int i = 0; i < 25; ++i) {
            const int k = 1 + i % 3;
            auto e = random_ext_expr(rng, k, 8);
            std::vector<Label> identity(static_cast<std::size_t>(k));
            std::iota(identity.begin(), identity.end(), 1);
            ExtExpr wrapped(k, ext::beta(std::vector<int>(static_cast<std::size_t>(k), 0), identity, {}, e.root()));
            CHECK(eval_ext(wrapped) == eval_ext(e));
        }
    }

    TEST_CASE("one hypercube step turns an edge into a 4-cycle")
    {
        auto g = eval_ext(ExtExpr(2, ext::beta({1, 1}, {2, 1}, hypercube_tuples, hc1())));
        CHECK(g.vertex_count() == 4);
        CHECK(brute_iso(g.graph, gen_cycle(4)));
        // Copies come after originals and take the swapped label.
        CHECK(g.labels == std::vector<Label>{1, 2, 2, 1});
    }

    TEST_CASE("beta copy layout")
    {
        // Path 0-1 labeled (1,1); vertex label 1 gets two copies.
        ExtExpr e(2, ext::beta({2, 0}, {2, 2}, {{1, 1, 1, 2}, {1, 2, 1, 1}}, ext::connect({{1, 1}}, ext::vertex(1), ext::vertex(1))));
        auto g = eval_ext(e);
        CHECK(g.vertex_count() == 6);
        CHECK(g.labels == std::vector<Label>{1, 1, 2, 2, 2, 2});
        // ids: 2 = 0_1, 3 = 0_2, 4 = 1_1, 5 = 1_2
        CHECK(g.graph.edges() == std::vector<Edge>{{0, 1}, {2, 5}, {3, 4}});
    }

    TEST_CASE("beta tuple sets are validated")
    {
        CHECK_THROWS_AS(ExtExpr(2, ext::beta({1, 1}, {2, 1}, {{1, 1, 2, 1}}, hc1())), InvalidInput);
        CHECK_THROWS_AS(ExtExpr(2, ext::beta({1, 0}, {2, 1}, {{1, 1, 2, 1}, {2, 1, 1, 1}}, hc1())), InvalidInput);
        CHECK_THROWS_AS(ExtExpr(2, ext::beta({3, 0}, {1, 2}, {}, hc1())), InvalidInput);
        CHECK_THROWS_AS(ExtExpr(2, ext::beta({1}, {1, 2}, {}, hc1())), InvalidInput);
        CHECK_THROWS_AS(ExtExpr(2, ext::beta({1, 1}, {3, 1}, {}, hc1())), InvalidInput);
        CHECK_THROWS_AS(ExtExpr(2, ext::vertex(3)), InvalidInput);
        CHECK_THROWS_AS(ExtExpr(1, ext::connect({{1, 2}}, ext::vertex(1), ext::vertex(1))), InvalidInput);
        CHECK_THROWS_AS(ext::relabel(1, 2, nullptr), InvalidInput);
        // j = 0 components are legal.
        CHECK_NOTHROW(ExtExpr(2, ext::beta({1, 1}, {2, 1}, {{1, 0, 2, 1}, {2, 1, 1, 0}}, hc1())));
    }

    TEST_CASE("evaluation size guard")
    {
        CHECK_THROWS_AS(eval_ext(hypercube_expr(12), 4000), BudgetExceeded);
        CHECK_NOTHROW(eval_ext(hypercube_expr(10)));
        CHECK_THROWS_AS(eval_ext(hypercube_expr(5), 16), BudgetExceeded);
    }

    TEST_CASE("classic expressions")
    {
        auto k2 = classic::add_edges(1, 2, classic::disjoint_union(classic::vertex(1), classic::vertex(2)));
        CHECK(eval_classic(ClassicExpr(2, k2)).graph == gen_clique(2));
        auto single = eval_classic(ClassicExpr(1, classic::vertex(1)));
        CHECK(single.vertex_count() == 1);
        CHECK(single.labels == std::vector<Label>{1});

        // K_3: join an edge labeled (1,1) to a vertex labeled 2.
        auto edge11 = classic::relabel(2, 1, k2);
        auto k3 = classic::add_edges(1, 2, classic::disjoint_union(edge11, classic::vertex(2)));
        CHECK(eval_classic(ClassicExpr(2, k3)).graph == gen_clique(3));
        CHECK_THROWS_AS(classic::add_edges(1, 1, classic::vertex(1)), InvalidInput);
    }

    TEST_CASE("classic safety")
    {
        auto k2 = classic::add_edges(1, 2, classic::disjoint_union(classic::vertex(1), classic::vertex(2)));
        CHECK(is_safe_classic(ClassicExpr(2, k2)));
        CHECK(is_safe_classic(ClassicExpr(1, classic::vertex(1))));

        // The outer eta_{1,2} adds an edge inside the left operand {1, 2}.
        auto inner = classic::disjoint_union(classic::vertex(1), classic::vertex(2));
        auto unsafe = classic::add_edges(1, 2, classic::disjoint_union(inner, classic::vertex(1)));
        ClassicExpr e(2, unsafe);
        CHECK_FALSE(is_safe_classic(e));
        auto value = eval_classic(e);
        CHECK(value.graph.has_edge(0, 1));
        CHECK(eval_classic(ClassicExpr(2, inner)).graph.edge_count() == 0);
        CHECK_THROWS_AS(classic_to_ext(e), InvalidInput);
    }

    TEST_CASE("classic to extended conversion")
    {
        auto k2 = classic::add_edges(1, 2, classic::disjoint_union(classic::vertex(1), classic::vertex(2)));
        auto converted = classic_to_ext(ClassicExpr(2, k2));
        CHECK(same_structure(converted.root(), hc1()));

        auto chain = classic::relabel(1, 2, classic::vertex(1));
        CHECK(same_structure(classic_to_ext(ClassicExpr(2, chain)).root(), ext::relabel(1, 2, ext::vertex(1))));
    }

    TEST_CASE("conversion preserves the value of random safe expressions")
    {
        Rng rng(22);
        int safe = 0;
        for (int i = 0; i < 400 && safe < 120; ++i) {
            const int k = 2 + i % 2;
            auto e = random_classic_expr(rng, k, static_cast<std::size_t>(1 + i % 6));
            if (! is_safe_classic(e))
                continue;
            ++safe;
            CHECK(eval_ext(classic_to_ext(e)) == eval_classic(e));
        }
        CHECK(safe >= 100);
    }

    TEST_CASE("hypercube expressions")
    {
        CHECK(same_structure(hypercube_expr(0).root(), ext::vertex(1)));
        CHECK(same_structure(hypercube_expr(1).root(), hc1()));
        CHECK(same_structure(hypercube_expr(2).root(), ext::beta({1, 1}, {2, 1}, hypercube_tuples, hc1())));
        for (int n = 0; n <= 4; ++n)
            CHECK(brute_iso(eval_ext(hypercube_expr(n)).graph, gen_hypercube(n)));
        for (int n = 5; n <= 6; ++n) {
            auto g = eval_ext(hypercube_expr(n)).graph;
            auto h = gen_hypercube(n);
            CHECK(g.edge_count() == h.edge_count());
            CHECK(degree_sequence(g) == degree_sequence(h));
            CHECK(is_bipartite(g));
        }
        CHECK_THROWS_AS(hypercube_expr(13), InvalidInput);
        CHECK_THROWS_AS(hypercube_expr(-1), InvalidInput);
    }

    TEST_CASE("expression size")
    {
        CHECK(expr_size(ExtExpr(1, ext::vertex(1))) == 1);
        CHECK(expr_size(ExtExpr(2, hc1())) == 3);
        CHECK(expr_size(ExtExpr(2, ext::relabel(1, 2, ext::relabel(2, 1, ext::vertex(1))))) == 2);
        CHECK(expr_size(hypercube_expr(3)) == 5);
    }

    TEST_CASE("every subexpression value survives unchanged in the final graph")
    {
        Rng rng(23);
        for (int i = 0; i < 150; ++i) {
            const int k = 1 + i % 3;
            auto e = random_ext_expr(rng, k, 12);
            auto tracked = track(*e.root(), k);
            CHECK(tracked.value == eval_ext(e));
            for (const auto & [part, ids] : tracked.parts)
                CHECK(induced_subgraph(tracked.value.graph, ids) == part.graph);
        }
    }

    TEST_CASE("relabel, connect and beta appliers")
    {
        LabeledGraph g(gen_path(3), 3, {1, 2, 1});
        CHECK(apply_relabel(g, 1, 3).labels == std::vector<Label>{3, 2, 3});
        CHECK(apply_relabel(g, 3, 1) == g);
        auto joined = apply_connect(g, LabeledGraph(Graph(1), 3, {2}), {{1, 2}});
        CHECK(joined.graph.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    }
}
