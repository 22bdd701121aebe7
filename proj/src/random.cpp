#include <homcount/random.hpp>

#include <algorithm>
#include <numeric>

namespace homcount
{
    namespace
    {
        auto coin(Rng & rng, double p) -> bool
        {
            return std::bernoulli_distribution(p)(rng);
        }

        auto uniform(Rng & rng, int lo, int hi) -> int
        {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        }

        auto random_ext_node(Rng & rng, int k, std::size_t budget, int depth) -> ExtNodePtr
        {
            const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
            if (budget <= 1 || depth > 6 || roll < 0.2) {
                auto leaf = ext::vertex(uniform(rng, 1, k));
                return roll < 0.1 && k > 1 ? ext::relabel(uniform(rng, 1, k), uniform(rng, 1, k), leaf) : leaf;
            }
            if (roll < 0.35)
                return ext::relabel(uniform(rng, 1, k), uniform(rng, 1, k), random_ext_node(rng, k, budget, depth + 1));
            if (roll < 0.75) {
                const auto left = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(budget) - 1));
                std::vector<LabelPair> pairs;
                for (Label i = 1; i <= k; ++i)
                    for (Label j = 1; j <= k; ++j)
                        if (coin(rng, 0.4))
                            pairs.emplace_back(i, j);
                return ext::connect(std::move(pairs), random_ext_node(rng, k, left, depth + 1), random_ext_node(rng, k, budget - left, depth + 1));
            }
            auto op = random_beta_op(rng, k, std::min(k, 2));
            return ext::beta(op.copies, op.sigma, op.tuples, random_ext_node(rng, k, std::max<std::size_t>(1, budget / 3), depth + 1));
        }

        auto random_classic_node(Rng & rng, int k, std::size_t vertices) -> ClassicNodePtr
        {
            ClassicNodePtr node;
            if (vertices == 1)
                node = classic::vertex(uniform(rng, 1, k));
            else {
                const auto left = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(vertices) - 1));
                node = classic::disjoint_union(random_classic_node(rng, k, left), random_classic_node(rng, k, vertices - left));
            }
            const int wraps = uniform(rng, 0, 2);
            for (int w = 0; w < wraps; ++w) {
                const Label i = uniform(rng, 1, k), j = uniform(rng, 1, k);
                if (i != j && coin(rng, 0.6))
                    node = classic::add_edges(i, j, node);
                else
                    node = classic::relabel(i, j, node);
            }
            return node;
        }
    }

    auto random_graph(Rng & rng, std::size_t n, double p) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, p))
                    edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    auto random_connected_graph(Rng & rng, std::size_t n, double p) -> Graph
    {
        GraphBuilder builder(n);
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), Vertex{0});
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 1; i < n; ++i)
            builder.add_edge(order[i], order[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(i) - 1))]);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng, p))
                    builder.add_edge(u, v);
        return builder.build();
    }

    auto random_labeling(Rng & rng, std::size_t n, int k) -> std::vector<Label>
    {
        std::vector<Label> labels(n);
        for (auto & l : labels)
            l = uniform(rng, 1, k);
        return labels;
    }

    auto random_labeled_graph(Rng & rng, std::size_t n, int k, double p) -> LabeledGraph
    {
        auto g = random_graph(rng, n, p);
        return LabeledGraph(std::move(g), k, random_labeling(rng, n, k));
    }

    auto random_beta_op(Rng & rng, int k, int max_copies) -> BetaOp
    {
        BetaOp op;
        for (int i = 0; i < k; ++i) {
            op.copies.push_back(uniform(rng, 0, max_copies));
            op.sigma.push_back(uniform(rng, 1, k));
        }
        for (int i1 = 1; i1 <= k; ++i1)
            for (int j1 = 0; j1 <= op.copies[i1 - 1]; ++j1)
                for (int i2 = i1; i2 <= k; ++i2)
                    for (int j2 = 0; j2 <= op.copies[i2 - 1]; ++j2) {
                        if (i1 == i2 && j2 < j1)
                            continue;
                        if (coin(rng, 0.5)) {
                            op.tuples.push_back({i1, j1, i2, j2});
                            op.tuples.push_back({i2, j2, i1, j1});
                        }
                    }
        std::sort(op.tuples.begin(), op.tuples.end());
        op.tuples.erase(std::unique(op.tuples.begin(), op.tuples.end()), op.tuples.end());
        return op;
    }

    auto random_ext_expr(Rng & rng, int k, std::size_t max_vertices) -> ExtExpr
    {
        while (true) {
            ExtExpr e(k, random_ext_node(rng, k, static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_vertices))), 0));
            try {
                eval_ext(e, max_vertices);
                return e;
            }
            catch (const BudgetExceeded &) {
            }
        }
    }

    auto random_classic_expr(Rng & rng, int k, std::size_t vertices) -> ClassicExpr
    {
        return ClassicExpr(k, random_classic_node(rng, k, std::max<std::size_t>(vertices, 1)));
    }

    auto random_set_function(Rng & rng, int m, int max_value) -> SetFunction
    {
        return SetFunction::from(m, [&](std::uint32_t) { return HomCount(uniform(rng, 0, max_value)); });
    }
}
