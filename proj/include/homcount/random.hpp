#pragma once

// Seeded generators for the verification harness and the test suites.

#include <homcount/expr.hpp>
#include <homcount/graph.hpp>
#include <homcount/partition.hpp>

#include <random>

namespace homcount
{
    using Rng = std::mt19937_64;

    /// G(n, p).
    auto random_graph(Rng & rng, std::size_t n, double p) -> Graph;

    /// A random spanning tree plus G(n, p) edges.
    auto random_connected_graph(Rng & rng, std::size_t n, double p) -> Graph;

    auto random_labeling(Rng & rng, std::size_t n, int k) -> std::vector<Label>;

    auto random_labeled_graph(Rng & rng, std::size_t n, int k, double p) -> LabeledGraph;

    /**
     * Random well-formed extended k-expression whose value has between 1 and
     * max_vertices vertices. Beta nodes use copy counts up to min(k, 2) and a
     * random symmetric tuple set.
     */
    auto random_ext_expr(Rng & rng, int k, std::size_t max_vertices) -> ExtExpr;

    /// Random beta parameters over alphabet k (child left empty).
    auto random_beta_op(Rng & rng, int k, int max_copies) -> BetaOp;

    /// Random classic k-expression with exactly `vertices` vertex leaves (not necessarily safe).
    auto random_classic_expr(Rng & rng, int k, std::size_t vertices) -> ClassicExpr;

    auto random_set_function(Rng & rng, int m, int max_value) -> SetFunction;
}
