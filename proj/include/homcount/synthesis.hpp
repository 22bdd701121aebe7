#pragma once

#include <homcount/core.hpp>
#include <homcount/expr.hpp>
#include <homcount/graph.hpp>

#include <optional>
#include <vector>

namespace homcount
{
    /**
     * A label- and edge-preserving bijection a -> b (result[v] is the image
     * of v), or nullopt. Backtracking over colour-refinement classes seeded
     * with (label, degree).
     */
    auto labeled_iso(const LabeledGraph & a, const LabeledGraph & b) -> std::optional<std::vector<Vertex>>;

    /// The six-vertex block: z = 0, x1..x5 = 1..5; x1 is the junction shared with the next block.
    auto gadget_block() -> Graph;

    struct GadgetInstance
    {
        Graph g_prime;
        Graph h_prime;
        int q = 0; // chain length, equal to the label alphabet size
        int n = 0; // vertex count of the labeled inputs
    };

    /**
     * Plain graphs G', H' that are isomorphic iff a and b are isomorphic as
     * labeled graphs. Ids: the input's vertices, then apexes a_1..a_q, then
     * the chain (z_0, then per block x2..x5 followed by the block's right
     * junction), then the n+2 extra clique vertices of each junction z_1..z_q.
     */
    auto gadget_reduce(const LabeledGraph & a, const LabeledGraph & b) -> GadgetInstance;

    /// G' for one labeled input (the half of gadget_reduce that depends on it).
    auto gadget_graph(const LabeledGraph & input) -> Graph;

    inline constexpr int synth_beta_max_k = 2;

    struct SynthOptions
    {
        /// Case 1 (beta) is searched only when k <= this value.
        int beta_max_k = synth_beta_max_k;
        std::uint64_t budget = default_budget();
    };

    struct SynthResult
    {
        ExtExpr expr;
        std::vector<Label> labels; // the labeling of g the expression realizes
    };

    /**
     * Searches for an extended k-expression whose value is isomorphic to g
     * under some total labeling. Table entries are filled by support size:
     * beta over a proper sub-support, connect over bipartitions, then a
     * relabel closure. Returns the expression of the first full-support
     * entry found, or nullopt.
     */
    auto synthesize(const Graph & g, int k, const SynthOptions & options = {}) -> std::optional<SynthResult>;
}
