#pragma once

#include <homcount/core.hpp>
#include <homcount/graph.hpp>

#include <cstdint>
#include <functional>

namespace homcount
{
    /// Supplies hom(C, U) for induced subgraphs C of the source graph.
    using HomToU = std::function<HomCount(const Graph &)>;

    struct SubdividedInstance
    {
        Graph g;
        int n = 2;
        Graph u;
        HomToU hom_to_u; // empty means brute_hom against u
    };

    /**
     * Homomorphisms from g into subdivide_clique(n, u) whose set of vertices
     * landing on clique vertices is exactly `a_mask` (an independent set).
     * g must be connected.
     */
    auto count_hom_subdivided_split(const SubdividedInstance & inst, std::uint64_t a_mask, std::uint64_t budget = default_budget()) -> HomCount;

    /// hom(g, subdivide_clique(n, u)); disconnected g is handled component by component.
    auto count_hom_subdivided(const SubdividedInstance & inst, std::uint64_t budget = default_budget()) -> HomCount;

    struct KneserInstance
    {
        Graph g;
        int n = 1;
        int k = 1;
    };

    /// hom(g, KG_{n,k}) via colorings of the k-blow-up of g divided by (k!)^|V(g)|.
    auto count_hom_kneser(const KneserInstance & inst, std::uint64_t budget = default_budget()) -> HomCount;
}
