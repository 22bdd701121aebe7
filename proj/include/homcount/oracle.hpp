#pragma once

// Reference enumerations. They stay deliberately plain so the fast paths
// have something independent to be checked against.

#include <homcount/core.hpp>
#include <homcount/dp.hpp>
#include <homcount/graph.hpp>
#include <homcount/partition.hpp>

#include <cstdint>
#include <functional>
#include <span>

namespace homcount
{
    inline constexpr std::uint64_t oracle_map_limit = 100'000'000ULL;

    /// Calls visit(phi) for every homomorphism g -> h, phi[v] being the image of v.
    void for_each_hom(const Graph & g, const Graph & h, const std::function<void(std::span<const Vertex>)> & visit,
        std::uint64_t budget = oracle_map_limit);

    /// hom(g, h) by enumerating all |V(h)|^|V(g)| maps.
    auto brute_hom(const Graph & g, const Graph & h, std::uint64_t budget = oracle_map_limit) -> HomCount;

    /// Consistent-homomorphism table of g against the labeled target h, by enumerating every partial map.
    auto brute_hom_labeled(const Graph & g, const LabeledGraph & h, std::uint64_t budget = oracle_map_limit) -> HomTable;

    inline constexpr int brute_par_max_ground = 8;

    /// par(f, n) by enumerating all n^m assignments of elements to parts.
    auto brute_par(const SetFunction & f, int n) -> HomCount;

    inline constexpr std::uint64_t brute_iso_node_limit = 50'000'000ULL;

    /**
     * Plain graph isomorphism by exhaustive backtracking. Candidates are
     * filtered only by degree and adjacency to already-mapped vertices; a
     * candidate that is a twin of one already rejected at the same step is
     * skipped, since swapping two twins is an automorphism of b. The search
     * visits at most `node_limit` nodes before throwing BudgetExceeded.
     */
    auto brute_iso(const Graph & a, const Graph & b, std::uint64_t node_limit = brute_iso_node_limit) -> bool;

    inline constexpr std::size_t brute_labeled_iso_max_vertices = 8;

    /// Labeled isomorphism by trying every permutation (at most 8 vertices).
    auto brute_labeled_iso(const LabeledGraph & a, const LabeledGraph & b) -> bool;
}
