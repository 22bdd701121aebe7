#pragma once

#include <homcount/graph.hpp>
#include <homcount/random.hpp>

#include <cstdint>
#include <vector>

namespace test_support
{
    using namespace homcount;

    inline auto vertices(std::initializer_list<Vertex> vs) -> std::vector<Vertex>
    {
        return vs;
    }

    inline auto petersen() -> Graph
    {
        return gen_kneser(5, 2);
    }

    /// Degree multiset, for cheap structural comparisons.
    inline auto degree_sequence(const Graph & g) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> d;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }

    inline auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
    {
        std::uint64_t r = 1;
        for (std::uint64_t i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }
}
