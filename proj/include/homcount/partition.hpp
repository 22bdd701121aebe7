#pragma once

#include <homcount/core.hpp>
#include <homcount/graph.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace homcount
{
    inline constexpr int max_ground_set = 24;

    /// Non-negative weights on every subset of a ground set {0..m-1}, indexed by bitmask.
    class SetFunction
    {
    public:
        SetFunction(int m, std::vector<HomCount> values);

        static auto from(int m, const std::function<HomCount(std::uint32_t)> & f) -> SetFunction;
        static auto constant(int m, const HomCount & value) -> SetFunction;

        [[nodiscard]] auto ground_size() const -> int { return _m; }
        [[nodiscard]] auto operator[](std::uint32_t subset) const -> const HomCount & { return _values[subset]; }
        [[nodiscard]] auto values() const -> const std::vector<HomCount> & { return _values; }

    private:
        int _m;
        std::vector<HomCount> _values;
    };

    /// f(X) = 1 iff X is an independent set of g; needs |V(g)| <= max_ground_set.
    auto independence_indicator(const Graph & g) -> SetFunction;

    /**
     * Sum over ordered n-tuples of pairwise disjoint (possibly empty) subsets
     * covering the ground set of the product of f over the tuple.
     *
     * Ranked zeta transform, per-subset truncated n-th power of the rank
     * polynomial, then Moebius inversion evaluated at the full set only.
     * Memory is (m+1) * 2^m words, checked against the budget.
     */
    auto par(const SetFunction & f, int n, std::uint64_t budget = default_budget()) -> HomCount;

    /// Proper n-colorings of g, i.e. hom(g, K_n).
    auto count_colorings(const Graph & g, int n, std::uint64_t budget = default_budget()) -> HomCount;
}
