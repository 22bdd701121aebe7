#pragma once

#include <homcount/core.hpp>
#include <homcount/expr.hpp>
#include <homcount/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace homcount
{
    /**
     * Mixed-radix encoding of partial labelings of an n-vertex source graph:
     * index = sum over v of value(v) * (k+1)^v.
     */
    class LabelingCodec
    {
    public:
        LabelingCodec(std::size_t n, int k);

        [[nodiscard]] auto vertex_count() const -> std::size_t { return _n; }
        [[nodiscard]] auto k() const -> int { return _k; }
        [[nodiscard]] auto size() const -> std::size_t { return _powers.back(); }
        [[nodiscard]] auto power(std::size_t v) const -> std::size_t { return _powers[v]; }

        [[nodiscard]] auto encode(const PartialLabeling & chi) const -> std::size_t;
        [[nodiscard]] auto decode(std::size_t index) const -> PartialLabeling;
        [[nodiscard]] auto digit(std::size_t index, std::size_t v) const -> Label;

    private:
        std::size_t _n;
        int _k;
        std::vector<std::size_t> _powers; // n + 1 entries, last is (k+1)^n
    };

    /// Hard cap on table entries, independent of the work budget, to bound memory.
    inline constexpr std::uint64_t max_table_entries = std::uint64_t{1} << 24;

    /**
     * Consistent-homomorphism counts for a fixed source graph G and the
     * current labeled target: entry(chi) is the number of homomorphisms
     * from G[support(chi)] that send every x to a vertex labeled chi(x).
     */
    struct HomTable
    {
        std::size_t n = 0;
        int k = 1;
        std::vector<HomCount> entries;

        HomTable(std::size_t n, int k);

        [[nodiscard]] auto codec() const -> LabelingCodec { return LabelingCodec(n, k); }
        [[nodiscard]] auto at(const PartialLabeling & chi) const -> const HomCount &;

        friend auto operator==(const HomTable &, const HomTable &) -> bool = default;
    };

    /// Throws BudgetExceeded unless a (k+1)^n table fits both the budget and max_table_entries.
    void require_table_budget(std::size_t n, int k, std::uint64_t budget);

    /// Table for the single-vertex target labeled `label`.
    auto base_table(const Graph & g, int k, Label label) -> HomTable;

    /// Table after a composed relabel chain; relabel_map[l-1] is the image of label l.
    auto lift_relabel(const HomTable & t, std::span<const Label> relabel_map) -> HomTable;

    /// Table for the connect of the left and right targets.
    auto lift_connect(const HomTable & left, const HomTable & right, const std::vector<LabelPair> & pairs, const Graph & g) -> HomTable;

    /// Table for the beta expansion of the child target.
    auto lift_beta(const HomTable & child, const BetaOp & params, const Graph & g) -> HomTable;

    /**
     * Number of copy-index functions omega that are 0 exactly on the support
     * of `originals`, range over 1..copies[label] on the support of `copied`,
     * and satisfy the tuple set on every edge touching a copied vertex.
     * Labels are child labels; the supports must be disjoint.
     */
    auto beta_weight(const Graph & g, const PartialLabeling & originals, const PartialLabeling & copied, const BetaOp & params) -> HomCount;

    /// Table of the target represented by the whole expression.
    auto hom_table_via_expr(const Graph & g, const ExtExpr & e, std::uint64_t budget = default_budget()) -> HomTable;

    /// Sum of the entries whose labeling is total.
    auto sum_total_entries(const HomTable & t) -> HomCount;

    /// hom(G, H) where H is the graph represented by e.
    auto count_hom_via_expr(const Graph & g, const ExtExpr & e, std::uint64_t budget = default_budget()) -> HomCount;
}
