#pragma once

#include <homcount/graph.hpp>

#include <array>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

namespace homcount
{
    // ---------------------------------------------------------------------
    // Extended k-expressions
    // ---------------------------------------------------------------------

    struct ExtNode;
    using ExtNodePtr = std::shared_ptr<const ExtNode>;

    using LabelPair = std::pair<Label, Label>;

    /// (i1, j1, i2, j2): copy j1 of a label-i1 vertex may join copy j2 of a label-i2 vertex.
    using BetaTuple = std::array<int, 4>;

    struct VertexOp
    {
        Label label;
    };

    struct RelabelOp
    {
        Label from;
        Label to;
        ExtNodePtr child;
    };

    /// Disjoint union of left and right plus every left-right edge whose label pair is listed.
    struct ConnectOp
    {
        std::vector<LabelPair> pairs;
        ExtNodePtr left;
        ExtNodePtr right;
    };

    /**
     * Copy expansion. A vertex with label i gets copies[i-1] extra copies;
     * copies are relabeled through sigma (sigma[i-1] is the image of i),
     * originals keep their label. Edges between copies of adjacent vertices
     * follow `tuples`; original-original edges are always kept.
     */
    struct BetaOp
    {
        std::vector<int> copies;
        std::vector<Label> sigma;
        std::vector<BetaTuple> tuples;
        ExtNodePtr child;

        [[nodiscard]] auto contains(int i1, int j1, int i2, int j2) const -> bool;
    };

    struct ExtNode
    {
        std::variant<VertexOp, RelabelOp, ConnectOp, BetaOp> op;
    };

    namespace ext
    {
        auto vertex(Label label) -> ExtNodePtr;
        auto relabel(Label from, Label to, ExtNodePtr child) -> ExtNodePtr;
        /// Pairs are sorted and deduplicated.
        auto connect(std::vector<LabelPair> pairs, ExtNodePtr left, ExtNodePtr right) -> ExtNodePtr;
        /// Tuples are sorted and deduplicated.
        auto beta(std::vector<int> copies, std::vector<Label> sigma, std::vector<BetaTuple> tuples, ExtNodePtr child) -> ExtNodePtr;
    }

    /// Extended k-expression. Construction validates every node against k.
    class ExtExpr
    {
    public:
        ExtExpr(int k, ExtNodePtr root);

        [[nodiscard]] auto k() const -> int { return _k; }
        [[nodiscard]] auto root() const -> const ExtNodePtr & { return _root; }

    private:
        int _k;
        ExtNodePtr _root;
    };

    /// Structural equality of expression trees.
    auto same_structure(const ExtNodePtr & a, const ExtNodePtr & b) -> bool;

    inline constexpr std::size_t default_eval_limit = 10'000;

    /**
     * Evaluates to a labeled graph. Connect places the left operand's
     * vertices first; Beta keeps original ids and appends copies in
     * (original id, copy index) order.
     */
    auto eval_ext(const ExtExpr & e, std::size_t max_vertices = default_eval_limit) -> LabeledGraph;

    auto apply_relabel(const LabeledGraph & g, Label from, Label to) -> LabeledGraph;
    auto apply_connect(const LabeledGraph & left, const LabeledGraph & right, const std::vector<LabelPair> & pairs) -> LabeledGraph;
    auto apply_beta(const LabeledGraph & g, const BetaOp & params) -> LabeledGraph;

    /// Operands, connect and beta operators, plus one per maximal relabel chain.
    auto expr_size(const ExtExpr & e) -> std::size_t;

    /// Extended 2-expression for the hypercube of the given dimension (0..12).
    auto hypercube_expr(int dimension) -> ExtExpr;

    // ---------------------------------------------------------------------
    // Classic k-expressions
    // ---------------------------------------------------------------------

    struct ClassicNode;
    using ClassicNodePtr = std::shared_ptr<const ClassicNode>;

    struct ClassicVertexOp
    {
        Label label;
    };

    struct ClassicRelabelOp
    {
        Label from;
        Label to;
        ClassicNodePtr child;
    };

    /// Joins every label-i vertex to every label-j vertex (i != j).
    struct ClassicAddEdgesOp
    {
        Label i;
        Label j;
        ClassicNodePtr child;
    };

    struct ClassicUnionOp
    {
        ClassicNodePtr left;
        ClassicNodePtr right;
    };

    struct ClassicNode
    {
        std::variant<ClassicVertexOp, ClassicRelabelOp, ClassicAddEdgesOp, ClassicUnionOp> op;
    };

    namespace classic
    {
        auto vertex(Label label) -> ClassicNodePtr;
        auto relabel(Label from, Label to, ClassicNodePtr child) -> ClassicNodePtr;
        auto add_edges(Label i, Label j, ClassicNodePtr child) -> ClassicNodePtr;
        auto disjoint_union(ClassicNodePtr left, ClassicNodePtr right) -> ClassicNodePtr;
    }

    class ClassicExpr
    {
    public:
        ClassicExpr(int k, ClassicNodePtr root);

        [[nodiscard]] auto k() const -> int { return _k; }
        [[nodiscard]] auto root() const -> const ClassicNodePtr & { return _root; }

    private:
        int _k;
        ClassicNodePtr _root;
    };

    /// Union places the left operand's vertices first.
    auto eval_classic(const ClassicExpr & e, std::size_t max_vertices = default_eval_limit) -> LabeledGraph;

    /// True iff no operator above a union adds an edge inside either operand.
    auto is_safe_classic(const ClassicExpr & e) -> bool;

    /**
     * Rewrites a safe classic expression into an extended one with the same
     * evaluation (same ids, edges, and labels). Throws InvalidInput when the
     * input is not safe.
     */
    auto classic_to_ext(const ClassicExpr & e) -> ExtExpr;
}
