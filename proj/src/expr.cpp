#include <homcount/expr.hpp>

#include <algorithm>
#include <string>

namespace homcount
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;

        void require_child(const auto & child)
        {
            if (! child)
                throw InvalidInput("expression node has a missing operand");
        }

        void check_label(Label l, int k, const char * where)
        {
            if (l < 1 || l > k)
                throw InvalidInput(std::string(where) + ": label " + std::to_string(l) + " outside 1.." + std::to_string(k));
        }

        void validate_beta(const BetaOp & op, int k)
        {
            if (op.copies.size() != static_cast<std::size_t>(k))
                throw InvalidInput("beta: copy vector must have k entries");
            if (op.sigma.size() != static_cast<std::size_t>(k))
                throw InvalidInput("beta: sigma must have k entries");
            for (auto c : op.copies)
                if (c < 0 || c > k)
                    throw InvalidInput("beta: copy count " + std::to_string(c) + " outside 0.." + std::to_string(k));
            for (auto s : op.sigma)
                check_label(s, k, "beta sigma");
            for (const auto & [i1, j1, i2, j2] : op.tuples) {
                check_label(i1, k, "beta tuple");
                check_label(i2, k, "beta tuple");
                if (j1 < 0 || j1 > op.copies[i1 - 1] || j2 < 0 || j2 > op.copies[i2 - 1])
                    throw InvalidInput("beta: tuple (" + std::to_string(i1) + "," + std::to_string(j1) + "," + std::to_string(i2) + "," +
                        std::to_string(j2) + ") has a copy index outside the copy vector");
                if (! op.contains(i2, j2, i1, j1))
                    throw InvalidInput("beta: tuple set is not symmetric");
            }
        }

        void validate(const ExtNode & node, int k)
        {
            std::visit(overloaded{
                           [&](const VertexOp & op) { check_label(op.label, k, "vertex"); },
                           [&](const RelabelOp & op) {
                               check_label(op.from, k, "relabel");
                               check_label(op.to, k, "relabel");
                               validate(*op.child, k);
                           },
                           [&](const ConnectOp & op) {
                               for (auto [i, j] : op.pairs) {
                                   check_label(i, k, "connect");
                                   check_label(j, k, "connect");
                               }
                               validate(*op.left, k);
                               validate(*op.right, k);
                           },
                           [&](const BetaOp & op) {
                               validate_beta(op, k);
                               validate(*op.child, k);
                           },
                       },
                node.op);
        }

        void check_limit(std::size_t n, std::size_t max_vertices)
        {
            if (n > max_vertices)
                throw BudgetExceeded("expression evaluates to more than " + std::to_string(max_vertices) + " vertices");
        }

        auto eval_node(const ExtNode & node, int k, std::size_t max_vertices) -> LabeledGraph
        {
            auto result = std::visit(overloaded{
                                         [&](const VertexOp & op) { return LabeledGraph(Graph(1), k, {op.label}); },
                                         [&](const RelabelOp & op) { return apply_relabel(eval_node(*op.child, k, max_vertices), op.from, op.to); },
                                         [&](const ConnectOp & op) {
                                             auto left = eval_node(*op.left, k, max_vertices);
                                             auto right = eval_node(*op.right, k, max_vertices);
                                             check_limit(left.vertex_count() + right.vertex_count(), max_vertices);
                                             return apply_connect(left, right, op.pairs);
                                         },
                                         [&](const BetaOp & op) {
                                             auto child = eval_node(*op.child, k, max_vertices);
                                             std::size_t n = child.vertex_count();
                                             for (auto l : child.labels)
                                                 n += static_cast<std::size_t>(op.copies[l - 1]);
                                             check_limit(n, max_vertices);
                                             return apply_beta(child, op);
                                         },
                                     },
                node.op);
            check_limit(result.vertex_count(), max_vertices);
            return result;
        }

        auto size_of(const ExtNode & node, bool under_relabel) -> std::size_t
        {
            return std::visit(overloaded{
                                  [](const VertexOp &) -> std::size_t { return 1; },
                                  [&](const RelabelOp & op) -> std::size_t { return (under_relabel ? 0 : 1) + size_of(*op.child, true); },
                                  [](const ConnectOp & op) -> std::size_t { return 1 + size_of(*op.left, false) + size_of(*op.right, false); },
                                  [](const BetaOp & op) -> std::size_t { return 1 + size_of(*op.child, false); },
                              },
                node.op);
        }
    }

    auto BetaOp::contains(int i1, int j1, int i2, int j2) const -> bool
    {
        return std::binary_search(tuples.begin(), tuples.end(), BetaTuple{i1, j1, i2, j2});
    }

    namespace ext
    {
        auto vertex(Label label) -> ExtNodePtr
        {
            return std::make_shared<const ExtNode>(ExtNode{VertexOp{label}});
        }

        auto relabel(Label from, Label to, ExtNodePtr child) -> ExtNodePtr
        {
            require_child(child);
            return std::make_shared<const ExtNode>(ExtNode{RelabelOp{from, to, std::move(child)}});
        }

        auto connect(std::vector<LabelPair> pairs, ExtNodePtr left, ExtNodePtr right) -> ExtNodePtr
        {
            require_child(left);
            require_child(right);
            std::sort(pairs.begin(), pairs.end());
            pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
            return std::make_shared<const ExtNode>(ExtNode{ConnectOp{std::move(pairs), std::move(left), std::move(right)}});
        }

        auto beta(std::vector<int> copies, std::vector<Label> sigma, std::vector<BetaTuple> tuples, ExtNodePtr child) -> ExtNodePtr
        {
            require_child(child);
            std::sort(tuples.begin(), tuples.end());
            tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
            return std::make_shared<const ExtNode>(ExtNode{BetaOp{std::move(copies), std::move(sigma), std::move(tuples), std::move(child)}});
        }
    }

    ExtExpr::ExtExpr(int k, ExtNodePtr root) : _k(k), _root(std::move(root))
    {
        if (k < 1)
            throw InvalidInput("expression alphabet size must be positive");
        require_child(_root);
        validate(*_root, k);
    }

    auto same_structure(const ExtNodePtr & a, const ExtNodePtr & b) -> bool
    {
        if (a == b)
            return true;
        if (! a || ! b || a->op.index() != b->op.index())
            return false;
        return std::visit(overloaded{
                              [&](const VertexOp & x) { return x.label == std::get<VertexOp>(b->op).label; },
                              [&](const RelabelOp & x) {
                                  const auto & y = std::get<RelabelOp>(b->op);
                                  return x.from == y.from && x.to == y.to && same_structure(x.child, y.child);
                              },
                              [&](const ConnectOp & x) {
                                  const auto & y = std::get<ConnectOp>(b->op);
                                  return x.pairs == y.pairs && same_structure(x.left, y.left) && same_structure(x.right, y.right);
                              },
                              [&](const BetaOp & x) {
                                  const auto & y = std::get<BetaOp>(b->op);
                                  return x.copies == y.copies && x.sigma == y.sigma && x.tuples == y.tuples && same_structure(x.child, y.child);
                              },
                          },
            a->op);
    }

    auto eval_ext(const ExtExpr & e, std::size_t max_vertices) -> LabeledGraph
    {
        return eval_node(*e.root(), e.k(), max_vertices);
    }

    auto apply_relabel(const LabeledGraph & g, Label from, Label to) -> LabeledGraph
    {
        auto labels = g.labels;
        for (auto & l : labels)
            if (l == from)
                l = to;
        return LabeledGraph(g.graph, g.k, std::move(labels));
    }

    auto apply_connect(const LabeledGraph & left, const LabeledGraph & right, const std::vector<LabelPair> & pairs) -> LabeledGraph
    {
        const auto offset = static_cast<Vertex>(left.vertex_count());
        auto edges = disjoint_union(left.graph, right.graph).edges();
        std::vector<std::vector<bool>> joined(left.k + 1, std::vector<bool>(left.k + 1, false));
        for (auto [i, j] : pairs)
            joined[i][j] = true;
        for (Vertex a = 0; a < left.vertex_count(); ++a)
            for (Vertex b = 0; b < right.vertex_count(); ++b)
                if (joined[left.labels[a]][right.labels[b]])
                    edges.emplace_back(a, b + offset);

        auto labels = left.labels;
        labels.insert(labels.end(), right.labels.begin(), right.labels.end());
        return LabeledGraph(Graph(left.vertex_count() + right.vertex_count(), std::move(edges)), left.k, std::move(labels));
    }

    auto apply_beta(const LabeledGraph & g, const BetaOp & params) -> LabeledGraph
    {
        const auto n = g.vertex_count();
        // copy_id[a][j]: id of copy j of original a; copy 0 is a itself.
        std::vector<std::vector<Vertex>> copy_id(n);
        std::vector<Label> labels = g.labels;
        Vertex next = static_cast<Vertex>(n);
        for (Vertex a = 0; a < n; ++a) {
            copy_id[a].push_back(a);
            const auto l = g.labels[a];
            for (int j = 1; j <= params.copies[l - 1]; ++j) {
                copy_id[a].push_back(next++);
                labels.push_back(params.sigma[l - 1]);
            }
        }

        std::vector<Edge> edges;
        for (auto [a, b] : g.graph.edges()) {
            const auto la = g.labels[a], lb = g.labels[b];
            for (int j = 0; j < static_cast<int>(copy_id[a].size()); ++j)
                for (int jj = 0; jj < static_cast<int>(copy_id[b].size()); ++jj)
                    if ((j == 0 && jj == 0) || params.contains(la, j, lb, jj))
                        edges.emplace_back(copy_id[a][j], copy_id[b][jj]);
        }
        return LabeledGraph(Graph(next, std::move(edges)), g.k, std::move(labels));
    }

    auto expr_size(const ExtExpr & e) -> std::size_t
    {
        return size_of(*e.root(), false);
    }

    auto hypercube_expr(int dimension) -> ExtExpr
    {
        if (dimension < 0 || dimension > 12)
            throw InvalidInput("hypercube expression dimension must lie in 0..12, got " + std::to_string(dimension));
        if (dimension == 0)
            return ExtExpr(2, ext::vertex(1));

        auto node = ext::connect({{1, 2}}, ext::vertex(1), ext::vertex(2));
        const std::vector<BetaTuple> tuples{
            {1, 1, 1, 1}, {2, 1, 2, 1}, {1, 1, 2, 1}, {2, 1, 1, 1},
            {1, 0, 2, 1}, {2, 1, 1, 0}, {2, 0, 1, 1}, {1, 1, 2, 0}};
        for (int d = 1; d < dimension; ++d)
            node = ext::beta({1, 1}, {2, 1}, tuples, node);
        return ExtExpr(2, node);
    }

    // ---------------------------------------------------------------------

    namespace classic
    {
        auto vertex(Label label) -> ClassicNodePtr
        {
            return std::make_shared<const ClassicNode>(ClassicNode{ClassicVertexOp{label}});
        }

        auto relabel(Label from, Label to, ClassicNodePtr child) -> ClassicNodePtr
        {
            require_child(child);
            return std::make_shared<const ClassicNode>(ClassicNode{ClassicRelabelOp{from, to, std::move(child)}});
        }

        auto add_edges(Label i, Label j, ClassicNodePtr child) -> ClassicNodePtr
        {
            require_child(child);
            if (i == j)
                throw InvalidInput("edge insertion needs two distinct labels");
            return std::make_shared<const ClassicNode>(ClassicNode{ClassicAddEdgesOp{i, j, std::move(child)}});
        }

        auto disjoint_union(ClassicNodePtr left, ClassicNodePtr right) -> ClassicNodePtr
        {
            require_child(left);
            require_child(right);
            return std::make_shared<const ClassicNode>(ClassicNode{ClassicUnionOp{std::move(left), std::move(right)}});
        }
    }

    namespace
    {
        void validate(const ClassicNode & node, int k)
        {
            std::visit(overloaded{
                           [&](const ClassicVertexOp & op) { check_label(op.label, k, "vertex"); },
                           [&](const ClassicRelabelOp & op) {
                               check_label(op.from, k, "relabel");
                               check_label(op.to, k, "relabel");
                               validate(*op.child, k);
                           },
                           [&](const ClassicAddEdgesOp & op) {
                               check_label(op.i, k, "add-edges");
                               check_label(op.j, k, "add-edges");
                               validate(*op.child, k);
                           },
                           [&](const ClassicUnionOp & op) {
                               validate(*op.left, k);
                               validate(*op.right, k);
                           },
                       },
                node.op);
        }

        struct OperandRecord
        {
            std::size_t offset;
            Graph graph;
        };

        auto eval_classic_node(const ClassicNode & node, int k, std::size_t max_vertices, std::size_t offset, std::vector<OperandRecord> * operands)
            -> LabeledGraph
        {
            return std::visit(overloaded{
                                  [&](const ClassicVertexOp & op) { return LabeledGraph(Graph(1), k, {op.label}); },
                                  [&](const ClassicRelabelOp & op) {
                                      return apply_relabel(eval_classic_node(*op.child, k, max_vertices, offset, operands), op.from, op.to);
                                  },
                                  [&](const ClassicAddEdgesOp & op) {
                                      auto g = eval_classic_node(*op.child, k, max_vertices, offset, operands);
                                      std::vector<Vertex> with_i, with_j;
                                      for (Vertex v = 0; v < g.vertex_count(); ++v) {
                                          if (g.labels[v] == op.i)
                                              with_i.push_back(v);
                                          if (g.labels[v] == op.j)
                                              with_j.push_back(v);
                                      }
                                      GraphBuilder builder(g.vertex_count());
                                      for (auto [u, v] : g.graph.edges())
                                          builder.add_edge(u, v);
                                      for (auto u : with_i)
                                          for (auto v : with_j)
                                              builder.add_edge(u, v);
                                      return LabeledGraph(builder.build(), k, g.labels);
                                  },
                                  [&](const ClassicUnionOp & op) {
                                      auto left = eval_classic_node(*op.left, k, max_vertices, offset, operands);
                                      auto right = eval_classic_node(*op.right, k, max_vertices, offset + left.vertex_count(), operands);
                                      check_limit(left.vertex_count() + right.vertex_count(), max_vertices);
                                      if (operands) {
                                          operands->push_back({offset, left.graph});
                                          operands->push_back({offset + left.vertex_count(), right.graph});
                                      }
                                      return apply_connect(left, right, {});
                                  },
                              },
                node.op);
        }

        auto present_labels(const ClassicNode & node, int k) -> std::vector<bool>
        {
            return std::visit(overloaded{
                                  [&](const ClassicVertexOp & op) {
                                      std::vector<bool> present(k + 1, false);
                                      present[op.label] = true;
                                      return present;
                                  },
                                  [&](const ClassicRelabelOp & op) {
                                      auto present = present_labels(*op.child, k);
                                      if (op.from != op.to && present[op.from]) {
                                          present[op.from] = false;
                                          present[op.to] = true;
                                      }
                                      return present;
                                  },
                                  [&](const ClassicAddEdgesOp & op) { return present_labels(*op.child, k); },
                                  [&](const ClassicUnionOp & op) {
                                      auto a = present_labels(*op.left, k);
                                      auto b = present_labels(*op.right, k);
                                      for (int l = 1; l <= k; ++l)
                                          a[l] = a[l] || b[l];
                                      return a;
                                  },
                              },
                node.op);
        }

        auto convert(const ClassicNodePtr & node, int k) -> ExtNodePtr
        {
            // Peel the maximal chain of relabel / edge-insertion operators.
            std::vector<const ClassicNode *> chain;
            const ClassicNode * base = node.get();
            while (true) {
                if (auto r = std::get_if<ClassicRelabelOp>(&base->op)) {
                    chain.push_back(base);
                    base = r->child.get();
                }
                else if (auto a = std::get_if<ClassicAddEdgesOp>(&base->op)) {
                    chain.push_back(base);
                    base = a->child.get();
                }
                else
                    break;
            }

            ExtNodePtr inner;
            if (auto v = std::get_if<ClassicVertexOp>(&base->op))
                inner = ext::vertex(v->label);
            else {
                const auto & u = std::get<ClassicUnionOp>(base->op);
                const auto left_labels = present_labels(*u.left, k);
                const auto right_labels = present_labels(*u.right, k);

                // current[l]: label carried at this point of the chain by vertices labeled l at the union.
                std::vector<Label> current(k + 1);
                for (int l = 0; l <= k; ++l)
                    current[l] = l;
                std::vector<LabelPair> pairs;
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
                    if (auto r = std::get_if<ClassicRelabelOp>(&(*it)->op)) {
                        for (auto & c : current)
                            if (c == r->from)
                                c = r->to;
                    }
                    else {
                        const auto & a = std::get<ClassicAddEdgesOp>((*it)->op);
                        for (int i = 1; i <= k; ++i)
                            for (int j = 1; j <= k; ++j)
                                if (left_labels[i] && right_labels[j] &&
                                    ((current[i] == a.i && current[j] == a.j) || (current[i] == a.j && current[j] == a.i)))
                                    pairs.emplace_back(i, j);
                    }
                }
                inner = ext::connect(std::move(pairs), convert(u.left, k), convert(u.right, k));
            }

            for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                if (auto r = std::get_if<ClassicRelabelOp>(&(*it)->op))
                    inner = ext::relabel(r->from, r->to, inner);
            return inner;
        }
    }

    ClassicExpr::ClassicExpr(int k, ClassicNodePtr root) : _k(k), _root(std::move(root))
    {
        if (k < 1)
            throw InvalidInput("expression alphabet size must be positive");
        require_child(_root);
        validate(*_root, k);
    }

    auto eval_classic(const ClassicExpr & e, std::size_t max_vertices) -> LabeledGraph
    {
        return eval_classic_node(*e.root(), e.k(), max_vertices, 0, nullptr);
    }

    auto is_safe_classic(const ClassicExpr & e) -> bool
    {
        std::vector<OperandRecord> operands;
        auto final_graph = eval_classic_node(*e.root(), e.k(), default_eval_limit, 0, &operands);
        for (const auto & [offset, graph] : operands) {
            std::vector<Vertex> range(graph.vertex_count());
            for (std::size_t i = 0; i < range.size(); ++i)
                range[i] = static_cast<Vertex>(offset + i);
            if (! (induced_subgraph(final_graph.graph, range) == graph))
                return false;
        }
        return true;
    }

    auto classic_to_ext(const ClassicExpr & e) -> ExtExpr
    {
        if (! is_safe_classic(e))
            throw InvalidInput("classic expression is not safe; only safe expressions convert");
        return ExtExpr(e.k(), convert(e.root(), e.k()));
    }
}
