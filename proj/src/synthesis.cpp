#include <homcount/synthesis.hpp>

#include <homcount/dp.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace homcount
{
    namespace
    {
        auto adjacency_matrix(const Graph & g) -> std::vector<char>
        {
            const auto n = g.vertex_count();
            std::vector<char> m(n * n, 0);
            for (auto [u, v] : g.edges())
                m[u * n + v] = m[v * n + u] = 1;
            return m;
        }

        /// Stable colour refinement run on both graphs at once so colour ids are comparable.
        auto refine_colours(const LabeledGraph & a, const LabeledGraph & b) -> std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
        {
            const auto n = a.vertex_count();
            std::vector<std::size_t> ca(n), cb(n);
            {
                std::map<std::pair<Label, std::size_t>, std::size_t> ids;
                for (Vertex v = 0; v < n; ++v)
                    ca[v] = ids.try_emplace({a.labels[v], a.graph.degree(v)}, ids.size()).first->second;
                for (Vertex v = 0; v < n; ++v)
                    cb[v] = ids.try_emplace({b.labels[v], b.graph.degree(v)}, ids.size()).first->second;
            }
            std::size_t classes = 0;
            while (true) {
                std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
                auto step = [&](const LabeledGraph & g, const std::vector<std::size_t> & old) {
                    std::vector<std::size_t> next(n);
                    for (Vertex v = 0; v < n; ++v) {
                        std::vector<std::size_t> around;
                        for (auto w : g.graph.neighbours(v))
                            around.push_back(old[w]);
                        std::sort(around.begin(), around.end());
                        next[v] = ids.try_emplace({old[v], std::move(around)}, ids.size()).first->second;
                    }
                    return next;
                };
                auto na = step(a, ca);
                auto nb = step(b, cb);
                ca.swap(na);
                cb.swap(nb);
                if (ids.size() == classes)
                    break;
                classes = ids.size();
            }
            return {ca, cb};
        }
    }

    auto labeled_iso(const LabeledGraph & a, const LabeledGraph & b) -> std::optional<std::vector<Vertex>>
    {
        const auto n = a.vertex_count();
        if (n != b.vertex_count() || a.k != b.k || a.graph.edge_count() != b.graph.edge_count())
            return std::nullopt;
        auto [ca, cb] = refine_colours(a, b);
        {
            auto sa = ca, sb = cb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return std::nullopt;
        }

        std::map<std::size_t, std::size_t> class_size;
        for (auto c : ca)
            ++class_size[c];
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return class_size[ca[x]] < class_size[ca[y]]; });

        const auto adj_a = adjacency_matrix(a.graph), adj_b = adjacency_matrix(b.graph);
        std::vector<Vertex> image(n, 0);
        std::vector<char> used(n, 0);
        auto rec = [&](auto & self, std::size_t step) -> bool {
            if (step == n)
                return true;
            const auto v = order[step];
            for (Vertex x = 0; x < n; ++x) {
                if (used[x] || cb[x] != ca[v])
                    continue;
                bool ok = true;
                for (std::size_t s = 0; s < step && ok; ++s) {
                    const auto u = order[s];
                    ok = adj_a[v * n + u] == adj_b[x * n + image[u]];
                }
                if (! ok)
                    continue;
                image[v] = x;
                used[x] = 1;
                if (self(self, step + 1))
                    return true;
                used[x] = 0;
            }
            return false;
        };
        if (! rec(rec, 0))
            return std::nullopt;
        return image;
    }

    auto gadget_block() -> Graph
    {
        // z = 0, x1..x5 = 1..5; z is adjacent to every other vertex of its block.
        return Graph(6, {{0, 3}, {3, 2}, {2, 1}, {1, 0}, {0, 4}, {4, 5}, {5, 1}, {0, 2}, {0, 5}, {3, 4}});
    }

    auto gadget_graph(const LabeledGraph & input) -> Graph
    {
        const auto n = static_cast<Vertex>(input.vertex_count());
        const auto q = static_cast<Vertex>(input.k);
        GraphBuilder builder(n);
        for (auto [u, v] : input.graph.edges())
            builder.add_edge(u, v);

        std::vector<Vertex> apex(q + 1);
        for (Vertex i = 1; i <= q; ++i)
            apex[i] = builder.add_vertex();

        // Chain of q + 1 blocks; junction[b] is the left vertex of block b (z_b), junction[q+1] the far end.
        const auto d = gadget_block();
        std::vector<Vertex> junction(q + 2);
        std::vector<std::array<Vertex, 6>> blocks(q + 1);
        junction[0] = builder.add_vertex();
        for (Vertex b = 0; b <= q; ++b) {
            auto & block = blocks[b];
            block[0] = junction[b];
            block[2] = builder.add_vertex();
            block[3] = builder.add_vertex();
            block[4] = builder.add_vertex();
            block[5] = builder.add_vertex();
            block[1] = junction[b + 1] = builder.add_vertex();
            for (auto [x, y] : d.edges())
                builder.add_edge(block[x], block[y]);
        }

        // Each junction z_i grows into K_{n+3}; every clique vertex sees z_i's neighbours in block i.
        for (Vertex i = 1; i <= q; ++i) {
            std::vector<Vertex> clique{junction[i]};
            for (Vertex c = 0; c < n + 2; ++c)
                clique.push_back(builder.add_vertex());
            for (std::size_t x = 0; x < clique.size(); ++x)
                for (std::size_t y = x + 1; y < clique.size(); ++y)
                    builder.add_edge(clique[x], clique[y]);
            for (std::size_t x = 1; x < clique.size(); ++x)
                for (std::size_t t = 1; t < 6; ++t)
                    builder.add_edge(clique[x], blocks[i][t]);
        }

        for (Vertex i = 1; i <= q; ++i)
            builder.add_edge(apex[i], junction[i]);
        for (Vertex v = 0; v < n; ++v)
            builder.add_edge(v, apex[static_cast<Vertex>(input.labels[v])]);
        return builder.build();
    }

    auto gadget_reduce(const LabeledGraph & a, const LabeledGraph & b) -> GadgetInstance
    {
        if (a.vertex_count() != b.vertex_count())
            throw InvalidInput("gadget reduction needs inputs of equal size");
        if (a.k != b.k)
            throw InvalidInput("gadget reduction needs inputs over the same label alphabet");
        return {gadget_graph(a), gadget_graph(b), a.k, static_cast<int>(a.vertex_count())};
    }

    namespace
    {
        /// Table of expressions indexed by partial labelings of the source graph.
        class Synthesizer
        {
        public:
            Synthesizer(const Graph & g, int k, const SynthOptions & options)
                : _g(g), _k(k), _options(options), _codec(g.vertex_count(), k), _adj(g.adjacency_masks()), _table(_codec.size())
            {
            }

            auto run() -> std::optional<SynthResult>
            {
                const auto n = _g.vertex_count();
                if (n == 0)
                    return std::nullopt;

                std::vector<std::vector<std::size_t>> by_size(n + 1);
                for (std::size_t index = 0; index < _codec.size(); ++index)
                    by_size[support_mask(index) == 0 ? 0 : static_cast<std::size_t>(std::popcount(support_mask(index)))].push_back(index);

                for (auto index : by_size[1])
                    _table[index] = ext::vertex(label_of(index, support_vertex(index)));

                for (std::size_t s = 2; s <= n; ++s) {
                    for (auto index : by_size[s]) {
                        auto found = (_k <= _options.beta_max_k) ? try_beta(index) : nullptr;
                        if (! found)
                            found = try_connect(index);
                        if (found && s == n)
                            return SynthResult{ExtExpr(_k, found), _codec.decode(index).values()};
                        _table[index] = std::move(found);
                    }
                    relabel_closure(by_size[s]);
                }
                for (auto index : by_size[n])
                    if (_table[index])
                        return SynthResult{ExtExpr(_k, _table[index]), _codec.decode(index).values()};
                return std::nullopt;
            }

        private:
            [[nodiscard]] auto support_mask(std::size_t index) const -> std::uint64_t
            {
                std::uint64_t mask = 0;
                for (std::size_t v = 0; v < _g.vertex_count(); ++v)
                    if (_codec.digit(index, v) != 0)
                        mask |= std::uint64_t{1} << v;
                return mask;
            }

            [[nodiscard]] auto support_vertex(std::size_t index) const -> Vertex
            {
                return static_cast<Vertex>(std::countr_zero(support_mask(index)));
            }

            [[nodiscard]] auto label_of(std::size_t index, Vertex v) const -> Label { return _codec.digit(index, v); }

            /// Labeled graph G[support] for the entry, vertices in increasing id order.
            [[nodiscard]] auto entry_graph(std::size_t index) const -> LabeledGraph
            {
                const auto chi = _codec.decode(index);
                const auto support = chi.support();
                std::vector<Label> labels;
                for (auto v : support)
                    labels.push_back(chi[v]);
                return LabeledGraph(induced_subgraph(_g, support), _k, std::move(labels));
            }

            /// Index of chi restricted to `mask`.
            [[nodiscard]] auto restrict(std::size_t index, std::uint64_t mask) const -> std::size_t
            {
                std::size_t out = 0;
                for (; mask != 0; mask &= mask - 1) {
                    const auto v = static_cast<std::size_t>(std::countr_zero(mask));
                    out += static_cast<std::size_t>(_codec.digit(index, v)) * _codec.power(v);
                }
                return out;
            }

            auto try_connect(std::size_t index) -> ExtNodePtr
            {
                const auto x = support_mask(index);
                const auto low = x & (~x + 1);
                const auto rest = x & ~low;
                // Bipartitions (V1, V2) with the least vertex in V1, enumerated by the V1 mask ascending.
                std::vector<std::uint64_t> sides;
                for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
                    if ((low | sub) != x)
                        sides.push_back(low | sub);
                    if (sub == 0)
                        break;
                }
                std::sort(sides.begin(), sides.end());
                for (auto v1 : sides) {
                    const auto v2 = x & ~v1;
                    const auto & left = _table[restrict(index, v1)];
                    const auto & right = _table[restrict(index, v2)];
                    if (! left || ! right)
                        continue;
                    std::vector<std::vector<char>> used(static_cast<std::size_t>(_k) + 1, std::vector<char>(static_cast<std::size_t>(_k) + 1, 0));
                    for (std::uint64_t m = v1; m != 0; m &= m - 1) {
                        const auto a = static_cast<Vertex>(std::countr_zero(m));
                        for (std::uint64_t w = _adj[a] & v2; w != 0; w &= w - 1) {
                            const auto b = static_cast<Vertex>(std::countr_zero(w));
                            used[label_of(index, a)][label_of(index, b)] = 1;
                        }
                    }
                    // The cross edges must be exactly the label-pair closure of themselves.
                    bool uniform = true;
                    for (std::uint64_t m = v1; m != 0 && uniform; m &= m - 1) {
                        const auto a = static_cast<Vertex>(std::countr_zero(m));
                        for (std::uint64_t w = v2; w != 0 && uniform; w &= w - 1) {
                            const auto b = static_cast<Vertex>(std::countr_zero(w));
                            if (used[label_of(index, a)][label_of(index, b)] && ((_adj[a] >> b) & 1) == 0)
                                uniform = false;
                        }
                    }
                    if (! uniform)
                        continue;
                    std::vector<LabelPair> pairs;
                    for (Label i = 1; i <= _k; ++i)
                        for (Label j = 1; j <= _k; ++j)
                            if (used[i][j])
                                pairs.emplace_back(i, j);
                    return ext::connect(std::move(pairs), left, right);
                }
                return nullptr;
            }

            /// One symmetric class of beta tuples: a tuple plus its mirror.
            struct TupleClass
            {
                BetaTuple tuple;
                std::vector<int> edges; // per output label pair slot
            };

            auto pair_slot(Label a, Label b) const -> std::size_t
            {
                if (a > b)
                    std::swap(a, b);
                return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(_k) + static_cast<std::size_t>(b - 1);
            }

            auto try_beta(std::size_t index) -> ExtNodePtr
            {
                const auto x = support_mask(index);
                const auto x_size = std::popcount(x);
                const auto target = entry_graph(index);
                const auto slots = static_cast<std::size_t>(_k) * static_cast<std::size_t>(_k);

                std::vector<int> wanted_labels(static_cast<std::size_t>(_k) + 1, 0);
                for (auto l : target.labels)
                    ++wanted_labels[l];
                std::vector<int> wanted_edges(slots, 0);
                for (auto [u, v] : target.graph.edges())
                    ++wanted_edges[pair_slot(target.labels[u], target.labels[v])];

                // Proper non-empty child supports ascending by mask, each with every labeling ascending by index.
                std::vector<std::uint64_t> supports;
                for (std::uint64_t sub = (x - 1) & x; sub != 0; sub = (sub - 1) & x)
                    supports.push_back(sub);
                std::sort(supports.begin(), supports.end());

                for (auto v1 : supports) {
                    std::vector<Vertex> vs;
                    for (std::uint64_t m = v1; m != 0; m &= m - 1)
                        vs.push_back(static_cast<Vertex>(std::countr_zero(m)));
                    std::vector<std::size_t> child_indices;
                    std::vector<Label> digits(vs.size(), 1);
                    while (true) {
                        std::size_t child = 0;
                        for (std::size_t i = 0; i < vs.size(); ++i)
                            child += static_cast<std::size_t>(digits[i]) * _codec.power(vs[i]);
                        child_indices.push_back(child);
                        std::size_t i = 0;
                        while (i < vs.size() && ++digits[i] > _k)
                            digits[i++] = 1;
                        if (i == vs.size())
                            break;
                    }
                    std::sort(child_indices.begin(), child_indices.end());
                    for (auto child : child_indices) {
                        if (! _table[child])
                            continue;
                        if (auto found = beta_from_child(child, x_size, target, wanted_labels, wanted_edges))
                            return found;
                    }
                }
                return nullptr;
            }

            auto beta_from_child(std::size_t child, int x_size, const LabeledGraph & target, const std::vector<int> & wanted_labels,
                const std::vector<int> & wanted_edges) -> ExtNodePtr
            {
                const auto child_graph = entry_graph(child);
                const auto k = static_cast<std::size_t>(_k);
                std::vector<int> count(k + 1, 0);
                for (auto l : child_graph.labels)
                    ++count[l];

                std::vector<int> nvec(k, 0);
                std::vector<Label> sigma(k, 1);
                ExtNodePtr found;

                auto try_sigma = [&]() -> bool {
                    // Label histogram of the expansion must match the target's.
                    std::vector<int> produced(k + 1, 0);
                    for (std::size_t l = 1; l <= k; ++l) {
                        produced[l] += count[l];
                        produced[static_cast<std::size_t>(sigma[l - 1])] += count[l] * nvec[l - 1];
                    }
                    if (produced != wanted_labels)
                        return false;
                    return search_tuples(child, child_graph, nvec, sigma, target, wanted_edges, found);
                };

                auto rec_sigma = [&](auto & self, std::size_t l) -> bool {
                    if (l > k)
                        return try_sigma();
                    if (count[l] == 0 || nvec[l - 1] == 0) {
                        sigma[l - 1] = static_cast<Label>(l);
                        return self(self, l + 1);
                    }
                    for (Label s = 1; s <= _k; ++s) {
                        sigma[l - 1] = s;
                        if (self(self, l + 1))
                            return true;
                    }
                    return false;
                };

                auto rec_nvec = [&](auto & self, std::size_t l, int size) -> bool {
                    if (l > k)
                        return size == x_size && rec_sigma(rec_sigma, 1);
                    if (count[l] == 0) {
                        nvec[l - 1] = 0;
                        return self(self, l + 1, size);
                    }
                    for (int c = 0; c <= _k; ++c) {
                        if (size + count[l] * (1 + c) > x_size)
                            break;
                        nvec[l - 1] = c;
                        if (self(self, l + 1, size + count[l] * (1 + c)))
                            return true;
                    }
                    return false;
                };
                rec_nvec(rec_nvec, 1, 0);
                return found;
            }

            /// Depth-first choice of tuple classes whose edge counts reproduce the target's per label pair.
            auto search_tuples(std::size_t child, const LabeledGraph & child_graph, const std::vector<int> & nvec, const std::vector<Label> & sigma,
                const LabeledGraph & target, const std::vector<int> & wanted_edges, ExtNodePtr & found) -> bool
            {
                const auto slots = wanted_edges.size();
                auto out_label = [&](Label l, int j) { return j == 0 ? l : sigma[l - 1]; };

                // Child edges by ordered label pair; original-original edges are always present.
                std::vector<std::vector<int>> edges_between(static_cast<std::size_t>(_k) + 1, std::vector<int>(static_cast<std::size_t>(_k) + 1, 0));
                std::vector<int> base(slots, 0);
                for (auto [u, v] : child_graph.graph.edges()) {
                    const auto lu = child_graph.labels[u], lv = child_graph.labels[v];
                    ++edges_between[lu][lv];
                    if (lu != lv)
                        ++edges_between[lv][lu];
                    ++base[pair_slot(lu, lv)];
                }
                for (std::size_t s = 0; s < slots; ++s)
                    if (base[s] > wanted_edges[s])
                        return false;

                std::vector<TupleClass> classes;
                for (Label i1 = 1; i1 <= _k; ++i1)
                    for (Label i2 = i1; i2 <= _k; ++i2) {
                        const int mult = edges_between[i1][i2];
                        if (mult == 0)
                            continue;
                        for (int j1 = 0; j1 <= nvec[i1 - 1]; ++j1)
                            for (int j2 = 0; j2 <= nvec[i2 - 1]; ++j2) {
                                if (j1 == 0 && j2 == 0)
                                    continue;
                                // Same-label classes are listed once, by their smaller (j1, j2) representative.
                                if (i1 == i2 && j1 > j2)
                                    continue;
                                TupleClass c{{i1, j1, i2, j2}, std::vector<int>(slots, 0)};
                                const int per_edge = (i1 == i2 && j1 != j2) ? 2 : 1;
                                c.edges[pair_slot(out_label(i1, j1), out_label(i2, j2))] += mult * per_edge;
                                classes.push_back(std::move(c));
                            }
                    }

                // remaining[c][s]: edges still obtainable from classes c.. in slot s.
                std::vector<std::vector<int>> remaining(classes.size() + 1, std::vector<int>(slots, 0));
                for (std::size_t c = classes.size(); c-- > 0;)
                    for (std::size_t s = 0; s < slots; ++s)
                        remaining[c][s] = remaining[c + 1][s] + classes[c].edges[s];

                std::vector<char> chosen(classes.size(), 0);
                std::vector<int> have = base;
                auto rec = [&](auto & self, std::size_t c) -> bool {
                    for (std::size_t s = 0; s < slots; ++s)
                        if (have[s] > wanted_edges[s] || have[s] + remaining[c][s] < wanted_edges[s])
                            return false;
                    if (c == classes.size()) {
                        std::vector<BetaTuple> tuples;
                        for (std::size_t i = 0; i < classes.size(); ++i) {
                            if (! chosen[i])
                                continue;
                            const auto [i1, j1, i2, j2] = classes[i].tuple;
                            tuples.push_back({i1, j1, i2, j2});
                            tuples.push_back({i2, j2, i1, j1});
                        }
                        auto node = ext::beta(nvec, sigma, std::move(tuples), _table[child]);
                        const auto & op = std::get<BetaOp>(node->op);
                        if (! labeled_iso(apply_beta(child_graph, op), target))
                            return false;
                        found = std::move(node);
                        return true;
                    }
                    chosen[c] = 0;
                    if (self(self, c + 1))
                        return true;
                    chosen[c] = 1;
                    for (std::size_t s = 0; s < slots; ++s)
                        have[s] += classes[c].edges[s];
                    const bool ok = self(self, c + 1);
                    for (std::size_t s = 0; s < slots; ++s)
                        have[s] -= classes[c].edges[s];
                    chosen[c] = 0;
                    return ok;
                };
                return rec(rec, 0);
            }

            void relabel_closure(const std::vector<std::size_t> & entries)
            {
                std::vector<std::size_t> work;
                for (auto index : entries)
                    if (_table[index])
                        work.push_back(index);
                while (! work.empty()) {
                    const auto index = work.back();
                    work.pop_back();
                    for (Label from = 1; from <= _k; ++from)
                        for (Label to = 1; to <= _k; ++to) {
                            if (from == to)
                                continue;
                            std::size_t next = 0;
                            bool present = false;
                            for (std::size_t v = 0; v < _g.vertex_count(); ++v) {
                                auto d = _codec.digit(index, v);
                                if (d == from) {
                                    present = true;
                                    d = to;
                                }
                                next += static_cast<std::size_t>(d) * _codec.power(v);
                            }
                            if (! present || _table[next])
                                continue;
                            _table[next] = ext::relabel(from, to, _table[index]);
                            work.push_back(next);
                        }
                }
            }

            const Graph & _g;
            int _k;
            SynthOptions _options;
            LabelingCodec _codec;
            std::vector<std::uint64_t> _adj;
            std::vector<ExtNodePtr> _table;
        };
    }

    auto synthesize(const Graph & g, int k, const SynthOptions & options) -> std::optional<SynthResult>
    {
        if (k < 1)
            throw InvalidInput("synthesis needs k >= 1");
        require_table_budget(g.vertex_count(), k, options.budget);
        if (g.vertex_count() > 64)
            throw BudgetExceeded("synthesis handles at most 64 vertices");
        return Synthesizer(g, k, options).run();
    }
}
