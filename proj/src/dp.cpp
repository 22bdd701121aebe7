#include <homcount/dp.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace homcount
{
    namespace
    {
        /**
         * For every level v and every assignment P of the digits of vertices
         * n-1..v, records whether the block of indices sharing that prefix has
         * a nonzero entry. Lets the lifts skip whole zero regions of a child
         * table while walking vertices from the most significant digit down.
         */
        class NonzeroBlocks
        {
        public:
            template <class Tab>
            explicit NonzeroBlocks(const Tab & t) : _radix(static_cast<std::size_t>(t.k) + 1), _levels(t.n + 1)
            {
                _levels[0].resize(t.entries.size());
                for (std::size_t i = 0; i < t.entries.size(); ++i)
                    _levels[0][i] = t.entries[i] != 0;
                for (std::size_t v = 0; v < t.n; ++v) {
                    const auto & below = _levels[v];
                    auto & above = _levels[v + 1];
                    above.assign(below.size() / _radix, 0);
                    for (std::size_t p = 0; p < above.size(); ++p)
                        for (std::size_t c = 0; c < _radix && ! above[p]; ++c)
                            above[p] = below[p * _radix + c];
                }
            }

            [[nodiscard]] auto any(int level, std::size_t prefix) const -> bool { return _levels[static_cast<std::size_t>(level)][prefix] != 0; }

        private:
            std::size_t _radix;
            std::vector<std::vector<char>> _levels;
        };

        /// Same layout as HomTable with machine-word entries, used when every count provably fits.
        struct FastTable
        {
            std::size_t n = 0;
            int k = 1;
            std::vector<std::uint64_t> entries;

            FastTable(std::size_t n, int k) : n(n), k(k)
            {
                const auto size = LabelingCodec(n, k).size();
                require_budget(size, max_table_entries, "homomorphism table memory cap");
                entries.resize(size);
            }

            [[nodiscard]] auto codec() const -> LabelingCodec { return LabelingCodec(n, k); }
        };

        template <class Tab>
        void require_compatible(const Tab & a, const Graph & g)
        {
            if (a.n != g.vertex_count())
                throw InvalidInput("table is over " + std::to_string(a.n) + " source vertices, graph has " + std::to_string(g.vertex_count()));
        }

        template <class F>
        void for_each_bit(std::uint64_t mask, F && f)
        {
            while (mask != 0) {
                f(static_cast<Vertex>(std::countr_zero(mask)));
                mask &= mask - 1;
            }
        }

        /// Flat membership table for beta tuples, indexed by (i1, j1, i2, j2) with i in 1..k and j in 0..k.
        class TupleLookup
        {
        public:
            TupleLookup(const BetaOp & params, int k) : _side(static_cast<std::size_t>(k) + 1), _bits(_side * _side * _side * _side, 0)
            {
                for (const auto & [i1, j1, i2, j2] : params.tuples)
                    _bits[offset(i1, j1, i2, j2)] = 1;
            }

            [[nodiscard]] auto contains(int i1, int j1, int i2, int j2) const -> bool { return _bits[offset(i1, j1, i2, j2)] != 0; }

        private:
            [[nodiscard]] auto offset(int i1, int j1, int i2, int j2) const -> std::size_t
            {
                return ((static_cast<std::size_t>(i1) * _side + static_cast<std::size_t>(j1)) * _side + static_cast<std::size_t>(i2)) * _side +
                    static_cast<std::size_t>(j2);
            }

            std::size_t _side;
            std::vector<char> _bits;
        };

        void validate_beta_params(const BetaOp & params, int k)
        {
            // ExtExpr construction performs the full check; this guards direct callers.
            if (params.copies.size() != static_cast<std::size_t>(k) || params.sigma.size() != static_cast<std::size_t>(k))
                throw InvalidInput("beta parameters do not match the table's alphabet");
            for (auto c : params.copies)
                if (c < 0 || c > k)
                    throw InvalidInput("beta copy count out of range");
            for (auto s : params.sigma)
                if (s < 1 || s > k)
                    throw InvalidInput("beta sigma value out of range");
            for (const auto & [i1, j1, i2, j2] : params.tuples)
                if (i1 < 1 || i1 > k || i2 < 1 || i2 > k || j1 < 0 || j1 > params.copies[i1 - 1] || j2 < 0 || j2 > params.copies[i2 - 1])
                    throw InvalidInput("beta tuple out of range");
        }
    }

    LabelingCodec::LabelingCodec(std::size_t n, int k) : _n(n), _k(k), _powers(n + 1, 1)
    {
        if (k < 1)
            throw InvalidInput("label alphabet size must be positive");
        const auto total = saturating_pow(static_cast<std::uint64_t>(k) + 1, n);
        if (total > max_table_entries * 64)
            throw BudgetExceeded("labeling space (" + std::to_string(k + 1) + ")^" + std::to_string(n) + " is too large to index");
        for (std::size_t v = 1; v <= n; ++v)
            _powers[v] = _powers[v - 1] * static_cast<std::size_t>(k + 1);
    }

    auto LabelingCodec::encode(const PartialLabeling & chi) const -> std::size_t
    {
        if (chi.size() != _n || chi.k() != _k)
            throw InvalidInput("partial labeling does not match the codec");
        std::size_t index = 0;
        for (std::size_t v = 0; v < _n; ++v)
            index += static_cast<std::size_t>(chi[v]) * _powers[v];
        return index;
    }

    auto LabelingCodec::decode(std::size_t index) const -> PartialLabeling
    {
        std::vector<Label> values(_n);
        for (std::size_t v = 0; v < _n; ++v)
            values[v] = digit(index, v);
        return PartialLabeling(_k, std::move(values));
    }

    auto LabelingCodec::digit(std::size_t index, std::size_t v) const -> Label
    {
        return static_cast<Label>((index / _powers[v]) % static_cast<std::size_t>(_k + 1));
    }

    HomTable::HomTable(std::size_t n, int k) : n(n), k(k)
    {
        const auto size = LabelingCodec(n, k).size();
        require_budget(size, max_table_entries, "homomorphism table memory cap");
        entries.resize(size);
    }

    auto HomTable::at(const PartialLabeling & chi) const -> const HomCount &
    {
        return entries[codec().encode(chi)];
    }

    void require_table_budget(std::size_t n, int k, std::uint64_t budget)
    {
        const auto entries = saturating_pow(static_cast<std::uint64_t>(k) + 1, n);
        require_budget(entries, budget, "homomorphism table (" + std::to_string(k + 1) + ")^" + std::to_string(n));
        require_budget(entries, max_table_entries, "homomorphism table memory cap");
    }

    namespace
    {
        template <class Tab>
        auto base_impl(const Graph & g, int k, Label label) -> Tab
        {
            if (label < 1 || label > k)
                throw InvalidInput("base label outside 1..k");
            const auto n = g.vertex_count();
            Tab t(n, k);
            const auto codec = t.codec();
            const auto adj = g.adjacency_masks();

            // Every independent support, uniformly labeled, has exactly one homomorphism.
            auto rec = [&](auto & self, std::size_t v, std::uint64_t chosen, std::size_t index) -> void {
                if (v == n) {
                    t.entries[index] = 1;
                    return;
                }
                self(self, v + 1, chosen, index);
                if ((adj[v] & chosen) == 0)
                    self(self, v + 1, chosen | (std::uint64_t{1} << v), index + static_cast<std::size_t>(label) * codec.power(v));
            };
            rec(rec, 0, 0, 0);
            return t;
        }

        template <class Tab>
        auto relabel_impl(const Tab & t, std::span<const Label> relabel_map) -> Tab
        {
            if (relabel_map.size() != static_cast<std::size_t>(t.k))
                throw InvalidInput("relabel map must have k entries");
            std::vector<std::size_t> image(static_cast<std::size_t>(t.k) + 1, 0);
            for (int l = 1; l <= t.k; ++l) {
                if (relabel_map[l - 1] < 1 || relabel_map[l - 1] > t.k)
                    throw InvalidInput("relabel map value out of range");
                image[l] = static_cast<std::size_t>(relabel_map[l - 1]);
            }

            Tab out(t.n, t.k);
            const auto codec = t.codec();
            const auto radix = static_cast<std::size_t>(t.k) + 1;
            std::vector<std::size_t> digits(t.n, 0);
            std::size_t target = 0;
            for (std::size_t index = 0; index < t.entries.size(); ++index) {
                if (t.entries[index] != 0)
                    out.entries[target] += t.entries[index];

                // Odometer step, keeping the image index in sync.
                for (std::size_t v = 0; v < t.n; ++v) {
                    const auto d = digits[v];
                    if (d + 1 < radix) {
                        digits[v] = d + 1;
                        target += (image[d + 1] - image[d]) * codec.power(v);
                        break;
                    }
                    digits[v] = 0;
                    target -= image[d] * codec.power(v);
                }
            }
            return out;
        }

        template <class Tab>
        auto connect_impl(const Tab & left, const Tab & right, const std::vector<LabelPair> & pairs, const Graph & g) -> Tab
        {
            require_compatible(left, g);
            require_compatible(right, g);
            if (left.k != right.k)
                throw InvalidInput("connect operands use different alphabets");
            const int k = left.k;
            const auto radix = static_cast<std::size_t>(k) + 1;
            std::vector<std::vector<char>> joined(radix, std::vector<char>(radix, 0));
            for (auto [i, j] : pairs) {
                if (i < 1 || i > k || j < 1 || j > k)
                    throw InvalidInput("connect label pair out of range");
                joined[i][j] = 1;
            }

            const auto adj = g.adjacency_masks();
            const NonzeroBlocks left_blocks(left), right_blocks(right);
            Tab out(left.n, k);
            std::vector<Label> label(left.n, 0);
            std::uint64_t on_left = 0, on_right = 0;

            // Each source vertex is absent, on the left operand with label l, or on the right with label l.
            auto rec = [&](auto & self, int v, std::size_t pl, std::size_t pr, std::size_t po) -> void {
                if (v < 0) {
                    out.entries[po] += left.entries[pl] * right.entries[pr];
                    return;
                }
                const auto bit = std::uint64_t{1} << v;
                if (left_blocks.any(v, pl * radix) && right_blocks.any(v, pr * radix))
                    self(self, v - 1, pl * radix, pr * radix, po * radix);

                for (Label l = 1; l <= k; ++l) {
                    const auto dl = static_cast<std::size_t>(l);
                    if (left_blocks.any(v, pl * radix + dl) && right_blocks.any(v, pr * radix)) {
                        bool ok = true;
                        for_each_bit(adj[v] & on_right, [&](Vertex u) { ok = ok && joined[l][label[u]]; });
                        if (ok) {
                            label[v] = l;
                            on_left |= bit;
                            self(self, v - 1, pl * radix + dl, pr * radix, po * radix + dl);
                            on_left &= ~bit;
                        }
                    }
                    if (right_blocks.any(v, pr * radix + dl) && left_blocks.any(v, pl * radix)) {
                        bool ok = true;
                        for_each_bit(adj[v] & on_left, [&](Vertex u) { ok = ok && joined[label[u]][l]; });
                        if (ok) {
                            label[v] = l;
                            on_right |= bit;
                            self(self, v - 1, pl * radix, pr * radix + dl, po * radix + dl);
                            on_right &= ~bit;
                        }
                    }
                }
            };
            rec(rec, static_cast<int>(left.n) - 1, 0, 0, 0);
            return out;
        }

        template <class Tab>
        auto beta_impl(const Tab & child, const BetaOp & params, const Graph & g) -> Tab
        {
            require_compatible(child, g);
            const int k = child.k;
            validate_beta_params(params, k);
            const auto radix = static_cast<std::size_t>(k) + 1;
            const TupleLookup tuples(params, k);
            const auto adj = g.adjacency_masks();
            const NonzeroBlocks blocks(child);
            Tab out(child.n, k);

            std::vector<Label> label(child.n, 0); // child label
            std::vector<int> copy(child.n, 0);    // omega: 0 for originals
            std::uint64_t assigned = 0;

            auto edges_ok = [&](Vertex v, Label l, int w) {
                bool ok = true;
                for_each_bit(adj[v] & assigned, [&](Vertex u) {
                    if (ok && (w != 0 || copy[u] != 0))
                        ok = tuples.contains(l, w, label[u], copy[u]);
                });
                return ok;
            };

            // Each source vertex is absent, sent to an original vertex, or sent to copy w of a vertex;
            // enumerating w inline sums the weight |B| times the child entry.
            auto rec = [&](auto & self, int v, std::size_t pc, std::size_t po) -> void {
                if (v < 0) {
                    out.entries[po] += child.entries[pc];
                    return;
                }
                const auto vv = static_cast<Vertex>(v);
                if (v == 0) {
                    // last digit: accumulate directly instead of recursing
                    const auto c = pc * radix, o = po * radix;
                    out.entries[o] += child.entries[c];
                    for (Label l = 1; l <= k; ++l) {
                        const auto & entry = child.entries[c + static_cast<std::size_t>(l)];
                        if (entry == 0)
                            continue;
                        for (int w = 0; w <= params.copies[l - 1]; ++w)
                            if (edges_ok(vv, l, w))
                                out.entries[o + static_cast<std::size_t>(w == 0 ? l : params.sigma[l - 1])] += entry;
                    }
                    return;
                }
                const auto bit = std::uint64_t{1} << v;
                if (blocks.any(v, pc * radix))
                    self(self, v - 1, pc * radix, po * radix);

                for (Label l = 1; l <= k; ++l) {
                    const auto dl = static_cast<std::size_t>(l);
                    if (! blocks.any(v, pc * radix + dl))
                        continue;
                    const auto copied_label = static_cast<std::size_t>(params.sigma[l - 1]);
                    for (int w = 0; w <= params.copies[l - 1]; ++w) {
                        if (! edges_ok(vv, l, w))
                            continue;
                        label[v] = l;
                        copy[v] = w;
                        assigned |= bit;
                        self(self, v - 1, pc * radix + dl, po * radix + (w == 0 ? dl : copied_label));
                        assigned &= ~bit;
                    }
                }
            };
            rec(rec, static_cast<int>(child.n) - 1, 0, 0);
            return out;
        }
    }

    auto base_table(const Graph & g, int k, Label label) -> HomTable
    {
        return base_impl<HomTable>(g, k, label);
    }

    auto lift_relabel(const HomTable & t, std::span<const Label> relabel_map) -> HomTable
    {
        return relabel_impl(t, relabel_map);
    }

    auto lift_connect(const HomTable & left, const HomTable & right, const std::vector<LabelPair> & pairs, const Graph & g) -> HomTable
    {
        return connect_impl(left, right, pairs, g);
    }

    auto lift_beta(const HomTable & child, const BetaOp & params, const Graph & g) -> HomTable
    {
        return beta_impl(child, params, g);
    }

    auto beta_weight(const Graph & g, const PartialLabeling & originals, const PartialLabeling & copied, const BetaOp & params) -> HomCount
    {
        const auto n = g.vertex_count();
        if (originals.size() != n || copied.size() != n || originals.k() != copied.k())
            throw InvalidInput("beta weight labelings do not match the graph");
        const int k = originals.k();
        validate_beta_params(params, k);
        for (std::size_t v = 0; v < n; ++v)
            if (originals[v] != 0 && copied[v] != 0)
                throw InvalidInput("beta weight supports must be disjoint");

        std::vector<Label> label(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            label[v] = originals[v] != 0 ? originals[v] : copied[v];
        const auto copy_support = copied.support();
        const TupleLookup tuples(params, k);

        // Direct enumeration of omega over the copied support.
        std::vector<int> omega(n, 0);
        HomCount count = 0;
        auto rec = [&](auto & self, std::size_t i) -> void {
            if (i == copy_support.size()) {
                for (auto [a, b] : g.edges()) {
                    if (label[a] == 0 || label[b] == 0 || (omega[a] == 0 && omega[b] == 0))
                        continue;
                    if (! tuples.contains(label[a], omega[a], label[b], omega[b]))
                        return;
                }
                ++count;
                return;
            }
            const auto v = copy_support[i];
            for (int w = 1; w <= params.copies[label[v] - 1]; ++w) {
                omega[v] = w;
                self(self, i + 1);
            }
            omega[v] = 0;
        };
        rec(rec, 0);
        return count;
    }

    namespace
    {
        template <class Tab>
        auto table_for(const Graph & g, const ExtNode & node, int k) -> Tab
        {
            if (auto v = std::get_if<VertexOp>(&node.op))
                return base_impl<Tab>(g, k, v->label);

            if (std::holds_alternative<RelabelOp>(node.op)) {
                // Compose the maximal relabel chain into one map.
                std::vector<const RelabelOp *> chain;
                const ExtNode * base = &node;
                while (auto r = std::get_if<RelabelOp>(&base->op)) {
                    chain.push_back(r);
                    base = r->child.get();
                }
                std::vector<Label> map(static_cast<std::size_t>(k));
                for (int l = 1; l <= k; ++l)
                    map[l - 1] = l;
                for (auto it = chain.rbegin(); it != chain.rend(); ++it)
                    for (auto & m : map)
                        if (m == (*it)->from)
                            m = (*it)->to;
                return relabel_impl(table_for<Tab>(g, *base, k), std::span<const Label>(map));
            }

            if (auto c = std::get_if<ConnectOp>(&node.op)) {
                auto left = table_for<Tab>(g, *c->left, k);
                auto right = table_for<Tab>(g, *c->right, k);
                return connect_impl(left, right, c->pairs, g);
            }

            const auto & b = std::get<BetaOp>(node.op);
            return beta_impl(table_for<Tab>(g, *b.child, k), b, g);
        }

        /// Vertex count of the value of `node`, saturating at UINT64_MAX.
        auto value_size(const ExtNode & node) -> std::uint64_t
        {
            constexpr auto max = std::numeric_limits<std::uint64_t>::max();
            if (std::holds_alternative<VertexOp>(node.op))
                return 1;
            if (auto r = std::get_if<RelabelOp>(&node.op))
                return value_size(*r->child);
            if (auto c = std::get_if<ConnectOp>(&node.op)) {
                const auto a = value_size(*c->left), b = value_size(*c->right);
                return a > max - b ? max : a + b;
            }
            // Upper bound: every vertex gets at most 1 + max(copies) images.
            const auto & b = std::get<BetaOp>(node.op);
            const auto child = value_size(*b.child);
            const auto most = static_cast<std::uint64_t>(1 + *std::max_element(b.copies.begin(), b.copies.end()));
            return child > max / most ? max : child * most;
        }

        /// Every entry counts homomorphisms into an induced subgraph of the final value, so |V(H)|^|V(G)| bounds them all.
        auto fits_machine_word(const Graph & g, const ExtExpr & e) -> bool
        {
            return saturating_pow(value_size(*e.root()), g.vertex_count()) <= (std::uint64_t{1} << 62);
        }

        template <class Tab>
        auto sum_total(const Tab & t) -> HomCount
        {
            const auto codec = t.codec();
            HomCount total = 0;
            auto rec = [&](auto & self, std::size_t v, std::size_t index) -> void {
                if (v == t.n) {
                    total += t.entries[index];
                    return;
                }
                for (int l = 1; l <= t.k; ++l)
                    self(self, v + 1, index + static_cast<std::size_t>(l) * codec.power(v));
            };
            rec(rec, 0, 0);
            return total;
        }

        void require_expr_budget(const Graph & g, const ExtExpr & e, std::uint64_t budget)
        {
            require_table_budget(g.vertex_count(), e.k(), budget);
            if (g.vertex_count() > 64)
                throw BudgetExceeded("source graph exceeds 64 vertices");
        }
    }

    auto hom_table_via_expr(const Graph & g, const ExtExpr & e, std::uint64_t budget) -> HomTable
    {
        require_expr_budget(g, e, budget);
        if (! fits_machine_word(g, e))
            return table_for<HomTable>(g, *e.root(), e.k());
        const auto fast = table_for<FastTable>(g, *e.root(), e.k());
        HomTable out(fast.n, fast.k);
        std::copy(fast.entries.begin(), fast.entries.end(), out.entries.begin());
        return out;
    }

    auto sum_total_entries(const HomTable & t) -> HomCount
    {
        return sum_total(t);
    }

    auto count_hom_via_expr(const Graph & g, const ExtExpr & e, std::uint64_t budget) -> HomCount
    {
        require_expr_budget(g, e, budget);
        if (fits_machine_word(g, e))
            return sum_total(table_for<FastTable>(g, *e.root(), e.k()));
        return sum_total(table_for<HomTable>(g, *e.root(), e.k()));
    }
}
