#include <homcount/oracle.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace homcount
{
    namespace
    {
        auto adjacency_matrix(const Graph & h) -> std::vector<char>
        {
            const auto n = h.vertex_count();
            std::vector<char> m(n * n, 0);
            for (auto [u, v] : h.edges())
                m[u * n + v] = m[v * n + u] = 1;
            return m;
        }

        /// Earlier-numbered neighbours of each vertex, so a prefix assignment can be checked edge by edge.
        auto back_neighbours(const Graph & g) -> std::vector<std::vector<Vertex>>
        {
            std::vector<std::vector<Vertex>> back(g.vertex_count());
            for (auto [u, v] : g.edges())
                back[v].push_back(u);
            return back;
        }

        template <class Visit>
        void enumerate_homs(const Graph & g, const Graph & h, std::uint64_t budget, Visit && visit)
        {
            const auto ng = g.vertex_count(), nh = h.vertex_count();
            require_budget(saturating_pow(nh, ng), budget, "brute-force map enumeration");
            const auto adj = adjacency_matrix(h);
            const auto back = back_neighbours(g);
            std::vector<Vertex> phi(ng, 0);

            auto rec = [&](auto & self, std::size_t v) -> void {
                if (v == ng) {
                    visit(std::span<const Vertex>(phi));
                    return;
                }
                for (Vertex x = 0; x < nh; ++x) {
                    bool ok = true;
                    for (auto u : back[v])
                        if (! adj[phi[u] * nh + x]) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        phi[v] = x;
                        self(self, v + 1);
                    }
                }
            };
            rec(rec, 0);
        }
    }

    void for_each_hom(const Graph & g, const Graph & h, const std::function<void(std::span<const Vertex>)> & visit, std::uint64_t budget)
    {
        enumerate_homs(g, h, budget, visit);
    }

    auto brute_hom(const Graph & g, const Graph & h, std::uint64_t budget) -> HomCount
    {
        std::uint64_t count = 0;
        enumerate_homs(g, h, budget, [&](std::span<const Vertex>) { ++count; });
        return count;
    }

    auto brute_hom_labeled(const Graph & g, const LabeledGraph & h, std::uint64_t budget) -> HomTable
    {
        const auto ng = g.vertex_count(), nh = h.vertex_count();
        require_budget(saturating_pow(nh + 1, ng), budget, "brute-force partial map enumeration");
        HomTable table(ng, h.k);
        const auto codec = table.codec();
        const auto adj = adjacency_matrix(h.graph);
        const auto back = back_neighbours(g);
        constexpr Vertex absent = ~Vertex{0};
        std::vector<Vertex> phi(ng, absent);

        // Every partial map that is a homomorphism on its domain counts once, under the labeling it induces.
        auto rec = [&](auto & self, std::size_t v, std::size_t index) -> void {
            if (v == ng) {
                ++table.entries[index];
                return;
            }
            phi[v] = absent;
            self(self, v + 1, index);
            for (Vertex x = 0; x < nh; ++x) {
                bool ok = true;
                for (auto u : back[v])
                    if (phi[u] != absent && ! adj[phi[u] * nh + x]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    phi[v] = x;
                    self(self, v + 1, index + static_cast<std::size_t>(h.labels[x]) * codec.power(v));
                }
            }
            phi[v] = absent;
        };
        rec(rec, 0, 0);
        return table;
    }

    auto brute_par(const SetFunction & f, int n) -> HomCount
    {
        const int m = f.ground_size();
        if (n < 1)
            throw InvalidInput("par needs at least one part");
        if (m > brute_par_max_ground)
            throw BudgetExceeded("brute_par handles ground sets of at most " + std::to_string(brute_par_max_ground) + " elements");
        require_budget(saturating_pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)), oracle_map_limit, "brute-force partition enumeration");

        std::vector<int> part(static_cast<std::size_t>(m), 0);
        std::vector<std::uint32_t> blocks(static_cast<std::size_t>(n));
        HomCount total = 0;
        while (true) {
            std::fill(blocks.begin(), blocks.end(), 0);
            for (int e = 0; e < m; ++e)
                blocks[static_cast<std::size_t>(part[static_cast<std::size_t>(e)])] |= std::uint32_t{1} << e;
            HomCount product = 1;
            for (auto b : blocks)
                product *= f[b];
            total += product;

            int e = 0;
            while (e < m && ++part[static_cast<std::size_t>(e)] == n)
                part[static_cast<std::size_t>(e++)] = 0;
            if (e == m)
                break;
        }
        return total;
    }

    namespace
    {
        /// Twin classes: vertices with equal open (or equal closed) neighbourhoods share an id.
        auto twin_classes(const Graph & g, bool closed) -> std::vector<std::size_t>
        {
            std::map<std::vector<Vertex>, std::size_t> ids;
            std::vector<std::size_t> cls(g.vertex_count());
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                auto key = g.neighbours(v);
                if (closed) {
                    key.push_back(v);
                    std::sort(key.begin(), key.end());
                }
                cls[v] = ids.try_emplace(std::move(key), ids.size()).first->second;
            }
            return cls;
        }
    }

    auto brute_iso(const Graph & a, const Graph & b, std::uint64_t node_limit) -> bool
    {
        const auto n = a.vertex_count();
        if (n != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;
        std::vector<std::size_t> da(n), db(n);
        for (Vertex v = 0; v < n; ++v) {
            da[v] = a.degree(v);
            db[v] = b.degree(v);
        }
        if (! std::is_permutation(da.begin(), da.end(), db.begin()))
            return false;
        if (n == 0)
            return true;

        const auto adj_a = adjacency_matrix(a), adj_b = adjacency_matrix(b);
        const auto open_b = twin_classes(b, false), closed_b = twin_classes(b, true);

        // Order a's vertices so each one has as many already-ordered neighbours as possible.
        std::vector<Vertex> order;
        std::vector<std::size_t> placed_neighbours(n, 0);
        std::vector<char> placed(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            Vertex best = 0;
            bool found = false;
            for (Vertex v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (! found || placed_neighbours[v] > placed_neighbours[best] ||
                    (placed_neighbours[v] == placed_neighbours[best] && da[v] > da[best])) {
                    best = v;
                    found = true;
                }
            }
            placed[best] = 1;
            order.push_back(best);
            for (auto w : a.neighbours(best))
                ++placed_neighbours[w];
        }

        constexpr Vertex unmapped = ~Vertex{0};
        std::vector<Vertex> image(n, unmapped);
        std::vector<char> used(n, 0);
        std::uint64_t nodes = 0;

        auto rec = [&](auto & self, std::size_t step) -> bool {
            if (step == n)
                return true;
            if (++nodes > node_limit)
                throw BudgetExceeded("isomorphism search exceeded " + std::to_string(node_limit) + " nodes");
            const auto v = order[step];
            std::vector<std::size_t> rejected_open, rejected_closed;
            for (Vertex x = 0; x < n; ++x) {
                if (used[x] || db[x] != da[v])
                    continue;
                if (std::find(rejected_open.begin(), rejected_open.end(), open_b[x]) != rejected_open.end() ||
                    std::find(rejected_closed.begin(), rejected_closed.end(), closed_b[x]) != rejected_closed.end())
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
                image[v] = unmapped;
                rejected_open.push_back(open_b[x]);
                rejected_closed.push_back(closed_b[x]);
            }
            return false;
        };
        return rec(rec, 0);
    }

    auto brute_labeled_iso(const LabeledGraph & a, const LabeledGraph & b) -> bool
    {
        const auto n = a.vertex_count();
        if (n > brute_labeled_iso_max_vertices || b.vertex_count() > brute_labeled_iso_max_vertices)
            throw BudgetExceeded("brute_labeled_iso handles at most " + std::to_string(brute_labeled_iso_max_vertices) + " vertices");
        if (n != b.vertex_count() || a.graph.edge_count() != b.graph.edge_count())
            return false;
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        do {
            bool ok = true;
            for (Vertex v = 0; v < n && ok; ++v)
                ok = a.labels[v] == b.labels[perm[v]];
            for (auto it = a.graph.edges().begin(); ok && it != a.graph.edges().end(); ++it)
                ok = b.graph.has_edge(perm[it->first], perm[it->second]);
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
}
