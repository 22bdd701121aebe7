#include <homcount/graph.hpp>

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace homcount
{
    namespace
    {
        auto normalize(Edge e) -> Edge
        {
            return e.first < e.second ? e : Edge{e.second, e.first};
        }

        auto binomial(std::uint64_t n, std::uint64_t k) -> std::uint64_t
        {
            if (k > n)
                return 0;
            std::uint64_t result = 1;
            for (std::uint64_t i = 1; i <= k; ++i) {
                result = result * (n - k + i) / i;
                if (result > 1'000'000'000'000ULL)
                    return result;
            }
            return result;
        }
    }

    Graph::Graph(std::size_t n) : _adjacency(n)
    {
    }

    Graph::Graph(std::size_t n, std::vector<Edge> edges) : _adjacency(n)
    {
        for (auto & e : edges) {
            if (e.first >= n || e.second >= n)
                throw InvalidInput("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") out of range for " +
                    std::to_string(n) + " vertices");
            if (e.first == e.second)
                throw InvalidInput("self-loop at vertex " + std::to_string(e.first));
            e = normalize(e);
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
            throw InvalidInput("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
        _edges = std::move(edges);
        for (auto [u, v] : _edges) {
            _adjacency[u].push_back(v);
            _adjacency[v].push_back(u);
        }
        for (auto & nbrs : _adjacency)
            std::sort(nbrs.begin(), nbrs.end());
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        const auto & nbrs = _adjacency.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    auto Graph::adjacency_masks() const -> std::vector<std::uint64_t>
    {
        if (vertex_count() > 64)
            throw InvalidInput("adjacency masks need at most 64 vertices");
        std::vector<std::uint64_t> masks(vertex_count(), 0);
        for (auto [u, v] : _edges) {
            masks[u] |= std::uint64_t{1} << v;
            masks[v] |= std::uint64_t{1} << u;
        }
        return masks;
    }

    void GraphBuilder::add_edge(Vertex u, Vertex v)
    {
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (u >= _n || v >= _n)
            throw InvalidInput("edge endpoint out of range");
        _edges.insert(normalize({u, v}));
    }

    auto GraphBuilder::build() const -> Graph
    {
        return Graph(_n, std::vector<Edge>(_edges.begin(), _edges.end()));
    }

    LabeledGraph::LabeledGraph(Graph g, int k, std::vector<Label> labels) : graph(std::move(g)), k(k), labels(std::move(labels))
    {
        if (k < 1)
            throw InvalidInput("label alphabet size must be positive");
        if (this->labels.size() != graph.vertex_count())
            throw InvalidInput("labeled graph needs exactly one label per vertex");
        for (auto l : this->labels)
            if (l < 1 || l > k)
                throw InvalidInput("label " + std::to_string(l) + " outside 1.." + std::to_string(k));
    }

    PartialLabeling::PartialLabeling(int k, std::vector<Label> values) : _k(k), _values(std::move(values))
    {
        if (k < 1)
            throw InvalidInput("label alphabet size must be positive");
        for (auto l : _values)
            if (l < 0 || l > k)
                throw InvalidInput("partial label " + std::to_string(l) + " outside 0.." + std::to_string(k));
    }

    auto PartialLabeling::support() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (std::size_t v = 0; v < _values.size(); ++v)
            if (_values[v] != 0)
                result.push_back(static_cast<Vertex>(v));
        return result;
    }

    auto PartialLabeling::is_total() const -> bool
    {
        return std::ranges::none_of(_values, [](Label l) { return l == 0; });
    }

    namespace
    {
        auto sorted_unique_checked(std::span<const Vertex> s, std::size_t n) -> std::vector<Vertex>
        {
            std::vector<Vertex> sorted(s.begin(), s.end());
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            if (! sorted.empty() && sorted.back() >= n)
                throw InvalidInput("vertex " + std::to_string(sorted.back()) + " out of range for induced subgraph");
            return sorted;
        }
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> s) -> Graph
    {
        auto keep = sorted_unique_checked(s, g.vertex_count());
        std::vector<std::int64_t> position(g.vertex_count(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            position[keep[i]] = static_cast<std::int64_t>(i);

        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (position[u] >= 0 && position[v] >= 0)
                edges.emplace_back(static_cast<Vertex>(position[u]), static_cast<Vertex>(position[v]));
        return Graph(keep.size(), std::move(edges));
    }

    auto induced_subgraph(const LabeledGraph & g, std::span<const Vertex> s) -> LabeledGraph
    {
        auto keep = sorted_unique_checked(s, g.vertex_count());
        std::vector<Label> labels;
        labels.reserve(keep.size());
        for (auto v : keep)
            labels.push_back(g.labels[v]);
        return LabeledGraph(induced_subgraph(g.graph, keep), g.k, std::move(labels));
    }

    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result;
        std::vector<bool> seen(g.vertex_count(), false);
        for (Vertex start = 0; start < g.vertex_count(); ++start) {
            if (seen[start])
                continue;
            std::vector<Vertex> component;
            std::queue<Vertex> frontier;
            frontier.push(start);
            seen[start] = true;
            while (! frontier.empty()) {
                auto v = frontier.front();
                frontier.pop();
                component.push_back(v);
                for (auto w : g.neighbours(v))
                    if (! seen[w]) {
                        seen[w] = true;
                        frontier.push(w);
                    }
            }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto gen_clique(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }

    auto gen_path(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, std::move(edges));
    }

    auto gen_cycle(std::size_t n) -> Graph
    {
        if (n < 3)
            throw InvalidInput("a simple cycle needs at least 3 vertices");
        auto edges = gen_path(n).edges();
        edges.emplace_back(0, static_cast<Vertex>(n - 1));
        return Graph(n, std::move(edges));
    }

    auto gen_hypercube(int dimension) -> Graph
    {
        if (dimension < 0 || dimension > 20)
            throw InvalidInput("hypercube dimension must lie in 0..20, got " + std::to_string(dimension));
        const std::size_t n = std::size_t{1} << dimension;
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            for (int bit = 0; bit < dimension; ++bit) {
                Vertex w = v ^ (Vertex{1} << bit);
                if (v < w)
                    edges.emplace_back(v, w);
            }
        return Graph(n, std::move(edges));
    }

    auto kneser_vertex_sets(int n, int k) -> std::vector<std::uint64_t>
    {
        if (n < 1 || k < 1)
            throw InvalidInput("Kneser parameters must be positive");
        if (n > 63)
            throw InvalidInput("Kneser ground set limited to 63 elements");
        if (k > n)
            return {};
        if (binomial(n, k) > 100'000)
            throw BudgetExceeded("Kneser graph KG(" + std::to_string(n) + "," + std::to_string(k) + ") has more than 10^5 vertices");

        // Numeric order of bitmasks with k bits set is colexicographic order.
        std::vector<std::uint64_t> sets;
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = std::uint64_t{1} << n;
        while (mask < limit) {
            sets.push_back(mask);
            std::uint64_t low = mask & (~mask + 1);
            std::uint64_t ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
        return sets;
    }

    auto gen_kneser(int n, int k) -> Graph
    {
        auto sets = kneser_vertex_sets(n, k);
        std::vector<Edge> edges;
        for (Vertex a = 0; a < sets.size(); ++a)
            for (Vertex b = a + 1; b < sets.size(); ++b)
                if ((sets[a] & sets[b]) == 0)
                    edges.emplace_back(a, b);
        return Graph(sets.size(), std::move(edges));
    }

    auto subdivide_clique(int n, const Graph & u) -> SubdividedClique
    {
        if (n < 1)
            throw InvalidInput("subdivided clique needs n >= 1");
        const auto un = u.vertex_count();
        const auto pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
        GraphBuilder builder(n + pairs * un);
        SubdividedClique result;
        for (int i = 0; i < n; ++i)
            result.clique_vertices.push_back(static_cast<Vertex>(i));

        Vertex base = static_cast<Vertex>(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                for (auto [a, b] : u.edges())
                    builder.add_edge(base + a, base + b);
                for (Vertex t = 0; t < un; ++t) {
                    builder.add_edge(base + t, static_cast<Vertex>(i));
                    builder.add_edge(base + t, static_cast<Vertex>(j));
                    result.subdivision_vertices.push_back(base + t);
                }
                base += static_cast<Vertex>(un);
            }
        result.graph = builder.build();
        return result;
    }

    auto blowup(const Graph & g, int k) -> Graph
    {
        if (k < 1)
            throw InvalidInput("blow-up clique size must be positive");
        const auto kk = static_cast<Vertex>(k);
        std::vector<Edge> edges;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (Vertex a = 0; a < kk; ++a)
                for (Vertex b = a + 1; b < kk; ++b)
                    edges.emplace_back(kk * v + a, kk * v + b);
        for (auto [u, v] : g.edges())
            for (Vertex a = 0; a < kk; ++a)
                for (Vertex b = 0; b < kk; ++b)
                    edges.emplace_back(kk * u + a, kk * v + b);
        return Graph(g.vertex_count() * kk, std::move(edges));
    }

    auto complement(const Graph & g) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = u + 1; v < g.vertex_count(); ++v)
                if (! g.has_edge(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.vertex_count(), std::move(edges));
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        const auto offset = static_cast<Vertex>(a.vertex_count());
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + offset, v + offset);
        return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        std::vector<int> side(g.vertex_count(), -1);
        for (Vertex start = 0; start < g.vertex_count(); ++start) {
            if (side[start] != -1)
                continue;
            side[start] = 0;
            std::queue<Vertex> frontier;
            frontier.push(start);
            while (! frontier.empty()) {
                auto v = frontier.front();
                frontier.pop();
                for (auto w : g.neighbours(v)) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        frontier.push(w);
                    }
                    else if (side[w] == side[v])
                        return false;
                }
            }
        }
        return true;
    }

    auto is_independent(const Graph & g, std::uint64_t vertex_mask) -> bool
    {
        if (g.vertex_count() > 64)
            throw InvalidInput("vertex masks need at most 64 vertices");
        for (auto [u, v] : g.edges())
            if (((vertex_mask >> u) & 1) && ((vertex_mask >> v) & 1))
                return false;
        return true;
    }
}
