#pragma once

#include <homcount/core.hpp>

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace homcount
{
    using Vertex = std::uint32_t;
    using Edge = std::pair<Vertex, Vertex>;

    /// Label value. Total labelings use 1..k; partial labelings use 0 for "unlabeled".
    using Label = int;

    /**
     * Simple undirected graph on the dense vertex ids 0..n-1.
     *
     * Edges are stored normalized (smaller endpoint first) and sorted, so two
     * graphs compare equal exactly when they have the same vertex count and
     * the same edge set. Immutable once constructed.
     */
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t n);

        /// Rejects self-loops, duplicate edges, and out-of-range endpoints.
        Graph(std::size_t n, std::vector<Edge> edges);

        [[nodiscard]] auto vertex_count() const -> std::size_t { return _adjacency.size(); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }
        [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }
        [[nodiscard]] auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adjacency.at(v); }
        [[nodiscard]] auto degree(Vertex v) const -> std::size_t { return _adjacency.at(v).size(); }
        [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;

        /// Neighbourhood bitmasks; requires n <= 64.
        [[nodiscard]] auto adjacency_masks() const -> std::vector<std::uint64_t>;

        friend auto operator==(const Graph & a, const Graph & b) -> bool { return a._edges == b._edges && a.vertex_count() == b.vertex_count(); }

    private:
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _adjacency;
    };

    /// Accumulates edges with set semantics; repeated insertions are ignored.
    class GraphBuilder
    {
    public:
        explicit GraphBuilder(std::size_t n = 0) : _n(n) {}

        auto add_vertex() -> Vertex { return static_cast<Vertex>(_n++); }
        void add_edge(Vertex u, Vertex v);
        [[nodiscard]] auto vertex_count() const -> std::size_t { return _n; }
        [[nodiscard]] auto build() const -> Graph;

    private:
        std::size_t _n;
        std::set<Edge> _edges;
    };

    /// A graph with a total label function into 1..k.
    struct LabeledGraph
    {
        Graph graph;
        int k = 1;
        std::vector<Label> labels;

        LabeledGraph() = default;
        LabeledGraph(Graph g, int k, std::vector<Label> labels);

        [[nodiscard]] auto vertex_count() const -> std::size_t { return graph.vertex_count(); }

        friend auto operator==(const LabeledGraph &, const LabeledGraph &) -> bool = default;
    };

    /**
     * Per-vertex value in 0..k over a fixed source graph; 0 means the vertex is
     * outside the domain. The support is always derived from the values.
     */
    class PartialLabeling
    {
    public:
        PartialLabeling(int k, std::vector<Label> values);

        [[nodiscard]] auto k() const -> int { return _k; }
        [[nodiscard]] auto size() const -> std::size_t { return _values.size(); }
        [[nodiscard]] auto operator[](std::size_t v) const -> Label { return _values[v]; }
        [[nodiscard]] auto values() const -> const std::vector<Label> & { return _values; }
        [[nodiscard]] auto support() const -> std::vector<Vertex>;
        [[nodiscard]] auto is_total() const -> bool;

        friend auto operator==(const PartialLabeling &, const PartialLabeling &) -> bool = default;

    private:
        int _k;
        std::vector<Label> _values;
    };

    /// G[s]. Vertices are renumbered in increasing order of their original id.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> s) -> Graph;
    auto induced_subgraph(const LabeledGraph & g, std::span<const Vertex> s) -> LabeledGraph;

    /// Maximal connected vertex sets, each sorted, ordered by least vertex.
    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;

    auto gen_clique(std::size_t n) -> Graph;
    auto gen_path(std::size_t n) -> Graph;
    auto gen_cycle(std::size_t n) -> Graph;

    /// Vertex id is the integer value of the bit vector; edges join ids at Hamming distance 1.
    auto gen_hypercube(int dimension) -> Graph;

    /// Vertices are the k-subsets of {0..n-1} in colexicographic order; disjoint subsets are adjacent.
    auto gen_kneser(int n, int k) -> Graph;

    /// Colexicographic list of k-subsets of {0..n-1} as bitmasks, matching gen_kneser's ids.
    auto kneser_vertex_sets(int n, int k) -> std::vector<std::uint64_t>;

    struct SubdividedClique
    {
        Graph graph;
        std::vector<Vertex> clique_vertices;      // H_A
        std::vector<Vertex> subdivision_vertices; // H_B
    };

    /**
     * K_n with every edge {i, j} replaced by a private copy U_ij of u joined
     * completely to v_i and v_j. Ids: v_1..v_n first, then the copies for the
     * pairs (1,2), (1,3), ..., (n-1,n), each copy keeping u's vertex order.
     */
    auto subdivide_clique(int n, const Graph & u) -> SubdividedClique;

    /// Each vertex v becomes the clique {k*v, ..., k*v+k-1}; each edge becomes a complete k x k join.
    auto blowup(const Graph & g, int k) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// a's vertices keep their ids, b's are shifted by |V(a)|.
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    auto is_bipartite(const Graph & g) -> bool;
    auto is_independent(const Graph & g, std::uint64_t vertex_mask) -> bool;
}
