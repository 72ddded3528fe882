#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kabminor {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Immutable simple undirected graph.
///
/// Adjacency is stored as one bitset row per vertex (multi-word for n > 64).
/// Vertex labels are advisory metadata and are never consulted by any
/// algorithm; equality compares adjacency only.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    bool empty() const noexcept { return n_ == 0; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Raw bitset row of v; bit (w % 64) of word (w / 64) is set iff vw is an edge.
    std::span<const std::uint64_t> row(Vertex v) const;
    /// First word of the row. Only meaningful when order() <= 64.
    std::uint64_t row64(Vertex v) const { return bits_[v * words_]; }
    std::size_t words_per_row() const noexcept { return words_; }

    /// Degrees sorted non-increasing.
    std::vector<std::size_t> degree_sequence() const;
    std::vector<std::size_t> degrees() const;
    std::size_t max_degree() const;
    std::size_t min_degree() const;
    bool is_regular() const;

    bool is_connected() const;
    /// Connected components, each sorted ascending, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const;
    Graph with_labels(std::vector<std::string> labels) const;
    Graph with_label(const std::string& tag) const;

    Graph add_edge(Vertex u, Vertex v) const;
    Graph delete_edge(Vertex u, Vertex v) const;
    Graph delete_vertex(Vertex v) const;
    Graph delete_vertices(std::span<const Vertex> vs) const;
    /// Merges u and v into the lower-indexed of the two; the higher index is removed.
    Graph contract_edge(Vertex u, Vertex v) const;
    /// Subgraph induced by vs, vertices renumbered in the given order.
    Graph induced(std::span<const Vertex> vs) const;
    /// Relabel: vertex v of this graph becomes perm[v] of the result.
    Graph permuted(std::span<const Vertex> perm) const;

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    friend class GraphBuilder;

    void check_vertex(Vertex v) const;
    void set(Vertex u, Vertex v, bool on);

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph& g);

    std::size_t order() const noexcept { return g_.n_; }
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
    GraphBuilder& set_label(Vertex v, std::string label);

    Graph build() const& { return g_; }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

// Generic operations.

Graph complete(std::size_t m);
Graph cycle(std::size_t m);
Graph path(std::size_t m);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t r, std::size_t s);
Graph complement(const Graph& g);
/// Disjoint union plus every edge between the two vertex sets; g's vertices come first.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(std::initializer_list<Graph> parts);
Graph repeat_union(const Graph& g, std::size_t copies);

/// Graphviz DOT rendering; labels are emitted as node attributes when present.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace kabminor
