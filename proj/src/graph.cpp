#include "kabminor/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kabminor {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

const std::string kNoLabel;

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
    }
}

void Graph::set(Vertex u, Vertex v, bool on) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    const bool had = adjacent(u, v);
    if (had == on) return;
    const std::uint64_t mu = std::uint64_t{1} << (u % 64);
    const std::uint64_t mv = std::uint64_t{1} << (v % 64);
    if (on) {
        bits_[u * words_ + v / 64] |= mv;
        bits_[v * words_ + u / 64] |= mu;
        ++m_;
    } else {
        bits_[u * words_ + v / 64] &= ~mv;
        bits_[v * words_ + u / 64] &= ~mu;
        --m_;
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[v * words_ + w]);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = bits_[v * words_ + w];
        while (word) {
            out.push_back(w * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
    check_vertex(v);
    return {bits_.data() + v * words_, words_};
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<std::size_t> Graph::degree_sequence() const {
    auto d = degrees();
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::size_t Graph::min_degree() const {
    if (n_ == 0) return 0;
    std::size_t best = n_;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

bool Graph::is_regular() const { return max_degree() == min_degree(); }

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(n_, 0);
    for (Vertex s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (Vertex w : neighbors(comp[i])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

const std::string& Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_.empty() ? kNoLabel : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != n_) {
        throw std::invalid_argument("label count does not match graph order");
    }
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::with_label(const std::string& tag) const {
    return with_labels(std::vector<std::string>(n_, tag));
}

Graph Graph::add_edge(Vertex u, Vertex v) const {
    if (adjacent(u, v)) throw std::invalid_argument("edge already present");
    Graph g = *this;
    g.set(u, v, true);
    return g;
}

Graph Graph::delete_edge(Vertex u, Vertex v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("edge not present");
    Graph g = *this;
    g.set(u, v, false);
    return g;
}

Graph Graph::delete_vertex(Vertex v) const {
    const Vertex vs[] = {v};
    return delete_vertices(vs);
}

Graph Graph::delete_vertices(std::span<const Vertex> vs) const {
    std::vector<char> drop(n_, 0);
    for (Vertex v : vs) {
        check_vertex(v);
        drop[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n_; ++v) {
        if (!drop[v]) keep.push_back(v);
    }
    return induced(keep);
}

Graph Graph::contract_edge(Vertex u, Vertex v) const {
    if (!adjacent(u, v)) throw std::invalid_argument("contract_edge: uv is not an edge");
    const Vertex keep = std::min(u, v);
    const Vertex gone = std::max(u, v);
    GraphBuilder b(*this);
    for (Vertex w : neighbors(gone)) {
        if (w != keep && !b.adjacent(keep, w)) b.add_edge(keep, w);
    }
    return std::move(b).build().delete_vertex(gone);
}

Graph Graph::induced(std::span<const Vertex> vs) const {
    GraphBuilder b(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        check_vertex(vs[i]);
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (adjacent(vs[i], vs[j])) b.add_edge(i, j);
        }
        if (!labels_.empty()) b.set_label(i, labels_[vs[i]]);
    }
    return std::move(b).build();
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
    GraphBuilder b(n_);
    for (auto [u, v] : edges()) b.add_edge(perm[u], perm[v]);
    if (!labels_.empty()) {
        for (Vertex v = 0; v < n_; ++v) b.set_label(perm[v], labels_[v]);
    }
    return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t n) : g_(n) {}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    g_.set(u, v, true);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    g_.set(u, v, false);
    return *this;
}

GraphBuilder& GraphBuilder::set_label(Vertex v, std::string label) {
    g_.check_vertex(v);
    if (g_.labels_.empty()) g_.labels_.assign(g_.n_, std::string{});
    g_.labels_[v] = std::move(label);
    return *this;
}

Graph complete(std::size_t m) {
    GraphBuilder b(m);
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph cycle(std::size_t m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(m);
    for (Vertex v = 0; v < m; ++v) b.add_edge(v, (v + 1) % m);
    return std::move(b).build();
}

Graph path(std::size_t m) {
    GraphBuilder b(m);
    for (Vertex v = 0; v + 1 < m; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(std::size_t r, std::size_t s) {
    GraphBuilder b(r + s);
    for (Vertex u = 0; u < r; ++u) {
        for (Vertex v = r; v < r + s; ++v) b.add_edge(u, v);
    }
    return std::move(b).build();
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) b.add_edge(u, v);
        }
        if (!g.labels().empty()) b.set_label(u, g.labels()[u]);
    }
    return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h) {
    const Graph parts[] = {g, h};
    GraphBuilder b(disjoint_union(parts));
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
    }
    return std::move(b).build();
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::size_t n = 0;
    bool any_labels = false;
    for (const auto& p : parts) {
        n += p.order();
        any_labels = any_labels || !p.labels().empty();
    }
    GraphBuilder b(n);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) b.add_edge(offset + u, offset + v);
        if (any_labels) {
            for (Vertex v = 0; v < p.order(); ++v) b.set_label(offset + v, p.label(v));
        }
        offset += p.order();
    }
    return std::move(b).build();
}

Graph disjoint_union(std::initializer_list<Graph> parts) {
    return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph repeat_union(const Graph& g, std::size_t copies) {
    std::vector<Graph> parts(copies, g);
    return disjoint_union(parts);
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (!g.label(v).empty()) os << " [label=\"" << v << ":" << g.label(v) << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace kabminor
