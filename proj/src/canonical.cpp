#include "kabminor/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kabminor/graph6.hpp"

namespace kabminor {

namespace {

using Colouring = std::vector<int>;

/// Refines to the coarsest equitable colouring, renumbering colours 0..m-1.
/// Colour order depends only on isomorphism-invariant data.
int refine(const Graph& g, Colouring& col) {
    const std::size_t n = g.order();
    using Signature = std::pair<int, std::vector<int>>;
    std::vector<Signature> sig(n);
    int colours = -1;
    for (;;) {
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = col[v];
            sig[v].second.clear();
            for (Vertex w : g.neighbors(v)) sig[v].second.push_back(col[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::map<Signature, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (Vertex v = 0; v < n; ++v) col[v] = rank[sig[v]];
        if (next == colours) return next;
        colours = next;
    }
}

std::uint64_t leaf_key(const Graph& g, const Colouring& pos) {
    const std::size_t n = g.order();
    std::array<Vertex, kCanonicalMaxOrder> at{};
    for (Vertex v = 0; v < n; ++v) at[static_cast<std::size_t>(pos[v])] = v;
    std::uint64_t key = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(at[i], at[j]) ? 1u : 0u);
    }
    return key;
}

bool twins(const Graph& g, Vertex u, Vertex v) {
    for (std::size_t w = 0; w < g.words_per_row(); ++w) {
        std::uint64_t diff = g.row(u)[w] ^ g.row(v)[w];
        if (w == u / 64) diff &= ~(std::uint64_t{1} << (u % 64));
        if (w == v / 64) diff &= ~(std::uint64_t{1} << (v % 64));
        if (diff) return false;
    }
    return true;
}

struct Search {
    const Graph& g;
    bool found = false;
    std::uint64_t best = 0;
    Colouring best_col;

    void run(Colouring col) {
        const int colours = refine(g, col);
        const auto n = static_cast<int>(g.order());
        if (colours == n) {
            const std::uint64_t key = leaf_key(g, col);
            if (!found || key > best) {
                found = true;
                best = key;
                best_col = col;
            }
            return;
        }
        // Target cell: the first colour class with more than one vertex.
        std::vector<int> size(static_cast<std::size_t>(colours), 0);
        for (int c : col) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] < 2) ++target;
        std::vector<Vertex> tried;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (col[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
            tried.push_back(v);
            Colouring child(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) child[i] = 2 * col[i];
            child[v] = 2 * target - 1;
            run(std::move(child));
        }
    }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) {
        throw std::invalid_argument("canonical_labeling supports at most 10 vertices");
    }
    std::vector<Vertex> perm(g.order());
    if (g.order() == 0) return perm;
    Search s{g, false, 0, {}};
    s.run(Colouring(g.order(), 0));
    for (Vertex v = 0; v < g.order(); ++v) perm[v] = static_cast<Vertex>(s.best_col[v]);
    return perm;
}

std::string canonical_form(const Graph& g) { return to_graph6(g.permuted(canonical_labeling(g))); }

namespace {

std::mutex cache_mutex;
std::map<std::size_t, std::vector<Graph>> cache;

std::vector<Graph> build_level(const std::vector<Graph>& smaller) {
    std::set<std::string> forms;
    for (const Graph& base : smaller) {
        const std::size_t m = base.order();
        const Graph extended = disjoint_union({base, complete(1)});
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            GraphBuilder b(extended);
            for (Vertex u = 0; u < m; ++u) {
                if (mask >> u & 1) b.add_edge(u, m);
            }
            forms.insert(canonical_form(b.build()));
        }
    }
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(from_graph6(f));
    return out;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(std::size_t n) {
    if (n > kEnumeratorMaxOrder) throw std::invalid_argument("the internal enumerator stops at 8 vertices");
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (cache.empty()) cache.emplace(0, std::vector<Graph>{Graph(0)});
    std::size_t have = cache.rbegin()->first;
    while (have < n) {
        auto level = build_level(cache.at(have));
        cache.emplace(have + 1, std::move(level));
        ++have;
    }
    return cache.at(n);
}

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
    const auto& all = enumerate_graphs(n);
    if (!connected_only) return all;
    std::vector<Graph> out;
    for (const auto& g : all) {
        if (g.is_connected()) out.push_back(g);
    }
    return out;
}

}  // namespace kabminor
