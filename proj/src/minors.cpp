#include "kabminor/minors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kabminor/families.hpp"

namespace kabminor {

namespace {

using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

inline std::size_t low_index(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

/// The pattern graph H, preprocessed for quotient matching.
struct Pattern {
    std::size_t k = 0;
    std::vector<Mask> adj;
    std::vector<std::size_t> deg;
    std::size_t min_deg = 0;
    /// H = K_{|side_a|, k - |side_a|} when set.
    bool complete_bipartite = false;
    Mask side_a = 0;
    /// Matching order for the generic embedder: descending degree, ties by index.
    std::vector<std::size_t> order;

    explicit Pattern(const Graph& h) : k(h.order()), adj(k, 0), deg(k, 0) {
        if (k > 64) throw std::invalid_argument("has_minor: pattern graphs are limited to 64 vertices");
        for (Vertex v = 0; v < k; ++v) {
            for (Vertex u : h.neighbors(v)) adj[v] |= bit(u);
            deg[v] = h.degree(v);
        }
        min_deg = k ? *std::min_element(deg.begin(), deg.end()) : 0;
        order.resize(k);
        for (std::size_t i = 0; i < k; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return deg[x] > deg[y]; });
        detect_complete_bipartite();
    }

    void detect_complete_bipartite() {
        if (k < 2) return;
        const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
        const Mask b_side = adj[0];
        const Mask a_side = all & ~b_side;
        if (b_side == 0) return;
        for (std::size_t v = 0; v < k; ++v) {
            const Mask want = (a_side & bit(v)) ? b_side : a_side;
            if (adj[v] != want) return;
        }
        complete_bipartite = true;
        side_a = a_side;
    }
};

/// Quotient graph of the current branch sets, as adjacency masks over block indices.
struct Quotient {
    std::size_t k = 0;
    std::vector<Mask> adj;
};

/// phi[h] = block index for H-vertex h, or empty when Q does not contain H spanning.
std::optional<std::vector<std::size_t>> match_bipartite(const Pattern& p, const Quotient& q) {
    // Q contains K_{r,s} on all k vertices iff the components of its complement
    // can be split into one side of total size r and another of size s.
    const std::size_t k = q.k;
    const Mask all = k == 64 ? ~Mask{0} : bit(k) - 1;
    std::vector<Mask> comps;
    Mask rest = all;
    while (rest) {
        Mask comp = rest & (~rest + 1);
        Mask frontier = comp;
        while (frontier) {
            Mask nb = 0;
            for (Mask f = frontier; f; f &= f - 1) nb |= ~q.adj[low_index(f)] & all;
            nb &= ~comp;
            comp |= nb;
            frontier = nb;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    const std::size_t r = static_cast<std::size_t>(std::popcount(p.side_a));
    // reach[i][t]: can the first i components reach total size t.
    std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(k + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::size_t sz = static_cast<std::size_t>(std::popcount(comps[i]));
        for (std::size_t t = 0; t <= k; ++t) {
            if (!reach[i][t]) continue;
            reach[i + 1][t] = 1;
            if (t + sz <= k) reach[i + 1][t + sz] = 1;
        }
    }
    if (!reach[comps.size()][r]) return std::nullopt;
    Mask a_blocks = 0;
    std::size_t t = r;
    for (std::size_t i = comps.size(); i-- > 0;) {
        if (reach[i][t]) continue;
        const std::size_t sz = static_cast<std::size_t>(std::popcount(comps[i]));
        a_blocks |= comps[i];
        t -= sz;
    }
    std::vector<std::size_t> phi(k);
    Mask a_free = a_blocks, b_free = all & ~a_blocks;
    for (std::size_t h = 0; h < k; ++h) {
        Mask& pool = (p.side_a & bit(h)) ? a_free : b_free;
        phi[h] = low_index(pool);
        pool &= pool - 1;
    }
    return phi;
}

bool embed(const Pattern& p, const Quotient& q, std::vector<std::size_t>& phi, Mask used, std::size_t idx) {
    if (idx == p.k) return true;
    const std::size_t hv = p.order[idx];
    for (std::size_t cand = 0; cand < q.k; ++cand) {
        if (used & bit(cand)) continue;
        if (static_cast<std::size_t>(std::popcount(q.adj[cand])) < p.deg[hv]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < idx && ok; ++j) {
            const std::size_t hu = p.order[j];
            if ((p.adj[hv] & bit(hu)) && !(q.adj[cand] & bit(phi[hu]))) ok = false;
        }
        if (!ok) continue;
        phi[hv] = cand;
        if (embed(p, q, phi, used | bit(cand), idx + 1)) return true;
    }
    return false;
}

std::optional<std::vector<std::size_t>> match(const Pattern& p, const Quotient& q) {
    if (p.complete_bipartite) return match_bipartite(p, q);
    std::vector<std::size_t> phi(p.k);
    if (embed(p, q, phi, 0, 0)) return phi;
    return std::nullopt;
}

/// Enumerates partitions of a subset of V(G) into exactly k connected blocks.
/// Blocks are opened in vertex-processing order, so each partition is visited once.
class BranchSearch {
public:
    BranchSearch(const Graph& g, const Pattern& p, std::uint64_t budget) : p_(p), budget_(budget), n_(g.order()) {
        if (n_ > 64) throw std::invalid_argument("has_minor: components are limited to 64 vertices");
        nbr_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v) nbr_[v] = g.row64(v);
        bfs_order(g);
        blocks_.assign(p.k, 0);
    }

    MinorVerdict run() {
        undecided_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        nblk_ = 0;
        if (rec(0)) return MinorVerdict::Contains;
        return exhausted_ ? MinorVerdict::BudgetExhausted : MinorVerdict::Free;
    }

    std::uint64_t expansions() const { return expansions_; }

    std::vector<std::vector<Vertex>> branch_sets() const {
        std::vector<std::vector<Vertex>> out(p_.k);
        for (std::size_t h = 0; h < p_.k; ++h) {
            for (Mask m = blocks_[phi_[h]]; m; m &= m - 1) out[h].push_back(low_index(m));
        }
        return out;
    }

private:
    void bfs_order(const Graph& g) {
        std::vector<char> seen(n_, 0);
        while (order_.size() < n_) {
            Vertex start = n_;
            for (Vertex v = 0; v < n_; ++v) {
                if (!seen[v] && (start == n_ || g.degree(v) > g.degree(start))) start = v;
            }
            std::size_t head = order_.size();
            order_.push_back(start);
            seen[start] = 1;
            while (head < order_.size()) {
                const Vertex v = order_[head++];
                for (Vertex w : g.neighbors(v)) {
                    if (!seen[w]) {
                        seen[w] = 1;
                        order_.push_back(w);
                    }
                }
            }
        }
    }

    Mask neighbourhood(Mask set) const {
        Mask nb = 0;
        for (Mask m = set; m; m &= m - 1) nb |= nbr_[low_index(m)];
        return nb & ~set;
    }

    /// Component of `seed` inside G[set].
    Mask component(Mask set, Mask seed) const {
        Mask comp = seed, frontier = seed;
        while (frontier) {
            Mask nb = 0;
            for (Mask f = frontier; f; f &= f - 1) nb |= nbr_[low_index(f)];
            nb &= set & ~comp;
            comp |= nb;
            frontier = nb;
        }
        return comp;
    }

    bool connected(Mask set) const { return set == 0 || component(set, set & (~set + 1)) == set; }

    /// Can block i still become connected, and if closed, reach the minimum H-degree?
    bool block_ok(std::size_t i) const {
        const Mask b = blocks_[i];
        Mask rest = b;
        std::size_t parts = 0;
        bool stranded = false;
        while (rest) {
            const Mask comp = component(b, rest & (~rest + 1));
            rest &= ~comp;
            ++parts;
            if (!(neighbourhood(comp) & undecided_)) stranded = true;
        }
        if (parts > 1) return !stranded;
        if (neighbourhood(b) & undecided_) return true;
        // Closed block: its quotient neighbourhood can no longer grow.
        const Mask nb = neighbourhood(b);
        std::size_t qdeg = 0;
        for (std::size_t j = 0; j < nblk_; ++j) {
            if (j != i && (nb & blocks_[j])) ++qdeg;
        }
        return qdeg >= p_.min_deg;
    }

    bool blocks_touching_ok(Vertex v, std::size_t changed) const {
        for (std::size_t j = 0; j < nblk_; ++j) {
            if ((j == changed || (blocks_[j] & nbr_[v])) && !block_ok(j)) return false;
        }
        return true;
    }

    bool try_success() {
        if (nblk_ != p_.k) return false;
        for (std::size_t j = 0; j < nblk_; ++j) {
            if (!connected(blocks_[j])) return false;
        }
        Quotient q;
        q.k = p_.k;
        q.adj.assign(p_.k, 0);
        for (std::size_t i = 0; i < p_.k; ++i) {
            const Mask nb = neighbourhood(blocks_[i]);
            for (std::size_t j = 0; j < p_.k; ++j) {
                if (i != j && (nb & blocks_[j])) q.adj[i] |= bit(j);
            }
        }
        auto phi = match(p_, q);
        if (!phi) return false;
        phi_ = std::move(*phi);
        return true;
    }

    bool rec(std::size_t pos) {
        if (++expansions_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (try_success()) return true;
        if (pos == n_) return false;
        if (nblk_ + (n_ - pos) < p_.k) return false;

        const Vertex v = order_[pos];
        const Mask vb = bit(v);
        undecided_ &= ~vb;

        if (nblk_ < p_.k) {
            blocks_[nblk_++] = vb;
            if (blocks_touching_ok(v, nblk_ - 1) && rec(pos + 1)) return true;
            blocks_[--nblk_] = 0;
            if (exhausted_) return false;
        }
        for (std::size_t i = 0; i < nblk_; ++i) {
            blocks_[i] |= vb;
            if (blocks_touching_ok(v, i) && rec(pos + 1)) return true;
            blocks_[i] &= ~vb;
            if (exhausted_) return false;
        }
        if (blocks_touching_ok(v, nblk_) && rec(pos + 1)) return true;
        undecided_ |= vb;
        return false;
    }

    const Pattern& p_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    bool exhausted_ = false;
    std::size_t n_;
    std::vector<Mask> nbr_;
    std::vector<Vertex> order_;
    std::vector<Mask> blocks_;
    std::size_t nblk_ = 0;
    Mask undecided_ = 0;
    std::vector<std::size_t> phi_;
};

}  // namespace

std::string_view to_string(MinorVerdict v) {
    switch (v) {
        case MinorVerdict::Contains:
            return "contains";
        case MinorVerdict::Free:
            return "free";
        case MinorVerdict::BudgetExhausted:
            return "budget-exhausted";
    }
    return "unknown";
}

MinorWitness has_minor(const Graph& g, const Graph& h, std::uint64_t budget) {
    if (h.order() == 0) throw std::invalid_argument("has_minor: pattern must have at least one vertex");
    MinorWitness out;
    out.budget = budget;
    out.verdict = MinorVerdict::Free;
    if (h.order() > g.order() || h.size() > g.size()) return out;

    const Pattern p(h);
    auto search = [&](const Graph& sub, std::span<const Vertex> to_global) {
        BranchSearch bs(sub, p, budget - std::min(budget, out.expansions));
        const auto verdict = bs.run();
        out.expansions += bs.expansions();
        out.verdict = verdict;
        if (verdict == MinorVerdict::Contains) {
            out.branch_sets = bs.branch_sets();
            for (auto& set : out.branch_sets) {
                for (auto& v : set) v = to_global[v];
                std::sort(set.begin(), set.end());
            }
        }
        return verdict;
    };

    if (h.is_connected()) {
        // A connected minor lives inside a single component.
        for (const auto& comp : g.components()) {
            if (comp.size() < h.order()) continue;
            const Graph sub = g.induced(comp);
            if (sub.size() < h.size()) continue;
            if (search(sub, comp) != MinorVerdict::Free) return out;
        }
        out.verdict = MinorVerdict::Free;
        return out;
    }
    std::vector<Vertex> identity(g.order());
    for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;
    search(g, identity);
    return out;
}

bool validate_minor_model(const Graph& g, const Graph& h, std::span<const std::vector<Vertex>> sets) {
    if (sets.size() != h.order()) return false;
    std::vector<int> owner(g.order(), -1);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) return false;
        for (Vertex v : sets[i]) {
            if (v >= g.order() || owner[v] != -1) return false;
            owner[v] = static_cast<int>(i);
        }
        if (!g.induced(sets[i]).is_connected()) return false;
    }
    for (auto [x, y] : h.edges()) {
        bool linked = false;
        for (Vertex u : sets[x]) {
            for (Vertex w : g.neighbors(u)) {
                if (owner[w] == static_cast<int>(y)) linked = true;
            }
        }
        if (!linked) return false;
    }
    return true;
}

namespace {

/// Enumerates connected vertex sets of G (n <= 64) containing `root` and no
/// vertex of `forbidden`; stops once one has at least `need` outside neighbours.
class ConnectedSets {
public:
    ConnectedSets(const Graph& g, std::size_t need) : need_(need), nbr_(g.order()) {
        for (Vertex v = 0; v < g.order(); ++v) nbr_[v] = g.row64(v);
    }

    bool any_with_many_neighbours(std::size_t n) {
        for (Vertex r = 0; r < n; ++r) {
            const Mask before = bit(r) - 1;
            if (rec(bit(r), nbr_[r], nbr_[r] & ~before, before)) return true;
        }
        return false;
    }

private:
    bool rec(Mask set, Mask nb_union, Mask ext, Mask forbidden) {
        if (static_cast<std::size_t>(std::popcount(nb_union & ~set)) >= need_) return true;
        while (ext) {
            const Mask vb = ext & (~ext + 1);
            ext &= ~vb;
            const std::size_t v = low_index(vb);
            const Mask next = set | vb;
            const Mask next_ext = (ext | nbr_[v]) & ~forbidden & ~next;
            if (rec(next, nb_union | nbr_[v], next_ext, forbidden)) return true;
            forbidden |= vb;
        }
        return false;
    }

    std::size_t need_;
    std::vector<Mask> nbr_;
};

}  // namespace

bool star_minor_free(const Graph& g, std::size_t b) {
    if (b == 0) throw std::invalid_argument("star_minor_free needs b >= 1");
    if (g.order() < b + 1) return true;
    if (g.max_degree() >= b) return false;
    for (const auto& comp : g.components()) {
        if (comp.size() < b + 1) continue;
        if (comp.size() > 64) throw std::invalid_argument("star_minor_free: components are limited to 64 vertices");
        const Graph sub = g.induced(comp);
        ConnectedSets cs(sub, b);
        if (cs.any_with_many_neighbours(sub.order())) return false;
    }
    return true;
}

AbPropertyReport ab_property(const Graph& g, std::size_t a, std::size_t b, std::uint64_t budget) {
    if (a < 1 || b < a) throw std::invalid_argument("ab_property needs 1 <= a <= b");
    AbPropertyReport rep;
    rep.a = a;
    rep.b = b;
    rep.omega = omega_of(a, b);
    rep.overall = true;
    for (std::size_t r = 1; r <= rep.omega; ++r) {
        AbPairVerdict pv;
        pv.r = r;
        pv.s = b + 1 - r;
        pv.witness = has_minor(g, complete_bipartite(pv.r, pv.s), budget);
        if (!pv.witness.free()) rep.overall = false;
        if (pv.witness.exhausted()) rep.inconclusive = true;
        rep.pairs.push_back(std::move(pv));
    }
    return rep;
}

bool ab_property_complement_criterion(const Graph& g, std::size_t a, std::size_t b) {
    if (a < 1 || b < a) throw std::invalid_argument("complement criterion needs 1 <= a <= b");
    if (g.order() != b + 1) throw std::invalid_argument("complement criterion needs a graph of order b + 1");
    if (!g.is_connected()) throw std::invalid_argument("complement criterion needs a connected graph");
    const std::size_t omega = omega_of(a, b);
    for (const auto& comp : complement(g).components()) {
        if (comp.size() < omega + 1) return false;
    }
    return true;
}

std::optional<std::vector<Vertex>> find_clique_dominating_set(const Graph& g, std::size_t size) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order() && out.size() < size; ++v) {
        if (g.degree(v) + 1 == g.order()) out.push_back(v);
    }
    if (out.size() < size) return std::nullopt;
    return out;
}

MinorVerdict minor_free_given_apex(const Graph& g, std::span<const Vertex> clique, std::size_t a, std::size_t b,
                                   std::uint64_t budget) {
    if (clique.size() + 1 != a) throw std::invalid_argument("minor_free_given_apex needs |S| = a - 1");
    for (Vertex v : clique) {
        if (v >= g.order() || g.degree(v) + 1 != g.order()) {
            throw std::invalid_argument("minor_free_given_apex: S must consist of dominating vertices");
        }
    }
    const auto rep = ab_property(g.delete_vertices(clique), a, b, budget);
    if (rep.overall) return MinorVerdict::Free;
    return rep.inconclusive ? MinorVerdict::BudgetExhausted : MinorVerdict::Contains;
}

}  // namespace kabminor
