#include "kabminor/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace kabminor {

namespace {

constexpr std::array<std::pair<Clause, std::string_view>, 7> kClauseNames{{
    {Clause::T13_i, "T1.3-i"},
    {Clause::T13_ii, "T1.3-ii"},
    {Clause::T14_i_special, "T1.4-i-special"},
    {Clause::T14_i, "T1.4-i"},
    {Clause::T14_ii_special, "T1.4-ii-special"},
    {Clause::T14_ii, "T1.4-ii"},
    {Clause::OutsideTheorem, "outside-theorem"},
}};

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

Graph labelled(Graph g, const char* tag) { return g.with_label(tag); }

}  // namespace

std::size_t tau_of(std::size_t a, std::size_t b) { return (b + 1) / (a + 1); }

std::size_t omega_of(std::size_t a, std::size_t b) { return std::min(a, (b + 1) / 2); }

std::size_t binom2(std::size_t m) { return m * (m > 0 ? m - 1 : 0) / 2; }

FamilyParams FamilyParams::make(std::size_t a, std::size_t b, std::size_t n) {
    if (a < 1 || b < a) bad("family parameters need 1 <= a <= b");
    if (n + 1 < a) bad("family parameters need n >= a - 1");
    FamilyParams p;
    p.a = a;
    p.b = b;
    p.n = n;
    p.k = (n - a + 1) / b;
    p.t = (n - a + 1) % b;
    return p;
}

std::string_view to_string(Clause c) {
    for (auto [k, name] : kClauseNames) {
        if (k == c) return name;
    }
    return "unknown";
}

std::optional<Clause> clause_from_string(std::string_view s) {
    for (auto [k, name] : kClauseNames) {
        if (name == s) return k;
    }
    return std::nullopt;
}

Graph star_forest(std::size_t a, std::size_t b) {
    if (a < 1 || b < a) bad("star_forest needs 1 <= a <= b");
    const std::size_t tau = tau_of(a, b);
    const std::size_t c = b - (a + 1) * (tau - 1);
    std::vector<Graph> stars;
    stars.push_back(star(c));
    for (std::size_t i = 1; i < tau; ++i) stars.push_back(star(a));
    return disjoint_union(stars);
}

Graph star_forest_complement(std::size_t a, std::size_t b) { return complement(star_forest(a, b)); }

Graph f_graph(std::size_t a1, std::size_t a2, std::size_t a3, std::size_t b) {
    if (b < 2 || a1 + a2 + a3 != b - 1) bad("f_graph needs a1 + a2 + a3 = b - 1");
    GraphBuilder g(disjoint_union({complete(b - 1), path(3)}));
    const Vertex v[3] = {b - 1, b, b + 1};
    const std::size_t sizes[3] = {a1, a2, a3};
    Vertex next = 0;
    for (int i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < sizes[i]; ++j) g.add_edge(next++, v[i]);
    }
    for (Vertex u = 0; u + 1 < b; ++u) g.set_label(u, "clique");
    for (int i = 0; i < 3; ++i) g.set_label(v[i], "path");
    return std::move(g).build();
}

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
    }
    GraphBuilder b(pairs.size());
    for (std::size_t u = 0; u < pairs.size(); ++u) {
        for (std::size_t v = u + 1; v < pairs.size(); ++v) {
            auto [a, c] = pairs[u];
            auto [d, e] = pairs[v];
            if (a != d && a != e && c != d && c != e) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

Graph petersen_complement() { return complement(petersen()); }

Graph subdivided_clique(std::size_t b, std::size_t k) {
    if (b < 3) bad("subdivided_clique needs b >= 3");
    GraphBuilder g(disjoint_union({complete(b), Graph(k)}));
    for (Vertex v = 0; v < b; ++v) g.set_label(v, "clique");
    if (k == 0) return std::move(g).build();
    g.remove_edge(0, 1);
    Vertex prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
        g.add_edge(prev, b + i);
        g.set_label(b + i, "path");
        prev = b + i;
    }
    g.add_edge(prev, 1);
    return std::move(g).build();
}

Graph clique_with_pendants(std::size_t b) {
    if (b < 3) bad("clique_with_pendants needs b >= 3");
    GraphBuilder g(disjoint_union({complete(b), Graph(2)}));
    g.remove_edge(0, 1);
    g.add_edge(0, b);
    g.add_edge(1, b + 1);
    return std::move(g).build();
}

Graph dominated_matching_graph(std::size_t b, std::size_t u2) {
    if (b < 3 || u2 < 2 || u2 % 2 != 0 || u2 > b - 1) {
        bad("dominated_matching_graph needs even 2 <= u2 <= b - 1");
    }
    const std::size_t u1 = b - 1 - u2;
    const Vertex w = b;
    GraphBuilder g(b + 1);
    // v* (0), U1 (1..u1) and U2 (u1+1..b-1) form a clique before removing the matching.
    for (Vertex x = 0; x < b; ++x) {
        for (Vertex y = x + 1; y < b; ++y) g.add_edge(x, y);
    }
    for (Vertex x = u1 + 1; x < b; x += 2) g.remove_edge(x, x + 1);
    for (Vertex x = u1 + 1; x < b; ++x) g.add_edge(x, w);
    g.set_label(0, "v*");
    for (Vertex x = 1; x <= u1; ++x) g.set_label(x, "U1");
    for (Vertex x = u1 + 1; x < b; ++x) g.set_label(x, "U2");
    g.set_label(w, "w");
    return std::move(g).build();
}

Graph extremal_family(const FamilyParams& p, Clause clause) {
    const std::size_t a = p.a, b = p.b, n = p.n, k = p.k, t = p.t;
    auto with_apex = [&](std::vector<Graph> blocks) {
        Graph g = join(labelled(complete(a - 1), "apex"), disjoint_union(blocks));
        if (g.order() != n) bad("internal: constructed order does not match n");
        return g;
    };
    auto cliques = [&](std::size_t copies) {
        return std::vector<Graph>(copies, labelled(complete(b), "clique"));
    };

    switch (clause) {
        case Clause::T13_i:
            if (a != 1 || n != b + 1) bad("T1.3-i needs a = 1 and n = b + 1");
            return labelled(star_forest_complement(1, b), "fab-complement");
        case Clause::T13_ii:
            if (a != 1 || b < 3 || n < b) bad("T1.3-ii needs a = 1, b >= 3 and n >= b");
            return subdivided_clique(b, n - b);
        case Clause::T14_i_special: {
            if (a < 2 || t != 2 || k < 1 || b < a + 1) {
                bad("T1.4-i-special needs a >= 2, t = 2, k >= 1 and b > a");
            }
            auto blocks = cliques(k - 1);
            blocks.push_back(labelled(f_graph(a, 0, b - 1 - a, b), "f-block"));
            return with_apex(std::move(blocks));
        }
        case Clause::T14_i: {
            if (a < 2 || k < t) bad("T1.4-i needs a >= 2 and k >= t");
            auto blocks = cliques(k - t);
            for (std::size_t i = 0; i < t; ++i) {
                blocks.push_back(labelled(star_forest_complement(a, b), "fab-complement"));
            }
            return with_apex(std::move(blocks));
        }
        case Clause::T14_ii_special: {
            if (a < 2 || t != 2 || b != 8 || k < 1) bad("T1.4-ii-special needs a >= 2, t = 2, b = 8, k >= 1");
            auto blocks = cliques(k - 1);
            blocks.push_back(labelled(petersen_complement(), "petersen-complement"));
            return with_apex(std::move(blocks));
        }
        case Clause::T14_ii: {
            if (a < 2) bad("T1.4-ii needs a >= 2");
            auto blocks = cliques(k);
            blocks.push_back(labelled(complete(t), "remainder"));
            return with_apex(std::move(blocks));
        }
        case Clause::OutsideTheorem:
            break;
    }
    bad("no construction for clause outside-theorem");
}

}  // namespace kabminor
