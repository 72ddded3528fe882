#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "kabminor/canonical.hpp"
#include "kabminor/families.hpp"
#include "kabminor/minors.hpp"

using namespace kabminor;

namespace {

bool connected_within(const Graph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::vector<bool> in(g.order(), false), seen(g.order(), false);
    for (Vertex v : set) in[v] = true;
    std::vector<Vertex> stack{set[0]};
    seen[set[0]] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex w : g.neighbors(v)) {
            if (in[w] && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == set.size();
}

/// Tries every map V(G) -> V(H) u {deleted}; exponential, for tiny graphs only.
bool brute_force_minor(const Graph& g, const Graph& h) {
    const std::size_t n = g.order(), k = h.order();
    std::vector<std::size_t> label(n, 0);  // 0 = deleted, i + 1 = branch set i
    const auto edges = h.edges();
    while (true) {
        std::vector<std::vector<Vertex>> sets(k);
        for (Vertex v = 0; v < n; ++v) {
            if (label[v]) sets[label[v] - 1].push_back(v);
        }
        bool ok = true;
        for (const auto& s : sets) ok = ok && connected_within(g, s);
        for (auto [x, y] : edges) {
            if (!ok) break;
            bool linked = false;
            for (Vertex u : sets[x]) {
                for (Vertex v : sets[y]) linked = linked || g.adjacent(u, v);
            }
            ok = linked;
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && label[i] == k) label[i++] = 0;
        if (i == n) return false;
        ++label[i];
    }
}

}  // namespace

TEST_SUITE("minors") {
    TEST_CASE("Petersen contains K5 with a valid witness and avoids K6") {
        const auto w = has_minor(petersen(), complete(5));
        REQUIRE(w.contains());
        CHECK(validate_minor_model(petersen(), complete(5), w.branch_sets));
        CHECK(has_minor(petersen(), complete(6)).free());
    }

    TEST_CASE("C4 is K_{1,3}-minor free") {
        CHECK(has_minor(cycle(4), star(3)).free());
        CHECK(star_minor_free(cycle(4), 3));
    }

    TEST_CASE("witness validation rejects bad models") {
        const Graph g = cycle(5);
        const Graph h = complete(3);
        CHECK(validate_minor_model(g, h, std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3, 4}}));
        CHECK_FALSE(validate_minor_model(g, h, std::vector<std::vector<Vertex>>{{0, 2}, {1}, {3, 4}}));
        CHECK_FALSE(validate_minor_model(g, h, std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {3, 4}}));
        CHECK_FALSE(validate_minor_model(g, h, std::vector<std::vector<Vertex>>{{0}, {1}}));
    }

    TEST_CASE("agreement with the brute-force oracle on all graphs up to six vertices") {
        const std::vector<Graph> patterns{complete(3), complete(4), star(3), complete_bipartite(2, 3), cycle(4),
                                          path(4), Graph::from_edges(4, {{0, 1}, {2, 3}})};
        std::size_t checked = 0;
        for (std::size_t n = 1; n <= 6; ++n) {
            for (const auto& g : enumerate_graphs(n)) {
                for (const auto& h : patterns) {
                    const auto w = has_minor(g, h);
                    REQUIRE_FALSE(w.exhausted());
                    const bool expected = brute_force_minor(g, h);
                    CHECK(w.contains() == expected);
                    if (w.contains()) CHECK(validate_minor_model(g, h, w.branch_sets));
                    ++checked;
                }
            }
        }
        CHECK(checked == 7 * (1 + 2 + 4 + 11 + 34 + 156));
    }

    TEST_CASE("star test agrees with the generic search on order 7") {
        for (const auto& g : enumerate_graphs(7)) {
            for (std::size_t b = 2; b <= 5; ++b) CHECK(star_minor_free(g, b) == has_minor(g, star(b)).free());
        }
    }

    TEST_CASE("budget exhaustion is reported, not guessed") {
        const Graph g = join(complete(1), repeat_union(complete(4), 4));
        const auto w = has_minor(g, complete_bipartite(3, 6), 10);
        CHECK(w.exhausted());
        CHECK(w.expansions >= 10);
        CHECK(w.budget == 10);
    }

    TEST_CASE("free verdicts are reproducible") {
        const auto a = has_minor(petersen_complement(), complete_bipartite(3, 6));
        const auto b = has_minor(petersen_complement(), complete_bipartite(3, 6));
        CHECK(a.free());
        CHECK(a.expansions == b.expansions);
    }

    TEST_CASE("(a,b)-property of the Petersen complement at (3, 8)") {
        const auto r = ab_property(petersen_complement(), 3, 8);
        CHECK(r.omega == 3);
        REQUIRE(r.pairs.size() == 3);
        CHECK(r.pairs[0].r == 1);
        CHECK(r.pairs[0].s == 8);
        CHECK(r.pairs[2].r == 3);
        CHECK(r.pairs[2].s == 6);
        CHECK(r.overall);
        CHECK_FALSE(r.inconclusive);
    }

    TEST_CASE("complement criterion agrees with the property on order b + 1") {
        for (auto [a, b] : {std::pair<std::size_t, std::size_t>{2, 4}, {2, 5}, {3, 5}}) {
            for (const auto& g : enumerate_graphs(b + 1, true)) {
                CHECK(ab_property_complement_criterion(g, a, b) == ab_property(g, a, b).overall);
            }
        }
        CHECK_THROWS_AS(ab_property_complement_criterion(complete(5), 2, 5), std::invalid_argument);
    }

    TEST_CASE("clique dominating sets") {
        const Graph g = join(complete(2), repeat_union(complete(3), 2));
        const auto s = find_clique_dominating_set(g, 2);
        REQUIRE(s.has_value());
        CHECK(*s == std::vector<Vertex>{0, 1});
        CHECK_FALSE(find_clique_dominating_set(g, 3).has_value());
        CHECK(find_clique_dominating_set(cycle(5), 0).value().empty());
    }

    TEST_CASE("apex route agrees with the generic search") {
        for (std::size_t k = 1; k <= 2; ++k) {
            const Graph g = join(complete(1), disjoint_union({repeat_union(complete(3), k), complete(2)}));
            const std::vector<Vertex> s{0};
            const auto via_apex = minor_free_given_apex(g, s, 2, 3);
            CHECK(via_apex == (has_minor(g, complete_bipartite(2, 3)).free() ? MinorVerdict::Free : MinorVerdict::Contains));
        }
        // Adding a K_{1,3} worth of edges under the apex creates K_{2,3}.
        const Graph bad = join(complete(1), star(3));
        const std::vector<Vertex> s{0};
        CHECK(minor_free_given_apex(bad, s, 2, 3) == MinorVerdict::Contains);
        CHECK(has_minor(bad, complete_bipartite(2, 3)).contains());
    }

    TEST_CASE("argument checks") {
        CHECK_THROWS_AS(has_minor(cycle(4), Graph(0)), std::invalid_argument);
        CHECK_THROWS_AS(star_minor_free(cycle(4), 0), std::invalid_argument);
        CHECK(has_minor(Graph(2), Graph(3)).free());
    }
}
