#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>
#include <map>
#include <set>

#include "kabminor/canonical.hpp"
#include "kabminor/families.hpp"
#include "kabminor/graph6.hpp"

using namespace kabminor;

namespace {

/// Lexicographically smallest graph6 over all relabellings.
std::string brute_canonical(const Graph& g) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        const std::string s = to_graph6(g.permuted(perm));
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, int one_in) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng() % one_in == 0) b.add_edge(u, v);
        }
    }
    return std::move(b).build();
}

}  // namespace

TEST_SUITE("canonical") {
    TEST_CASE("class counts match the known sequences") {
        // Unlabelled graphs and connected graphs on n = 1..8 vertices.
        const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
        const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
        for (std::size_t n = 1; n <= 8; ++n) {
            CHECK(enumerate_graphs(n).size() == all[n - 1]);
            CHECK(enumerate_graphs(n, true).size() == connected[n - 1]);
        }
        CHECK(enumerate_graphs(0).size() == 1);
        CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
    }

    TEST_CASE("canonical form separates exactly the isomorphism classes up to five vertices") {
        for (std::size_t n = 1; n <= 5; ++n) {
            std::map<std::string, std::string> ours_to_brute;
            std::set<std::string> brute_seen;
            // Every labelled graph on n vertices.
            const std::size_t pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
                GraphBuilder b(n);
                std::size_t bit = 0;
                for (Vertex u = 0; u < n; ++u) {
                    for (Vertex v = u + 1; v < n; ++v, ++bit) {
                        if (mask >> bit & 1) b.add_edge(u, v);
                    }
                }
                const Graph g = std::move(b).build();
                const std::string ours = canonical_form(g);
                const std::string brute = brute_canonical(g);
                const auto [it, fresh] = ours_to_brute.emplace(ours, brute);
                CHECK(it->second == brute);
                brute_seen.insert(brute);
            }
            CHECK(ours_to_brute.size() == brute_seen.size());
        }
    }

    TEST_CASE("invariance under random relabelling up to ten vertices") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 1 + rng() % 10;
            const Graph g = random_graph(rng, n, 1 + static_cast<int>(rng() % 4));
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(g) == canonical_form(g.permuted(perm)));
        }
    }

    TEST_CASE("regular graphs that refinement cannot split") {
        // C6 and two triangles are both 2-regular on six vertices.
        CHECK(canonical_form(cycle(6)) != canonical_form(repeat_union(complete(3), 2)));
        // Petersen graph against the 5-prism, both cubic on ten vertices.
        const Graph prism = Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8},
                                                   {8, 9}, {9, 5}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
        CHECK(canonical_form(petersen()) != canonical_form(prism));
        std::vector<Vertex> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
        CHECK(canonical_form(petersen()) == canonical_form(petersen().permuted(perm)));
    }

    TEST_CASE("the labelling is a permutation and rejects large graphs") {
        const auto perm = canonical_labeling(subdivided_clique(5, 3));
        std::vector<Vertex> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (Vertex v = 0; v < sorted.size(); ++v) CHECK(sorted[v] == v);
        CHECK_THROWS_AS(canonical_labeling(cycle(11)), std::invalid_argument);
    }
}
