#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "kabminor/families.hpp"

using namespace kabminor;

TEST_SUITE("families") {
    TEST_CASE("parameter decomposition") {
        const auto p = FamilyParams::make(2, 3, 8);
        CHECK(p.k == 2);
        CHECK(p.t == 1);
        CHECK(p.tau() == 1);
        CHECK(p.omega() == 2);
        CHECK(FamilyParams::make(3, 8, 21).t == 3);
        CHECK(tau_of(2, 5) == 2);
        CHECK(omega_of(5, 5) == 3);
        CHECK(binom2(6) == 15);
        CHECK_THROWS_AS(FamilyParams::make(4, 3, 10), std::invalid_argument);
        CHECK_THROWS_AS(FamilyParams::make(0, 3, 10), std::invalid_argument);
    }

    TEST_CASE("clause names round trip") {
        for (auto c : {Clause::T13_i, Clause::T13_ii, Clause::T14_i_special, Clause::T14_i, Clause::T14_ii_special,
                       Clause::T14_ii, Clause::OutsideTheorem}) {
            CHECK(clause_from_string(to_string(c)) == c);
        }
        CHECK_FALSE(clause_from_string("nope").has_value());
    }

    TEST_CASE("star forest has the advertised stars") {
        // (a, b) = (2, 5): two stars on six vertices, both K_{1,2}.
        const Graph f = star_forest(2, 5);
        CHECK(f.order() == 6);
        CHECK(f.components().size() == 2);
        CHECK(f.size() == 4);
        // (a, b) = (2, 6): K_{1,3} and K_{1,2}.
        const Graph g = star_forest(2, 6);
        CHECK(g.components().size() == 2);
        CHECK(g.max_degree() == 3);
        CHECK(star_forest_complement(2, 5).size() == binom2(6) - 4);
    }

    TEST_CASE("F(a1,a2,a3) structure") {
        for (std::size_t a1 = 0; a1 <= 5; ++a1) {
            for (std::size_t a2 = 0; a1 + a2 <= 5; ++a2) {
                const Graph g = f_graph(a1, a2, 5 - a1 - a2, 6);
                CHECK(g.order() == 8);
                CHECK(g.size() == binom2(6) + 2);
            }
        }
        const Graph g = f_graph(2, 0, 3, 6);
        CHECK(g.degree(6) == 2);
        CHECK(g.degree(5) == 3);
        CHECK(g.degree(7) == 4);
        CHECK_THROWS_AS(f_graph(2, 2, 2, 6), std::invalid_argument);
    }

    TEST_CASE("Petersen graph and its complement") {
        const Graph p = petersen();
        CHECK(p.size() == 15);
        CHECK(p.is_regular());
        CHECK(p.max_degree() == 3);
        const Graph c = petersen_complement();
        CHECK(c.size() == 30);
        CHECK(c.max_degree() == 6);
        // Girth five: no triangles and no four-cycles, so any two vertices share at most one neighbour.
        for (Vertex u = 0; u < 10; ++u) {
            for (Vertex v = u + 1; v < 10; ++v) {
                std::size_t common = 0;
                for (Vertex w = 0; w < 10; ++w) common += p.adjacent(u, w) && p.adjacent(v, w);
                CHECK(common == (p.adjacent(u, v) ? 0u : 1u));
            }
        }
    }

    TEST_CASE("subdivided clique") {
        CHECK(subdivided_clique(3, 1) == cycle(4).permuted(std::vector<Vertex>{0, 3, 1, 2}));
        CHECK(subdivided_clique(3, 1).is_regular());
        CHECK(subdivided_clique(4, 0) == complete(4));
        for (std::size_t k = 2; k <= 5; ++k) {
            const auto degs = subdivided_clique(5, k).degrees();
            CHECK(std::count(degs.begin(), degs.end(), 2u) == static_cast<long>(k));
            CHECK(subdivided_clique(5, k).size() == binom2(5) + k);
        }
    }

    TEST_CASE("clique with pendants") {
        const Graph g = clique_with_pendants(5);
        CHECK(g.order() == 7);
        CHECK(g.size() == binom2(5) - 1 + 2);
        CHECK(g.degree(5) == 1);
        CHECK(g.degree(6) == 1);
    }

    TEST_CASE("dominated matching graph") {
        const Graph g = dominated_matching_graph(6, 4);
        CHECK(g.order() == 7);
        CHECK(g.degree(0) == 5);
        CHECK(g.degree(6) == 4);
        CHECK_THROWS_AS(dominated_matching_graph(6, 3), std::invalid_argument);
        CHECK_THROWS_AS(dominated_matching_graph(6, 6), std::invalid_argument);
    }

    TEST_CASE("extremal families have order n and an apex clique") {
        const auto p = FamilyParams::make(2, 3, 8);
        const Graph g = extremal_family(p, Clause::T14_ii);
        CHECK(g.order() == 8);
        CHECK(g.degree(0) == 7);
        const Graph pb = extremal_family(FamilyParams::make(4, 8, 21), Clause::T14_ii_special);
        CHECK(pb.order() == 21);
        for (Vertex v = 0; v < 3; ++v) CHECK(pb.degree(v) == 20);
        const Graph fb = extremal_family(FamilyParams::make(2, 5, 13), Clause::T14_i_special);
        CHECK(fb.order() == 13);
        CHECK_THROWS_AS(extremal_family(FamilyParams::make(2, 5, 13), Clause::T13_i), std::invalid_argument);
    }
}
