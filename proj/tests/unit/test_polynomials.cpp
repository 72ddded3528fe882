#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "kabminor/families.hpp"
#include "kabminor/polynomials.hpp"

using namespace kabminor;

TEST_SUITE("polynomials") {
    TEST_CASE("characteristic polynomials of small adjacency matrices") {
        const auto k3 = char_poly(DenseMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
        CHECK(coefficients_close(k3, std::vector<double>{1, 0, -3, -2}, 1e-12));
        const auto p4 = char_poly(DenseMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}));
        CHECK(coefficients_close(p4, std::vector<double>{1, 0, -3, 0, 1}, 1e-12));
        CHECK(char_poly(DenseMatrix(0)) == std::vector<double>{1});
    }

    TEST_CASE("Horner evaluation") {
        const std::vector<double> p{2, -3, 0, 5};
        CHECK(poly_eval(p, 2.0) == doctest::Approx(2 * 8 - 3 * 4 + 5));
        CHECK(poly_eval(std::vector<double>{}, 3.0) == 0.0);
    }

    TEST_CASE("f1 and f2 are the characteristic polynomials of the graph quotients") {
        for (std::size_t b = 3; b <= 10; ++b) {
            for (double a : {0.0, 0.25, 0.5, 0.9}) {
                const auto q1 = quotient(subdivided_clique(b, 1), AlphaParam(a), subdivided_clique_partition(b));
                CHECK(q1.equitable);
                CHECK(coefficients_close(char_poly(q1.entries), f1_coefficients(static_cast<double>(b), a)));
                const auto q2 = quotient(clique_with_pendants(b), AlphaParam(a), clique_with_pendants_partition(b));
                CHECK(q2.equitable);
                CHECK(coefficients_close(char_poly(q2.entries), f2_coefficients(static_cast<double>(b), a)));
            }
        }
    }

    TEST_CASE("largest roots of f1 and f2 are the graph radii") {
        for (std::size_t b = 3; b <= 8; ++b) {
            const double a = 0.4;
            const double l1 = spectral_radius(subdivided_clique(b, 1), AlphaParam(a)).lambda;
            const double l2 = spectral_radius(clique_with_pendants(b), AlphaParam(a)).lambda;
            CHECK(std::abs(f1_eval(static_cast<double>(b), a, l1)) <= 1e-8 * l1 * l1 * l1);
            CHECK(std::abs(f2_eval(static_cast<double>(b), a, l2)) <= 1e-8 * l2 * l2 * l2);
        }
    }

    TEST_CASE("bound chain: equality at b = 3") {
        for (double a : {0.0, 0.3, 0.7}) {
            CHECK(updown_bound(3, a) == doctest::Approx(1 + a));
            CHECK(updown_bound(7, a) > 7 - 2 + a);
        }
        CHECK(updown_bound(3, 0.0) == doctest::Approx(1.0));
    }

    TEST_CASE("closed forms at the bound match Horner and are negative") {
        for (std::size_t b = 3; b <= 12; ++b) {
            for (double a : {0.0, 0.1, 0.5, 0.9}) {
                const double bd = static_cast<double>(b);
                const double x = updown_bound(bd, a);
                CHECK(f1_at_bound(bd, a) == doctest::Approx(f1_eval(bd, a, x)).epsilon(1e-10));
                CHECK(f2_at_bound(bd, a) == doctest::Approx(f2_eval(bd, a, x)).epsilon(1e-10));
                CHECK(f1_at_bound(bd, a) < 0);
                CHECK(f2_at_bound(bd, a) < 0);
            }
        }
    }

    TEST_CASE("g(b-2) - g(2) = (b-4)(ab-1)^2") {
        for (int b = 3; b <= 12; ++b) {
            for (double a : {0.0, 0.2, 0.6, 0.9}) {
                const double lhs = g_eval(b, a, b - 2) - g_eval(b, a, 2);
                CHECK(lhs == doctest::Approx((b - 4) * (a * b - 1) * (a * b - 1)).epsilon(1e-12).scale(1.0));
            }
        }
        // g(y) = (1-a)^2 y^2 + (b a^2 - 1)(b - 1) y, evaluated by hand at b = 5, a = 0.5, y = 2.
        CHECK(g_eval(5, 0.5, 2) == doctest::Approx(0.25 * 4 + 0.25 * 4 * 2));
    }

    TEST_CASE("h at the radius of the dominated matching graph equals g") {
        for (std::size_t b : {4u, 6u, 8u}) {
            for (std::size_t u2 = 2; u2 <= b - 2; u2 += 2) {
                for (double a : {0.0, 0.5, 0.8}) {
                    const double l = spectral_radius(dominated_matching_graph(b, u2), AlphaParam(a)).lambda;
                    const double h = h_eval(static_cast<double>(b), a, static_cast<double>(u2), l);
                    const double g = g_eval(static_cast<double>(b), a, static_cast<double>(u2));
                    CHECK(h == doctest::Approx(g).epsilon(1e-8).scale(1.0));
                }
            }
        }
    }

    TEST_CASE("partitions are equitable") {
        CHECK(quotient(dominated_matching_graph(6, 2), AlphaParam(0.3), dominated_matching_partition(6, 2)).equitable);
        const auto m = subdivided_clique_quotient(5, 0.2);
        const auto q = quotient(subdivided_clique(5, 1), AlphaParam(0.2), subdivided_clique_partition(5));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) CHECK(m(i, j) == doctest::Approx(q.entries(i, j)).epsilon(1e-14));
        }
    }
}
