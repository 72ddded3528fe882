#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kabminor/spectral.hpp"

namespace kabminor {

/// Coefficients of det(xI - M), highest degree first (so the list starts with 1).
/// Faddeev-LeVerrier recurrence; the only divisions are by the step index.
std::vector<double> char_poly(const DenseMatrix& m);

/// Horner evaluation of a highest-degree-first coefficient list.
double poly_eval(std::span<const double> coeffs, double x);

/// Relative agreement |p - q| <= rtol * max(|p|, |q|, 1) for each coefficient pair.
bool coefficients_close(std::span<const double> p, std::span<const double> q, double rtol = 1e-8);

/// b - 1 - 2(1 - alpha)/(b - 1): the lower bound on the radius of S^{n-b}(K_b).
double updown_bound(double b, double alpha);

/// The cubic whose largest root is the radius of S^1(K_b).
std::vector<double> f1_coefficients(double b, double alpha);
double f1_eval(double b, double alpha, double x);
/// Closed form of f1 at updown_bound(b, alpha).
double f1_at_bound(double b, double alpha);

/// The cubic whose largest root is the radius of clique_with_pendants(b).
std::vector<double> f2_coefficients(double b, double alpha);
double f2_eval(double b, double alpha, double x);
double f2_at_bound(double b, double alpha);

/// Cubic without constant term tied to dominated_matching_graph(b, u2):
/// h(lambda) = g(u2) at its A_alpha radius.
double h_eval(double b, double alpha, double u2, double x);
/// (1 - alpha)^2 y^2 + (b alpha^2 - 1)(b - 1) y
double g_eval(double b, double alpha, double y);

/// The 3x3 equitable quotient of A_alpha(S^1(K_b)) for the classes
/// {subdivision vertex}, {its two neighbours}, {remaining b - 2 vertices}.
DenseMatrix subdivided_clique_quotient(double b, double alpha);
/// Matching partition of subdivided_clique(b, 1), in the same class order.
Partition subdivided_clique_partition(std::size_t b);

/// Classes {pendants}, {their clique neighbours}, {remaining b - 2 vertices} of clique_with_pendants(b).
Partition clique_with_pendants_partition(std::size_t b);

/// Classes {v*} + U1, U2, {w} of dominated_matching_graph(b, u2).
Partition dominated_matching_partition(std::size_t b, std::size_t u2);

}  // namespace kabminor
