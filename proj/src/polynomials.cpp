#include "kabminor/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kabminor {

std::vector<double> char_poly(const DenseMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    DenseMatrix m(n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I ;  c_k = -tr(A M_k) / k
        DenseMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
        m = std::move(next);
        c[k] = -(a * m).trace() / static_cast<double>(k);
    }
    return c;
}

double poly_eval(std::span<const double> coeffs, double x) {
    double acc = 0.0;
    for (double c : coeffs) acc = acc * x + c;
    return acc;
}

bool coefficients_close(std::span<const double> p, std::span<const double> q, double rtol) {
    if (p.size() != q.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double scale = std::max({std::abs(p[i]), std::abs(q[i]), 1.0});
        if (std::abs(p[i] - q[i]) > rtol * scale) return false;
    }
    return true;
}

double updown_bound(double b, double alpha) { return b - 1.0 - 2.0 * (1.0 - alpha) / (b - 1.0); }

std::vector<double> f1_coefficients(double b, double a) {
    return {
        1.0,
        -(a * b + b + 3 * a - 3),
        a * b * b + (2 * a * a + 2 * a - 2) * b + 2 * a * a - 7 * a + 2,
        -2 * a * a * b * b + (2 * a * a + 2) * b - 4 * a * a + 8 * a - 6,
    };
}

double f1_eval(double b, double alpha, double x) { return poly_eval(f1_coefficients(b, alpha), x); }

double f1_at_bound(double b, double a) {
    return -4.0 * (1 - a) * (1 - a) * (b - 2) * ((2 - a) * b * b - 4 * b + 3 * a) / std::pow(b - 1, 3);
}

std::vector<double> f2_coefficients(double b, double a) {
    return {
        1.0,
        -(a * b + b + 2 * a - 3),
        a * b * b + (a * a + a - 2) * b + 2 * a * a - 6 * a + 3,
        -a * a * b * b + (a * a + 1) * b - 2 * a * a + 4 * a - 3,
    };
}

double f2_eval(double b, double alpha, double x) { return poly_eval(f2_coefficients(b, alpha), x); }

double f2_at_bound(double b, double a) {
    return -2.0 * (1 - a) * (1 - a) * (b - 2) * ((3 - a) * b * b - 6 * b + 5 * a - 1) / std::pow(b - 1, 3);
}

double h_eval(double b, double a, double u2, double x) {
    const double c2 = a * u2 + b * a + a + b - 3;
    const double c1 = (b * a * a + a * a + b * a - 3 * a) * u2 + b * b * a - a - 2 * b + 2;
    return ((x - c2) * x + c1) * x;
}

double g_eval(double b, double a, double y) { return (1 - a) * (1 - a) * y * y + (b * a * a - 1) * (b - 1) * y; }

DenseMatrix subdivided_clique_quotient(double b, double a) {
    return DenseMatrix::from_rows({
        {2 * a, 2 * (1 - a), 0.0},
        {1 - a, (b - 1) * a, (b - 2) * (1 - a)},
        {0.0, 2 * (1 - a), (b - 1) * a + (b - 3) * (1 - a)},
    });
}

Partition subdivided_clique_partition(std::size_t b) {
    if (b < 3) throw std::invalid_argument("subdivided_clique_partition needs b >= 3");
    Partition p{{b}, {0, 1}, {}};
    for (Vertex v = 2; v < b; ++v) p[2].push_back(v);
    return p;
}

Partition clique_with_pendants_partition(std::size_t b) {
    if (b < 3) throw std::invalid_argument("clique_with_pendants_partition needs b >= 3");
    Partition p{{b, b + 1}, {0, 1}, {}};
    for (Vertex v = 2; v < b; ++v) p[2].push_back(v);
    return p;
}

Partition dominated_matching_partition(std::size_t b, std::size_t u2) {
    const std::size_t u1 = b - 1 - u2;
    Partition p(3);
    for (Vertex v = 0; v <= u1; ++v) p[0].push_back(v);
    for (Vertex v = u1 + 1; v < b; ++v) p[1].push_back(v);
    p[2].push_back(b);
    return p;
}

}  // namespace kabminor
