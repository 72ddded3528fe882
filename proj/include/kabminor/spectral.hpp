#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kabminor/graph.hpp"

namespace kabminor {

/// alpha in [0, 1). alpha = 1 gives A_1 = D, which every theorem excludes.
class AlphaParam {
public:
    /// Throws std::invalid_argument outside [0, 1).
    explicit AlphaParam(double alpha);
    double value() const noexcept { return alpha_; }
    operator double() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Row-major dense square matrix.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t dim() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::span<const double> data() const noexcept { return data_; }

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    std::vector<double> operator*(std::span<const double> x) const;
    double trace() const;
    bool is_symmetric(double tol = 0.0) const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// alpha * D(G) + (1 - alpha) * A(G)
DenseMatrix alpha_matrix(const Graph& g, AlphaParam alpha);

enum class EigenMethod { Power, Dense };
std::string_view to_string(EigenMethod m);

struct SpectralResult {
    double lambda = 0.0;
    /// Unit vector; positive for connected graphs, zero outside the chosen
    /// component otherwise.
    std::vector<double> perron;
    /// max_v |(A_alpha x)_v - lambda x_v|, evaluated from the graph.
    double residual = 0.0;
    std::size_t iterations = 0;
    EigenMethod method = EigenMethod::Power;
    /// False when the graph is disconnected and the vector is per-component.
    bool is_perron = true;
};

struct SpectralOptions {
    /// Successive Rayleigh quotients must differ by less than this.
    double tol = 1e-12;
    double residual_tol = 1e-10;
    /// 0 selects 100 n ln n + 10^4.
    std::size_t max_iterations = 0;
    /// Skip power iteration and use the dense solver directly.
    bool force_dense = false;
};

/// Largest A_alpha eigenvalue and its Perron vector. Power iteration on
/// A_alpha + I with a cyclic-Jacobi fallback once the iteration cap is hit.
/// Disconnected graphs are solved per component; the largest component radius wins.
SpectralResult spectral_radius(const Graph& g, AlphaParam alpha, const SpectralOptions& opts = {});

/// Entrywise check of lambda x_v = alpha d(v) x_v + (1 - alpha) sum_{u ~ v} x_u.
double eigen_equation_residual(const Graph& g, AlphaParam alpha, double lambda,
                               std::span<const double> x);

/// Largest residual seen by spectral_radius since the last reset (process-wide).
double spectral_residual_watermark();
void reset_spectral_residual_watermark();

struct EigenDecomposition {
    /// Descending.
    std::vector<double> values;
    /// Column j of `vectors` pairs with values[j].
    DenseMatrix vectors;
    std::size_t sweeps = 0;
};

/// Cyclic Jacobi rotations for a symmetric matrix.
EigenDecomposition jacobi_eigen(const DenseMatrix& m, double tol = 1e-15, std::size_t max_sweeps = 100);

using Partition = std::vector<std::vector<Vertex>>;

struct QuotientMatrix {
    Partition partition;
    /// entries(i, j) is the average row sum of block (i, j) of A_alpha.
    DenseMatrix entries;
    bool equitable = false;
};

/// Throws std::invalid_argument unless the classes are nonempty, disjoint and cover V.
QuotientMatrix quotient(const Graph& g, AlphaParam alpha, const Partition& partition);

/// Spectral radius of a nonnegative quotient matrix. Uses the symmetrisation
/// diag(|V_i|)^{1/2} C diag(|V_i|)^{-1/2}, so the quotient must be equitable.
double quotient_spectral_radius(const QuotientMatrix& q);

struct QuotientRadiusCheck {
    double rho_quotient = 0.0;
    double rho_full = 0.0;
    double difference = 0.0;
};

/// Throws std::invalid_argument when the partition is not equitable.
QuotientRadiusCheck quotient_radius_check(const Graph& g, AlphaParam alpha, const Partition& partition);

struct PerronStats {
    std::vector<Vertex> clique;
    std::vector<Vertex> scope;
    double lambda = 0.0;
    double x_s = 0.0;
    double x_max = 0.0;
    double x_min = 0.0;
    /// The constant bounding the maximum degree inside the scope.
    double c = 0.0;
    /// (1 - alpha) X_s / (lambda - alpha |S|)
    double lower_bound = 0.0;
    /// (1 - alpha) X_s / (lambda - alpha |S| - c); absent when the denominator is not positive.
    std::optional<double> upper_bound;
    /// X_m - lower_bound
    double lower_margin = 0.0;
    /// upper_bound - X_M
    std::optional<double> upper_margin;
    bool lower_holds = false;
    bool upper_holds = false;
};

/// S must be a clique of dominating vertices, scope a nonempty subset of V \ S.
/// When c is not given it is taken as Delta(G[scope]) + 1.
PerronStats perron_stats(const Graph& g, AlphaParam alpha, std::span<const Vertex> clique,
                         std::span<const Vertex> scope, std::optional<double> c = std::nullopt);

struct XyIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

/// x^T y (lambda(H) - lambda(G)) against x^T (A_alpha(H) - A_alpha(G)) y, with
/// both bilinear forms evaluated edge by edge.
XyIdentity xy_identity_check(const Graph& g, const Graph& h, AlphaParam alpha);

/// Integer vector kept in non-increasing order.
class DegreeVector {
public:
    DegreeVector() = default;
    /// Sorts the entries non-increasing.
    explicit DegreeVector(std::vector<long long> entries);
    static DegreeVector of(const Graph& g);

    const std::vector<long long>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    long long sum() const;

private:
    std::vector<long long> entries_;
};

/// X majorized by Y: every proper prefix sum of X is at most Y's and the totals agree.
bool majorized(const DegreeVector& x, const DegreeVector& y);
long long dot(const DegreeVector& x, const DegreeVector& z);
/// X^T Z <= Y^T Z.
bool dot_inequality(const DegreeVector& x, const DegreeVector& y, const DegreeVector& z);

}  // namespace kabminor
