#include "kabminor/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kabminor {

namespace {

std::atomic<double> g_residual_watermark{0.0};

void note_residual(double r) {
    double cur = g_residual_watermark.load(std::memory_order_relaxed);
    while (r > cur && !g_residual_watermark.compare_exchange_weak(cur, r, std::memory_order_relaxed)) {
    }
}

struct LocalGraph {
    std::vector<std::vector<std::size_t>> adj;
    std::vector<double> deg;
};

LocalGraph local_component(const Graph& g, const std::vector<Vertex>& comp) {
    std::vector<std::size_t> index(g.order(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = i;
    LocalGraph lg;
    lg.adj.resize(comp.size());
    lg.deg.resize(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex w : g.neighbors(comp[i])) lg.adj[i].push_back(index[w]);
        lg.deg[i] = static_cast<double>(lg.adj[i].size());
    }
    return lg;
}

void normalize(std::vector<double>& x) {
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0) {
        for (double& v : x) v /= norm;
    }
    // Perron vectors are reported with a positive sum.
    if (std::accumulate(x.begin(), x.end(), 0.0) < 0) {
        for (double& v : x) v = -v;
    }
}

struct ComponentEigen {
    double lambda = 0.0;
    std::vector<double> x;
    std::size_t iterations = 0;
    EigenMethod method = EigenMethod::Power;
};

ComponentEigen dense_component(const LocalGraph& lg, double alpha) {
    const std::size_t m = lg.adj.size();
    DenseMatrix mat(m);
    for (std::size_t i = 0; i < m; ++i) {
        mat(i, i) = alpha * lg.deg[i];
        for (std::size_t j : lg.adj[i]) mat(i, j) = 1.0 - alpha;
    }
    auto eig = jacobi_eigen(mat);
    ComponentEigen out;
    out.lambda = eig.values.front();
    out.x.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.x[i] = eig.vectors(i, 0);
    normalize(out.x);
    out.iterations = eig.sweeps;
    out.method = EigenMethod::Dense;
    return out;
}

ComponentEigen power_component(const LocalGraph& lg, double alpha, const SpectralOptions& opts,
                               bool& converged) {
    const std::size_t m = lg.adj.size();
    const double nd = static_cast<double>(m);
    const std::size_t cap = opts.max_iterations
                                ? opts.max_iterations
                                : static_cast<std::size_t>(100.0 * nd * std::log(std::max(nd, 1.0))) + 10000;
    std::vector<double> x(m, 1.0 / std::sqrt(nd));
    std::vector<double> y(m);
    double rho_prev = 0.0;
    ComponentEigen out;
    converged = false;
    for (std::size_t it = 1; it <= cap; ++it) {
        // y = (A_alpha + I) x
        for (std::size_t i = 0; i < m; ++i) {
            double s = 0.0;
            for (std::size_t j : lg.adj[i]) s += x[j];
            y[i] = (alpha * lg.deg[i] + 1.0) * x[i] + (1.0 - alpha) * s;
        }
        double rho = 0.0;
        for (std::size_t i = 0; i < m; ++i) rho += x[i] * y[i];
        const double lambda = rho - 1.0;
        double res = 0.0;
        for (std::size_t i = 0; i < m; ++i) res = std::max(res, std::abs(y[i] - x[i] - lambda * x[i]));
        if (it > 1 && std::abs(rho - rho_prev) < opts.tol && res < opts.residual_tol) {
            out.lambda = lambda;
            out.x = x;
            out.iterations = it;
            converged = true;
            return out;
        }
        rho_prev = rho;
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
    }
    out.iterations = cap;
    return out;
}

}  // namespace

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1), got " + std::to_string(alpha));
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    DenseMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix rows must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("matrix dimension mismatch");
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

std::vector<double> DenseMatrix::operator*(std::span<const double> x) const {
    if (x.size() != n_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    }
    return y;
}

double DenseMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool DenseMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        }
    }
    return true;
}

DenseMatrix alpha_matrix(const Graph& g, AlphaParam alpha) {
    const std::size_t n = g.order();
    DenseMatrix m(n);
    for (Vertex v = 0; v < n; ++v) {
        m(v, v) = alpha * static_cast<double>(g.degree(v));
        for (Vertex u : g.neighbors(v)) m(v, u) = 1.0 - alpha;
    }
    return m;
}

std::string_view to_string(EigenMethod m) { return m == EigenMethod::Power ? "power" : "dense"; }

EigenDecomposition jacobi_eigen(const DenseMatrix& input, double tol, std::size_t max_sweeps) {
    if (!input.is_symmetric(1e-12)) throw std::invalid_argument("jacobi_eigen needs a symmetric matrix");
    const std::size_t n = input.dim();
    DenseMatrix a = input;
    DenseMatrix v = DenseMatrix::identity(n);
    double frob = 0.0;
    for (double x : a.data()) frob += x * x;
    const double target = tol * tol * frob;

    EigenDecomposition out;
    for (; out.sweeps < max_sweeps; ++out.sweeps) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        }
        if (off <= target || off == 0.0) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });
    out.values.resize(n);
    out.vectors = DenseMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

double eigen_equation_residual(const Graph& g, AlphaParam alpha, double lambda, std::span<const double> x) {
    if (x.size() != g.order()) throw std::invalid_argument("vector length does not match graph order");
    double worst = 0.0;
    for (Vertex v = 0; v < g.order(); ++v) {
        double s = 0.0;
        for (Vertex u : g.neighbors(v)) s += x[u];
        const double rhs = alpha * static_cast<double>(g.degree(v)) * x[v] + (1.0 - alpha) * s;
        worst = std::max(worst, std::abs(lambda * x[v] - rhs));
    }
    return worst;
}

double spectral_residual_watermark() { return g_residual_watermark.load(); }

void reset_spectral_residual_watermark() { g_residual_watermark.store(0.0); }

SpectralResult spectral_radius(const Graph& g, AlphaParam alpha, const SpectralOptions& opts) {
    if (g.empty()) throw std::invalid_argument("spectral_radius needs a nonempty graph");
    const auto comps = g.components();

    SpectralResult best;
    bool have = false;
    std::size_t best_comp = 0;
    ComponentEigen best_eig;
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& comp = comps[ci];
        ComponentEigen eig;
        if (comp.size() == 1) {
            eig.lambda = 0.0;
            eig.x = {1.0};
            eig.method = opts.force_dense ? EigenMethod::Dense : EigenMethod::Power;
        } else {
            const auto lg = local_component(g, comp);
            bool converged = false;
            if (!opts.force_dense) eig = power_component(lg, alpha, opts, converged);
            if (!converged) {
                const std::size_t spent = eig.iterations;
                eig = dense_component(lg, alpha);
                eig.iterations += spent;
            }
            normalize(eig.x);
        }
        if (!have || eig.lambda > best_eig.lambda) {
            best_eig = std::move(eig);
            best_comp = ci;
            have = true;
        }
    }

    best.lambda = best_eig.lambda;
    best.iterations = best_eig.iterations;
    best.method = best_eig.method;
    best.is_perron = comps.size() == 1;
    best.perron.assign(g.order(), 0.0);
    for (std::size_t i = 0; i < comps[best_comp].size(); ++i) best.perron[comps[best_comp][i]] = best_eig.x[i];
    best.residual = eigen_equation_residual(g, alpha, best.lambda, best.perron);
    note_residual(best.residual);
    return best;
}

QuotientMatrix quotient(const Graph& g, AlphaParam alpha, const Partition& partition) {
    const std::size_t n = g.order();
    const std::size_t k = partition.size();
    std::vector<std::size_t> cls(n, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (partition[i].empty()) throw std::invalid_argument("partition has an empty class");
        for (Vertex v : partition[i]) {
            if (v >= n) throw std::invalid_argument("partition names a vertex outside the graph");
            if (cls[v] != k) throw std::invalid_argument("partition classes overlap");
            cls[v] = i;
        }
    }
    if (std::find(cls.begin(), cls.end(), k) != cls.end()) {
        throw std::invalid_argument("partition does not cover every vertex");
    }

    QuotientMatrix q;
    q.partition = partition;
    q.entries = DenseMatrix(k);
    q.equitable = true;
    for (std::size_t i = 0; i < k; ++i) {
        // Equitable for A_alpha (alpha < 1) iff the neighbour counts into each
        // class are constant across class i; compare them as integers.
        std::vector<std::size_t> first_counts;
        for (std::size_t idx = 0; idx < partition[i].size(); ++idx) {
            const Vertex v = partition[i][idx];
            std::vector<std::size_t> counts(k, 0);
            for (Vertex u : g.neighbors(v)) ++counts[cls[u]];
            for (std::size_t j = 0; j < k; ++j) {
                double rowsum = (1.0 - alpha) * static_cast<double>(counts[j]);
                if (i == j) rowsum += alpha * static_cast<double>(g.degree(v));
                q.entries(i, j) += rowsum;
            }
            if (idx == 0) {
                first_counts = counts;
            } else if (counts != first_counts) {
                q.equitable = false;
            }
        }
        for (std::size_t j = 0; j < k; ++j) q.entries(i, j) /= static_cast<double>(partition[i].size());
    }
    return q;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
    if (!q.equitable) throw std::invalid_argument("quotient_spectral_radius needs an equitable quotient");
    const std::size_t k = q.entries.dim();
    DenseMatrix sym(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double si = static_cast<double>(q.partition[i].size());
            const double sj = static_cast<double>(q.partition[j].size());
            sym(i, j) = q.entries(i, j) * std::sqrt(si / sj);
        }
    }
    // Round-off from the averaging; the symmetrised matrix is symmetric in exact arithmetic.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
    }
    return jacobi_eigen(sym).values.front();
}

QuotientRadiusCheck quotient_radius_check(const Graph& g, AlphaParam alpha, const Partition& partition) {
    const auto q = quotient(g, alpha, partition);
    if (!q.equitable) throw std::invalid_argument("partition is not equitable");
    QuotientRadiusCheck out;
    out.rho_quotient = quotient_spectral_radius(q);
    out.rho_full = spectral_radius(g, alpha).lambda;
    out.difference = std::abs(out.rho_quotient - out.rho_full);
    return out;
}

PerronStats perron_stats(const Graph& g, AlphaParam alpha, std::span<const Vertex> clique,
                         std::span<const Vertex> scope, std::optional<double> c) {
    const std::size_t n = g.order();
    std::vector<char> in_s(n, 0);
    for (Vertex v : clique) {
        if (v >= n || g.degree(v) != n - 1) {
            throw std::invalid_argument("perron_stats: S must be a clique of dominating vertices");
        }
        in_s[v] = 1;
    }
    if (scope.empty()) throw std::invalid_argument("perron_stats: scope is empty");
    for (Vertex v : scope) {
        if (v >= n || in_s[v]) throw std::invalid_argument("perron_stats: scope must lie in V \\ S");
    }

    const auto res = spectral_radius(g, alpha);
    PerronStats st;
    st.clique.assign(clique.begin(), clique.end());
    st.scope.assign(scope.begin(), scope.end());
    st.lambda = res.lambda;
    for (Vertex v : clique) st.x_s += res.perron[v];
    st.x_max = res.perron[scope.front()];
    st.x_min = res.perron[scope.front()];
    for (Vertex v : scope) {
        st.x_max = std::max(st.x_max, res.perron[v]);
        st.x_min = std::min(st.x_min, res.perron[v]);
    }
    if (c) {
        st.c = *c;
    } else {
        st.c = static_cast<double>(g.induced(scope).max_degree()) + 1.0;
    }
    const double s = static_cast<double>(clique.size());
    st.lower_bound = (1.0 - alpha) * st.x_s / (st.lambda - alpha * s);
    st.lower_margin = st.x_min - st.lower_bound;
    st.lower_holds = st.lower_margin >= -1e-12;
    const double denom = st.lambda - alpha * s - st.c;
    if (denom > 0) {
        st.upper_bound = (1.0 - alpha) * st.x_s / denom;
        st.upper_margin = *st.upper_bound - st.x_max;
        st.upper_holds = *st.upper_margin > 0;
    }
    return st;
}

namespace {

double bilinear(const Graph& g, double alpha, std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (auto [u, v] : g.edges()) {
        s += alpha * (x[u] * y[u] + x[v] * y[v]) + (1.0 - alpha) * (x[u] * y[v] + x[v] * y[u]);
    }
    return s;
}

}  // namespace

XyIdentity xy_identity_check(const Graph& g, const Graph& h, AlphaParam alpha) {
    if (g.order() != h.order()) throw std::invalid_argument("xy_identity_check needs graphs of equal order");
    if (!g.is_connected() || !h.is_connected()) {
        throw std::invalid_argument("xy_identity_check needs connected graphs");
    }
    const auto rg = spectral_radius(g, alpha);
    const auto rh = spectral_radius(h, alpha);
    const auto& x = rg.perron;
    const auto& y = rh.perron;
    double xy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) xy += x[i] * y[i];
    XyIdentity out;
    out.lhs = xy * (rh.lambda - rg.lambda);
    out.rhs = bilinear(h, alpha, x, y) - bilinear(g, alpha, x, y);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

DegreeVector::DegreeVector(std::vector<long long> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

DegreeVector DegreeVector::of(const Graph& g) {
    std::vector<long long> d;
    for (auto x : g.degree_sequence()) d.push_back(static_cast<long long>(x));
    return DegreeVector(std::move(d));
}

long long DegreeVector::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0LL); }

bool majorized(const DegreeVector& x, const DegreeVector& y) {
    if (x.size() != y.size()) throw std::invalid_argument("majorization needs vectors of equal length");
    long long px = 0, py = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        px += x.entries()[i];
        py += y.entries()[i];
        if (px > py) return false;
    }
    return x.sum() == y.sum();
}

long long dot(const DegreeVector& x, const DegreeVector& z) {
    if (x.size() != z.size()) throw std::invalid_argument("dot needs vectors of equal length");
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x.entries()[i] * z.entries()[i];
    return s;
}

bool dot_inequality(const DegreeVector& x, const DegreeVector& y, const DegreeVector& z) {
    return dot(x, z) <= dot(y, z);
}

}  // namespace kabminor
