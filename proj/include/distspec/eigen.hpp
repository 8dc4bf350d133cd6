// Dense symmetric eigensolving via cyclic Jacobi rotations, least-eigenpair
// extraction, Rayleigh quadratic forms, the complement distance identity
// check, and Cauchy interlacing verification.
//
// The solver is deterministic: fixed sweep order, no pivot search, identical
// results for identical input. Convergence is declared when the off-diagonal
// Frobenius norm drops below 1e-13 * ||M||_F.
#pragma once

#include "distspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace distspec {

class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    // Validates symmetry (1e-12 entrywise) and finiteness.
    static SymMatrix from_rows(int n, const std::vector<double>& rows) {
        if (rows.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("matrix storage size mismatch");
        SymMatrix m(n);
        m.a_ = rows;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!std::isfinite(m(i, j)))
                    throw std::invalid_argument("matrix entry is not finite");
                if (std::abs(m(i, j) - m(j, i)) > 1e-12)
                    throw std::invalid_argument("matrix is not symmetric");
            }
        return m;
    }

    static SymMatrix from_distances(const DistanceMatrix& d) {
        SymMatrix m(d.order());
        for (int i = 0; i < d.order(); ++i)
            for (int j = 0; j < d.order(); ++j) m(i, j) = d(i, j);
        return m;
    }

    int dim() const noexcept { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double frobenius() const {
        double s = 0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

    double trace() const {
        double s = 0;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }

    SymMatrix principal_submatrix(std::span<const int> idx) const {
        const int m = static_cast<int>(idx.size());
        if (m < 1) throw std::invalid_argument("empty index set");
        for (std::size_t a = 0; a < idx.size(); ++a) {
            if (idx[a] < 0 || idx[a] >= n_) throw std::out_of_range("submatrix index out of range");
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (idx[a] == idx[b]) throw std::invalid_argument("repeated submatrix index");
        }
        SymMatrix s(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) s(i, j) = (*this)(idx[i], idx[j]);
        return s;
    }

private:
    int n_;
    std::vector<double> a_;
};

// J - I + A(g): equals D(g^c) entrywise whenever diameter(g) > 3.
inline SymMatrix j_minus_i_plus_a(const Graph& g) {
    const int n = g.order();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = (i == j) ? 0.0 : (g.has_edge(i, j) ? 2.0 : 1.0);
    return m;
}

struct Spectrum {
    std::vector<double> values; // sorted non-increasing
    double residual_bound;      // max_i ||M v_i - lambda_i v_i||_2
    double least() const { return values.back(); }
};

struct EigenPair {
    double value;
    std::vector<double> vector; // unit norm; first entry of largest magnitude >= 0
    double residual;
};

struct EigenSystem {
    std::vector<double> values;  // sorted non-increasing
    std::vector<double> vectors; // column-major, column i pairs with values[i]
    double residual_bound;
    int sweeps;
};

namespace detail {

constexpr double jacobi_rel_tol = 1e-13;
constexpr int jacobi_max_sweeps = 100;

inline double off_norm(const SymMatrix& a) {
    double s = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

} // namespace detail

inline EigenSystem jacobi_eigensystem(const SymMatrix& m) {
    const int n = m.dim();
    SymMatrix a = m;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    const double fnorm = m.frobenius();
    const double threshold = detail::jacobi_rel_tol * fnorm;
    int sweeps = 0;
    while (detail::off_norm(a) > threshold && fnorm > 0) {
        if (++sweeps > detail::jacobi_max_sweeps)
            throw std::runtime_error("jacobi eigensolver failed to converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(p, k) = a(k, p);
                    a(k, q) = s * akp + c * akq;
                    a(q, k) = a(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const std::size_t kp = static_cast<std::size_t>(k) * n + p;
                    const std::size_t kq = static_cast<std::size_t>(k) * n + q;
                    const double vkp = v[kp], vkq = v[kq];
                    v[kp] = c * vkp - s * vkq;
                    v[kq] = s * vkp + c * vkq;
                }
            }
    }

    // Sort non-increasing; ties keep original diagonal order.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a(x, x) > a(y, y); });

    EigenSystem out;
    out.sweeps = sweeps;
    out.values.resize(n);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        out.values[i] = a(order[i], order[i]);
        for (int k = 0; k < n; ++k)
            out.vectors[static_cast<std::size_t>(k) * n + i] =
                v[static_cast<std::size_t>(k) * n + order[i]];
    }

    // Residual: measured directly at desk scale, off-norm bound beyond.
    if (n <= 512) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            double s2 = 0;
            for (int r = 0; r < n; ++r) {
                double acc = 0;
                for (int k = 0; k < n; ++k)
                    acc += m(r, k) * out.vectors[static_cast<std::size_t>(k) * n + i];
                acc -= out.values[i] * out.vectors[static_cast<std::size_t>(r) * n + i];
                s2 += acc * acc;
            }
            worst = std::max(worst, std::sqrt(s2));
        }
        out.residual_bound = worst;
    } else {
        out.residual_bound = threshold;
    }
    return out;
}

inline Spectrum symmetric_eigenvalues(const SymMatrix& m) {
    EigenSystem es = jacobi_eigensystem(m);
    return Spectrum{std::move(es.values), es.residual_bound};
}

// Least eigenvalue only: same rotations in the same order as the full solver
// (bit-identical values), skipping eigenvector accumulation and residuals.
inline double symmetric_least_value(const SymMatrix& m) {
    const int n = m.dim();
    SymMatrix a = m;
    const double fnorm = m.frobenius();
    const double threshold = detail::jacobi_rel_tol * fnorm;
    int sweeps = 0;
    while (detail::off_norm(a) > threshold && fnorm > 0) {
        if (++sweeps > detail::jacobi_max_sweeps)
            throw std::runtime_error("jacobi eigensolver failed to converge");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(p, k) = a(k, p);
                    a(k, q) = s * akp + c * akq;
                    a(q, k) = a(k, q);
                }
            }
    }
    double least = a(0, 0);
    for (int i = 1; i < n; ++i) least = std::min(least, a(i, i));
    return least;
}

inline EigenPair least_eigenpair(const SymMatrix& m) {
    const int n = m.dim();
    EigenSystem es = jacobi_eigensystem(m);
    std::vector<double> x(n);
    for (int k = 0; k < n; ++k)
        x[k] = es.vectors[static_cast<std::size_t>(k) * n + (n - 1)];

    double norm = 0;
    for (double c : x) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : x) c /= norm;

    int lead = 0;
    for (int k = 1; k < n; ++k)
        if (std::abs(x[k]) > std::abs(x[lead])) lead = k;
    if (x[lead] < 0)
        for (double& c : x) c = -c;

    return EigenPair{es.values.back(), std::move(x), es.residual_bound};
}

inline double rayleigh_adjacency(const Graph& g, std::span<const double> x) {
    if (static_cast<int>(x.size()) != g.order())
        throw std::invalid_argument("vector length does not match graph order");
    double s = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) s += x[u] * x[v];
    return 2.0 * s;
}

// Quadratic form x^T M x.
inline double quadratic_form(const SymMatrix& m, std::span<const double> x) {
    if (static_cast<int>(x.size()) != m.dim())
        throw std::invalid_argument("vector length does not match matrix dimension");
    double s = 0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += x[i] * m(i, j) * x[j];
    return s;
}

enum class IdentityStatus { holds_equal, holds_geq, violated };

struct ComplementIdentityResult {
    IdentityStatus status;
    // On violation: the offending entry and both sides.
    int i = -1, j = -1;
    int lhs = 0; // distance in g^c
    int rhs = 0; // 1 + A(g)_{ij}
};

// Checks D(g^c) against J - I + A(g): entrywise equality when diameter(g) > 3,
// entrywise >= when diameter(g) == 3.
inline ComplementIdentityResult verify_complement_identity(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("input graph must be connected");
    const int d = diameter(g);
    if (d < 3) throw std::invalid_argument("identity check requires diameter >= 3, got " +
                                           std::to_string(d));
    const Graph gc = complement(g);
    if (!is_connected(gc)) throw std::invalid_argument("complement must be connected");
    const DistanceMatrix dc = bfs_distances(gc);

    const bool strict = d > 3;
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) {
            if (i == j) continue;
            const int rhs = 1 + (g.has_edge(i, j) ? 1 : 0);
            const int lhs = dc(i, j);
            if (strict ? (lhs != rhs) : (lhs < rhs))
                return {IdentityStatus::violated, i, j, lhs, rhs};
        }
    return {strict ? IdentityStatus::holds_equal : IdentityStatus::holds_geq};
}

// Cauchy interlacing: eigenvalues mu of M[S] satisfy
// lambda_i >= mu_i >= lambda_{i+n-m}.
inline bool interlace_check(const SymMatrix& m, std::span<const int> idx, double tol = 1e-8) {
    const SymMatrix sub = m.principal_submatrix(idx);
    const Spectrum full = symmetric_eigenvalues(m);
    const Spectrum part = symmetric_eigenvalues(sub);
    const int n = m.dim(), k = sub.dim();
    for (int i = 0; i < k; ++i) {
        if (full.values[i] < part.values[i] - tol) return false;
        if (part.values[i] < full.values[i + n - k] - tol) return false;
    }
    return true;
}

} // namespace distspec
