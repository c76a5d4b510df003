#pragma once

#include "zonospace/body.hpp"
#include "zonospace/error.hpp"
#include "zonospace/lifted.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zonospace {

/// Row-major dense square matrix.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    static Matrix from_rows(const std::vector<std::vector<double>>& rows)
    {
        Matrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw invalid_input("matrix rows must all have length " + std::to_string(rows.size()));
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Samples of the width-difference function phi -> E_phi(x).
struct WidthFunction {
    std::vector<double> nodes;
    std::vector<double> values;
};

struct GramMatrix {
    std::vector<double> nodes;
    Matrix entries;
};

namespace detail {

inline void require_in_range(double phi, const char* who)
{
    if (!(phi >= 0.0 && phi <= pi)) {
        throw domain_error(std::string(who) + ": angle " + std::to_string(phi) + " is outside [0, pi]");
    }
}

} // namespace detail

/// K(phi, psi) = 2 - (pi/2) sin|phi - psi| on [0, pi] x [0, pi].
inline double kernel(double phi, double psi)
{
    detail::require_in_range(phi, "kernel");
    detail::require_in_range(psi, "kernel");
    return 2.0 - (pi / 2.0) * std::sin(std::fabs(phi - psi));
}

/// k_phi = [2B, (pi/2) I(phi, 1)].
inline LiftedVector kernel_vector(double phi)
{
    detail::require_in_range(phi, "kernel_vector");
    return lift(Body::disc(2.0), Body::segment(phi, pi / 2.0));
}

/// E_phi(x) = h_plus(phi + pi/2) - h_minus(phi + pi/2), the half-width
/// difference across the line of direction phi. Equals <x, k_phi>.
inline double evaluate(const LiftedVector& x, double phi)
{
    detail::require_in_range(phi, "evaluate");
    const double n = phi + pi / 2.0;
    return support(x.plus(), n) - support(x.minus(), n);
}

/// n equally spaced nodes from 0 to pi inclusive.
inline std::vector<double> uniform_nodes(std::size_t n)
{
    if (n < 2) {
        throw invalid_input("need at least 2 nodes, got " + std::to_string(n));
    }
    std::vector<double> nodes(n);
    for (std::size_t k = 0; k < n; ++k) {
        nodes[k] = pi * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    nodes.back() = pi;
    return nodes;
}

inline WidthFunction sample(const LiftedVector& x, std::size_t n)
{
    WidthFunction w;
    w.nodes = uniform_nodes(n);
    w.values.reserve(n);
    for (double phi : w.nodes) {
        w.values.push_back(evaluate(x, phi));
    }
    return w;
}

inline GramMatrix gram(std::span<const double> nodes)
{
    for (double phi : nodes) {
        detail::require_in_range(phi, "gram");
    }
    std::vector<double> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] <= 1e-12) {
            throw invalid_input("gram: duplicate node " + std::to_string(sorted[i]));
        }
    }
    GramMatrix g;
    g.nodes.assign(nodes.begin(), nodes.end());
    g.entries = Matrix(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        g.entries(i, i) = kernel(nodes[i], nodes[i]);
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const double k = kernel(nodes[i], nodes[j]);
            g.entries(i, j) = k;
            g.entries(j, i) = k;
        }
    }
    return g;
}

namespace detail {

inline void require_symmetric(const Matrix& a)
{
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            scale = std::max(scale, std::fabs(a(i, j)));
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (std::fabs(a(i, j) - a(j, i)) > 1e-12 * (1.0 + scale)) {
                throw invalid_input("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
}

} // namespace detail

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations. Sweeps stop once the off-diagonal Frobenius norm drops
/// below 1e-12 of the full norm.
inline std::vector<double> jacobi_eigenvalues(Matrix a)
{
    detail::require_symmetric(a);
    const std::size_t n = a.size();
    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    s += a(i, j) * a(i, j);
                }
            }
        }
        return std::sqrt(s);
    };
    double frob = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            frob += a(i, j) * a(i, j);
        }
    }
    frob = std::sqrt(frob);

    constexpr int max_sweeps = 100;
    int sweep = 0;
    while (off_norm() > 1e-12 * frob) {
        if (++sweep > max_sweeps) {
            throw numeric_error("jacobi_eigenvalues: no convergence after 100 sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = a(i, i);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

inline double psd_min_eig(const Matrix& a)
{
    if (a.size() == 0) {
        throw invalid_input("psd_min_eig: empty matrix");
    }
    return jacobi_eigenvalues(a).front();
}

inline double psd_min_eig(const GramMatrix& g) { return psd_min_eig(g.entries); }

/// phi -> sum_i a_i K(node_i, phi).
struct KernelExpansion {
    std::vector<double> nodes;
    std::vector<double> coefficients;

    double operator()(double phi) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            s += coefficients[i] * kernel(nodes[i], phi);
        }
        return s;
    }
};

/// Solves (G + ridge I) a = values by Cholesky factorization.
inline KernelExpansion interpolate(std::span<const double> nodes, std::span<const double> values, double ridge = 0.0)
{
    if (nodes.size() != values.size()) {
        throw invalid_input("interpolate: " + std::to_string(nodes.size()) + " nodes but " +
                            std::to_string(values.size()) + " values");
    }
    if (!std::isfinite(ridge) || ridge < 0.0) {
        throw invalid_input("interpolate: ridge must be >= 0");
    }
    const std::size_t n = nodes.size();
    Matrix l = gram(nodes).entries;
    for (std::size_t i = 0; i < n; ++i) {
        l(i, i) += ridge;
    }
    for (std::size_t j = 0; j < n; ++j) {
        double d = l(j, j);
        for (std::size_t k = 0; k < j; ++k) {
            d -= l(j, k) * l(j, k);
        }
        if (!(d > 1e-12 * (2.0 + ridge))) {
            throw numeric_error("interpolate: kernel system is singular (pivot " + std::to_string(j) +
                                "); retry with ridge > 0");
        }
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = l(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l(i, k) * l(j, k);
            }
            l(i, j) = s / l(j, j);
        }
    }
    std::vector<double> y(values.begin(), values.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            y[i] -= l(i, k) * y[k];
        }
        y[i] /= l(i, i);
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) {
            y[i] -= l(k, i) * y[k];
        }
        y[i] /= l(i, i);
    }
    return {std::vector<double>(nodes.begin(), nodes.end()), std::move(y)};
}

} // namespace zonospace
