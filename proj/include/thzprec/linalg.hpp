// SPDX-License-Identifier: Apache-2.0
//
// Factorizations for small dense complex matrices: one-sided Jacobi SVD,
// cyclic Jacobi Hermitian eigendecomposition, and Cholesky-based
// determinant/inverse for Hermitian positive definite inputs. Matrix sizes
// here stay small enough that the quadratic-per-sweep cost is irrelevant
// and the Jacobi methods' robustness wins.

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "thzprec/complex_matrix.hpp"
#include "thzprec/constants.hpp"

namespace thzprec {

struct SvdResult {
    CMatrix u;              // rows(m) x min(rows, cols), orthonormal columns
    std::vector<double> s;  // min(rows, cols) singular values, descending
    CMatrix v;              // cols(m) x min(rows, cols), orthonormal columns
};

struct EigResult {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns are eigenvectors
};

namespace detail {

// Unitary 2x2 that diagonalizes the Hermitian matrix [[app, apq], [apq^*, aqq]].
struct JacobiRotation {
    double c;
    cplx s;  // rotation applied as: x' = c*x - conj(s)*y ; y' = s*x + c*y
};

inline JacobiRotation make_jacobi(double app, double aqq, cplx apq) {
    const double mag = std::abs(apq);
    if (mag == 0.0) return {1.0, cplx(0.0, 0.0)};
    const cplx phase = apq / mag;
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    // s carries the off-diagonal phase; with J = [[c, s], [-conj(s), c]] the
    // rotated block J^H * [[app, apq], [apq^*, aqq]] * J is diagonal.
    return {c, t * c * phase};
}

// Orthonormal completion for columns of u whose singular value vanished:
// replace them by unit vectors orthogonal to all other columns.
inline void complete_orthonormal(CMatrix& u, const std::vector<int>& dead) {
    const std::size_t m = u.rows();
    for (std::size_t j = 0; j < u.cols(); ++j) {
        if (!dead[j]) continue;
        for (std::size_t trial = 0; trial < m; ++trial) {
            std::vector<cplx> cand(m, cplx(0.0, 0.0));
            cand[trial] = 1.0;
            for (std::size_t c = 0; c < u.cols(); ++c) {
                if (c == j) continue;
                cplx proj = 0.0;
                for (std::size_t i = 0; i < m; ++i) proj += std::conj(u(i, c)) * cand[i];
                for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * u(i, c);
            }
            double nrm = 0.0;
            for (const auto& v : cand) nrm += std::norm(v);
            nrm = std::sqrt(nrm);
            if (nrm > 0.5) {  // candidate was not (nearly) inside the span
                for (std::size_t i = 0; i < m; ++i) u(i, j) = cand[i] / nrm;
                break;
            }
        }
    }
}

}  // namespace detail

// One-sided Jacobi SVD. Throws std::runtime_error if the sweep cap is hit,
// which signals an ill-conditioned input rather than silently returning a
// bad factorization.
inline SvdResult svd(const CMatrix& m, int max_sweeps = 60) {
    if (m.rows() == 0 || m.cols() == 0) throw std::invalid_argument("svd: empty matrix");
    if (!m.all_finite()) throw std::invalid_argument("svd: input has non-finite entries");

    if (m.rows() < m.cols()) {
        // Factor the adjoint and swap factors: m = (u s v^H)^H = v s u^H.
        SvdResult t = svd(m.adjoint(), max_sweeps);
        return {std::move(t.v), std::move(t.s), std::move(t.u)};
    }

    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(cols);

    const double scale = std::max(m.max_abs(), 1e-300);
    const double off_tol = 1e-14;

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0;
                cplx apq = 0.0;
                for (std::size_t i = 0; i < rows; ++i) {
                    app += std::norm(a(i, p));
                    aqq += std::norm(a(i, q));
                    apq += std::conj(a(i, p)) * a(i, q);
                }
                if (std::abs(apq) <= off_tol * std::sqrt(app * aqq) ||
                    std::abs(apq) <= off_tol * scale * scale) {
                    continue;
                }
                converged = false;
                const auto rot = detail::make_jacobi(app, aqq, apq);
                for (std::size_t i = 0; i < rows; ++i) {
                    const cplx x = a(i, p), y = a(i, q);
                    a(i, p) = rot.c * x - std::conj(rot.s) * y;
                    a(i, q) = rot.s * x + rot.c * y;
                }
                for (std::size_t i = 0; i < cols; ++i) {
                    const cplx x = v(i, p), y = v(i, q);
                    v(i, p) = rot.c * x - std::conj(rot.s) * y;
                    v(i, q) = rot.s * x + rot.c * y;
                }
            }
        }
    }
    if (!converged)
        throw std::runtime_error("svd: one-sided Jacobi did not converge within " +
                                 std::to_string(max_sweeps) + " sweeps (ill-conditioned input)");

    std::vector<double> s(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double nrm = 0.0;
        for (std::size_t i = 0; i < rows; ++i) nrm += std::norm(a(i, j));
        s[j] = std::sqrt(nrm);
    }

    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return s[x] > s[y]; });

    SvdResult out;
    out.u = CMatrix(rows, cols);
    out.v = CMatrix(cols, cols);
    out.s.resize(cols);
    const double dead_tol = 1e-14 * std::max(scale, 1.0);
    std::vector<int> dead(cols, 0);
    for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t src = order[j];
        out.s[j] = s[src];
        for (std::size_t i = 0; i < cols; ++i) out.v(i, j) = v(i, src);
        if (s[src] > dead_tol) {
            for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = a(i, src) / s[src];
        } else {
            dead[j] = 1;
        }
    }
    detail::complete_orthonormal(out.u, dead);
    return out;
}

// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
inline EigResult eig_hermitian(const CMatrix& m, int max_sweeps = 60) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: matrix not square");
    const std::size_t n = m.rows();
    CMatrix a = m;
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(m.max_abs(), 1e-300);

    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) <= 1e-15 * scale) continue;
                converged = false;
                const auto rot = detail::make_jacobi(a(p, p).real(), a(q, q).real(), apq);
                // a <- J^H a J applied as column then row updates.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx x = a(i, p), y = a(i, q);
                    a(i, p) = rot.c * x - std::conj(rot.s) * y;
                    a(i, q) = rot.s * x + rot.c * y;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx x = a(p, j), y = a(q, j);
                    a(p, j) = rot.c * x - rot.s * y;
                    a(q, j) = std::conj(rot.s) * x + rot.c * y;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx x = v(i, p), y = v(i, q);
                    v(i, p) = rot.c * x - std::conj(rot.s) * y;
                    v(i, q) = rot.s * x + rot.c * y;
                }
            }
        }
    }
    if (!converged) throw std::runtime_error("eig_hermitian: Jacobi sweep cap exceeded");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigResult out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

namespace detail {

inline void require_hermitian(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols())
        throw std::invalid_argument(std::string(who) + ": matrix not square");
    const double gate = tol::hermitian_symmetry * std::max(1.0, m.max_abs());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > gate)
                throw std::invalid_argument(std::string(who) + ": input not Hermitian at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
}

// Lower-triangular Cholesky factor of a Hermitian positive definite matrix.
inline CMatrix cholesky(const CMatrix& m, const char* who) {
    require_hermitian(m, who);
    const std::size_t n = m.rows();
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = m(j, j).real();
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0) || !std::isfinite(diag))
            throw std::runtime_error(std::string(who) + ": matrix not positive definite (pivot " +
                                     std::to_string(j) + " = " + std::to_string(diag) + ")");
        l(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx acc = m(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * std::conj(l(j, k));
            l(i, j) = acc / l(j, j).real();
        }
    }
    return l;
}

}  // namespace detail

// log2(det(m)) for Hermitian positive definite m, via Cholesky.
inline double logdet_hermitian(const CMatrix& m) {
    const CMatrix l = detail::cholesky(m, "logdet_hermitian");
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += std::log2(l(i, i).real());
    return 2.0 * acc;
}

// Inverse of a well-conditioned Hermitian positive definite matrix.
inline CMatrix inverse_hermitian(const CMatrix& m) {
    const CMatrix l = detail::cholesky(m, "inverse_hermitian");
    const std::size_t n = m.rows();
    double dmin = l(0, 0).real(), dmax = l(0, 0).real();
    for (std::size_t i = 1; i < n; ++i) {
        dmin = std::min(dmin, l(i, i).real());
        dmax = std::max(dmax, l(i, i).real());
    }
    const double cond_est = (dmax / dmin) * (dmax / dmin);
    if (cond_est > tol::condition_cap)
        throw std::runtime_error("inverse_hermitian: ill-conditioned input (estimated condition " +
                                 std::to_string(cond_est) + " exceeds cap)");

    // Solve L L^H X = I column by column.
    CMatrix x(n, n);
    std::vector<cplx> y(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx acc = (i == c) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            for (std::size_t k = 0; k < i; ++k) acc -= l(i, k) * y[k];
            y[i] = acc / l(i, i).real();
        }
        for (std::size_t ii = n; ii-- > 0;) {
            cplx acc = y[ii];
            for (std::size_t k = ii + 1; k < n; ++k) acc -= std::conj(l(k, ii)) * x(k, c);
            x(ii, c) = acc / l(ii, ii).real();
        }
    }
    // Force exact Hermitian symmetry of the result.
    for (std::size_t i = 0; i < n; ++i) {
        x(i, i) = cplx(x(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (x(i, j) + std::conj(x(j, i)));
            x(i, j) = avg;
            x(j, i) = std::conj(avg);
        }
    }
    return x;
}

// m^{-1/2} for Hermitian positive definite m, via eigendecomposition. Used
// for the N_rf x N_rf Gram matrices of analog precoders.
inline CMatrix inv_sqrt_hermitian(const CMatrix& m) {
    detail::require_hermitian(m, "inv_sqrt_hermitian");
    const EigResult e = eig_hermitian(m);
    const double floor = 1e-14 * std::max(1.0, std::abs(e.values.back()));
    const std::size_t n = m.rows();
    CMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (e.values[k] <= floor)
            throw std::runtime_error("inv_sqrt_hermitian: matrix numerically singular (eigenvalue " +
                                     std::to_string(e.values[k]) + ")");
        const double w = 1.0 / std::sqrt(e.values[k]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += w * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return r;
}

}  // namespace thzprec
