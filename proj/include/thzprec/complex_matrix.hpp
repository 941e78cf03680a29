// SPDX-License-Identifier: Apache-2.0
//
// Dense complex matrix with row-major storage. Sizes in this library are
// small (at most a few hundred rows), so everything is plain loops over
// std::complex<double> with no blocking or expression templates.

#pragma once

#include <complex>
#include <cstddef>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thzprec {

using cplx = std::complex<double>;

class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CMatrix adjoint() const {
        CMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMatrix transpose() const {
        CMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    CMatrix conjugate() const {
        CMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
        return r;
    }

    CMatrix operator*(const CMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("CMatrix multiply: inner dimensions " +
                                        std::to_string(cols_) + " and " +
                                        std::to_string(rhs.rows_) + " differ");
        CMatrix r(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx(0.0, 0.0)) continue;
                const cplx* brow = &rhs.data_[k * rhs.cols_];
                cplx* rrow = &r.data_[i * rhs.cols_];
                for (std::size_t j = 0; j < rhs.cols_; ++j) rrow[j] += aik * brow[j];
            }
        }
        return r;
    }

    CMatrix operator+(const CMatrix& rhs) const {
        check_same_shape(rhs, "add");
        CMatrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
        return r;
    }

    CMatrix operator-(const CMatrix& rhs) const {
        check_same_shape(rhs, "subtract");
        CMatrix r(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= rhs.data_[i];
        return r;
    }

    CMatrix& operator+=(const CMatrix& rhs) {
        check_same_shape(rhs, "add");
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
        return *this;
    }

    CMatrix& operator*=(cplx s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend CMatrix operator*(cplx s, CMatrix m) {
        m *= s;
        return m;
    }

    double frobenius_norm() const {
        double acc = 0.0;
        for (const auto& v : data_) acc += std::norm(v);
        return std::sqrt(acc);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool all_finite() const {
        for (const auto& v : data_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    CMatrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
        CMatrix r(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    void set_block(std::size_t i0, std::size_t j0, const CMatrix& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    CMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }
    CMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }

    // Copy of the matrix with column j removed.
    CMatrix drop_col(std::size_t j) const {
        CMatrix r(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t jj = 0;
            for (std::size_t c = 0; c < cols_; ++c)
                if (c != j) r(i, jj++) = (*this)(i, c);
        }
        return r;
    }

    bool operator==(const CMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

private:
    void check_same_shape(const CMatrix& rhs, const char* what) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument(std::string("CMatrix ") + what + ": shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// A^H * A, forced numerically Hermitian.
inline CMatrix gram(const CMatrix& a) {
    CMatrix g = a.adjoint() * a;
    for (std::size_t i = 0; i < g.rows(); ++i) {
        g(i, i) = cplx(g(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < g.cols(); ++j) {
            const cplx avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            g(i, j) = avg;
            g(j, i) = std::conj(avg);
        }
    }
    return g;
}

// Summation with pairwise splitting so that the result is insensitive to
// how callers chunk per-subcarrier reductions.
inline double pairwise_sum(const double* x, std::size_t n) {
    if (n <= 8) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += x[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& x) {
    return pairwise_sum(x.data(), x.size());
}

}  // namespace thzprec
