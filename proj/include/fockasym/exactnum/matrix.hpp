#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fockasym/errors.hpp"
#include "fockasym/exactnum/gaussian_rational.hpp"
#include "fockasym/exactnum/rational.hpp"

namespace fockasym {

/// Small dense row-major matrix over an exact field.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw ShapeError("matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                             std::to_string(data_.size()) + " entries");
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] const std::vector<T>& entries() const { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) {
            return;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap((*this)(a, c), (*this)(b, c));
        }
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw ShapeError("matrix product of non-conforming shapes");
        }
        DenseMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw ShapeError("matrix sum of non-conforming shapes");
        }
        DenseMatrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) {
            out.data_[k] += b.data_[k];
        }
        return out;
    }

    friend DenseMatrix operator*(const T& s, const DenseMatrix& a) {
        DenseMatrix out = a;
        for (auto& x : out.data_) {
            x = s * x;
        }
        return out;
    }

    /// Matrix-vector product.
    [[nodiscard]] std::vector<T> apply(std::span<const T> v) const {
        if (v.size() != cols_) {
            throw ShapeError("matrix-vector product of non-conforming shapes");
        }
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) {
                    out[i] += (*this)(i, j) * v[j];
                }
            }
        }
        return out;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<GaussianRational>;
using RationalMatrix = DenseMatrix<Rational>;

/// Exact determinant by Gaussian elimination with exact (first nonzero) pivots.
template <class T>
[[nodiscard]] T det_exact(DenseMatrix<T> m) {
    if (!m.is_square()) {
        throw ShapeError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return T(0);
        }
        if (pivot != col) {
            m.swap_rows(pivot, col);
            det = -det;
        }
        const T inv = T(1) / m(col, col);
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) {
                continue;
            }
            const T factor = m(r, col) * inv;
            for (std::size_t c = col + 1; c < n; ++c) {
                if (!m(col, c).is_zero()) {
                    m(r, c) -= factor * m(col, c);
                }
            }
            m(r, col) = T(0);
        }
    }
    return det;
}

} // namespace fockasym
