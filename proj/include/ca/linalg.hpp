#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ca/errors.hpp"
#include "ca/rational.hpp"

namespace ca {

/// Dense row-major matrix over an exact ring (Rational or ParamPoly).
template <class T>
class DenseMatrix {
  public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    DenseMatrix operator+(const DenseMatrix& o) const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    DenseMatrix operator-(const DenseMatrix& o) const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    DenseMatrix operator*(const DenseMatrix& o) const {
        DenseMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    DenseMatrix scaled(const T& c) const {
        DenseMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T())) return false;
        return true;
    }

    bool is_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < i && j < cols_; ++j)
                if (!((*this)(i, j) == T())) return false;
        return true;
    }

    bool is_strictly_upper_triangular() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j <= i && j < cols_; ++j)
                if (!((*this)(i, j) == T())) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using RatMatrix = DenseMatrix<Rational>;
using RatVector = std::vector<Rational>;

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

Rational det(RatMatrix m);

/// Basis of the right kernel (column vectors).
std::vector<RatVector> kernel(const RatMatrix& m);

/// One solution of m x = b, if any.
std::optional<RatVector> solve(RatMatrix m, RatVector b);

/// Characteristic polynomial coefficients c_0..c_n of det(xI - m)
/// (c_n = 1), by the Faddeev-LeVerrier recursion.
std::vector<Rational> char_poly(const RatMatrix& m);

/// All rational roots of the polynomial with the given coefficients
/// (c_0..c_n), with multiplicity collapsed.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

RatVector mat_vec(const RatMatrix& m, const RatVector& v);

}  // namespace ca
