#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over arbitrary-precision integers and rationals.
 *
 * Indices are 0-based; e_1 in the usual 1-based notation is column 0.
 */

#include "tentspec/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tentspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class T>
class BasicMatrix {
public:
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    }

    BasicMatrix(std::initializer_list<std::initializer_list<int>> rows)
        : BasicMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            std::size_t j = 0;
            for (int v : r) (*this)(i, j++) = T(v);
            ++i;
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    bool is_zero() const {
        for (const T& v : data_) {
            if (v != 0) return false;
        }
        return true;
    }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
        a.require_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }

    friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
        a.require_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }

    friend BasicMatrix operator*(const T& s, BasicMatrix a) {
        for (T& v : a.data_) v *= s;
        return a;
    }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        BasicMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    friend std::vector<T> operator*(const BasicMatrix& a, const std::vector<T>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
        return out;
    }

private:
    void require_same_shape(const BasicMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using ExactMatrix = BasicMatrix<BigInt>;
using RationalMatrix = BasicMatrix<Rational>;
using RationalVector = std::vector<Rational>;

inline RationalMatrix to_rational(const ExactMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

template <class T>
BasicMatrix<T> matrix_power(const BasicMatrix<T>& m, unsigned k) {
    if (!m.is_square()) throw DimensionMismatch("matrix power needs a square matrix");
    BasicMatrix<T> result = BasicMatrix<T>::identity(m.rows());
    BasicMatrix<T> base = m;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

/// Unit vector e_{index+1} of the given length.
inline RationalVector unit_vector(std::size_t length, std::size_t index) {
    RationalVector v(length);
    v.at(index) = 1;
    return v;
}

} // namespace tentspec
