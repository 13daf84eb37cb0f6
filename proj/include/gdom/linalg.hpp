#pragma once

// Dense matrices over exact and floating scalars, plus exact determinants.

#include "gdom/numeric.hpp"

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace gdom {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix square(std::size_t n, const T& fill = T{}) { return Matrix(n, n, fill); }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  /// Principal submatrix on the given (sorted) row/column indices.
  template <class Indices>
  [[nodiscard]] Matrix principal(const Indices& idx) const {
    Matrix out(idx.size(), idx.size());
    std::size_t i = 0;
    for (auto r : idx) {
      std::size_t j = 0;
      for (auto c : idx) out(i, j++) = (*this)(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      ++i;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Fraction-free Bareiss elimination. Every intermediate quotient is exact.
inline BigInt bareiss_determinant(Matrix<BigInt> m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Exact determinant over the rationals: denominators are cleared row by row
/// and the integer matrix goes through Bareiss.
inline Rational determinant(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix<BigInt> scaled(n, n);
  BigInt total_scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) row_lcm = lcm(row_lcm, boost::multiprecision::denominator(m(r, c)));
    total_scale *= row_lcm;
    for (std::size_t c = 0; c < n; ++c) {
      const Rational v = m(r, c) * row_lcm;
      scaled(r, c) = boost::multiprecision::numerator(v);
    }
  }
  return make_rational(bareiss_determinant(std::move(scaled)), total_scale);
}

}  // namespace gdom
