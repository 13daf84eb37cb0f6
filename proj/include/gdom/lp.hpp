#pragma once

// Exact rational phase-1 simplex (Bland's rule) for {A x = b, x >= 0}.

#include "gdom/linalg.hpp"
#include "gdom/numeric.hpp"

#include <optional>
#include <vector>

namespace gdom {

/// Returns a basic feasible solution of A x = b, x >= 0, or nullopt if none exists.
inline std::optional<std::vector<Rational>> find_nonnegative_solution(const Matrix<Rational>& a,
                                                                      const std::vector<Rational>& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw Error(ErrorKind::invalid_argument, "right-hand side size mismatch");
  if (m == 0) return std::vector<Rational>(n, Rational(0));
  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  Matrix<Rational> t(m, width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip ? Rational(-b[i]) : b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // Reduced costs of the phase-1 objective (sum of artificials); last entry is -objective.
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t(i, j);
    cost[width - 1] -= t(i, width - 1);
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      const Rational ratio = t(i, width - 1) / t(i, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase 1
    const Rational pivot = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational factor = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) {
        if (t(leave, j) != 0) t(i, j) -= factor * t(leave, j);
      }
    }
    if (cost[enter] != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j < width; ++j) {
        if (t(leave, j) != 0) cost[j] -= factor * t(leave, j);
      }
    }
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t(i, width - 1);
  }
  return x;
}

}  // namespace gdom
