#pragma once

// Laplacian spectra, normalized heat traces, spectral functionals and shifted
// determinants.

#include "gdom/graph.hpp"
#include "gdom/linalg.hpp"
#include "gdom/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gdom {

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr std::size_t kJacobiSweepCap = 100;

struct Spectrum {
  std::vector<double> values;  ///< ascending
  std::size_t dimension = 0;
  /// Largest ||L v - lambda v|| over the computed pairs.
  double residual_bound = 0;
};

namespace detail {

inline Matrix<double> laplacian_double(const Multigraph& g) {
  const auto exact = laplacian(g);
  Matrix<double> m(g.size(), g.size(), 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = to_double(exact(i, j));
  }
  return m;
}

inline double off_diagonal_norm(const Matrix<double>& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

inline double frobenius_norm(const Matrix<double>& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  }
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi rotations on the symmetric weighted Laplacian.
inline Spectrum eigenvalues(const Multigraph& g, double tolerance = kDefaultEigenTolerance) {
  if (!(tolerance > 0)) throw Error(ErrorKind::domain, "tolerance must be positive");
  const std::size_t n = g.size();
  const Matrix<double> original = detail::laplacian_double(g);
  Matrix<double> a = original;
  Matrix<double> v(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;
  const double scale = std::max(detail::frobenius_norm(original), 1.0);
  bool converged = false;
  for (std::size_t sweep = 0; sweep < kJacobiSweepCap; ++sweep) {
    if (detail::off_diagonal_norm(a) <= tolerance * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
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
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && detail::off_diagonal_norm(a) > tolerance * scale) {
    throw Error(ErrorKind::non_convergence, "Jacobi iteration did not converge");
  }
  Spectrum out;
  out.dimension = n;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0;
    for (std::size_t k = 0; k < n; ++k) {
      double lv = 0;
      for (std::size_t j = 0; j < n; ++j) lv += original(k, j) * v(j, i);
      r += (lv - a(i, i) * v(k, i)) * (lv - a(i, i) * v(k, i));
    }
    out.residual_bound = std::max(out.residual_bound, std::sqrt(r));
    out.values.push_back(a(i, i));
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

/// (1/|G|) sum_i exp(-t lambda_i).
inline double heat_trace(const Spectrum& s, double t) {
  if (t < 0) throw Error(ErrorKind::domain, "heat trace needs t >= 0");
  double total = 0;
  for (double l : s.values) total += std::exp(-t * l);
  return total / static_cast<double>(s.dimension);
}

inline double heat_trace(const Multigraph& g, double t) { return heat_trace(eigenvalues(g), t); }

/// Exact -(2/|G|) sum over edge-units of the weight.
inline Rational heat_trace_derivative_at_zero(const Multigraph& g) {
  Rational total = 0;
  for (const auto& e : g.edges()) total += e.weight * e.multiplicity;
  return -2 * total / static_cast<long>(g.size());
}

enum class FunctionalFamily { exp_decay, hinge, shifted_log, shifted_inverse };

inline const char* to_string(FunctionalFamily f) {
  switch (f) {
    case FunctionalFamily::exp_decay: return "exp_decay";
    case FunctionalFamily::hinge: return "hinge";
    case FunctionalFamily::shifted_log: return "shifted_log";
    case FunctionalFamily::shifted_inverse: return "shifted_inverse";
  }
  return "?";
}

inline FunctionalFamily parse_functional_family(std::string_view name) {
  if (name == "exp_decay") return FunctionalFamily::exp_decay;
  if (name == "hinge") return FunctionalFamily::hinge;
  if (name == "shifted_log") return FunctionalFamily::shifted_log;
  if (name == "shifted_inverse") return FunctionalFamily::shifted_inverse;
  throw Error(ErrorKind::invalid_argument, "unknown functional family: " + std::string(name));
}

/// exp_decay: s -> e^{-ts}; hinge: s -> (c - s)^+; shifted_log: s -> log(s + t);
/// shifted_inverse: s -> 1 / (s + t).
struct FunctionalSpec {
  FunctionalFamily family = FunctionalFamily::exp_decay;
  Rational parameter = 1;

  static FunctionalSpec make(FunctionalFamily family, const Rational& parameter) {
    if ((family == FunctionalFamily::shifted_log || family == FunctionalFamily::shifted_inverse ||
         family == FunctionalFamily::exp_decay) &&
        parameter <= 0) {
      throw Error(ErrorKind::domain, std::string(to_string(family)) + " needs a positive parameter");
    }
    return {family, parameter};
  }

  [[nodiscard]] bool decreasing() const { return family != FunctionalFamily::shifted_log; }
  [[nodiscard]] bool convex() const { return family != FunctionalFamily::shifted_log; }
  /// log(s + t) is operator monotone; 1/(s + t) is operator monotone decreasing.
  [[nodiscard]] bool operator_monotone() const {
    return family == FunctionalFamily::shifted_log || family == FunctionalFamily::shifted_inverse;
  }

  [[nodiscard]] double operator()(double s) const {
    const double p = to_double(parameter);
    switch (family) {
      case FunctionalFamily::exp_decay: return std::exp(-p * s);
      case FunctionalFamily::hinge: return std::max(p - s, 0.0);
      case FunctionalFamily::shifted_log:
        if (s + p <= 0) throw Error(ErrorKind::domain, "log argument must be positive");
        return std::log(s + p);
      case FunctionalFamily::shifted_inverse:
        if (s + p <= 0) throw Error(ErrorKind::domain, "inverse argument must be positive");
        return 1.0 / (s + p);
    }
    return 0;
  }

  [[nodiscard]] std::string describe() const { return std::string(to_string(family)) + "(" + to_string(parameter) + ")"; }
};

/// Normalized trace (1/|G|) sum_i f(lambda_i).
inline double spectral_functional(const Spectrum& s, const FunctionalSpec& f) {
  double total = 0;
  for (double l : s.values) {
    // Eigenvalues within rounding of zero are treated as zero for the shifted families.
    total += f(std::max(l, 0.0));
  }
  return total / static_cast<double>(s.dimension);
}

inline double spectral_functional(const Multigraph& g, const FunctionalSpec& f) {
  return spectral_functional(eigenvalues(g), f);
}

/// det(L + tI), exact.
inline Rational shifted_determinant(const Multigraph& g, const Rational& t) {
  if (t <= 0) throw Error(ErrorKind::domain, "shift must be positive");
  auto m = laplacian(g);
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) += t;
  return determinant(m);
}

/// det(L + tI)^{1/|G|}; the determinant is exact, only the root is floating point.
inline double shifted_normalized_determinant(const Multigraph& g, const Rational& t) {
  const Rational det = shifted_determinant(g, t);
  const double log_det = std::log(to_double(boost::multiprecision::numerator(det))) -
                         std::log(to_double(boost::multiprecision::denominator(det)));
  return std::exp(log_det / static_cast<double>(g.size()));
}

struct HeatTraceCurve {
  std::vector<std::pair<double, double>> samples;

  [[nodiscard]] std::string to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "t,value\n";
    for (const auto& [t, v] : samples) out << t << ',' << v << '\n';
    return out.str();
  }
};

inline HeatTraceCurve heat_trace_curve(const Multigraph& g, std::vector<double> ts) {
  std::sort(ts.begin(), ts.end());
  const Spectrum s = eigenvalues(g);
  HeatTraceCurve c;
  for (double t : ts) {
    if (!(t > 0)) throw Error(ErrorKind::domain, "curve samples need t > 0");
    c.samples.emplace_back(t, heat_trace(s, t));
  }
  return c;
}

}  // namespace gdom
