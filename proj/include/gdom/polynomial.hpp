#pragma once

// Sparse bivariate polynomials with big-integer coefficients.

#include "gdom/numeric.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace gdom {

class BivariatePolynomial {
 public:
  using Exponents = std::pair<std::uint32_t, std::uint32_t>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(const BigInt& c) {
    BivariatePolynomial p;
    p.add_term(0, 0, c);
    return p;
  }
  static BivariatePolynomial monomial(std::uint32_t i, std::uint32_t j, const BigInt& c = 1) {
    BivariatePolynomial p;
    p.add_term(i, j, c);
    return p;
  }
  static BivariatePolynomial x() { return monomial(1, 0); }
  static BivariatePolynomial y() { return monomial(0, 1); }

  void add_term(std::uint32_t i, std::uint32_t j, const BigInt& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(Exponents{i, j}, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  [[nodiscard]] BigInt coefficient(std::uint32_t i, std::uint32_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  [[nodiscard]] const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
    return out;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& o) { return *this = *this * o; }
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  template <class T>
  [[nodiscard]] T evaluate(const T& xv, const T& yv) const {
    T total = 0;
    for (const auto& [e, c] : terms_) {
      T term = T(c);
      for (std::uint32_t k = 0; k < e.first; ++k) term *= xv;
      for (std::uint32_t k = 0; k < e.second; ++k) term *= yv;
      total += term;
    }
    return total;
  }

  [[nodiscard]] double evaluate_double(double xv, double yv) const {
    double total = 0;
    for (const auto& [e, c] : terms_) {
      double term = to_double(c);
      for (std::uint32_t k = 0; k < e.first; ++k) term *= xv;
      for (std::uint32_t k = 0; k < e.second; ++k) term *= yv;
      total += term;
    }
    return total;
  }

  /// p(x + dx, y + dy).
  [[nodiscard]] BivariatePolynomial shifted(const BigInt& dx, const BigInt& dy) const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
      out += binomial_power(dx, e.first, true) * binomial_power(dy, e.second, false) * constant(c);
    }
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      const bool bare = e.first == 0 && e.second == 0;
      if (mag != 1 || bare) s += gdom::to_string(mag);
      auto power = [&](const char* var, std::uint32_t k) {
        if (k == 0) return;
        s += var;
        if (k > 1) s += "^" + std::to_string(k);
      };
      power("x", e.first);
      power("y", e.second);
    }
    return s;
  }

 private:
  /// (v + shift)^k expanded in v, where v is x or y.
  static BivariatePolynomial binomial_power(const BigInt& shift, std::uint32_t k, bool in_x) {
    BivariatePolynomial out;
    BigInt binom = 1;
    for (std::uint32_t i = 0; i <= k; ++i) {
      const BigInt c = binom * ipow(shift, k - i);
      if (in_x) out.add_term(i, 0, c);
      else out.add_term(0, i, c);
      binom = binom * (k - i) / (i + 1);
    }
    return out;
  }

  std::map<Exponents, BigInt> terms_;
};

}  // namespace gdom
