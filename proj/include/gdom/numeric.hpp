#pragma once

// Exact arithmetic types shared by every module: GMP-backed big integers and
// rationals, "p/q" text conversion, and exact comparison of real roots.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gdom {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Kind tag carried by every exception the library throws.
enum class ErrorKind {
  syntax,
  disconnected,
  loop_in_input,
  unsupported_format,
  empty_set,
  subgraph_mismatch,
  missing_edge,
  size_bound,
  limit_exceeded,
  domain,
  non_convergence,
  cover_not_regular,
  unknown_id,
  missing_params,
  attempt_cap,
  invalid_argument,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::disconnected: return "disconnected";
    case ErrorKind::loop_in_input: return "loop_in_input";
    case ErrorKind::unsupported_format: return "unsupported_format";
    case ErrorKind::empty_set: return "empty_set";
    case ErrorKind::subgraph_mismatch: return "subgraph_mismatch";
    case ErrorKind::missing_edge: return "missing_edge";
    case ErrorKind::size_bound: return "size_bound";
    case ErrorKind::limit_exceeded: return "limit_exceeded";
    case ErrorKind::domain: return "domain";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::cover_not_regular: return "cover_not_regular";
    case ErrorKind::unknown_id: return "unknown_id";
    case ErrorKind::missing_params: return "missing_params";
    case ErrorKind::attempt_cap: return "attempt_cap";
    case ErrorKind::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::domain, "zero denominator");
  Rational r(num);
  r /= Rational(den);
  return r;
}

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p", "p/q" or a terminating decimal such as "1.5" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw Error(ErrorKind::syntax, "malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) fail();
    const BigInt d{std::string(den)};
    if (d == 0) fail();
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    return make_rational(BigInt(n), d);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string whole(text.substr(0, dot));
    const auto frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!digits_ok(whole, true) || !digits_ok(frac, false)) fail();
    const bool neg = whole[0] == '-';
    if (whole[0] == '+' || neg) whole.erase(0, 1);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r = make_rational(BigInt(whole) * scale + BigInt(std::string(frac)), scale);
    return neg ? Rational(-r) : r;
  }
  if (!digits_ok(text, true)) fail();
  std::string n(text);
  if (n[0] == '+') n.erase(0, 1);
  return Rational(BigInt(n));
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }
inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline Rational ipow(const Rational& base, std::uint64_t exp) {
  Rational result = 1;
  Rational b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

/// Three-way comparison of a^(1/m) against b^(1/n) for nonnegative rationals,
/// decided exactly as a^n against b^m.
inline int compare_roots(const Rational& a, std::uint64_t m, const Rational& b, std::uint64_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::invalid_argument, "root index must be positive");
  if (a < 0 || b < 0) throw Error(ErrorKind::domain, "roots of negative values");
  const Rational lhs = ipow(a, n);
  const Rational rhs = ipow(b, m);
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

inline int compare_roots(const BigInt& a, std::uint64_t m, const BigInt& b, std::uint64_t n) {
  return compare_roots(Rational(a), m, Rational(b), n);
}

}  // namespace gdom
