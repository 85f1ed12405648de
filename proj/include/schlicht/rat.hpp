#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace schlicht {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational. boost::multiprecision keeps the value in
// lowest terms with a positive denominator, which is the canonical form
// assumed everywhere below. Division by zero throws.
using Rat = boost::multiprecision::cpp_rational;

enum class Ordering { less, equal, greater };

// Builds p/q from a possibly negative q.
inline Rat make_rat(BigInt p, BigInt q) {
  if (q == 0) throw std::domain_error("make_rat: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rat(std::move(p), std::move(q));
}

// Exact three-way comparison of x^2 against bound_sq. Every |x| <= sqrt(R)
// test in the search is evaluated through this, so no square root of a
// rational is ever materialized.
inline Ordering cmp_sq(const Rat& x, const Rat& bound_sq) {
  const Rat sq = x * x;
  if (sq < bound_sq) return Ordering::less;
  if (sq == bound_sq) return Ordering::equal;
  return Ordering::greater;
}

inline bool within_sq(const Rat& x, const Rat& bound_sq) {
  return cmp_sq(x, bound_sq) != Ordering::greater;
}

// "p/q" with the "/q" dropped for integers; matches the JSON wire format.
inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

inline Rat parse_rat(std::string_view s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
    BigInt p{std::string(s.substr(0, slash))};
    BigInt q{std::string(s.substr(slash + 1))};
    return make_rat(std::move(p), std::move(q));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + std::string(s) + "'");
  }
}

// floor(n/d), exact for negative operands.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
  BigInt q = n / d;
  if (q * d != n && ((n < 0) != (d < 0))) --q;
  return q;
}

inline BigInt rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(n);
}

inline Rat pow_int(const Rat& base, int e) {
  if (e < 0) return Rat(1) / pow_int(base, -e);
  Rat out(1), b = base;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) out *= b;
    b *= b;
  }
  return out;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace schlicht
