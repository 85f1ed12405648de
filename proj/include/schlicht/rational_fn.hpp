#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schlicht/poly.hpp"
#include "schlicht/rat.hpp"

namespace schlicht {

// A ratio P(z)/Q(z) of integer polynomials in canonical form:
//   * P and Q coprime as polynomials,
//   * gcd of all integer coefficients across P and Q equal to 1,
//   * Q(0) > 0.
// Canonical form is unique, so equality of functions is vector equality.
// A "normalized" function additionally has P(0) = 0 and P'(0) = Q(0),
// i.e. it expands as z + a2 z^2 + ... around the origin.
struct RationalFn {
  IPoly num;
  IPoly den;

  bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  bool is_normalized() const {
    return !num.empty() && !den.empty() && num[0] == 0 && den[0] > 0 &&
           num.size() >= 2 && num[1] == den[0];
  }

  int num_degree() const { return poly_degree(num); }
  int den_degree() const { return poly_degree(den); }

  // -P(-z)/Q(-z), the reflection realizing a_n -> (-1)^(n+1) a_n.
  RationalFn mirror() const;

  // Numerator of the derivative: P'Q - PQ'.
  IPoly derivative_numerator() const {
    return poly_sub(poly_mul(poly_derivative(num), den), poly_mul(num, poly_derivative(den)));
  }

  std::string to_string() const;
};

namespace detail {

inline std::string ipoly_str(const IPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BigInt c = p[i];
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = (c == 1) && i > 0;
    if (!unit) s += c.str();
    if (i == 1) s += "z";
    if (i > 1) s += "z^" + std::to_string(i);
    first = false;
  }
  return first ? "0" : s;
}

}  // namespace detail

inline std::string RationalFn::to_string() const {
  std::string s = "(" + detail::ipoly_str(num) + ")";
  if (den.size() > 1 || (den.size() == 1 && den[0] != 1)) s += " / (" + detail::ipoly_str(den) + ")";
  return s;
}

// Canonicalize a rational-coefficient P/Q pair: divide out the polynomial
// gcd, clear denominators, reduce the integer content, fix the sign of Q(0)
// (or of the leading coefficient when Q(0) = 0).
inline RationalFn make_rational_fn(QPoly p, QPoly q) {
  poly_trim(p);
  poly_trim(q);
  if (q.empty()) throw std::domain_error("make_rational_fn: zero denominator");
  if (!p.empty()) {
    const QPoly g = poly_gcd(p, q);
    if (poly_degree(g) >= 1) {
      p = poly_div_exact(p, g);
      q = poly_div_exact(q, g);
    }
  }
  BigInt l(1);
  for (const auto& c : p) l = lcm(l, denominator(c));
  for (const auto& c : q) l = lcm(l, denominator(c));
  IPoly pi, qi;
  pi.reserve(p.size());
  qi.reserve(q.size());
  BigInt content(0);
  for (const auto& c : p) {
    pi.push_back(numerator(c) * (l / denominator(c)));
    content = gcd(content, pi.back());
  }
  for (const auto& c : q) {
    qi.push_back(numerator(c) * (l / denominator(c)));
    content = gcd(content, qi.back());
  }
  if (content == 0) content = 1;
  for (auto& c : pi) c /= content;
  for (auto& c : qi) c /= content;
  const BigInt sign_ref = (qi[0] != 0) ? qi[0] : qi.back();
  if (sign_ref < 0) {
    for (auto& c : pi) c = -c;
    for (auto& c : qi) c = -c;
  }
  return RationalFn{std::move(pi), std::move(qi)};
}

inline RationalFn make_rational_fn(const IPoly& p, const IPoly& q) {
  QPoly pq(p.begin(), p.end()), qq(q.begin(), q.end());
  return make_rational_fn(std::move(pq), std::move(qq));
}

inline RationalFn RationalFn::mirror() const {
  QPoly p(num.begin(), num.end()), q(den.begin(), den.end());
  for (size_t i = 0; i < p.size(); ++i)
    if (i % 2 == 0) p[i] = -p[i];
  for (size_t i = 0; i < q.size(); ++i)
    if (i % 2 == 1) q[i] = -q[i];
  return make_rational_fn(std::move(p), std::move(q));
}

// ---------------------------------------------------------------------------
// Parser for function literals such as "z/(1-z)^2", "z(2+z^3)/2(1+z^3)" or
// "z-z^2/2". Within one additive term, every factor after the first '/'
// belongs to the denominator, i.e. a/b*c means a/(bc).
// ---------------------------------------------------------------------------

namespace detail {

struct FnParser {
  std::string_view s;
  size_t i = 0;

  explicit FnParser(std::string_view text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse_function: " + msg + " at position " + std::to_string(i));
  }

  // sum := term (('+'|'-') term)*
  std::pair<QPoly, QPoly> parse_sum() {
    auto acc = parse_term(parse_sign());
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      auto t = parse_term(parse_sign());
      // p1/q1 + p2/q2
      acc.first = poly_add(poly_mul(acc.first, t.second), poly_mul(t.first, acc.second));
      acc.second = poly_mul(acc.second, t.second);
    }
    return acc;
  }

  int parse_sign() {
    int sign = 1;
    while (true) {
      if (eat('+')) continue;
      if (eat('-')) {
        sign = -sign;
        continue;
      }
      break;
    }
    return sign;
  }

  // term := factor+ ('/' factor+)?
  std::pair<QPoly, QPoly> parse_term(int sign) {
    QPoly num{Rat(sign)};
    QPoly den{Rat(1)};
    bool denominator_side = false;
    bool any = false;
    while (true) {
      const char c = peek();
      if (c == '/') {
        ++i;
        if (denominator_side) fail("repeated '/'");
        denominator_side = true;
        continue;
      }
      if (c == '*') {
        ++i;
        continue;
      }
      if (c == 'z' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        QPoly f = parse_factor();
        (denominator_side ? den : num) = poly_mul(denominator_side ? den : num, f);
        any = true;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return {num, den};
  }

  // factor := (INT | 'z' | '(' sum ')') ('^' INT)?
  QPoly parse_factor() {
    QPoly base;
    const char c = peek();
    if (c == 'z') {
      ++i;
      base = QPoly{Rat(0), Rat(1)};
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = QPoly{Rat(parse_int())};
    } else if (c == '(') {
      ++i;
      auto inner = parse_sum();
      if (!eat(')')) fail("missing ')'");
      if (poly_degree(inner.second) > 0) fail("nested division is not supported");
      if (inner.second.empty() || inner.second[0] == 0) fail("zero denominator");
      base = poly_scale(inner.first, Rat(1) / inner.second[0]);
    } else {
      fail("expected a factor");
    }
    if (peek() == '^') {
      ++i;
      const long e = parse_int();
      if (e < 0) fail("negative exponent");
      QPoly out{Rat(1)};
      for (long k = 0; k < e; ++k) out = poly_mul(out, base);
      return out;
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected an integer");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  }
};

}  // namespace detail

inline RationalFn parse_function(std::string_view text) {
  detail::FnParser p(text);
  auto [num, den] = p.parse_sum();
  p.skip_ws();
  if (p.i != p.s.size()) p.fail("trailing input");
  return make_rational_fn(std::move(num), std::move(den));
}

}  // namespace schlicht
