#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

#include "schlicht/rat.hpp"

namespace schlicht {

// Dense univariate polynomials, constant term first.
using IPoly = std::vector<BigInt>;
using QPoly = std::vector<Rat>;

inline void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline void poly_trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int poly_degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly poly_add(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

inline QPoly poly_neg(QPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

inline QPoly poly_scale(QPoly a, const Rat& s) {
  for (auto& c : a) c *= s;
  poly_trim(a);
  return a;
}

inline QPoly poly_derivative(const QPoly& a) {
  QPoly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  poly_trim(out);
  return out;
}

inline IPoly poly_derivative(const IPoly& a) {
  IPoly out;
  for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
  poly_trim(out);
  return out;
}

inline IPoly poly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

inline IPoly poly_sub(const IPoly& a, const IPoly& b) {
  IPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

// Remainder of a by b (b nonzero), exact.
inline QPoly poly_rem(QPoly a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("poly_rem: division by zero polynomial");
  poly_trim(a);
  while (a.size() >= b.size()) {
    const Rat f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Exact quotient; throws if b does not divide a.
inline QPoly poly_div_exact(QPoly a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("poly_div_exact: division by zero polynomial");
  poly_trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("poly_div_exact: not divisible");
  QPoly q(a.size() - b.size() + 1, Rat(0));
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    if (a.size() < b.size()) break;
    const Rat f = a.back() / b.back();
    q[k] = f;
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    poly_trim(a);
  }
  if (!a.empty()) throw std::domain_error("poly_div_exact: not divisible");
  poly_trim(q);
  return q;
}

// Monic gcd via the Euclidean algorithm.
inline QPoly poly_gcd(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    QPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Rat lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

template <typename T>
T poly_eval(const IPoly& p, const T& z) {
  T acc{};
  for (size_t i = p.size(); i-- > 0;) acc = acc * z + T(p[i].convert_to<double>());
  return acc;
}

inline Rat poly_eval_rat(const IPoly& p, const Rat& z) {
  Rat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * z + Rat(p[i]);
  return acc;
}

inline Rat poly_eval_rat(const QPoly& p, const Rat& z) {
  Rat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

inline std::complex<double> poly_eval_c(const IPoly& p, const std::complex<double>& z) {
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = p.size(); i-- > 0;) acc = acc * z + std::complex<double>(p[i].convert_to<double>(), 0.0);
  return acc;
}

}  // namespace schlicht
