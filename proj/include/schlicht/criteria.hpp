#pragma once

#include <optional>
#include <stdexcept>

#include "schlicht/rat.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// Admissible next coefficients a_{N+1} satisfy (a_{N+1} - center)^2 <=
// radius_sq. A negative radius_sq marks a dead branch (area bound already
// exceeded).
struct IntervalBound {
  Rat center;
  Rat radius_sq;
};

// Truncated area sum  sum_{n=1..M} n b_n^2. The area theorem bounds the full
// sum by 1 for univalent f, and the truncation is monotone in M.
inline Rat area_sum(const LaurentTail& b, int M) {
  if (M > b.count() - 1) throw std::out_of_range("area_sum: M exceeds stored tail");
  Rat s(0);
  for (int n = 1; n <= M; ++n) s += Rat(n) * b.b(n) * b.b(n);
  return s;
}

inline Rat area_sum(const LaurentTail& b) { return area_sum(b, b.count() - 1); }

// Interval for a_{N+1} given a_2..a_N:
//   center    = -sum_{k=2..N} a_k b_{N-k}      (so b_{N-1} = center - a_{N+1})
//   radius_sq = (1 - sum_{j=1..N-2} j b_j^2) / (N-1).
// For the empty prefix there is no area constraint on b_0 = -a_2; the
// conventional (0, 1) is returned and the search instead seeds the first
// level from the coefficient bound |a_2| <= 2.
inline IntervalBound next_interval(const TaylorPrefix& a, const LaurentTail& b) {
  const int N = a.depth();
  if (N == 1) return {Rat(0), Rat(1)};
  if (b.count() < N - 1) throw std::invalid_argument("next_interval: tail shorter than prefix");
  Rat center(0);
  for (int k = 2; k <= N; ++k) center -= a.a(k) * b.b(N - k);
  const Rat radius_sq = (Rat(1) - area_sum(b, N - 2)) / (N - 1);
  return {center, radius_sq};
}

struct DeBrangesCheck {
  bool ok = true;
  int violation_n = 0;  // first n with |a_n| > n (>= n in strict mode)
  Rat violating_value;
};

// Coefficient bound |a_n| <= n (strict: < n, the non-Koebe case).
inline DeBrangesCheck debranges_ok(const TaylorPrefix& a, bool strict) {
  for (int n = 2; n <= a.depth(); ++n) {
    const Rat v = a.a(n);
    const Ordering o = cmp_sq(v, Rat(n) * Rat(n));
    if (o == Ordering::greater || (strict && o == Ordering::equal))
      return {false, n, v};
  }
  return {};
}

// alpha - sum_{n=1..M} (n - alpha) sigma_n^2. Negative certifies that f is
// not univalent; for M >= alpha truncation only weakens the subtracted sum,
// so a univalent function is never rejected at any truncation.
inline Rat prawitz_deficit(const TaylorPrefix& a, const Rat& alpha, int M) {
  if (alpha <= 0) throw std::invalid_argument("prawitz_deficit: alpha must be positive");
  const SigmaPrefix s = pow_alpha(a, alpha, M);
  Rat d = alpha;
  for (int n = 1; n <= M; ++n) d -= (Rat(n) - alpha) * s.sigma(n) * s.sigma(n);
  return d;
}

// Uniqueness cutoff: once
//   4 (1 - sum_{n=1..N-2} n b_n^2) < (N-1) r0^2
// holds, at most one function with this prefix has all coefficients in a
// lattice with uniform-discreteness bound r0, and each later interval is
// narrower than r0 (so it contains at most one lattice point).
inline bool termination_ok(const LaurentTail& b, int N, const Rat& r0) {
  if (N < 2) return false;
  if (b.count() < N - 2) throw std::invalid_argument("termination_ok: tail shorter than N-2");
  return 4 * (Rat(1) - area_sum(b, N - 2)) < Rat(N - 1) * r0 * r0;
}

}  // namespace schlicht
