#pragma once

#include <stdexcept>
#include <vector>

#include "schlicht/rat.hpp"

namespace schlicht {

// The lattice (1/m)*Z. Distinct points differ by at least r0 = 1/m, so r0 is
// a valid uniform-discreteness bound.
struct Lattice {
  long m = 1;

  Rat r0() const { return Rat(1, m); }
  bool contains(const Rat& x) const { return denominator(Rat(x * m)) == 1; }
};

// All lattice points p = k/m with (p - center)^2 <= radius_sq, ascending.
// The integer window for k is located with an integer square root and then
// corrected by exact squared comparisons, so the result is exact.
inline std::vector<Rat> lattice_points_in_interval(const Rat& center, const Rat& radius_sq,
                                                   const Lattice& lat) {
  if (lat.m <= 0) throw std::invalid_argument("lattice_points_in_interval: m must be positive");
  std::vector<Rat> out;
  if (radius_sq < 0) return out;

  // k/m in the disk  <=>  (k - X)^2 <= S2
  const Rat X = center * lat.m;
  const Rat S2 = radius_sq * lat.m * lat.m;

  // sqrt(S2) = isqrt(num*den)/den up to an error below 1.
  const BigInt approx = isqrt_floor(numerator(S2) * denominator(S2));
  const Rat s_approx(approx, denominator(S2));

  BigInt hi = rat_floor(X + s_approx);
  while (Rat(hi + 1) <= X || within_sq(Rat(hi + 1) - X, S2)) ++hi;
  while (Rat(hi) > X && !within_sq(Rat(hi) - X, S2)) --hi;

  BigInt lo = rat_ceil(X - s_approx);
  while (Rat(lo - 1) >= X || within_sq(Rat(lo - 1) - X, S2)) --lo;
  while (Rat(lo) < X && !within_sq(Rat(lo) - X, S2)) ++lo;

  if (lo > hi) return out;
  for (BigInt k = lo; k <= hi; ++k) out.push_back(make_rat(k, lat.m));
  return out;
}

}  // namespace schlicht
