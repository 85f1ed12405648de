#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "schlicht/rat.hpp"
#include "schlicht/rational_fn.hpp"

namespace schlicht {

// The coefficients a_2..a_N of a normalized series f(z) = z + a2 z^2 + ...;
// a_1 = 1 is implicit and depth = N. Reads past the stored depth throw
// instead of zero-filling.
class TaylorPrefix {
 public:
  TaylorPrefix() = default;
  explicit TaylorPrefix(std::vector<Rat> coeffs) : a_(std::move(coeffs)) {}

  int depth() const { return 1 + static_cast<int>(a_.size()); }

  Rat a(int n) const {
    if (n == 1) return Rat(1);
    if (n < 1 || n > depth()) throw std::out_of_range("TaylorPrefix::a: index past depth");
    return a_[static_cast<size_t>(n) - 2];
  }

  const std::vector<Rat>& coeffs() const { return a_; }

  TaylorPrefix extended(const Rat& next) const {
    auto c = a_;
    c.push_back(next);
    return TaylorPrefix(std::move(c));
  }

  TaylorPrefix truncated(int new_depth) const {
    if (new_depth < 1 || new_depth > depth())
      throw std::out_of_range("TaylorPrefix::truncated: bad depth");
    return TaylorPrefix(std::vector<Rat>(a_.begin(), a_.begin() + (new_depth - 1)));
  }

  bool operator==(const TaylorPrefix& o) const { return a_ == o.a_; }

 private:
  std::vector<Rat> a_;
};

// The coefficients b_0..b_M of 1/f(z) = 1/z + b0 + b1 z + ...
class LaurentTail {
 public:
  LaurentTail() = default;
  explicit LaurentTail(std::vector<Rat> coeffs) : b_(std::move(coeffs)) {}

  // Number of stored coefficients; indices run 0..count()-1.
  int count() const { return static_cast<int>(b_.size()); }

  Rat b(int n) const {
    if (n < 0 || n >= count()) throw std::out_of_range("LaurentTail::b: index past tail");
    return b_[static_cast<size_t>(n)];
  }

  const std::vector<Rat>& coeffs() const { return b_; }

 private:
  std::vector<Rat> b_;
};

// Coefficients of [z/f(z)]^alpha = 1 + sigma_1 z + sigma_2 z^2 + ...
// (sign convention: the sigma_n are stored as they appear in that
// expansion; only their squares enter the univalence tests).
class SigmaPrefix {
 public:
  SigmaPrefix() = default;
  SigmaPrefix(std::vector<Rat> coeffs, Rat alpha) : s_(std::move(coeffs)), alpha_(std::move(alpha)) {}

  int count() const { return static_cast<int>(s_.size()); }
  const Rat& alpha() const { return alpha_; }

  Rat sigma(int n) const {
    if (n < 1 || n > count()) throw std::out_of_range("SigmaPrefix::sigma: index past prefix");
    return s_[static_cast<size_t>(n) - 1];
  }

 private:
  std::vector<Rat> s_;
  Rat alpha_;
};

// b_{n-1} = -a_{n+1} - sum_{k=2..n} a_k b_{n-k}; yields b_0..b_{N-2}.
inline LaurentTail reciprocal_tail(const TaylorPrefix& a) {
  const int n_max = a.depth() - 1;
  std::vector<Rat> b(static_cast<size_t>(n_max > 0 ? n_max : 0));
  for (int n = 1; n <= n_max; ++n) {
    Rat s = -a.a(n + 1);
    for (int k = 2; k <= n; ++k) s -= a.a(k) * b[static_cast<size_t>(n - k)];
    b[static_cast<size_t>(n) - 1] = s;
  }
  return LaurentTail(std::move(b));
}

// First M coefficients of [z/f]^alpha via formal log and exp. Exact for
// rational alpha.
inline SigmaPrefix pow_alpha(const TaylorPrefix& a, const Rat& alpha, int M) {
  if (alpha == 0) throw std::invalid_argument("pow_alpha: alpha must be nonzero");
  if (M < 0 || M > a.depth() - 1) throw std::out_of_range("pow_alpha: M exceeds depth-1");
  // v = f/z = 1 + a2 z + ... ; L = log v ; sigma = exp(-alpha L).
  std::vector<Rat> v(static_cast<size_t>(M) + 1);
  v[0] = 1;
  for (int j = 1; j <= M; ++j) v[static_cast<size_t>(j)] = a.a(j + 1);
  std::vector<Rat> logv(static_cast<size_t>(M) + 1, Rat(0));
  for (int n = 1; n <= M; ++n) {
    Rat s = Rat(n) * v[static_cast<size_t>(n)];
    for (int k = 1; k < n; ++k) s -= Rat(k) * logv[static_cast<size_t>(k)] * v[static_cast<size_t>(n - k)];
    logv[static_cast<size_t>(n)] = s / n;
  }
  std::vector<Rat> w(static_cast<size_t>(M) + 1, Rat(0));
  for (int n = 1; n <= M; ++n) w[static_cast<size_t>(n)] = -alpha * logv[static_cast<size_t>(n)];
  std::vector<Rat> e(static_cast<size_t>(M) + 1, Rat(0));
  e[0] = 1;
  for (int n = 1; n <= M; ++n) {
    Rat s(0);
    for (int k = 1; k <= n; ++k) s += Rat(k) * w[static_cast<size_t>(k)] * e[static_cast<size_t>(n - k)];
    e[static_cast<size_t>(n)] = s / n;
  }
  return SigmaPrefix(std::vector<Rat>(e.begin() + 1, e.end()), alpha);
}

// Exact Taylor coefficients a_2..a_N of a normalized P/Q by the linear
// recurrence against Q.
inline TaylorPrefix taylor_of_rational(const RationalFn& r, int N) {
  if (!r.is_normalized()) throw std::invalid_argument("taylor_of_rational: function not normalized");
  if (N < 1) throw std::invalid_argument("taylor_of_rational: depth must be >= 1");
  const Rat q0(r.den[0]);
  std::vector<Rat> f(static_cast<size_t>(N) + 1, Rat(0));  // f[n], f[0] = 0
  for (int n = 1; n <= N; ++n) {
    Rat s = (n < static_cast<int>(r.num.size())) ? Rat(r.num[static_cast<size_t>(n)]) : Rat(0);
    const int jmax = std::min<int>(r.den_degree(), n - 1);
    for (int j = 1; j <= jmax; ++j) s -= Rat(r.den[static_cast<size_t>(j)]) * f[static_cast<size_t>(n - j)];
    f[static_cast<size_t>(n)] = s / q0;
  }
  return TaylorPrefix(std::vector<Rat>(f.begin() + 2, f.end()));
}

}  // namespace schlicht
