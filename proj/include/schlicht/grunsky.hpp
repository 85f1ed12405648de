#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/rat.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

// ---------------------------------------------------------------------------
// Grunsky coefficients c_{j,k}, defined by the bivariate expansion
//
//   log (f(z) - f(w)) / (z - w) = - sum_{j,k >= 0} c_{j,k} z^j w^k,
//
// and the order-n Grunsky matrix
//
//   gamma_{j,k}^{(n)} = delta_{j,k}/j - sum_{m=1..n} m c_{m,j} c_{m,k},
//
// which is positive semidefinite for every n when f is univalent. All
// entries here are real rationals, so the matrices are real symmetric and
// PSD can be decided exactly.
// ---------------------------------------------------------------------------

// Triangular table of c_{j,k} for j,k >= 0, j+k <= D.
class GrunskyTable {
 public:
  GrunskyTable(int D, std::vector<std::vector<Rat>> c) : D_(D), c_(std::move(c)) {}

  int max_total_degree() const { return D_; }

  Rat c(int j, int k) const {
    if (j < 0 || k < 0 || j + k > D_) throw std::out_of_range("GrunskyTable::c: index outside table");
    return c_[static_cast<size_t>(j)][static_cast<size_t>(k)];
  }

 private:
  int D_;
  std::vector<std::vector<Rat>> c_;  // c_[j][k], j+k <= D
};

namespace detail {

using BivariateSeries = std::vector<std::vector<Rat>>;  // [j][k], j+k <= D

inline BivariateSeries bivariate_zero(int D) {
  BivariateSeries s(static_cast<size_t>(D) + 1);
  for (int j = 0; j <= D; ++j) s[static_cast<size_t>(j)].assign(static_cast<size_t>(D - j) + 1, Rat(0));
  return s;
}

inline BivariateSeries bivariate_mul(const BivariateSeries& a, const BivariateSeries& b, int D) {
  BivariateSeries out = bivariate_zero(D);
  for (int j1 = 0; j1 <= D; ++j1)
    for (int k1 = 0; k1 + j1 <= D; ++k1) {
      const Rat& x = a[static_cast<size_t>(j1)][static_cast<size_t>(k1)];
      if (x == 0) continue;
      for (int j2 = 0; j1 + j2 <= D; ++j2)
        for (int k2 = 0; j1 + j2 + k1 + k2 <= D; ++k2) {
          const Rat& y = b[static_cast<size_t>(j2)][static_cast<size_t>(k2)];
          if (y == 0) continue;
          out[static_cast<size_t>(j1 + j2)][static_cast<size_t>(k1 + k2)] += x * y;
        }
    }
  return out;
}

}  // namespace detail

// The definitional path: expand (f(z)-f(w))/(z-w) = sum_n a_n sum_{j+k=n-1}
// z^j w^k, take the formal bivariate logarithm, and negate. Needs depth
// >= D+1.
inline GrunskyTable grunsky_coefficients_bivariate(const TaylorPrefix& a, int D) {
  if (a.depth() < D + 1) throw std::invalid_argument("grunsky_coefficients_bivariate: insufficient depth");
  // u = phi - 1 where phi's (j,k) coefficient is a_{j+k+1} (constant on
  // antidiagonals).
  auto u = detail::bivariate_zero(D);
  for (int j = 0; j <= D; ++j)
    for (int k = 0; j + k <= D; ++k) u[static_cast<size_t>(j)][static_cast<size_t>(k)] = a.a(j + k + 1);
  u[0][0] -= 1;
  // log(1+u) = sum_{m>=1} (-1)^(m+1) u^m / m, truncated at total degree D.
  auto acc = detail::bivariate_zero(D);
  auto power = u;
  for (int m = 1; m <= D; ++m) {
    const Rat coef = (m % 2 == 1) ? Rat(1, m) : Rat(-1, m);
    for (int j = 0; j <= D; ++j)
      for (int k = 0; j + k <= D; ++k)
        acc[static_cast<size_t>(j)][static_cast<size_t>(k)] +=
            coef * power[static_cast<size_t>(j)][static_cast<size_t>(k)];
    if (m < D) power = detail::bivariate_mul(power, u, D);
  }
  for (auto& row : acc)
    for (auto& v : row) v = -v;
  return GrunskyTable(D, std::move(acc));
}

// The recursion path (a_1 = 1):
//   c_{j,k} = sum_{l=1..k-1} (l/k) a_{k-l} c_{j+1,l}
//           - sum_{m=1..j} a_{m+1} c_{j-m,k} - a_{j+k+1}/k,  j >= 0, k >= 1,
// evaluated column by column; column k only needs rows up to D-k, and every
// dependency stays inside the triangle j+k <= D. c_{j,0} is filled from the
// expansion of -log(f(z)/z) so the table matches the bivariate definition.
inline GrunskyTable grunsky_coefficients_recursive(const TaylorPrefix& a, int D) {
  if (a.depth() < D + 1) throw std::invalid_argument("grunsky_coefficients_recursive: insufficient depth");
  auto c = detail::bivariate_zero(D);
  // Column 0: -log(f/z).
  std::vector<Rat> logv(static_cast<size_t>(D) + 1, Rat(0));
  for (int n = 1; n <= D; ++n) {
    Rat s = Rat(n) * a.a(n + 1);
    for (int k = 1; k < n; ++k) s -= Rat(k) * logv[static_cast<size_t>(k)] * a.a(n - k + 1);
    logv[static_cast<size_t>(n)] = s / n;
    c[static_cast<size_t>(n)][0] = -logv[static_cast<size_t>(n)];
  }
  for (int k = 1; k <= D; ++k) {
    for (int j = 0; j + k <= D; ++j) {
      Rat s(0);
      for (int l = 1; l < k; ++l)
        s += Rat(l, k) * a.a(k - l) * c[static_cast<size_t>(j) + 1][static_cast<size_t>(l)];
      for (int m = 1; m <= j; ++m)
        s -= a.a(m + 1) * c[static_cast<size_t>(j - m)][static_cast<size_t>(k)];
      s -= a.a(j + k + 1) / k;
      c[static_cast<size_t>(j)][static_cast<size_t>(k)] = s;
    }
  }
  return GrunskyTable(D, std::move(c));
}

// Square table c_{j,k}, 1 <= j,k <= J (the fast path is used; the bivariate
// definition is the oracle it is tested against).
inline GrunskyTable grunsky_coefficients(const TaylorPrefix& a, int J) {
  if (a.depth() < 2 * J + 1) throw std::invalid_argument("grunsky_coefficients: depth must be >= 2J+1");
  return grunsky_coefficients_recursive(a, 2 * J);
}

class GrunskyMatrix {
 public:
  GrunskyMatrix(int order, std::vector<std::vector<Rat>> g) : n_(order), g_(std::move(g)) {}

  int order() const { return n_; }

  // 1-based, matching gamma_{j,k}.
  Rat entry(int j, int k) const {
    if (j < 1 || j > n_ || k < 1 || k > n_) throw std::out_of_range("GrunskyMatrix::entry");
    return g_[static_cast<size_t>(j) - 1][static_cast<size_t>(k) - 1];
  }

  const std::vector<std::vector<Rat>>& rows() const { return g_; }

 private:
  int n_;
  std::vector<std::vector<Rat>> g_;
};

inline GrunskyMatrix grunsky_matrix(const TaylorPrefix& a, int n) {
  if (a.depth() < 2 * n + 1) throw std::invalid_argument("grunsky_matrix: depth must be >= 2n+1");
  const GrunskyTable t = grunsky_coefficients_recursive(a, 2 * n);
  std::vector<std::vector<Rat>> g(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k) {
      Rat s = (j == k) ? Rat(1, j) : Rat(0);
      for (int m = 1; m <= n; ++m) s -= Rat(m) * t.c(m, j) * t.c(m, k);
      g[static_cast<size_t>(j) - 1][static_cast<size_t>(k) - 1] = s;
      g[static_cast<size_t>(k) - 1][static_cast<size_t>(j) - 1] = s;
    }
  return GrunskyMatrix(n, std::move(g));
}

// ---------------------------------------------------------------------------
// Exact determinants and PSD decisions for symmetric rational matrices.
// ---------------------------------------------------------------------------

inline Rat det(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  Rat d(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[col][col];
      for (size_t c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
    }
  }
  return d;
}

inline Rat det(const GrunskyMatrix& g) { return det(g.rows()); }

// Certificate for a failed PSD test: a negative diagonal entry, a negative
// determinant, or a negative principal minor located by the elimination.
// Indices are 1-based row/column labels of the original matrix; `value` is
// the exact determinant of the flagged principal submatrix.
struct PsdWitness {
  enum class Kind { none, diagonal, determinant, principal_minor };
  Kind kind = Kind::none;
  std::vector<int> indices;
  Rat value;

  std::string describe() const {
    switch (kind) {
      case Kind::none:
        return "psd";
      case Kind::diagonal:
        return "diagonal(" + std::to_string(indices.front()) + ") = " + rat_str(value);
      case Kind::determinant:
        return "det = " + rat_str(value);
      case Kind::principal_minor: {
        std::string s = "minor{";
        for (size_t i = 0; i < indices.size(); ++i)
          s += (i ? "," : "") + std::to_string(indices[i]);
        return s + "} = " + rat_str(value);
      }
    }
    return {};
  }
};

struct PsdResult {
  bool psd = false;
  PsdWitness witness;
};

// Exact PSD decision for a symmetric rational matrix by Schur-complement
// elimination on positive diagonal pivots, deflating zero rows. The checks
// are ordered so that a failure reports, in this precedence:
//   1. the first negative diagonal entry,
//   2. a negative full determinant,
//   3. a negative principal minor discovered during elimination.
inline PsdResult is_psd_symmetric(std::vector<std::vector<Rat>> m) {
  const int n = static_cast<int>(m.size());
  for (int k = 0; k < n; ++k) {
    if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] < 0)
      return {false, {PsdWitness::Kind::diagonal, {k + 1}, m[static_cast<size_t>(k)][static_cast<size_t>(k)]}};
  }
  if (n == 0) return {true, {}};
  const Rat full = det(m);
  if (full < 0) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
    return {false, {PsdWitness::Kind::determinant, std::move(all), full}};
  }

  std::vector<int> active(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<size_t>(i)] = i;
  std::vector<int> eliminated;  // original indices of used pivots
  Rat pivot_product(1);

  while (!active.empty()) {
    // Schur complements can expose new negative diagonals; the product of
    // the pivots so far times such an entry is an exact principal minor.
    for (int idx : active) {
      const Rat& d = m[static_cast<size_t>(idx)][static_cast<size_t>(idx)];
      if (d < 0) {
        std::vector<int> ix;
        for (int e : eliminated) ix.push_back(e + 1);
        ix.push_back(idx + 1);
        return {false, {PsdWitness::Kind::principal_minor, std::move(ix), pivot_product * d}};
      }
    }
    int pivot = -1;
    for (int idx : active)
      if (m[static_cast<size_t>(idx)][static_cast<size_t>(idx)] > 0) {
        pivot = idx;
        break;
      }
    if (pivot < 0) {
      // All remaining diagonals are zero; the block must vanish entirely.
      for (size_t i = 0; i < active.size(); ++i)
        for (size_t j = i + 1; j < active.size(); ++j) {
          const Rat& v = m[static_cast<size_t>(active[i])][static_cast<size_t>(active[j])];
          if (v != 0) {
            std::vector<int> ix;
            for (int e : eliminated) ix.push_back(e + 1);
            ix.push_back(active[i] + 1);
            ix.push_back(active[j] + 1);
            return {false, {PsdWitness::Kind::principal_minor, std::move(ix), pivot_product * (-v * v)}};
          }
        }
      return {true, {}};
    }
    const Rat d = m[static_cast<size_t>(pivot)][static_cast<size_t>(pivot)];
    std::vector<int> rest;
    for (int idx : active)
      if (idx != pivot) rest.push_back(idx);
    for (int i : rest)
      for (int j : rest)
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
            m[static_cast<size_t>(i)][static_cast<size_t>(pivot)] *
            m[static_cast<size_t>(pivot)][static_cast<size_t>(j)] / d;
    eliminated.push_back(pivot);
    pivot_product *= d;
    active = std::move(rest);
  }
  return {true, {}};
}

inline PsdResult is_psd(const GrunskyMatrix& g) { return is_psd_symmetric(g.rows()); }

}  // namespace schlicht
