// Small exact rational linear algebra: rank, kernels, solves, integer minors.
// Everything here is desk-scale (dimensions <= ~8); no pivoting heuristics
// beyond first-nonzero are needed since arithmetic is exact.
#ifndef IGUSA_LINALG_HPP
#define IGUSA_LINALG_HPP

#include <cassert>
#include <optional>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major
using IntVec = std::vector<BigInt>;

inline BigInt gcd_bigint(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline BigInt dot_int(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

/// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

/// Basis of the right kernel {x : M x = 0}.
inline std::vector<RatVec> kernel_basis(RatMat m, size_t cols) {
  if (m.empty()) {
    std::vector<RatVec> basis;
    for (size_t j = 0; j < cols; ++j) {
      RatVec e(cols, Rat(0));
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(v);
  }
  return basis;
}

/// Solve M x = b for the unique solution; nullopt if inconsistent or
/// underdetermined in the used columns.
inline std::optional<RatVec> solve_unique(RatMat m, RatVec b) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  auto pivots = rref(m);
  // Inconsistent if a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

/// Scale a rational vector to a primitive integer vector (gcd of entries 1).
/// Sign convention: first non-zero entry positive.
inline IntVec primitive_integer(const RatVec& v) {
  BigInt l = 1;
  for (const Rat& x : v) l = l / gcd_bigint(l, den(x)) * den(x);
  IntVec w(v.size());
  BigInt g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = num(v[i]) * (l / den(v[i]));
    g = gcd_bigint(g, w[i]);
  }
  if (g != 0) {
    for (auto& x : w) x /= g;
  }
  for (const auto& x : w) {
    if (x != 0) {
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
  }
  return w;
}

inline BigInt det_int(std::vector<IntVec> m) {
  // Fraction-free Bareiss elimination.
  size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1, sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[sel], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// gcd of all k x k minors of an n x k integer matrix whose columns are the
/// generators; this is the index of the sublattice they span.
inline BigInt lattice_index(const std::vector<IntVec>& columns) {
  size_t k = columns.size();
  if (k == 0) return 1;
  size_t n = columns[0].size();
  assert(k <= n);
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  BigInt g = 0;
  while (true) {
    std::vector<IntVec> sub(k, IntVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = columns[j][idx[i]];
    g = gcd_bigint(g, det_int(sub));
    // next combination
    size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return g;
    }
  }
}

}  // namespace igusa

#endif
