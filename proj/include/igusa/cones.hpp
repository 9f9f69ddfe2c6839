// Half-open simplicial decomposition of the relative interior of a pointed
// rational cone, and lattice-point enumeration of half-open fundamental
// parallelepipeds. This is the engine behind the exact cone lattice sums.
//
// Construction: a placing (beneath-beyond) triangulation of the cone using
// its extreme rays only, then per-piece facet exclusion decided by a generic
// reference vector w with h.w < 0 for every supporting hyperplane h of the
// cone (such w exists since the cone is pointed: take w in -relint C).
// A point of the closed cone then lies in exactly one half-open piece iff it
// lies in the relative interior of C, which is the exact index set of the
// sums S_tau and A_tau/B_tau.
#ifndef IGUSA_CONES_HPP
#define IGUSA_CONES_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/linalg.hpp"
#include "igusa/polyhedron.hpp"

namespace igusa {

struct HalfOpenSimplicialCone {
  std::vector<IntVec> generators;  // linearly independent primitive vectors
  std::vector<bool> open_mask;     // true: facet {lambda_j = 0} excluded
  // solve matrix: lambda = solve (generators as columns) for membership
};

/// Barycentric coordinates of x in the generator basis, or nullopt when x is
/// outside the linear span.
inline std::optional<RatVec> cone_coordinates(const HalfOpenSimplicialCone& S,
                                              const RatVec& x) {
  size_t n = x.size(), d = S.generators.size();
  RatMat m(n, RatVec(d));
  for (size_t j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = Rat(S.generators[j][i]);
  // Solve m . lambda = x; m has full column rank.
  RatMat aug = m;
  for (size_t i = 0; i < n; ++i) aug[i].push_back(x[i]);
  auto piv = rref(aug);
  RatVec lambda(d, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == static_cast<int>(d)) return std::nullopt;  // inconsistent
    lambda[piv[r]] = aug[r][d];
  }
  // verify (also catches underdetermined systems, which cannot happen here)
  for (size_t i = 0; i < n; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < d; ++j) s += Rat(S.generators[j][i]) * lambda[j];
    if (s != x[i]) return std::nullopt;
  }
  return lambda;
}

/// Membership in the half-open cone {sum lambda_j g_j : lambda_j > 0 if open}.
inline bool half_open_contains(const HalfOpenSimplicialCone& S, const RatVec& x) {
  auto lam = cone_coordinates(S, x);
  if (!lam) return false;
  for (size_t j = 0; j < S.generators.size(); ++j) {
    if ((*lam)[j] < 0) return false;
    if (S.open_mask[j] && (*lam)[j] == 0) return false;
  }
  return true;
}

inline bool half_open_contains(const HalfOpenSimplicialCone& S, const IntVec& x) {
  return half_open_contains(S, to_rat(x));
}

namespace detail {

// Facets of a full-dimensional pointed cone in R^d given by its rays:
// supporting hyperplane normals h with h.cone >= 0 and a (d-1)-dimensional
// tight set.
inline std::vector<RatVec> cone_facet_normals(const std::vector<RatVec>& rays, int d) {
  std::set<IntVec> normals;
  std::vector<size_t> comb;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (comb.size() == static_cast<size_t>(d - 1)) {
      RatMat rows;
      for (size_t i : comb) rows.push_back(rays[i]);
      auto ker = kernel_basis(rows, d);
      if (ker.size() != 1) return;
      RatVec h = ker[0];
      int pos = 0, neg = 0;
      std::vector<RatVec> tight;
      for (const auto& r : rays) {
        Rat v = dot(h, r);
        if (v > 0) ++pos;
        if (v < 0) ++neg;
        if (v == 0) tight.push_back(r);
      }
      if (pos && neg) return;  // not supporting
      if (neg) for (auto& x : h) x = -x;
      RatMat tm = tight;
      if (rank(tm) != d - 1) return;  // lower-dimensional contact
      normals.insert(primitive_integer(h));
      return;
    }
    for (size_t i = start; i < rays.size(); ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  if (d >= 2)
    rec(0);
  else
    normals.insert(IntVec{BigInt(1)});  // dim-1 cone: single facet {0}
  std::vector<RatVec> out;
  for (const auto& h : normals) out.push_back(to_rat(h));
  return out;
}

}  // namespace detail

/// Decompose the relative interior of C into pairwise disjoint half-open
/// simplicial cones on C's extreme rays. Deterministic: rays in lex order,
/// placing triangulation, reference vector -(sum t^i r_i) with the smallest
/// t >= 1 avoiding all piece hyperplanes.
inline std::vector<HalfOpenSimplicialCone> triangulate_half_open(const Cone& C) {
  if (C.generators.empty() || C.dim < 1)
    throw GeometryError("triangulate_half_open: zero cone");
  size_t m = C.generators.size();
  int n = static_cast<int>(C.generators[0].size());
  int d = C.dim;

  // Span coordinates: express every ray in a basis formed by the lex-first
  // maximal independent subset of rays.
  std::vector<size_t> basis_idx;
  {
    RatMat acc;
    for (size_t i = 0; i < m && static_cast<int>(basis_idx.size()) < d; ++i) {
      RatMat test = acc;
      test.push_back(to_rat(C.generators[i]));
      if (rank(test) > static_cast<int>(acc.size())) {
        acc = test;
        basis_idx.push_back(i);
      }
    }
  }
  RatMat B(n, RatVec(d));  // columns are basis rays
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < n; ++i) B[i][j] = Rat(C.generators[basis_idx[j]][i]);
  auto span_coords = [&](const IntVec& v) -> RatVec {
    RatMat aug = B;
    for (int i = 0; i < n; ++i) aug[i].push_back(Rat(v[i]));
    auto piv = rref(aug);
    RatVec out(d, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == d) throw GeometryError("ray outside span");
      out[piv[r]] = aug[r][d];
    }
    return out;
  };
  std::vector<RatVec> rays(m);
  for (size_t i = 0; i < m; ++i) rays[i] = span_coords(C.generators[i]);

  // Placing order: the basis rays first (their cone is the starting simplex),
  // then the remaining rays in lex order.
  std::vector<size_t> order = basis_idx;
  for (size_t i = 0; i < m; ++i)
    if (std::find(basis_idx.begin(), basis_idx.end(), i) == basis_idx.end())
      order.push_back(i);

  std::vector<std::vector<size_t>> pieces;  // index sets into C.generators
  pieces.push_back(std::vector<size_t>(basis_idx.begin(), basis_idx.end()));
  std::vector<size_t> placed = basis_idx;

  for (size_t oi = d; oi < order.size(); ++oi) {
    size_t vi = order[oi];
    const RatVec& v = rays[vi];
    std::vector<RatVec> placed_rays;
    for (size_t i : placed) placed_rays.push_back(rays[i]);
    auto facets = detail::cone_facet_normals(placed_rays, d);
    std::vector<RatVec> visible;
    for (const auto& h : facets)
      if (dot(h, v) < 0) visible.push_back(h);

    std::set<std::vector<size_t>> fresh;
    for (const auto& S : pieces) {
      for (size_t skip = 0; skip < S.size(); ++skip) {
        std::vector<size_t> G;
        for (size_t j = 0; j < S.size(); ++j)
          if (j != skip) G.push_back(S[j]);
        for (const auto& h : visible) {
          bool on = true;
          for (size_t g : G)
            if (dot(h, rays[g]) != 0) {
              on = false;
              break;
            }
          if (on) {
            std::vector<size_t> piece = G;
            piece.push_back(vi);
            std::sort(piece.begin(), piece.end());
            fresh.insert(piece);
            break;
          }
        }
      }
    }
    for (const auto& p : fresh) pieces.push_back(p);
    placed.push_back(vi);
  }
  std::sort(pieces.begin(), pieces.end());

  // Dual-basis facet normals per piece (rows of the inverse generator matrix
  // in span coordinates).
  std::vector<RatMat> duals;
  for (const auto& S : pieces) {
    RatMat g(d, RatVec(d));  // columns are piece generators
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) g[i][j] = rays[S[j]][i];
    // invert by solving g . X = I
    RatMat aug = g;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    rref(aug);
    RatMat inv(d, RatVec(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
    duals.push_back(inv);  // row j is the normal of the facet opposite g_j
  }

  // Reference vector w = -(sum t^i rays[i]); pick the smallest t making it
  // generic for every piece facet. Any t keeps w in -relint(C).
  RatVec w;
  for (BigInt t = 1;; ++t) {
    w.assign(d, Rat(0));
    BigInt scale = 1;
    for (size_t i = 0; i < m; ++i) {
      for (int j = 0; j < d; ++j) w[j] -= Rat(scale) * rays[i][j];
      scale *= t;
    }
    bool generic = true;
    for (const auto& inv : duals)
      for (int j = 0; j < d && generic; ++j)
        if (dot(inv[j], w) == 0) generic = false;
    if (generic) break;
  }

  std::vector<HalfOpenSimplicialCone> out;
  for (size_t pi = 0; pi < pieces.size(); ++pi) {
    HalfOpenSimplicialCone H;
    for (size_t gi : pieces[pi]) H.generators.push_back(C.generators[gi]);
    for (int j = 0; j < d; ++j) H.open_mask.push_back(dot(duals[pi][j], w) < 0);
    out.push_back(std::move(H));
  }
  return out;
}

/// Lattice points of the half-open fundamental parallelepiped
/// {sum lambda_j g_j : lambda_j in (0,1] if open else [0,1)}.
/// The count equals the lattice index of the generator matrix.
inline std::vector<IntVec> parallelepiped_points(const HalfOpenSimplicialCone& S) {
  size_t d = S.generators.size();
  if (d == 0) return {IntVec{}};
  size_t n = S.generators[0].size();
  IntVec box(n, 0);
  for (const auto& g : S.generators)
    for (size_t i = 0; i < n; ++i) {
      if (g[i] < 0) throw GeometryError("parallelepiped_points: negative generator entry");
      box[i] += g[i];
    }
  std::vector<IntVec> out;
  IntVec x(n, 0);
  std::function<void(size_t)> rec = [&](size_t coord) {
    if (coord == n) {
      auto lam = cone_coordinates(S, to_rat(x));
      if (!lam) return;
      for (size_t j = 0; j < d; ++j) {
        const Rat& l = (*lam)[j];
        if (S.open_mask[j] ? (l <= 0 || l > 1) : (l < 0 || l >= 1)) return;
      }
      out.push_back(x);
      return;
    }
    for (BigInt v = 0; v <= box[coord]; ++v) {
      x[coord] = v;
      rec(coord + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace igusa

#endif
