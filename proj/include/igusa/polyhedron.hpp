// Newton polyhedron at the origin: conv(supp f) + R_{>=0}^n, with exact
// V- and H-representations, the full face lattice, first meet loci and
// normal cones. Convex hull works by exhaustive candidate-normal search,
// which is exact and adequate at desk scale (n <= 6, small supports).
#ifndef IGUSA_POLYHEDRON_HPP
#define IGUSA_POLYHEDRON_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/linalg.hpp"
#include "igusa/poly.hpp"

namespace igusa {

/// Inequality normal . x >= offset with primitive normal in Z_{>=0}^n.
struct Facet {
  IntVec normal;
  BigInt offset;
  bool operator==(const Facet&) const = default;
};

struct NewtonPolyhedron {
  int n = 0;
  std::vector<IntVec> vertices;        // minimal V-representation, lex sorted
  std::vector<Facet> facets;           // irredundant H-representation
  std::vector<IntVec> support_points;  // the defining support, lex sorted

  bool contains(const IntVec& x) const {
    for (const auto& f : facets)
      if (dot_int(f.normal, x) < f.offset) return false;
    return true;
  }
  bool contains_rat(const RatVec& x) const {
    for (const auto& f : facets)
      if (dot(to_rat(f.normal), x) < Rat(f.offset)) return false;
    return true;
  }
};

struct Face {
  int id = -1;
  std::vector<int> tight_facets;  // maximal set of facets containing the face
  int dim = 0;
  int codim = 0;
  std::vector<int> vertex_ids;         // indices into polyhedron vertices
  std::vector<int> rays;               // coordinate recession directions e_j
  std::vector<IntVec> support_points;  // subset of supp(f) on the face
  bool is_proper = false;
  bool is_compact = false;
  bool affine_span_contains_origin = false;
};

/// All non-empty faces, sorted by (dim, vertex set, ray set); the polyhedron
/// itself is the unique face of dimension n.
struct FaceLattice {
  std::vector<Face> faces;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;  // (verts,rays) -> id

  const Face& full_face() const { return faces.back(); }
  int find(const std::vector<int>& verts, const std::vector<int>& rays) const {
    auto it = index.find({verts, rays});
    if (it == index.end()) throw GeometryError("face lookup failed");
    return it->second;
  }
};

/// nu(a), N(a) and the first meet locus F(a) for a vector a >= 0.
struct LinearData {
  BigInt nu;
  BigInt N;
  int face_id = -1;
};

/// Polyhedral cone spanned by primitive integer extreme rays in Z_{>=0}^n.
struct Cone {
  std::vector<IntVec> generators;  // lex sorted
  int dim = 0;
};

namespace detail {

// Candidate facet normals: kernels of (n-1)-subsets drawn from pairwise
// support differences and coordinate vectors, plus the coordinate vectors
// themselves. Every facet normal of conv(S) + orthant arises this way.
inline std::set<IntVec> candidate_normals(const std::vector<IntVec>& supp, int n) {
  std::vector<IntVec> pool;
  for (size_t i = 0; i < supp.size(); ++i)
    for (size_t j = i + 1; j < supp.size(); ++j) {
      IntVec d(n);
      bool nonzero = false;
      for (int t = 0; t < n; ++t) {
        d[t] = supp[i][t] - supp[j][t];
        nonzero |= d[t] != 0;
      }
      if (nonzero) pool.push_back(d);
    }
  for (int j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    pool.push_back(e);
  }

  std::set<IntVec> out;
  for (int j = 0; j < n; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    out.insert(e);
  }
  if (n == 1) return out;

  size_t m = pool.size();
  // iterate over all (n-1)-subsets of the pool
  std::vector<size_t> comb;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (comb.size() == static_cast<size_t>(n - 1)) {
      RatMat rows;
      for (size_t i : comb) rows.push_back(to_rat(pool[i]));
      auto ker = kernel_basis(rows, n);
      if (ker.size() != 1) return;
      IntVec c = primitive_integer(ker[0]);
      bool nonneg = true, nonpos = true;
      for (const auto& x : c) {
        if (x > 0) nonpos = false;
        if (x < 0) nonneg = false;
      }
      if (nonneg && !c.empty())
        out.insert(c);
      else if (nonpos) {
        for (auto& x : c) x = -x;
        out.insert(c);
      }
      return;
    }
    for (size_t i = start; i < m; ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  return out;
}

inline int face_dim(const std::vector<IntVec>& pts, const std::vector<int>& rays, int n) {
  RatMat dirs;
  for (size_t i = 1; i < pts.size(); ++i) {
    RatVec d(n);
    for (int t = 0; t < n; ++t) d[t] = Rat(pts[i][t] - pts[0][t]);
    dirs.push_back(d);
  }
  for (int j : rays) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    dirs.push_back(e);
  }
  return dirs.empty() ? 0 : rank(dirs);
}

}  // namespace detail

/// Build Delta_0 from a support set. Requires a non-empty support not
/// containing the origin (f(0) = 0 and f != 0).
inline NewtonPolyhedron newton_polyhedron(const std::set<ExponentVec>& supp_in) {
  if (supp_in.empty()) throw GeometryError("newton_polyhedron: empty support");
  int n = static_cast<int>(supp_in.begin()->size());
  std::vector<IntVec> supp;
  for (const auto& e : supp_in) {
    if (static_cast<int>(e.size()) != n)
      throw GeometryError("newton_polyhedron: inconsistent dimensions");
    if (is_origin(e)) throw GeometryError("newton_polyhedron: origin in support");
    IntVec v(n);
    for (int t = 0; t < n; ++t) {
      if (e[t] < 0) throw GeometryError("newton_polyhedron: negative exponent");
      v[t] = e[t];
    }
    supp.push_back(v);
  }
  std::sort(supp.begin(), supp.end());

  NewtonPolyhedron P;
  P.n = n;
  P.support_points = supp;

  // Collect valid inequalities from candidate normals, keep the facets.
  for (const IntVec& c : detail::candidate_normals(supp, n)) {
    BigInt b = dot_int(c, supp[0]);
    for (const auto& v : supp) b = std::min(b, dot_int(c, v));
    std::vector<IntVec> tight;
    for (const auto& v : supp)
      if (dot_int(c, v) == b) tight.push_back(v);
    std::vector<int> rays;
    for (int j = 0; j < n; ++j)
      if (c[j] == 0) rays.push_back(j);
    if (detail::face_dim(tight, rays, n) == n - 1) P.facets.push_back({c, b});
  }
  std::sort(P.facets.begin(), P.facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  P.facets.erase(std::unique(P.facets.begin(), P.facets.end()), P.facets.end());

  // Vertices: support points where the tight facet normals span R^n.
  for (const auto& v : supp) {
    RatMat tight;
    for (const auto& f : P.facets)
      if (dot_int(f.normal, v) == f.offset) tight.push_back(to_rat(f.normal));
    if (!tight.empty() && rank(tight) == n) P.vertices.push_back(v);
  }
  return P;
}

inline NewtonPolyhedron newton_polyhedron(const IntPolynomial& f) {
  return newton_polyhedron(support(f));
}

/// All non-empty faces as intersections of facet subsets, deduplicated by
/// (vertex set, recession rays) and sorted by dimension.
inline FaceLattice enumerate_faces(const NewtonPolyhedron& P) {
  int n = P.n;
  size_t nf = P.facets.size();
  std::map<std::pair<std::vector<int>, std::vector<int>>, Face> found;

  for (size_t mask = 0; mask < (size_t{1} << nf); ++mask) {
    std::vector<int> chosen;
    for (size_t i = 0; i < nf; ++i)
      if (mask & (size_t{1} << i)) chosen.push_back(static_cast<int>(i));

    std::vector<int> verts;
    for (size_t vi = 0; vi < P.vertices.size(); ++vi) {
      bool on = true;
      for (int fi : chosen)
        if (dot_int(P.facets[fi].normal, P.vertices[vi]) != P.facets[fi].offset) {
          on = false;
          break;
        }
      if (on) verts.push_back(static_cast<int>(vi));
    }
    if (verts.empty()) continue;  // empty face

    std::vector<int> rays;
    for (int j = 0; j < n; ++j) {
      bool on = true;
      for (int fi : chosen)
        if (P.facets[fi].normal[j] != 0) {
          on = false;
          break;
        }
      if (on) rays.push_back(j);
    }
    auto key = std::make_pair(verts, rays);
    if (found.count(key)) continue;

    Face F;
    F.vertex_ids = verts;
    F.rays = rays;
    // Maximal tight facet set: facets containing all vertices and rays.
    for (size_t fi = 0; fi < nf; ++fi) {
      bool on = true;
      for (int vi : verts)
        if (dot_int(P.facets[fi].normal, P.vertices[vi]) != P.facets[fi].offset) {
          on = false;
          break;
        }
      for (int j : rays)
        if (on && P.facets[fi].normal[j] != 0) on = false;
      if (on) F.tight_facets.push_back(static_cast<int>(fi));
    }
    std::vector<IntVec> vpts;
    for (int vi : verts) vpts.push_back(P.vertices[vi]);
    F.dim = detail::face_dim(vpts, rays, n);
    F.codim = n - F.dim;
    F.is_proper = !F.tight_facets.empty();
    F.is_compact = rays.empty();
    for (const auto& s : P.support_points) {
      bool on = true;
      for (int fi : F.tight_facets)
        if (dot_int(P.facets[fi].normal, s) != P.facets[fi].offset) {
          on = false;
          break;
        }
      if (on) F.support_points.push_back(s);
    }
    // origin lies in the affine span iff v0 is in the direction space
    {
      RatMat dirs;
      for (size_t i = 1; i < vpts.size(); ++i) {
        RatVec d(n);
        for (int t = 0; t < n; ++t) d[t] = Rat(vpts[i][t] - vpts[0][t]);
        dirs.push_back(d);
      }
      for (int j : rays) {
        RatVec e(n, Rat(0));
        e[j] = 1;
        dirs.push_back(e);
      }
      int r0 = dirs.empty() ? 0 : rank(dirs);
      dirs.push_back(to_rat(vpts[0]));
      F.affine_span_contains_origin = rank(dirs) == r0;
    }
    found.emplace(key, std::move(F));
  }

  FaceLattice L;
  for (auto& [key, f] : found) L.faces.push_back(std::move(f));
  std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.vertex_ids, a.rays) < std::tie(b.dim, b.vertex_ids, b.rays);
  });
  for (size_t i = 0; i < L.faces.size(); ++i) {
    L.faces[i].id = static_cast<int>(i);
    L.index[{L.faces[i].vertex_ids, L.faces[i].rays}] = static_cast<int>(i);
  }
  return L;
}

/// N(a) = min_{x in Delta_0} a.x, nu(a) = sum a_j, F(a) identified in L.
inline LinearData first_meet_locus(const NewtonPolyhedron& P, const FaceLattice& L,
                                   const IntVec& a) {
  for (const auto& x : a)
    if (x < 0) throw GeometryError("first_meet_locus: negative entry");
  LinearData d;
  d.nu = 0;
  for (const auto& x : a) d.nu += x;
  d.N = dot_int(a, P.vertices[0]);
  for (const auto& v : P.vertices) d.N = std::min(d.N, dot_int(a, v));
  std::vector<int> verts;
  for (size_t vi = 0; vi < P.vertices.size(); ++vi)
    if (dot_int(a, P.vertices[vi]) == d.N) verts.push_back(static_cast<int>(vi));
  std::vector<int> rays;
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] == 0) rays.push_back(static_cast<int>(j));
  d.face_id = L.find(verts, rays);
  return d;
}

/// Primitive integer extreme rays of the pointed cone
/// {x in R^n : eq . x = 0, ineq . x >= 0}. The cone must be pointed (which
/// holds whenever the constraints include the non-negative orthant).
inline std::vector<IntVec> extreme_rays(const RatMat& eq, const RatMat& ineq, int n) {
  auto K = kernel_basis(eq, static_cast<size_t>(n));
  int d = static_cast<int>(K.size());
  if (d == 0) return {};

  RatMat proj;  // inequality rows in kernel coordinates
  for (const auto& row : ineq) {
    RatVec pr(d);
    for (int i = 0; i < d; ++i) pr[i] = dot(row, K[i]);
    proj.push_back(pr);
  }

  std::set<IntVec> rays_out;
  auto consider = [&](const RatVec& z0) {
    for (int sign = 0; sign < 2; ++sign) {
      RatVec z = z0;
      if (sign)
        for (auto& x : z) x = -x;
      bool ok = true;
      for (const auto& pr : proj)
        if (dot(pr, z) < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      RatVec r(n, Rat(0));
      for (int i = 0; i < d; ++i)
        for (int t = 0; t < n; ++t) r[t] += z[i] * K[i][t];
      IntVec ri = primitive_integer(r);
      bool nonzero = false;
      for (const auto& x : ri) nonzero |= x != 0;
      if (nonzero) rays_out.insert(ri);
      return;  // at most one orientation is feasible for a nonzero ray
    }
  };

  std::vector<size_t> comb;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (comb.size() == static_cast<size_t>(d - 1)) {
      RatMat rows;
      for (size_t i : comb) rows.push_back(proj[i]);
      auto ker = kernel_basis(rows, d);
      if (ker.size() == 1) consider(ker[0]);
      return;
    }
    for (size_t i = start; i < proj.size(); ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  return {rays_out.begin(), rays_out.end()};
}

/// Closed normal cone {a >= 0 : F(a) contains tau}, by primitive extreme rays.
/// Its relative interior is exactly {a : F(a) = tau}.
inline Cone normal_cone(const NewtonPolyhedron& P, const FaceLattice& L, const Face& tau) {
  int n = P.n;
  if (!tau.is_proper) return Cone{{}, 0};  // the full face has the zero cone

  const IntVec& v0 = P.vertices[tau.vertex_ids[0]];
  RatMat eq;
  for (size_t i = 1; i < tau.vertex_ids.size(); ++i) {
    RatVec row(n);
    const IntVec& v = P.vertices[tau.vertex_ids[i]];
    for (int t = 0; t < n; ++t) row[t] = Rat(v[t] - v0[t]);
    eq.push_back(row);
  }
  for (int j : tau.rays) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    eq.push_back(e);
  }

  RatMat ineq;
  for (size_t wi = 0; wi < P.vertices.size(); ++wi) {
    if (std::find(tau.vertex_ids.begin(), tau.vertex_ids.end(), static_cast<int>(wi)) !=
        tau.vertex_ids.end())
      continue;
    RatVec row(n);
    for (int t = 0; t < n; ++t) row[t] = Rat(P.vertices[wi][t] - v0[t]);
    ineq.push_back(row);
  }
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rat(0));
    e[j] = 1;
    ineq.push_back(e);
  }

  Cone C;
  for (auto& g : extreme_rays(eq, ineq, n)) {
    bool nonneg = true;
    for (const auto& x : g) nonneg &= x >= 0;
    if (!nonneg) throw GeometryError("normal_cone: ray outside the orthant");
    C.generators.push_back(std::move(g));
  }
  std::sort(C.generators.begin(), C.generators.end());
  RatMat gm;
  for (const auto& g : C.generators) gm.push_back(to_rat(g));
  C.dim = gm.empty() ? 0 : rank(gm);
  if (C.dim != n - tau.dim) throw GeometryError("normal_cone: extreme ray enumeration failed");
  return C;
}

}  // namespace igusa

#endif
