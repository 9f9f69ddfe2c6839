// Invariants of the Newton polyhedron and the hypotheses they feed:
// the diagonal crossing value sigma with kappa and tau_0, face polynomials,
// hyperplane-support decompositions, non-degeneracy certificates over
// finite fields, and a heuristic critical-locus dimension estimate.
#ifndef IGUSA_INVARIANTS_HPP
#define IGUSA_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/finite_field.hpp"
#include "igusa/poly.hpp"
#include "igusa/polyhedron.hpp"

namespace igusa {

/// Polyhedron plus its face lattice; most operations want both.
struct NewtonData {
  NewtonPolyhedron P;
  FaceLattice L;
};

inline NewtonData analyze_polyhedron(const IntPolynomial& f) {
  NewtonData nd;
  nd.P = newton_polyhedron(f);
  nd.L = enumerate_faces(nd.P);
  return nd;
}

struct SigmaInvariants {
  Rat t0;             // smallest t with (t,...,t) in Delta_0
  ExtendedRat sigma;  // 1/t0; the theorem-statement value
  int tau0 = -1;      // id of the smallest face containing the diagonal point
  int kappa = 0;      // codim tau0
  Rat sigma_F1;       // n / N(1,...,1), the first-meet-locus formula
  bool agrees = false;

  /// Log canonical threshold min{1, sigma} (derived field).
  Rat sigma0() const { return std::min(Rat(1), sigma.value); }
};

/// Diagonal crossing data. t0 = max over facets of b / (c.1); every facet
/// normal is non-zero and non-negative, so c.1 > 0 always.
inline SigmaInvariants sigma_kappa(const NewtonData& nd) {
  const NewtonPolyhedron& P = nd.P;
  SigmaInvariants inv;
  Rat t0(0);
  for (const auto& f : P.facets) {
    BigInt csum = 0;
    for (const auto& x : f.normal) csum += x;
    t0 = std::max(t0, Rat(f.offset, csum));
  }
  if (t0 == 0) throw GeometryError("sigma_kappa: origin lies in the polyhedron");
  inv.t0 = t0;
  inv.sigma = ExtendedRat::of(Rat(1) / t0);

  // tau0: the face cut out by the facets tight at the diagonal point.
  std::vector<int> verts, rays;
  for (size_t vi = 0; vi < P.vertices.size(); ++vi) {
    bool on = true;
    for (const auto& f : P.facets) {
      BigInt csum = 0;
      for (const auto& x : f.normal) csum += x;
      if (t0 * Rat(csum) == Rat(f.offset) &&
          dot_int(f.normal, P.vertices[vi]) != f.offset) {
        on = false;
        break;
      }
    }
    if (on) verts.push_back(static_cast<int>(vi));
  }
  for (int j = 0; j < P.n; ++j) {
    bool on = true;
    for (const auto& f : P.facets) {
      BigInt csum = 0;
      for (const auto& x : f.normal) csum += x;
      if (t0 * Rat(csum) == Rat(f.offset) && f.normal[j] != 0) {
        on = false;
        break;
      }
    }
    if (on) rays.push_back(j);
  }
  inv.tau0 = nd.L.find(verts, rays);
  inv.kappa = nd.L.faces[inv.tau0].codim;

  LinearData one = first_meet_locus(P, nd.L, IntVec(P.n, BigInt(1)));
  inv.sigma_F1 = Rat(BigInt(P.n), one.N);
  inv.agrees = !inv.sigma.infinite && inv.sigma.value == inv.sigma_F1;
  return inv;
}

/// sigma(f) with the conventions sigma(0) = 0; finite for f(0) = 0, f != 0.
inline ExtendedRat sigma_of(const IntPolynomial& f) {
  if (f.is_zero()) return ExtendedRat::of(Rat(0));
  return sigma_kappa(analyze_polyhedron(f)).sigma;
}

/// f_tau: the terms of f supported on the face tau.
inline IntPolynomial face_polynomial(const IntPolynomial& f, const NewtonData& nd,
                                     const Face& tau) {
  IntPolynomial r{f.n, {}};
  for (const auto& [e, c] : f.terms) {
    IntVec v(f.n);
    for (int t = 0; t < f.n; ++t) v[t] = e[t];
    bool on = true;
    for (int fi : tau.tight_facets)
      if (dot_int(nd.P.facets[fi].normal, v) != nd.P.facets[fi].offset) {
        on = false;
        break;
      }
    if (on) r.terms.emplace(e, c);
  }
  return r;
}

/// sigma of the polyhedron tau + R_{>=0}^n (the diagonal crossing of
/// Delta_0(f_tau)).
inline Rat sigma_of_face(const NewtonData& nd, const Face& tau) {
  std::set<ExponentVec> supp;
  for (const auto& v : tau.support_points) {
    ExponentVec e(v.size());
    for (size_t t = 0; t < v.size(); ++t) e[t] = v[t].convert_to<int>();
    supp.insert(e);
  }
  NewtonPolyhedron Q = newton_polyhedron(supp);
  Rat t0(0);
  for (const auto& f : Q.facets) {
    BigInt csum = 0;
    for (const auto& x : f.normal) csum += x;
    t0 = std::max(t0, Rat(f.offset, csum));
  }
  return Rat(1) / t0;
}

// ---------------------------------------------------------------------------
// Hyperplane support (f supported on c.i = b with c >= 0, b > 0)
// ---------------------------------------------------------------------------

struct HyperplaneDecomposition {
  bool exists = false;
  IntVec c;    // weights
  BigInt b;    // offset, > 0
  std::vector<int> s_vars;  // weight == b; these occur linearly
  std::vector<int> t_vars;  // weight in (0, b)
  std::vector<int> r_vars;  // weight == 0
  IntPolynomial h;               // terms not linear in an s-variable
  std::vector<IntPolynomial> g;  // per s-variable, supported on r-variables
  bool strictly_positive_normal = false;  // r empty: quasi-homogeneous
};

/// Decide whether supp f lies on a hyperplane c.i = b with c in Z_{>=0}^n and
/// b > 0; among feasible hyperplanes the count of zero weights r is maximized,
/// ties broken by minimal b then lexicographic c. Returns exists = false when
/// infeasible.
inline HyperplaneDecomposition hyperplane_support(const IntPolynomial& f) {
  if (f.is_zero()) throw GeometryError("hyperplane_support: zero polynomial");
  if (!f.vanishes_at_origin())
    throw GeometryError("hyperplane_support: f(0) != 0");
  int n = f.n;
  std::vector<IntVec> supp;
  for (const auto& [e, c0] : f.terms) {
    IntVec v(n);
    for (int t = 0; t < n; ++t) v[t] = e[t];
    supp.push_back(v);
  }
  const IntVec& i0 = supp[0];

  RatMat diffs;
  for (size_t i = 1; i < supp.size(); ++i) {
    RatVec row(n);
    for (int t = 0; t < n; ++t) row[t] = Rat(supp[i][t] - i0[t]);
    diffs.push_back(row);
  }

  HyperplaneDecomposition D;
  for (int r = n - 1; r >= 0 && !D.exists; --r) {
    std::vector<IntVec> candidates;
    // all zero-patterns Z of size r, lexicographic
    std::vector<int> Z;
    std::function<void(int)> patterns = [&](int start) {
      if (static_cast<int>(Z.size()) == r) {
        RatMat eq = diffs;
        for (int j : Z) {
          RatVec e(n, Rat(0));
          e[j] = 1;
          eq.push_back(e);
        }
        RatMat ineq;
        for (int j = 0; j < n; ++j) {
          RatVec e(n, Rat(0));
          e[j] = 1;
          ineq.push_back(e);
        }
        for (auto& ray : extreme_rays(eq, ineq, n)) {
          bool nonneg = true;
          int zeros = 0;
          for (const auto& x : ray) {
            nonneg &= x >= 0;
            zeros += x == 0;
          }
          if (!nonneg && std::all_of(ray.begin(), ray.end(),
                                     [](const BigInt& x) { return x <= 0; })) {
            for (auto& x : ray) x = -x;
            nonneg = true;
          }
          if (!nonneg || zeros != r) continue;
          if (dot_int(ray, i0) > 0) candidates.push_back(ray);
        }
        return;
      }
      for (int j = start; j < n; ++j) {
        Z.push_back(j);
        patterns(j + 1);
        Z.pop_back();
      }
    };
    patterns(0);
    if (candidates.empty()) continue;

    auto better = [&](const IntVec& a, const IntVec& b2) {
      BigInt ba = dot_int(a, i0), bb = dot_int(b2, i0);
      return std::tie(ba, a) < std::tie(bb, b2);
    };
    D.c = *std::min_element(candidates.begin(), candidates.end(), better);
    D.b = dot_int(D.c, i0);
    D.exists = true;
  }
  if (!D.exists) return D;

  for (int j = 0; j < n; ++j) {
    if (D.c[j] == 0)
      D.r_vars.push_back(j);
    else if (D.c[j] == D.b)
      D.s_vars.push_back(j);
    else
      D.t_vars.push_back(j);
  }
  D.strictly_positive_normal = D.r_vars.empty();

  D.h = IntPolynomial{n, {}};
  D.g.assign(D.s_vars.size(), IntPolynomial{n, {}});
  for (const auto& [e, coef] : f.terms) {
    int sj = -1;
    for (size_t si = 0; si < D.s_vars.size(); ++si)
      if (e[D.s_vars[si]] > 0) {
        sj = static_cast<int>(si);
        break;
      }
    if (sj < 0) {
      D.h.add_term(e, coef);
    } else {
      // c_{s} = b forces the term to be x_s times a monomial in the r-vars
      ExponentVec w = e;
      if (w[D.s_vars[sj]] != 1)
        throw GeometryError("hyperplane_support: s-variable occurs non-linearly");
      w[D.s_vars[sj]] = 0;
      D.g[sj].add_term(w, coef);
    }
  }
  return D;
}

/// f_I = h + sum_{i in I} g_i x_i (I given by positions into s_vars).
inline IntPolynomial build_f_I(const HyperplaneDecomposition& D,
                               const std::vector<int>& I) {
  if (!D.exists) throw GeometryError("build_f_I: no hyperplane decomposition");
  IntPolynomial r = D.h;
  for (int si : I) {
    const IntPolynomial& gi = D.g[si];
    for (const auto& [e, c] : gi.terms) {
      ExponentVec w = e;
      w[D.s_vars[si]] += 1;
      r.add_term(w, c);
    }
  }
  if (r.is_zero()) throw GeometryError("build_f_I: empty result (h = 0 and I empty)");
  return r;
}

// ---------------------------------------------------------------------------
// Non-degeneracy certificates
// ---------------------------------------------------------------------------

enum class NondegMode { Strong, Weak };

struct DegenerateWitness {
  int face_id = -1;
  int field_degree = 1;
  std::vector<FFElem> point;  // full n-tuple over F_{p^k}
};

struct FaceVerdict {
  int face_id = -1;
  bool nondegenerate = true;
  std::optional<DegenerateWitness> witness;
};

struct NondegCertificate {
  NondegMode mode = NondegMode::Strong;
  uint32_t p = 0;
  int k_max = 1;
  bool support_changed = false;
  bool applicable = true;  // false when f mod p = 0 or the support changed
  std::vector<FaceVerdict> per_face;
  bool overall_nondegenerate = false;
  uint64_t points_searched = 0;

  bool passes() const { return applicable && overall_nondegenerate; }
};

namespace detail {

/// Enumerate the torus (F_q*)^m in lexicographic element-index order;
/// fn(point) returning true stops the walk. Returns points visited.
inline uint64_t walk_torus(const FiniteField& F, int m,
                           const std::function<bool(const std::vector<FFElem>&)>& fn) {
  uint64_t q = F.q();
  if (m == 0) {
    fn({});
    return 1;
  }
  std::vector<uint64_t> idx(m, 1);
  std::vector<FFElem> pt(m, F.element(1));
  uint64_t visited = 0;
  while (true) {
    ++visited;
    if (fn(pt)) return visited;
    int j = m - 1;
    while (j >= 0) {
      if (++idx[j] < q) {
        pt[j] = F.element(idx[j]);
        break;
      }
      idx[j] = 1;
      pt[j] = F.element(1);
      --j;
    }
    if (j < 0) return visited;
  }
}

inline std::vector<int> active_vars(const IntPolynomial& f) {
  std::vector<bool> act(f.n, false);
  for (const auto& [e, c] : f.terms)
    for (int j = 0; j < f.n; ++j) act[j] = act[j] || e[j] > 0;
  std::vector<int> out;
  for (int j = 0; j < f.n; ++j)
    if (act[j]) out.push_back(j);
  return out;
}

}  // namespace detail

/// Brute-force search for a face polynomial with a critical point on the
/// torus over F_{p^k}, k = 1..k_max (strong mode), additionally requiring the
/// face polynomial to vanish there (weak mode). A "nondegenerate" verdict is
/// a partial certificate: it covers field degrees up to k_max only.
inline NondegCertificate nondegeneracy_check(const IntPolynomial& f,
                                             const NewtonData& nd, uint32_t p,
                                             NondegMode mode, int k_max,
                                             uint64_t budget = 100000000) {
  NondegCertificate cert;
  cert.mode = mode;
  cert.p = p;
  cert.k_max = k_max;

  FFPolynomial fbar = reduce_mod(f, p, 1);
  cert.support_changed = fbar.support_changed;
  if (fbar.is_zero() || fbar.support_changed) {
    cert.applicable = false;
    cert.overall_nondegenerate = false;
    return cert;
  }

  // Budget estimate before searching.
  uint64_t planned = 0;
  for (const auto& tau : nd.L.faces) {
    IntPolynomial ftau = face_polynomial(f, nd, tau);
    int m = static_cast<int>(detail::active_vars(ftau).size());
    for (int k = 1; k <= k_max; ++k) {
      uint64_t q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      uint64_t work = 1;
      for (int i = 0; i < m; ++i) {
        work *= (q - 1);
        if (work > budget) throw BudgetError("nondegeneracy_check: budget exceeded");
      }
      planned += work;
      if (planned > budget) throw BudgetError("nondegeneracy_check: budget exceeded");
    }
  }

  cert.overall_nondegenerate = true;
  for (const auto& tau : nd.L.faces) {
    FaceVerdict verdict;
    verdict.face_id = tau.id;
    IntPolynomial ftau = face_polynomial(f, nd, tau);
    std::vector<int> act = detail::active_vars(ftau);
    std::vector<IntPolynomial> grads;
    for (int j : act) grads.push_back(gradient(ftau)[j]);

    for (int k = 1; k <= k_max && verdict.nondegenerate; ++k) {
      FiniteField F(p, k);
      std::vector<FFPolynomial> gbar;
      for (const auto& gp : grads) gbar.push_back(reduce_mod(gp, p, k));
      FFPolynomial fk = reduce_mod(ftau, p, k);
      // project to active coordinates for evaluation
      auto project = [&](FFPolynomial& poly) {
        std::map<ExponentVec, FFElem> nt;
        for (const auto& [e, c] : poly.terms) {
          ExponentVec w(act.size());
          for (size_t i = 0; i < act.size(); ++i) w[i] = e[act[i]];
          nt.emplace(w, c);
        }
        poly.terms = std::move(nt);
        poly.n = static_cast<int>(act.size());
      };
      for (auto& gp : gbar) project(gp);
      project(fk);

      cert.points_searched += detail::walk_torus(
          F, static_cast<int>(act.size()), [&](const std::vector<FFElem>& pt) {
            for (const auto& gp : gbar)
              if (!F.is_zero(eval(gp, pt))) return false;
            if (mode == NondegMode::Weak && !F.is_zero(eval(fk, pt))) return false;
            DegenerateWitness w;
            w.face_id = tau.id;
            w.field_degree = k;
            w.point.assign(f.n, F.one());
            for (size_t i = 0; i < act.size(); ++i) w.point[act[i]] = pt[i];
            verdict.nondegenerate = false;
            verdict.witness = std::move(w);
            return true;
          });
    }
    cert.overall_nondegenerate &= verdict.nondegenerate;
    cert.per_face.push_back(std::move(verdict));
  }
  return cert;
}

/// Re-evaluate the defining equations at a reported witness.
inline bool verify_witness(const IntPolynomial& f, const NewtonData& nd,
                           uint32_t p, NondegMode mode,
                           const DegenerateWitness& w) {
  const Face& tau = nd.L.faces[w.face_id];
  IntPolynomial ftau = face_polynomial(f, nd, tau);
  FiniteField F(p, w.field_degree);
  for (const auto& x : w.point)
    if (F.is_zero(x)) return false;  // witness must lie on the torus
  for (int j = 0; j < f.n; ++j) {
    FFPolynomial gj = reduce_mod(gradient(ftau)[j], p, w.field_degree);
    if (!F.is_zero(eval(gj, w.point))) return false;
  }
  if (mode == NondegMode::Weak) {
    FFPolynomial fb = reduce_mod(ftau, p, w.field_degree);
    if (!F.is_zero(eval(fb, w.point))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Critical locus dimension estimate (heuristic, Lang-Weil flavored)
// ---------------------------------------------------------------------------

struct CriticalDimEstimate {
  std::vector<std::pair<int, uint64_t>> counts;  // (k, #C_f(F_{p^k}))
  bool empty_locus = false;                      // delta_hat = -infinity
  int delta_hat = 0;
  std::string note;
};

/// Count points of the affine critical locus over F_{p^k} for k in ks and
/// estimate its dimension from the growth rate.
inline CriticalDimEstimate critical_dim_estimate(const IntPolynomial& f, uint32_t p,
                                                 const std::vector<int>& ks,
                                                 uint64_t budget = 100000000) {
  CriticalDimEstimate est;
  auto grads = gradient(f);
  for (int k : ks) {
    FiniteField F(p, k);
    uint64_t q = F.q();
    uint64_t total = 1;
    for (int i = 0; i < f.n; ++i) {
      total *= q;
      if (total > budget) throw BudgetError("critical_dim_estimate: budget exceeded");
    }
    std::vector<FFPolynomial> gbar;
    for (const auto& gp : grads) gbar.push_back(reduce_mod(gp, p, k));

    uint64_t count = 0;
    std::vector<uint64_t> idx(f.n, 0);
    std::vector<FFElem> pt(f.n, F.zero());
    while (true) {
      bool crit = true;
      for (const auto& gp : gbar)
        if (!F.is_zero(eval(gp, pt))) {
          crit = false;
          break;
        }
      if (crit) ++count;
      int j = f.n - 1;
      while (j >= 0) {
        if (++idx[j] < q) {
          pt[j] = F.element(idx[j]);
          break;
        }
        idx[j] = 0;
        pt[j] = F.zero();
        --j;
      }
      if (j < 0) break;
    }
    est.counts.emplace_back(k, count);
  }

  std::vector<std::pair<int, uint64_t>> nz;
  for (const auto& c : est.counts)
    if (c.second > 0) nz.push_back(c);
  if (nz.empty()) {
    est.empty_locus = true;
    est.note = "no points found in any sampled field; locus presumed empty";
    return est;
  }
  if (nz.size() == 1) {
    double d = std::log(static_cast<double>(nz[0].second)) /
               (nz[0].first * std::log(static_cast<double>(p)));
    est.delta_hat = static_cast<int>(std::lround(d));
    est.note = "single field sampled; dimension from log count";
  } else {
    auto [k1, c1] = nz[nz.size() - 2];
    auto [k2, c2] = nz[nz.size() - 1];
    double d = std::log(static_cast<double>(c2) / static_cast<double>(c1)) /
               ((k2 - k1) * std::log(static_cast<double>(p)));
    est.delta_hat = static_cast<int>(std::lround(d));
    est.note = "slope of log counts across the two largest fields";
  }
  return est;
}

}  // namespace igusa

#endif
