// Exponential sums: the brute-force oracle for S_f(p,m) over residues mod
// p^m, finite-field torus character sums with trace characters, exact cone
// generating functions for the A_tau/B_tau decomposition, and the empirical
// bound reports.
#ifndef IGUSA_EXPSUM_HPP
#define IGUSA_EXPSUM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "igusa/cones.hpp"
#include "igusa/errors.hpp"
#include "igusa/finite_field.hpp"
#include "igusa/invariants.hpp"
#include "igusa/poly.hpp"
#include "igusa/polyhedron.hpp"
#include "igusa/ratfun.hpp"

namespace igusa {

/// Complex value carrying an accumulated rounding bound.
struct ComplexValue {
  double re = 0, im = 0;
  double err_bound = 0;

  double abs() const { return std::hypot(re, im); }
};

inline double abs_diff(const ComplexValue& a, const ComplexValue& b) {
  return std::hypot(a.re - b.re, a.im - b.im);
}

namespace detail {

/// Kahan-compensated accumulation of count * e^{2 pi i v / modulus} terms.
class CharacterAccumulator {
 public:
  explicit CharacterAccumulator(uint64_t modulus) : modulus_(modulus) {}

  void add(uint64_t value, double weight) {
    if (weight == 0) return;
    double ang = 2.0 * std::numbers::pi * (static_cast<double>(value) / static_cast<double>(modulus_));
    kahan(re_, cre_, weight * std::cos(ang));
    kahan(im_, cim_, weight * std::sin(ang));
    total_weight_ += std::fabs(weight);
    ++terms_;
  }

  ComplexValue result() const {
    ComplexValue v;
    v.re = re_;
    v.im = im_;
    // trig evaluation ~2 ulp per term plus compensated-summation slack
    double eps = std::numeric_limits<double>::epsilon();
    v.err_bound = total_weight_ * eps * 8.0 + static_cast<double>(terms_) * eps * eps;
    return v;
  }

 private:
  static void kahan(double& sum, double& comp, double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  uint64_t modulus_;
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
  double total_weight_ = 0;
  uint64_t terms_ = 0;
};

/// Walk x over [0, M)^n in odometer order (last coordinate fastest) and feed
/// f(x) mod M to `sink`. Power tables are refreshed per changed coordinate.
template <typename Sink>
void enumerate_values_mod(const IntPolynomial& f, uint64_t M, Sink&& sink) {
  int n = f.n;
  struct Term {
    uint64_t c;
    std::vector<int> e;
  };
  std::vector<Term> terms;
  std::vector<int> maxdeg(n, 0);
  for (const auto& [e, c] : f.terms) {
    BigInt cr = c % BigInt(M);
    if (cr < 0) cr += M;
    Term t{cr.convert_to<uint64_t>(), std::vector<int>(e.begin(), e.end())};
    for (int j = 0; j < n; ++j) maxdeg[j] = std::max(maxdeg[j], e[j]);
    terms.push_back(std::move(t));
  }
  std::vector<std::vector<uint64_t>> pw(n);
  for (int j = 0; j < n; ++j) pw[j].assign(maxdeg[j] + 1, 1 % M);
  std::vector<uint64_t> x(n, 0);
  auto refresh = [&](int j) {
    uint64_t v = x[j] % M;
    for (int e = 1; e <= maxdeg[j]; ++e) pw[j][e] = (pw[j][e - 1] * v) % M;
  };
  for (int j = 0; j < n; ++j) refresh(j);
  while (true) {
    uint64_t acc = 0;
    for (const auto& t : terms) {
      uint64_t val = t.c;
      for (int j = 0; j < n; ++j)
        if (t.e[j]) val = (val * pw[j][t.e[j]]) % M;
      acc += val;
      if (acc >= M) acc -= M;
    }
    sink(acc);
    int j = n - 1;
    while (j >= 0) {
      if (++x[j] < M) {
        refresh(j);
        break;
      }
      x[j] = 0;
      refresh(j);
      --j;
    }
    if (j < 0) break;
  }
}

}  // namespace detail

/// S_f(p,m) twisted by the unit u: p^{-mn} sum over x in [0,p^m)^n of
/// exp(2 pi i u f(x) / p^m). Exact integer histogram first, then one
/// fixed-order pass over the roots of unity, so the result is deterministic.
inline ComplexValue char_sum_naive(const IntPolynomial& f, uint32_t p, int m,
                                   uint64_t u = 1, uint64_t budget = 100000000) {
  if (m < 1) throw GeometryError("char_sum_naive: m >= 1 required");
  uint64_t M = 1;
  for (int i = 0; i < m; ++i) {
    M *= p;
    if (M > budget) throw BudgetError("char_sum_naive: modulus beyond budget");
  }
  long double total_ld = 1;
  for (int i = 0; i < f.n; ++i) total_ld *= static_cast<long double>(M);
  if (total_ld > static_cast<long double>(budget))
    throw BudgetError("char_sum_naive: p^{mn} exceeds budget");
  uint64_t total = 1;
  for (int i = 0; i < f.n; ++i) total *= M;

  std::vector<uint32_t> hist(M, 0);
  u %= M;
  detail::enumerate_values_mod(f, M, [&](uint64_t v) { ++hist[(v * u) % M]; });

  detail::CharacterAccumulator acc(M);
  double inv_total = 1.0 / static_cast<double>(total);
  for (uint64_t v = 0; v < M; ++v)
    if (hist[v]) acc.add(v, hist[v] * inv_total);
  return acc.result();
}

/// sum over x in (F_q*)^n of exp(2 pi i Tr(twist * f(x)) / p), computed from
/// an exact histogram of trace values. Not normalized.
inline ComplexValue torus_char_sum(const FFPolynomial& fbar, const FFElem& twist,
                                   uint64_t budget = 100000000) {
  const FiniteField& F = fbar.field;
  if (F.is_zero(twist)) throw GeometryError("torus_char_sum: zero twist");
  uint64_t q = F.q();

  // variables absent from fbar contribute a factor (q-1) each
  std::vector<bool> act(fbar.n, false);
  for (const auto& [e, c] : fbar.terms)
    for (int j = 0; j < fbar.n; ++j) act[j] = act[j] || e[j] > 0;
  std::vector<int> active;
  for (int j = 0; j < fbar.n; ++j)
    if (act[j]) active.push_back(j);
  double multiplier = 1;
  uint64_t work = 1;
  for (int j = 0; j < fbar.n; ++j) {
    if (act[j]) {
      work *= q - 1;
      if (work > budget) throw BudgetError("torus_char_sum: budget exceeded");
    } else {
      multiplier *= static_cast<double>(q - 1);
    }
  }

  FFPolynomial g{F, static_cast<int>(active.size()), {}, false};
  for (const auto& [e, c] : fbar.terms) {
    ExponentVec w(active.size());
    for (size_t i = 0; i < active.size(); ++i) w[i] = e[active[i]];
    g.terms.emplace(w, F.mul(twist, c));
  }

  std::vector<uint64_t> hist(F.p(), 0);
  detail::walk_torus(F, g.n, [&](const std::vector<FFElem>& pt) {
    ++hist[F.trace(eval(g, pt))];
    return false;
  });

  detail::CharacterAccumulator acc(F.p());
  for (uint32_t t = 0; t < F.p(); ++t)
    if (hist[t]) acc.add(t, static_cast<double>(hist[t]) * multiplier);
  return acc.result();
}

// ---------------------------------------------------------------------------
// Cone generating functions: G_tau(u) = sum_{F(a) = tau} p^{-nu(a)} u^{N(a)}
// ---------------------------------------------------------------------------

struct ConePiece {
  std::vector<std::pair<BigInt, BigInt>> num_terms;    // (nu(h), N(h))
  std::vector<std::pair<BigInt, BigInt>> den_factors;  // (nu(g), N(g))
};

struct ConeGF {
  uint32_t p = 0;
  std::vector<ConePiece> pieces;
};

/// Assemble G_tau exactly from the half-open decomposition of the normal
/// cone of tau. For tau = Delta_0 the only lattice point is a = 0 and G = 1.
inline ConeGF cone_generating_function(const NewtonData& nd, const Face& tau, uint32_t p) {
  ConeGF G;
  G.p = p;
  if (!tau.is_proper) {
    G.pieces.push_back(ConePiece{{{BigInt(0), BigInt(0)}}, {}});
    return G;
  }
  Cone C = normal_cone(nd.P, nd.L, tau);
  for (const auto& hoc : triangulate_half_open(C)) {
    ConePiece piece;
    for (const auto& h : parallelepiped_points(hoc)) {
      LinearData ld = first_meet_locus(nd.P, nd.L, h);
      if (ld.face_id != tau.id)
        throw GeometryError("cone_generating_function: point outside relint");
      piece.num_terms.emplace_back(ld.nu, ld.N);
    }
    for (const auto& g : hoc.generators) {
      BigInt nu = 0;
      for (const auto& x : g) nu += x;
      BigInt N = dot_int(g, nd.P.vertices[0]);
      for (const auto& v : nd.P.vertices) N = std::min(N, dot_int(g, v));
      piece.den_factors.emplace_back(nu, N);
    }
    G.pieces.push_back(std::move(piece));
  }
  return G;
}

/// Power-series coefficients of G in u, exact, up to degree V.
inline std::vector<Rat> cone_gf_series(const ConeGF& G, int V) {
  std::vector<Rat> out(V + 1, Rat(0));
  for (const auto& piece : G.pieces) {
    std::vector<Rat> tmp(V + 1, Rat(0));
    for (const auto& [nu, N] : piece.num_terms) {
      if (N <= V) tmp[N.convert_to<long>()] += p_pow_neg(G.p, nu);
    }
    for (const auto& [nu, N] : piece.den_factors) {
      Rat q = p_pow_neg(G.p, nu);
      if (N == 0) {
        Rat s = Rat(1) / (Rat(1) - q);
        for (auto& x : tmp) x *= s;
      } else if (N <= V) {
        long step = N.convert_to<long>();
        for (long e = step; e <= V; ++e) tmp[e] += q * tmp[e - step];
      }
    }
    for (int v = 0; v <= V; ++v) out[v] += tmp[v];
  }
  return out;
}

/// G(1) = sum_{F(a)=tau} p^{-nu(a)}, finite since every q-factor is < 1.
inline Rat cone_gf_at_one(const ConeGF& G) {
  Rat total = 0;
  for (const auto& piece : G.pieces) {
    Rat numv = 0;
    for (const auto& [nu, N] : piece.num_terms) numv += p_pow_neg(G.p, nu);
    Rat denv = 1;
    for (const auto& [nu, N] : piece.den_factors) denv *= Rat(1) - p_pow_neg(G.p, nu);
    total += numv / denv;
  }
  return total;
}

/// The measure term A_tau = sum over N(a) >= m and the torus-sum weight
/// B_tau = sum over N(a) = m-1, both exact.
inline std::pair<Rat, Rat> A_B_tau(const ConeGF& G, int m) {
  if (m < 1) throw GeometryError("A_B_tau: m >= 1 required");
  std::vector<Rat> coeffs = cone_gf_series(G, m - 1);
  Rat B = coeffs[m - 1];
  Rat A = cone_gf_at_one(G);
  for (const auto& c : coeffs) A -= c;
  return {A, B};
}

/// G specialized at u = t as an exact rational function (this is S_tau(s)).
inline RationalFunctionT cone_gf_to_ratfun(const ConeGF& G) {
  RationalFunctionT total = RationalFunctionT::constant(Rat(0));
  for (const auto& piece : G.pieces) {
    PolyT numpoly;
    for (const auto& [nu, N] : piece.num_terms)
      numpoly = numpoly + PolyT::monomial(p_pow_neg(G.p, nu), N.convert_to<size_t>());
    PolyT denpoly = PolyT::constant(Rat(1));
    for (const auto& [nu, N] : piece.den_factors) {
      PolyT factor = PolyT::constant(Rat(1)) -
                     PolyT::monomial(p_pow_neg(G.p, nu), N.convert_to<size_t>());
      denpoly = denpoly * factor;
    }
    total = total + RationalFunctionT(numpoly, denpoly);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Decomposed evaluation of S_f(p, m)
// ---------------------------------------------------------------------------

/// S_{f,(p)}(u p^{-m}) assembled face by face:
/// (1 - 1/p)^n * sum_tau [ A_tau + B_tau (p-1)^{-n} sum_{x in torus} phi_u(f_tau) ].
/// Requires a passing strong certificate (the Hensel step needs it).
inline ComplexValue expsum_decomposed(const IntPolynomial& f, const NewtonData& nd,
                                      const NondegCertificate& cert, uint32_t p, int m,
                                      uint64_t u = 1, uint64_t budget = 100000000) {
  if (cert.p != p || cert.mode != NondegMode::Strong || !cert.passes())
    throw CertificationError("expsum_decomposed: strong non-degeneracy certificate required");
  if (m < 1) throw GeometryError("expsum_decomposed: m >= 1 required");

  int n = f.n;
  Rat exact_part = 0;       // sum of A_tau
  ComplexValue torus_part;  // sum of B_tau (p-1)^{-n} T_tau
  for (const auto& tau : nd.L.faces) {
    ConeGF G = cone_generating_function(nd, tau, p);
    auto [A, B] = A_B_tau(G, m);
    exact_part += A;
    if (B != 0) {
      FFPolynomial ftau_bar = reduce_mod(face_polynomial(f, nd, tau), p, 1);
      FiniteField F = ftau_bar.field;
      ComplexValue T = torus_char_sum(ftau_bar, F.from_int(BigInt(u)), budget);
      double w = to_double(B / pow_bigint(BigInt(p) - 1, n));
      torus_part.re += w * T.re;
      torus_part.im += w * T.im;
      torus_part.err_bound += std::fabs(w) * T.err_bound;
    }
  }
  Rat unit_measure = 1;
  {
    Rat factor = Rat(BigInt(p) - 1, BigInt(p));
    for (int i = 0; i < n; ++i) unit_measure *= factor;
  }
  ComplexValue out;
  out.re = to_double(unit_measure) * (to_double(exact_part) + torus_part.re);
  out.im = to_double(unit_measure) * torus_part.im;
  out.err_bound = to_double(unit_measure) * torus_part.err_bound +
                  8 * std::numeric_limits<double>::epsilon();
  return out;
}

// ---------------------------------------------------------------------------
// Bound reports
// ---------------------------------------------------------------------------

struct BoundRow {
  uint32_t p = 0;
  int m = 0;
  double abs_S = 0;
  double normalized = 0;        // |S| p^{sigma m} m^{1-kappa}
  double igusa_normalized = 0;  // |S| p^{sigma_0 m} m^{1-n}
  bool asserted = true;         // false for m = 1 without hyperplane support
};

struct BoundReport {
  std::string poly;
  Rat sigma;
  int kappa = 1;
  Rat sigma0;
  bool hyperplane = false;
  std::vector<BoundRow> rows;
  double c_empirical = 0;        // max normalized over asserted rows
  double c_igusa = 0;            // max igusa_normalized over asserted rows
  std::vector<size_t> flagged;   // rows exceeding the stored constant
};

inline BoundReport bound_report(const IntPolynomial& f, const NewtonData& nd,
                                const SigmaInvariants& inv,
                                const std::vector<uint32_t>& primes,
                                const std::vector<int>& ms, double stored_c = 0,
                                uint64_t budget = 100000000) {
  BoundReport rep;
  rep.poly = render(f);
  rep.sigma = inv.sigma.value;
  rep.kappa = inv.kappa;
  rep.sigma0 = inv.sigma0();
  rep.hyperplane = hyperplane_support(f).exists;
  double sig = to_double(rep.sigma);
  double sig0 = to_double(rep.sigma0);
  for (uint32_t p : primes)
    for (int m : ms) {
      long double work = 1;
      for (int i = 0; i < f.n * m; ++i) work *= p;
      if (work > static_cast<long double>(budget)) continue;  // out of budget: skip row
      ComplexValue S = char_sum_naive(f, p, m, 1, budget);
      BoundRow row;
      row.p = p;
      row.m = m;
      row.abs_S = S.abs();
      row.normalized = row.abs_S * std::pow(p, sig * m) * std::pow(m, 1.0 - rep.kappa);
      row.igusa_normalized = row.abs_S * std::pow(p, sig0 * m) * std::pow(m, 1.0 - f.n);
      row.asserted = m >= 2 || rep.hyperplane;
      rep.rows.push_back(row);
    }
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    if (!row.asserted) continue;
    rep.c_empirical = std::max(rep.c_empirical, row.normalized);
    rep.c_igusa = std::max(rep.c_igusa, row.igusa_normalized);
    if (stored_c > 0 && row.normalized > stored_c) rep.flagged.push_back(i);
  }
  return rep;
}

struct FFBoundRow {
  uint32_t p = 0;
  int k = 1;
  uint64_t q = 0;
  double abs_normalized = 0;  // |sum phi(f)| / (q-1)^n
  double ratio = 0;           // abs_normalized * q^sigma
  bool skipped = false;
  std::string note;
};

struct FFBoundReport {
  std::string poly;
  Rat sigma;
  BigInt b;  // hyperplane offset; p | b rows are skipped
  std::vector<FFBoundRow> rows;
  double c_empirical = 0;
};

/// Desk check of the finite-field torus bound |.| < c q^{-sigma} for
/// hyperplane-supported f; rows with p | b, changed support, or failed
/// certificates are skipped with a note.
inline FFBoundReport ff_bound_report(const IntPolynomial& f, const NewtonData& nd,
                                     const SigmaInvariants& inv,
                                     const std::vector<std::pair<uint32_t, int>>& fields,
                                     int cert_k_max = 1, uint64_t budget = 100000000) {
  HyperplaneDecomposition D = hyperplane_support(f);
  if (!D.exists)
    throw CertificationError("ff_bound_report: support is not on an origin-avoiding hyperplane");
  FFBoundReport rep;
  rep.poly = render(f);
  rep.sigma = inv.sigma.value;
  rep.b = D.b;
  double sig = to_double(rep.sigma);
  for (auto [p, k] : fields) {
    FFBoundRow row;
    row.p = p;
    row.k = k;
    row.q = 1;
    for (int i = 0; i < k; ++i) row.q *= p;
    if (D.b % p == 0) {
      row.skipped = true;
      row.note = "p divides b (bad prime for the hyperplane)";
      rep.rows.push_back(row);
      continue;
    }
    NondegCertificate cert =
        nondegeneracy_check(f, nd, p, NondegMode::Strong, cert_k_max, budget);
    if (!cert.passes()) {
      row.skipped = true;
      row.note = cert.applicable ? "degenerate at p" : "support changes mod p";
      rep.rows.push_back(row);
      continue;
    }
    FFPolynomial fbar = reduce_mod(f, p, k);
    ComplexValue T = torus_char_sum(fbar, fbar.field.one(), budget);
    double norm = std::pow(static_cast<double>(row.q - 1), f.n);
    row.abs_normalized = T.abs() / norm;
    row.ratio = row.abs_normalized * std::pow(static_cast<double>(row.q), sig);
    rep.c_empirical = std::max(rep.c_empirical, row.ratio);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace igusa

#endif
