// Orchestrated verification suites over the corpus: the sigma-calculus
// identities on random supports, the modulus-p^m bound grid, the finite-field
// torus bound grid, and the leading-limit uniformity checks. Shared by the
// CLI `verify` command and the acceptance tests.
#ifndef IGUSA_VERIFY_HPP
#define IGUSA_VERIFY_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "igusa/config.hpp"
#include "igusa/corpus.hpp"
#include "igusa/expsum.hpp"
#include "igusa/invariants.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample payload on failure, summary on pass
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

/// Random non-zero polynomial vanishing at the origin; support size and
/// exponents kept small so hull enumeration stays cheap.
inline IntPolynomial random_poly(std::mt19937_64& rng, int n, int max_pts = 4,
                                 int max_exp = 5) {
  std::uniform_int_distribution<int> exp_d(0, max_exp), pts_d(1, max_pts),
      coef_d(1, 3), sign_d(0, 1);
  IntPolynomial f{n, {}};
  int pts = pts_d(rng);
  for (int i = 0; i < pts; ++i) {
    ExponentVec e(n);
    bool origin = true;
    for (int j = 0; j < n; ++j) {
      e[j] = exp_d(rng);
      origin &= e[j] == 0;
    }
    if (origin) e[0] = 1 + exp_d(rng);
    BigInt c = coef_d(rng);
    if (sign_d(rng)) c = -c;
    f.terms[e] = c;  // overwrite rather than merge: keeps f non-zero
  }
  return f;
}

inline std::string describe(const IntPolynomial& f) { return render(f); }

}  // namespace detail

/// Lemma-style sigma calculus on seeded random supports:
/// additivity over disjoint sums, min over disjoint products, monotonicity
/// under merging the last two variables, and the hyperplane inequality
/// sigma(f) <= sigma(f_I) + s - |I|.
inline SuiteResult sigma_props_suite(uint64_t seed, int trials = 200) {
  SuiteResult suite{"sigma-props", {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n_d(1, 3);

  int sum_fail = 0, prod_fail = 0, merge_fail = 0, merge_checked = 0;
  std::string first_fail;
  for (int t = 0; t < trials; ++t) {
    IntPolynomial f = detail::random_poly(rng, n_d(rng));
    IntPolynomial g = detail::random_poly(rng, n_d(rng));
    ExtendedRat sf = sigma_of(f), sg = sigma_of(g);
    if (!(sigma_of(disjoint_sum(f, g)) == sf + sg)) {
      ++sum_fail;
      if (first_fail.empty())
        first_fail = "sum: f=" + detail::describe(f) + " g=" + detail::describe(g);
    }
    if (!(sigma_of(disjoint_product(f, g)) == min(sf, sg))) {
      ++prod_fail;
      if (first_fail.empty())
        first_fail = "product: f=" + detail::describe(f) + " g=" + detail::describe(g);
    }
  }
  suite.checks.push_back({"sigma additivity over disjoint sums", sum_fail == 0,
                          sum_fail ? first_fail : std::to_string(trials) + " trials"});
  suite.checks.push_back({"sigma of disjoint products is the min", prod_fail == 0,
                          prod_fail ? first_fail : std::to_string(trials) + " trials"});

  std::mt19937_64 rng2(seed + 1);
  std::uniform_int_distribution<int> n2_d(2, 4);
  std::string merge_fail_detail;
  for (int t = 0; t < trials; ++t) {
    IntPolynomial f = detail::random_poly(rng2, n2_d(rng2));
    IntPolynomial m = merge_last_two_vars(f);
    if (m.is_zero()) continue;  // sigma(0) = 0 by convention; nothing to check
    ++merge_checked;
    ExtendedRat sf = sigma_of(f), sm = sigma_of(m);
    if (!(sm <= sf)) {
      ++merge_fail;
      if (merge_fail_detail.empty()) merge_fail_detail = "merge: f=" + detail::describe(f);
    }
  }
  suite.checks.push_back({"sigma does not increase under variable merge",
                          merge_fail == 0,
                          merge_fail ? merge_fail_detail
                                     : std::to_string(merge_checked) + " merges checked"});

  // Hyperplane-supported random polynomials: the subset inequality.
  std::mt19937_64 rng3(seed + 2);
  std::uniform_int_distribution<int> n3_d(2, 3), w_d(0, 3), b_d(1, 6), take_d(0, 1);
  int hyp_checked = 0, hyp_fail = 0;
  std::string hyp_detail;
  for (int t = 0; t < trials && hyp_checked < trials; ++t) {
    int n = n3_d(rng3);
    IntVec c(n);
    bool positive = false;
    for (int j = 0; j < n; ++j) {
      c[j] = w_d(rng3);
      positive |= c[j] > 0;
    }
    if (!positive) continue;
    BigInt b = b_d(rng3);
    // enumerate support candidates on c.i = b with small entries
    std::vector<ExponentVec> sols;
    ExponentVec e(n, 0);
    std::function<void(int)> rec = [&](int j) {
      if (j == n) {
        BigInt s = 0;
        for (int i = 0; i < n; ++i) s += c[i] * e[i];
        if (s == b && !is_origin(e)) sols.push_back(e);
        return;
      }
      for (int v = 0; v <= 8; ++v) {
        e[j] = v;
        rec(j + 1);
      }
      e[j] = 0;
    };
    rec(0);
    if (sols.empty()) continue;
    IntPolynomial f{n, {}};
    for (const auto& s : sols)
      if (take_d(rng3)) f.terms[s] = 1;
    if (f.is_zero()) f.terms[sols[0]] = 1;

    HyperplaneDecomposition D = hyperplane_support(f);
    if (!D.exists || D.h.is_zero()) continue;
    ++hyp_checked;
    Rat sf = sigma_of(f).value;
    int s_count = static_cast<int>(D.s_vars.size());
    for (size_t mask = 0; mask < (size_t{1} << s_count); ++mask) {
      std::vector<int> I;
      for (int i = 0; i < s_count; ++i)
        if (mask & (size_t{1} << i)) I.push_back(i);
      Rat rhs = sigma_of(build_f_I(D, I)).value + Rat(s_count - static_cast<int>(I.size()));
      if (!(sf <= rhs)) {
        ++hyp_fail;
        if (hyp_detail.empty())
          hyp_detail = "f=" + detail::describe(f) + " |I|=" + std::to_string(I.size());
      }
    }
  }
  suite.checks.push_back({"hyperplane subset inequality sigma(f) <= sigma(f_I) + s - |I|",
                          hyp_fail == 0,
                          hyp_fail ? hyp_detail
                                   : std::to_string(hyp_checked) + " decompositions checked"});
  return suite;
}

/// Modulus-p^m bound grid over the corpus: normalized rows against the
/// stored constants; the line entry must vanish identically.
inline SuiteResult bounds_suite(const RunConfig& cfg) {
  SuiteResult suite{"bounds", {}};
  for (const auto& entry : corpus()) {
    IntPolynomial f = parse_polynomial(entry.poly);
    NewtonData nd = analyze_polyhedron(f);
    SigmaInvariants inv = sigma_kappa(nd);
    BoundReport rep = bound_report(f, nd, inv, cfg.primes, cfg.ms,
                                   entry.bound_c, cfg.naive_budget);
    std::ostringstream detail;
    detail << "c_empirical=" << rep.c_empirical << " over " << rep.rows.size() << " rows";
    bool ok = rep.flagged.empty();
    if (!ok) {
      const BoundRow& row = rep.rows[rep.flagged.front()];
      detail << "; exceeded stored " << entry.bound_c << " at p=" << row.p
             << " m=" << row.m << " normalized=" << row.normalized;
    }
    if (entry.poly == "x1") {
      for (const auto& row : rep.rows)
        if (row.abs_S > cfg.tolerance) {
          ok = false;
          detail << "; nonzero sum at p=" << row.p << " m=" << row.m;
        }
    }
    suite.checks.push_back({"bound grid: " + entry.name, ok, detail.str()});
  }
  return suite;
}

/// Finite-field torus bound grid for the hyperplane-supported entries.
inline SuiteResult ff_bounds_suite(const RunConfig& cfg) {
  SuiteResult suite{"ff-bounds", {}};
  std::vector<std::pair<uint32_t, int>> fields;
  for (uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (int k = 1;; ++k) {
      uint64_t q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      if (q > 169) break;
      fields.emplace_back(p, k);
    }
  for (const auto& entry : corpus()) {
    if (entry.hyperplane.empty() || entry.expect_degenerate) continue;
    IntPolynomial f = parse_polynomial(entry.poly);
    NewtonData nd = analyze_polyhedron(f);
    SigmaInvariants inv = sigma_kappa(nd);
    FFBoundReport rep = ff_bound_report(f, nd, inv, fields, 1, cfg.torus_budget);
    bool ok = entry.ff_c <= 0 || rep.c_empirical <= entry.ff_c;
    std::ostringstream detail;
    detail << "c_empirical=" << rep.c_empirical << " vs stored " << entry.ff_c;
    suite.checks.push_back({"finite field bound: " + entry.name, ok, detail.str()});
  }
  return suite;
}

/// Leading-limit uniformity over p <= 97, plus the torus-count and
/// S_tau-limit boundedness checks on subfaces of tau_0.
inline SuiteResult dh_suite(const RunConfig& cfg) {
  SuiteResult suite{"dh", {}};
  std::vector<uint32_t> primes;
  for (uint32_t p : {5u,  7u,  11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u,
                     47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u, 83u, 89u, 97u})
    primes.push_back(p);

  for (const auto& entry : corpus()) {
    if (entry.expect_degenerate) continue;
    IntPolynomial f = parse_polynomial(entry.poly);
    NewtonData nd = analyze_polyhedron(f);
    SigmaInvariants inv = sigma_kappa(nd);
    DHReport rep = dh_limit_check(f, nd, inv, primes, entry.dh_c, 1, cfg.torus_budget);
    std::ostringstream detail;
    detail << "max ratio " << rep.max_ratio << " vs stored " << entry.dh_c;
    suite.checks.push_back({"leading limit uniformity: " + entry.name,
                            rep.verdict, detail.str()});

    // Boundedness of the two per-face estimates on subfaces of tau_0.
    const Face& tau0 = nd.L.faces[inv.tau0];
    double max52 = 0, max53 = 0;
    for (const auto& tau : nd.L.faces) {
      if (!tau.is_proper) continue;
      bool sub = std::includes(tau0.vertex_ids.begin(), tau0.vertex_ids.end(),
                               tau.vertex_ids.begin(), tau.vertex_ids.end()) &&
                 std::includes(tau0.rays.begin(), tau0.rays.end(), tau.rays.begin(),
                               tau.rays.end());
      if (!sub) continue;
      for (uint32_t p : primes) {
        FFPolynomial fb = reduce_mod(f, p, 1);
        if (fb.support_changed) continue;
        max52 = std::max(max52, torus_count_ratio(f, nd, tau, p, cfg.torus_budget));
        max53 = std::max(max53, s_tau_limit_ratio(nd, inv, tau, p));
      }
    }
    std::ostringstream d2;
    d2 << "torus-count ratio " << max52 << " (bound " << kLemma52Bound
       << "), S_tau limit ratio " << max53 << " (bound " << kLemma53Bound << ")";
    suite.checks.push_back({"subface estimates bounded: " + entry.name,
                            max52 <= kLemma52Bound && max53 <= kLemma53Bound, d2.str()});
  }
  return suite;
}

inline std::vector<SuiteResult> run_suites(const std::string& which, const RunConfig& cfg) {
  std::vector<SuiteResult> out;
  if (which == "sigma-props" || which == "all")
    out.push_back(sigma_props_suite(cfg.seed));
  if (which == "bounds" || which == "all") out.push_back(bounds_suite(cfg));
  if (which == "ff-bounds" || which == "all") out.push_back(ff_bounds_suite(cfg));
  if (which == "dh" || which == "all") out.push_back(dh_suite(cfg));
  if (out.empty()) throw ParseError(0, "unknown verify suite '" + which + "'");
  return out;
}

}  // namespace igusa

#endif
