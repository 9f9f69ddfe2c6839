// Arithmetic in F_{p^k} as F_p[t] modulo a deterministically chosen monic
// irreducible, plus polynomials with finite-field coefficients obtained by
// reducing integer polynomials mod p.
#ifndef IGUSA_FINITE_FIELD_HPP
#define IGUSA_FINITE_FIELD_HPP

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/poly.hpp"

namespace igusa {

constexpr int kMaxFieldDegree = 4;

/// Element of F_{p^k}, k <= 4: coefficients of 1, t, t^2, t^3.
struct FFElem {
  std::array<uint32_t, kMaxFieldDegree> c{};
  bool operator==(const FFElem&) const = default;
};

class FiniteField {
 public:
  FiniteField(uint32_t p, int k) : p_(p), k_(k) {
    if (k < 1 || k > kMaxFieldDegree) throw GeometryError("field degree must be in 1..4");
    if (p < 2) throw GeometryError("p must be prime");
    find_modulus();
    precompute_trace();
  }

  uint32_t p() const { return p_; }
  int k() const { return k_; }
  uint64_t q() const {
    uint64_t r = 1;
    for (int i = 0; i < k_; ++i) r *= p_;
    return r;
  }

  FFElem zero() const { return FFElem{}; }
  FFElem one() const {
    FFElem e{};
    e.c[0] = 1 % p_;
    return e;
  }
  /// Embed an integer via the prime subfield.
  FFElem from_int(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    FFElem e{};
    e.c[0] = r.convert_to<uint32_t>();
    return e;
  }

  bool is_zero(const FFElem& a) const {
    for (int i = 0; i < k_; ++i)
      if (a.c[i]) return false;
    return true;
  }

  FFElem add(const FFElem& a, const FFElem& b) const {
    FFElem r{};
    for (int i = 0; i < k_; ++i) {
      uint32_t s = a.c[i] + b.c[i];
      r.c[i] = s >= p_ ? s - p_ : s;
    }
    return r;
  }

  FFElem neg(const FFElem& a) const {
    FFElem r{};
    for (int i = 0; i < k_; ++i) r.c[i] = a.c[i] ? p_ - a.c[i] : 0;
    return r;
  }

  FFElem sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

  FFElem scale(uint32_t s, const FFElem& a) const {
    s %= p_;
    FFElem r{};
    for (int i = 0; i < k_; ++i)
      r.c[i] = static_cast<uint32_t>((static_cast<uint64_t>(s) * a.c[i]) % p_);
    return r;
  }

  FFElem mul(const FFElem& a, const FFElem& b) const {
    uint64_t prod[2 * kMaxFieldDegree - 1] = {};
    for (int i = 0; i < k_; ++i) {
      if (!a.c[i]) continue;
      for (int j = 0; j < k_; ++j) prod[i + j] += static_cast<uint64_t>(a.c[i]) * b.c[j];
    }
    // reduce degree >= k terms by t^k = -(m_0 + m_1 t + ... + m_{k-1} t^{k-1})
    for (int d = 2 * k_ - 2; d >= k_; --d) {
      uint64_t coef = prod[d] % p_;
      if (!coef) continue;
      prod[d] = 0;
      for (int j = 0; j < k_; ++j)
        prod[d - k_ + j] += coef * (p_ - modulus_[j]);  // subtract coef*m_j
    }
    FFElem r{};
    for (int i = 0; i < k_; ++i) r.c[i] = static_cast<uint32_t>(prod[i] % p_);
    return r;
  }

  FFElem pow(FFElem base, uint64_t e) const {
    FFElem r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Tr_{F_{p^k}/F_p}(a), returned as an integer in [0, p).
  uint32_t trace(const FFElem& a) const {
    uint64_t t = 0;
    for (int i = 0; i < k_; ++i) t += static_cast<uint64_t>(a.c[i]) * trace_basis_[i];
    return static_cast<uint32_t>(t % p_);
  }

  /// Bijection [0, q) -> field elements, digit i of `index` in base p is c[i].
  FFElem element(uint64_t index) const {
    FFElem e{};
    for (int i = 0; i < k_; ++i) {
      e.c[i] = static_cast<uint32_t>(index % p_);
      index /= p_;
    }
    return e;
  }

  uint64_t index_of(const FFElem& a) const {
    uint64_t v = 0;
    for (int i = k_ - 1; i >= 0; --i) v = v * p_ + a.c[i];
    return v;
  }

  std::string to_string(const FFElem& a) const {
    std::string s;
    for (int i = 0; i < k_; ++i) {
      if (!a.c[i] && !(i == 0 && is_zero(a))) continue;
      if (!s.empty()) s += "+";
      s += std::to_string(a.c[i]);
      if (i >= 1) s += "*t";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

  /// Modulus coefficients m_0..m_{k-1} of the monic irreducible t^k + ...
  const std::array<uint32_t, kMaxFieldDegree>& modulus() const { return modulus_; }

  bool operator==(const FiniteField& o) const {
    return p_ == o.p_ && k_ == o.k_;
  }

 private:
  using Fp = std::vector<uint32_t>;  // dense univariate over F_p, low degree first

  // Remainder of a mod b (b monic-ish: leading coefficient invertible).
  Fp poly_mod(Fp a, const Fp& b) const {
    int db = static_cast<int>(b.size()) - 1;
    uint32_t lead = b[db];
    uint32_t lead_inv = inv_mod_p(lead);
    while (static_cast<int>(a.size()) - 1 >= db) {
      int da = static_cast<int>(a.size()) - 1;
      if (a[da] == 0) {
        a.pop_back();
        continue;
      }
      uint64_t f = (static_cast<uint64_t>(a[da]) * lead_inv) % p_;
      for (int j = 0; j <= db; ++j) {
        uint64_t sub = (f * b[j]) % p_;
        uint32_t& tgt = a[da - db + j];
        tgt = static_cast<uint32_t>((tgt + p_ - sub) % p_);
      }
      a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
  }

  uint32_t inv_mod_p(uint32_t a) const {
    // Fermat
    uint64_t r = 1, b = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  }

  bool divides(const Fp& d, const Fp& f) const { return poly_mod(f, d).empty(); }

  void find_modulus() {
    // Smallest-lexicographic monic irreducible of degree k: enumerate
    // constant-coefficient-first and trial-divide by all lower-degree monics.
    uint64_t total = 1;
    for (int i = 0; i < k_; ++i) total *= p_;
    for (uint64_t v = 0; v < total; ++v) {
      Fp cand(k_ + 1, 0);
      uint64_t w = v;
      for (int i = 0; i < k_; ++i) {
        cand[i] = static_cast<uint32_t>(w % p_);
        w /= p_;
      }
      cand[k_] = 1;
      if (k_ == 1 || is_irreducible(cand)) {
        for (int i = 0; i < k_; ++i) modulus_[i] = cand[i];
        return;
      }
    }
    throw GeometryError("no irreducible polynomial found");  // unreachable
  }

  bool is_irreducible(const Fp& f) const {
    int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
      uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (uint64_t v = 0; v < count; ++v) {
        Fp div(d + 1, 0);
        uint64_t w = v;
        for (int i = 0; i < d; ++i) {
          div[i] = static_cast<uint32_t>(w % p_);
          w /= p_;
        }
        div[d] = 1;
        if (divides(div, f)) return false;
      }
    }
    return true;
  }

  void precompute_trace() {
    for (int j = 0; j < k_; ++j) {
      FFElem basis{};
      basis.c[j] = 1;
      FFElem acc = basis;
      FFElem cur = basis;
      for (int i = 1; i < k_; ++i) {
        cur = pow(cur, p_);
        acc = add(acc, cur);
      }
      for (int i = 1; i < k_; ++i) assert(acc.c[i] == 0 && "trace must lie in F_p");
      trace_basis_[j] = acc.c[0];
    }
  }

  uint32_t p_;
  int k_;
  std::array<uint32_t, kMaxFieldDegree> modulus_{};
  std::array<uint32_t, kMaxFieldDegree> trace_basis_{};
};

/// Polynomial over F_{p^k}; produced by reducing an integer polynomial.
struct FFPolynomial {
  FiniteField field;
  int n = 0;
  std::map<ExponentVec, FFElem> terms;
  bool support_changed = false;

  bool is_zero() const { return terms.empty(); }
};

/// f mod p, coefficients embedded in F_{p^k} via the prime subfield.
/// support_changed records whether supp(f mod p) != supp(f).
inline FFPolynomial reduce_mod(const IntPolynomial& f, uint32_t p, int k = 1) {
  FFPolynomial r{FiniteField(p, k), f.n, {}, false};
  for (const auto& [e, c] : f.terms) {
    FFElem v = r.field.from_int(c);
    if (!r.field.is_zero(v)) r.terms.emplace(e, v);
  }
  r.support_changed = r.terms.size() != f.terms.size();
  return r;
}

inline FFPolynomial derivative(const FFPolynomial& f, int var) {
  FFPolynomial r{f.field, f.n, {}, false};
  for (const auto& [e, c] : f.terms) {
    if (e[var] == 0) continue;
    FFElem v = f.field.scale(static_cast<uint32_t>(e[var] % f.field.p()), c);
    if (f.field.is_zero(v)) continue;
    ExponentVec d = e;
    d[var] -= 1;
    auto it = r.terms.find(d);
    if (it == r.terms.end())
      r.terms.emplace(d, v);
    else {
      it->second = f.field.add(it->second, v);
      if (f.field.is_zero(it->second)) r.terms.erase(it);
    }
  }
  return r;
}

inline FFElem eval(const FFPolynomial& f, const std::vector<FFElem>& point) {
  const FiniteField& F = f.field;
  FFElem acc = F.zero();
  for (const auto& [e, c] : f.terms) {
    FFElem t = c;
    for (int j = 0; j < f.n; ++j)
      if (e[j]) t = F.mul(t, F.pow(point[j], e[j]));
    acc = F.add(acc, t);
  }
  return acc;
}

}  // namespace igusa

#endif
