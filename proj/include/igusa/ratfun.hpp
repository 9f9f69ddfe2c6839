// Dense univariate polynomials over Q and their quotients, canonicalized.
// This is the arithmetic backing for zeta functions in the variable t = p^{-s}.
#ifndef IGUSA_RATFUN_HPP
#define IGUSA_RATFUN_HPP

#include <cassert>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/rational.hpp"

namespace igusa {

/// Coefficient vector, lowest degree first; normalized (no trailing zeros).
struct PolyT {
  std::vector<Rat> c;

  PolyT() = default;
  explicit PolyT(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
  static PolyT constant(const Rat& v) { return PolyT(std::vector<Rat>{v}); }
  static PolyT monomial(const Rat& v, size_t e) {
    std::vector<Rat> w(e + 1, Rat(0));
    w[e] = v;
    return PolyT(std::move(w));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  Rat coeff(size_t i) const { return i < c.size() ? c[i] : Rat(0); }

  bool operator==(const PolyT& o) const { return c == o.c; }
};

inline PolyT operator+(const PolyT& a, const PolyT& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return PolyT(std::move(r));
}

inline PolyT operator-(const PolyT& a, const PolyT& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return PolyT(std::move(r));
}

inline PolyT operator*(const PolyT& a, const PolyT& b) {
  if (a.is_zero() || b.is_zero()) return PolyT();
  std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return PolyT(std::move(r));
}

inline PolyT operator*(const Rat& s, const PolyT& a) {
  std::vector<Rat> r = a.c;
  for (auto& x : r) x *= s;
  return PolyT(std::move(r));
}

/// Division with remainder; b != 0.
inline std::pair<PolyT, PolyT> divmod(PolyT a, const PolyT& b) {
  if (b.is_zero()) throw GeometryError("polynomial division by zero");
  PolyT q;
  q.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 0, Rat(0));
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Rat f = a.c.back() / b.c.back();
    size_t shift = a.c.size() - b.c.size();
    q.c.resize(std::max(q.c.size(), shift + 1), Rat(0));
    q.c[shift] += f;
    for (size_t i = 0; i < b.c.size(); ++i) a.c[shift + i] -= f * b.c[i];
    a.trim();
  }
  q.trim();
  return {q, a};
}

inline PolyT poly_gcd(PolyT a, PolyT b) {
  while (!b.is_zero()) {
    PolyT r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    Rat lead = a.c.back();
    for (auto& x : a.c) x /= lead;  // monic
  }
  return a;
}

inline Rat eval_poly(const PolyT& a, const Rat& t) {
  Rat r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = r * t + a.c[i];
  return r;
}

inline double eval_poly_double(const PolyT& a, double t) {
  double r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = r * t + to_double(a.c[i]);
  return r;
}

/// Quotient of polynomials in t with exact rational coefficients. Canonical
/// form: gcd removed, denominator monic. Canonical forms are unique, so
/// operator== is exact equality of rational functions.
class RationalFunctionT {
 public:
  RationalFunctionT() : num_(), den_(PolyT::constant(Rat(1))) {}
  RationalFunctionT(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }
  static RationalFunctionT constant(const Rat& v) {
    return RationalFunctionT(PolyT::constant(v), PolyT::constant(Rat(1)));
  }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalFunctionT operator+(const RationalFunctionT& o) const {
    return RationalFunctionT(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RationalFunctionT operator-(const RationalFunctionT& o) const {
    return RationalFunctionT(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  RationalFunctionT operator*(const RationalFunctionT& o) const {
    return RationalFunctionT(num_ * o.num_, den_ * o.den_);
  }
  RationalFunctionT operator/(const RationalFunctionT& o) const {
    if (o.is_zero()) throw GeometryError("rational function division by zero");
    return RationalFunctionT(num_ * o.den_, den_ * o.num_);
  }
  RationalFunctionT scale(const Rat& s) const {
    return RationalFunctionT(s * num_, den_);
  }

  bool operator==(const RationalFunctionT& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Exact evaluation; throws on a pole.
  Rat evaluate(const Rat& t) const {
    Rat d = eval_poly(den_, t);
    if (d == 0) throw GeometryError("evaluation at a pole");
    return eval_poly(num_, t) / d;
  }

  double evaluate_double(double t) const {
    return eval_poly_double(num_, t) / eval_poly_double(den_, t);
  }

  /// First V+1 power-series coefficients around t = 0; needs den(0) != 0.
  std::vector<Rat> series_expand(int V) const {
    if (den_.coeff(0) == 0) throw GeometryError("series expansion at a pole");
    std::vector<Rat> out(V + 1, Rat(0));
    Rat d0 = den_.coeff(0);
    for (int v = 0; v <= V; ++v) {
      Rat s = num_.coeff(v);
      for (int j = 1; j <= v; ++j) s -= den_.coeff(j) * out[v - j];
      out[v] = s / d0;
    }
    return out;
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw GeometryError("zero denominator");
    if (num_.is_zero()) {
      den_ = PolyT::constant(Rat(1));
      return;
    }
    PolyT g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    Rat lead = den_.c.back();
    for (auto& x : num_.c) x /= lead;
    for (auto& x : den_.c) x /= lead;
  }

  PolyT num_, den_;
};

}  // namespace igusa

#endif
