// Sparse multivariate integer polynomials with exact big-integer coefficients:
// parsing, arithmetic, modular evaluation and the variable compositions used
// by the sigma calculus.
#ifndef IGUSA_POLY_HPP
#define IGUSA_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "igusa/errors.hpp"
#include "igusa/rational.hpp"

namespace igusa {

/// Exponent vector i = (i_1, ..., i_n); all entries >= 0.
using ExponentVec = std::vector<int>;

inline bool is_origin(const ExponentVec& e) {
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

/// f = sum_i c_i x^i with c_i nonzero big integers. The ambient variable
/// count n is explicit; exponent keys all have length n.
struct IntPolynomial {
  int n = 0;
  std::map<ExponentVec, BigInt> terms;

  bool is_zero() const { return terms.empty(); }

  /// True when the constant term is absent, i.e. f(0) = 0.
  bool vanishes_at_origin() const {
    return terms.find(ExponentVec(n, 0)) == terms.end();
  }

  void add_term(const ExponentVec& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  bool operator==(const IntPolynomial& o) const {
    return n == o.n && terms == o.terms;
  }
};

inline std::set<ExponentVec> support(const IntPolynomial& f) {
  std::set<ExponentVec> s;
  for (const auto& [e, c] : f.terms) s.insert(e);
  return s;
}

inline IntPolynomial neg(const IntPolynomial& f) {
  IntPolynomial r{f.n, {}};
  for (const auto& [e, c] : f.terms) r.terms.emplace(e, -c);
  return r;
}

inline IntPolynomial add(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial r = f;
  r.n = std::max(f.n, g.n);
  if (r.n != f.n) {
    // widen exponent keys of f
    r.terms.clear();
    for (const auto& [e, c] : f.terms) {
      ExponentVec w = e;
      w.resize(r.n, 0);
      r.terms.emplace(w, c);
    }
  }
  for (const auto& [e, c] : g.terms) {
    ExponentVec w = e;
    w.resize(r.n, 0);
    r.add_term(w, c);
  }
  return r;
}

inline IntPolynomial sub(const IntPolynomial& f, const IntPolynomial& g) {
  return add(f, neg(g));
}

inline IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial r{std::max(f.n, g.n), {}};
  for (const auto& [ef, cf] : f.terms)
    for (const auto& [eg, cg] : g.terms) {
      ExponentVec e(r.n, 0);
      for (size_t j = 0; j < ef.size(); ++j) e[j] += ef[j];
      for (size_t j = 0; j < eg.size(); ++j) e[j] += eg[j];
      r.add_term(e, cf * cg);
    }
  return r;
}

/// The n formal partial derivatives of f.
inline std::vector<IntPolynomial> gradient(const IntPolynomial& f) {
  std::vector<IntPolynomial> g(f.n, IntPolynomial{f.n, {}});
  for (const auto& [e, c] : f.terms)
    for (int j = 0; j < f.n; ++j) {
      if (e[j] == 0) continue;
      ExponentVec d = e;
      d[j] -= 1;
      g[j].add_term(d, c * e[j]);
    }
  return g;
}

/// f(x) + g(y) on disjoint variable blocks; g's exponents are shifted into
/// coordinates n+1 .. n+m.
inline IntPolynomial disjoint_sum(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial r{f.n + g.n, {}};
  for (const auto& [e, c] : f.terms) {
    ExponentVec w = e;
    w.resize(f.n + g.n, 0);
    r.add_term(w, c);
  }
  for (const auto& [e, c] : g.terms) {
    ExponentVec w(f.n, 0);
    w.insert(w.end(), e.begin(), e.end());
    r.add_term(w, c);
  }
  return r;
}

/// f(x) * g(y) on disjoint variable blocks.
inline IntPolynomial disjoint_product(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial r{f.n + g.n, {}};
  for (const auto& [ef, cf] : f.terms)
    for (const auto& [eg, cg] : g.terms) {
      ExponentVec w = ef;
      w.insert(w.end(), eg.begin(), eg.end());
      r.add_term(w, cf * cg);
    }
  return r;
}

/// Substitute x_n := x_{n-1}, merging like terms; result lives in n-1 vars.
inline IntPolynomial merge_last_two_vars(const IntPolynomial& f) {
  if (f.n < 2) throw GeometryError("merge_last_two_vars needs n >= 2");
  IntPolynomial r{f.n - 1, {}};
  for (const auto& [e, c] : f.terms) {
    ExponentVec w(e.begin(), e.end() - 1);
    w[f.n - 2] += e[f.n - 1];
    r.add_term(w, c);
  }
  return r;
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t base, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return r;
}

/// f(point) mod `modulus`, with modular arithmetic throughout.
inline uint64_t eval_residue(const IntPolynomial& f,
                             const std::vector<uint64_t>& point,
                             uint64_t modulus) {
  uint64_t acc = 0;
  for (const auto& [e, c] : f.terms) {
    BigInt cr = c % BigInt(modulus);
    if (cr < 0) cr += modulus;
    uint64_t t = cr.convert_to<uint64_t>();
    for (int j = 0; j < f.n; ++j)
      if (e[j] != 0) t = mulmod_u64(t, powmod_u64(point[j] % modulus, e[j], modulus), modulus);
    acc = (acc + t) % modulus;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Grammar:  expr   := ['-'] term (('+'|'-') term)*
//           term   := factor ('*' factor)*
//           factor := atom ['^' INT]
//           atom   := INT | 'x' INT
// '^' binds tightest, then '*', then '+'/'-'; whitespace ignored; implicit
// multiplication is not allowed.
// ---------------------------------------------------------------------------
namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, int declared_n)
      : text_(text), declared_n_(declared_n) {}

  IntPolynomial run() {
    skip_ws();
    IntPolynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
    int n = declared_n_ > 0 ? declared_n_ : std::max(max_var_, 1);
    IntPolynomial out{n, {}};
    for (const auto& [e, c] : f.terms) {
      ExponentVec w = e;
      w.resize(n, 0);
      out.add_term(w, c);
    }
    return out;
  }

 private:
  IntPolynomial expr() {
    int sign = 1;
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    IntPolynomial acc = term();
    if (sign < 0) acc = neg(acc);
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        IntPolynomial t = term();
        acc = c == '+' ? add(acc, t) : sub(acc, t);
      } else {
        break;
      }
    }
    return acc;
  }

  IntPolynomial term() {
    IntPolynomial acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  IntPolynomial factor() {
    IntPolynomial base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      BigInt e = integer();
      if (e < 0 || e > 1000000) throw ParseError(at, "exponent out of range");
      unsigned long ee = e.convert_to<unsigned long>();
      IntPolynomial r{base.n, {{ExponentVec(base.n, 0), BigInt(1)}}};
      for (unsigned long i = 0; i < ee; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  IntPolynomial atom() {
    skip_ws();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      size_t at = pos_;
      if (!std::isdigit(peek())) throw ParseError(pos_, "expected variable index after 'x'");
      BigInt idx = integer();
      if (idx == 0) throw ParseError(at, "variable index 0 is invalid; variables are x1..xn");
      if (idx > 64) throw ParseError(at, "variable index too large");
      int i = idx.convert_to<int>();
      if (declared_n_ > 0 && i > declared_n_)
        throw ParseError(at, "variable index exceeds declared variable count");
      max_var_ = std::max(max_var_, i);
      IntPolynomial v{i, {}};
      ExponentVec e(i, 0);
      e[i - 1] = 1;
      v.terms.emplace(e, BigInt(1));
      return v;
    }
    if (std::isdigit(c)) {
      BigInt k = integer();
      IntPolynomial r{1, {}};
      if (k != 0) r.terms.emplace(ExponentVec(1, 0), k);
      return r;
    }
    throw ParseError(pos_, c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  BigInt integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected integer");
    return BigInt(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  int declared_n_;
  size_t pos_ = 0;
  int max_var_ = 0;
};

}  // namespace detail

/// Parse a polynomial. When declared_n <= 0, the variable count is inferred
/// as the maximal index appearing (at least 1).
inline IntPolynomial parse_polynomial(const std::string& text, int declared_n = -1) {
  return detail::PolyParser(text, declared_n).run();
}

/// Canonical text form; parse(render(f)) == f.
inline std::string render(const IntPolynomial& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int j = 0; j < f.n; ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(j + 1);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace igusa

#endif
