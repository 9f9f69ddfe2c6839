// Exact big-integer and big-rational scalar types used throughout the library.
#ifndef IGUSA_RATIONAL_HPP
#define IGUSA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace igusa {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Serialize a rational as "a/b" ("a" when b == 1). Exact, no floats.
inline std::string rat_string(const Rat& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline BigInt pow_bigint(const BigInt& base, unsigned long e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// p^{-e} as an exact rational, for integer e >= 0.
inline Rat p_pow_neg(uint32_t p, const BigInt& e) {
  if (e < 0) throw std::invalid_argument("p_pow_neg: negative exponent");
  return Rat(BigInt(1), pow_bigint(BigInt(p), e.convert_to<unsigned long>()));
}

/// A rational extended with a +infinity sentinel (used for sigma of
/// polynomials whose polyhedron meets the diagonal only at infinity,
/// and sigma(0) = 0 by convention).
struct ExtendedRat {
  Rat value{};
  bool infinite = false;

  static ExtendedRat infinity() { return ExtendedRat{Rat(0), true}; }
  static ExtendedRat of(const Rat& v) { return ExtendedRat{v, false}; }

  bool operator==(const ExtendedRat& o) const {
    if (infinite != o.infinite) return false;
    return infinite || value == o.value;
  }
  bool operator<(const ExtendedRat& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator<=(const ExtendedRat& o) const { return *this < o || *this == o; }

  std::string str() const { return infinite ? "inf" : rat_string(value); }
};

inline ExtendedRat operator+(const ExtendedRat& a, const ExtendedRat& b) {
  if (a.infinite || b.infinite) return ExtendedRat::infinity();
  return ExtendedRat::of(a.value + b.value);
}

inline ExtendedRat min(const ExtendedRat& a, const ExtendedRat& b) {
  return a <= b ? a : b;
}

}  // namespace igusa

#endif
