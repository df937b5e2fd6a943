#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdio>
#include <string>
#include <variant>

#include "qbil/complex.hpp"
#include "qbil/errors.hpp"

namespace qbil {

namespace mp = boost::multiprecision;

// Arbitrary-precision real with run-time precision. et_off keeps value
// semantics simple (no expression templates leaking into BasicComplex).
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using CDouble = BasicComplex<double>;
using CBig = BasicComplex<BigFloat>;

enum class Tower { Double, Big, Exact };

inline const char* tower_name(Tower t) {
  switch (t) {
    case Tower::Double: return "double";
    case Tower::Big: return "big";
    case Tower::Exact: return "exact";
  }
  return "?";
}

constexpr unsigned kDefaultBigDigits = 50;

// Sets the thread-local default precision used by freshly constructed
// BigFloat values. Call once per worker thread before evaluating.
inline void set_big_digits(unsigned digits10) { BigFloat::default_precision(digits10); }

inline BigFloat big_from_double(double v, unsigned digits10) {
  BigFloat x;
  x.precision(digits10);
  x = v;  // exact: binary64 embeds into any mpfr precision >= 53 bits
  return x;
}

inline BigFloat big_from_rational(const Rational& v, unsigned digits10) {
  BigFloat x;
  x.precision(digits10);
  x.assign(v);
  return x;
}

// ---------------------------------------------------------------------------
// Field traits: the three scalar towers share one template surface.
// ---------------------------------------------------------------------------

template <class T>
struct field_traits;

template <>
struct field_traits<CDouble> {
  using real = double;
  static constexpr bool exact = false;
  static real mag(const CDouble& z) { return abs(z); }
  static CDouble from_parts(double re, double im) { return CDouble(re, im); }
  static CDouble from_rational(const Rational& r) { return CDouble(r.convert_to<double>(), 0.0); }
  static real real_from_double(double v) { return v; }
  static double mag_to_double(const real& v) { return v; }
};

template <>
struct field_traits<CBig> {
  using real = BigFloat;
  static constexpr bool exact = false;
  static real mag(const CBig& z) { return abs(z); }
  static CBig from_parts(double re, double im) { return CBig(BigFloat(re), BigFloat(im)); }
  static CBig from_rational(const Rational& r) { return CBig(BigFloat(r), BigFloat(0)); }
  static real real_from_double(double v) { return BigFloat(v); }
  static double mag_to_double(const real& v) { return v.convert_to<double>(); }
};

template <>
struct field_traits<Rational> {
  using real = Rational;
  static constexpr bool exact = true;
  static real mag(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static Rational from_parts(double, double) {
    fail(errc::illegal_demotion, "float value cannot enter exact tower");
  }
  static Rational from_rational(const Rational& r) { return r; }
  static real real_from_double(double v) {
    // Rationals built from doubles are exact dyadic values; used for
    // tolerances and bound constants only.
    return Rational(v);
  }
  static double mag_to_double(const real& v) { return v.convert_to<double>(); }
};

template <class T>
typename field_traits<T>::real mag(const T& v) {
  return field_traits<T>::mag(v);
}

template <class T>
T pow_int(const T& x, long e) {
  if (e == 0) return T(1);
  T base = x;
  long n = e;
  if (n < 0) {
    base = T(1) / base;
    n = -n;
  }
  T acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Tolerance
// ---------------------------------------------------------------------------

struct Tolerance {
  double term_tol;       // series truncation: relative magnitude of terms
  double residual_tol;   // identity acceptance threshold
  double zero_floor;     // residual denominators below this count as zero

  static Tolerance for_tower(Tower t, unsigned big_digits = kDefaultBigDigits) {
    switch (t) {
      case Tower::Double: return {1e-17, 1e-12, 1e-300};
      case Tower::Big: {
        double tt = std::pow(10.0, -(double(big_digits) + 8.0));
        double rt = std::pow(10.0, -(double(big_digits) - 10.0));
        return {tt, rt, 1e-30};
      }
      case Tower::Exact: return {1e-30, 1e-30, 1e-300};
    }
    return {1e-17, 1e-12, 1e-300};
  }

  void validate() const {
    if (!(term_tol > 0 && residual_tol > 0 && zero_floor > 0))
      fail(errc::invalid_spec, "tolerances must be strictly positive");
    if (term_tol > residual_tol)
      fail(errc::invalid_spec, "term_tol must not exceed residual_tol");
  }
};

// ---------------------------------------------------------------------------
// Scalar: tower-tagged value for module boundaries (CLI, serialization,
// promote/approx_eq). Inner evaluation code is templated on the raw types.
// ---------------------------------------------------------------------------

struct Scalar {
  std::variant<CDouble, CBig, Rational> v;

  Scalar() : v(CDouble{}) {}
  Scalar(CDouble z) : v(z) {}
  Scalar(CBig z) : v(std::move(z)) {}
  Scalar(Rational r) : v(std::move(r)) {}

  Tower tower() const {
    switch (v.index()) {
      case 0: return Tower::Double;
      case 1: return Tower::Big;
      default: return Tower::Exact;
    }
  }
  unsigned precision() const {
    if (v.index() == 1) return std::get<CBig>(v).re.precision();
    if (v.index() == 0) return 16;
    return 0;  // exact
  }
};

inline Scalar promote(const Scalar& s, Tower target, unsigned digits10 = kDefaultBigDigits) {
  switch (s.v.index()) {
    case 2: {  // exact -> anything
      const Rational& r = std::get<Rational>(s.v);
      if (target == Tower::Exact) return s;
      if (target == Tower::Double) return Scalar(CDouble(r.convert_to<double>(), 0.0));
      return Scalar(CBig(big_from_rational(r, digits10), big_from_double(0.0, digits10)));
    }
    case 0: {  // double
      const CDouble& z = std::get<CDouble>(s.v);
      if (target == Tower::Double) return s;
      if (target == Tower::Big)
        return Scalar(CBig(big_from_double(z.re, digits10), big_from_double(z.im, digits10)));
      fail(errc::illegal_demotion, "cannot convert float scalar to exact rational");
    }
    default: {  // big
      const CBig& z = std::get<CBig>(s.v);
      if (target == Tower::Big) {
        if (digits10 < z.re.precision())
          fail(errc::illegal_demotion, "target precision below source precision");
        CBig out = z;
        out.re.precision(digits10);  // widening keeps the value exactly
        out.im.precision(digits10);
        return Scalar(out);
      }
      fail(errc::illegal_demotion, "big scalar only promotes to higher-precision big");
    }
  }
}

// Lossy float-to-float conversion, provided separately so that promote()
// keeps its precision precondition. Round-trip behaviour is tested.
inline Scalar demote_lossy(const Scalar& s, Tower target, unsigned digits10 = kDefaultBigDigits) {
  if (s.tower() == Tower::Exact && target != Tower::Exact) return promote(s, target, digits10);
  if (target == Tower::Exact) {
    if (s.tower() == Tower::Exact) return s;
    fail(errc::illegal_demotion, "cannot convert float scalar to exact rational");
  }
  if (s.tower() == Tower::Double) return promote(s, target, digits10);
  const CBig& z = std::get<CBig>(s.v);
  if (target == Tower::Double)
    return Scalar(CDouble(z.re.convert_to<double>(), z.im.convert_to<double>()));
  CBig out(big_from_double(0.0, digits10), big_from_double(0.0, digits10));
  out.re = z.re;  // mpfr rounds on mixed-precision assignment
  out.re.precision(digits10);
  out.im = z.im;
  out.im.precision(digits10);
  return Scalar(out);
}

struct ApproxResult {
  bool equal;
  double residual;  // |x-y| / max(|x|, |y|, zero_floor)
};

inline ApproxResult approx_eq(const Scalar& xs, const Scalar& ys, const Tolerance& tol) {
  tol.validate();
  if (xs.tower() == Tower::Exact && ys.tower() == Tower::Exact) {
    const Rational& a = std::get<Rational>(xs.v);
    const Rational& b = std::get<Rational>(ys.v);
    if (a == b) return {true, 0.0};
    Rational num = field_traits<Rational>::mag(Rational(a - b));
    Rational den = std::max(field_traits<Rational>::mag(a), field_traits<Rational>::mag(b));
    double r = den == 0 ? 1.0 : Rational(num / den).convert_to<double>();
    return {r < tol.residual_tol, r};
  }
  // Promote both to the widest float tower involved.
  unsigned digits = std::max(xs.precision(), ys.precision());
  Tower t = (xs.tower() == Tower::Big || ys.tower() == Tower::Big) ? Tower::Big : Tower::Double;
  if (t == Tower::Big) digits = std::max(digits, 16u);
  Scalar xp = xs.tower() == t && xs.precision() == digits ? xs : promote(xs, t, digits);
  Scalar yp = ys.tower() == t && ys.precision() == digits ? ys : promote(ys, t, digits);
  if (t == Tower::Double) {
    CDouble d = std::get<CDouble>(xp.v) - std::get<CDouble>(yp.v);
    double num = abs(d);
    double den = std::max({abs(std::get<CDouble>(xp.v)), abs(std::get<CDouble>(yp.v)),
                           tol.zero_floor});
    double r = num / den;
    return {r < tol.residual_tol, r};
  }
  CBig d = std::get<CBig>(xp.v) - std::get<CBig>(yp.v);
  BigFloat num = abs(d);
  BigFloat den = abs(std::get<CBig>(xp.v));
  BigFloat den2 = abs(std::get<CBig>(yp.v));
  if (den2 > den) den = den2;
  BigFloat floorv(tol.zero_floor);
  if (floorv > den) den = floorv;
  double r = BigFloat(num / den).convert_to<double>();
  return {r < tol.residual_tol, r};
}

// ---------------------------------------------------------------------------
// Deterministic string forms (reports must be byte-stable across runs).
// ---------------------------------------------------------------------------

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string to_string(const BigFloat& v, unsigned digits10 = 0) {
  return v.str(digits10 ? digits10 : v.precision(), std::ios_base::scientific);
}

inline std::string to_string(const Scalar& s) {
  switch (s.v.index()) {
    case 0: {
      const CDouble& z = std::get<CDouble>(s.v);
      return format_double(z.re) + (z.im < 0 ? "" : "+") + format_double(z.im) + "i";
    }
    case 1: {
      const CBig& z = std::get<CBig>(s.v);
      return to_string(z.re) + (z.im < 0 ? "" : "+") + to_string(z.im) + "i";
    }
    default: return std::get<Rational>(s.v).str();
  }
}

}  // namespace qbil
