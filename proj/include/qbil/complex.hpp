#pragma once

#include <cmath>
#include <utility>

namespace qbil {

// Minimal complex type over an arbitrary real field. std::complex is only
// specified for built-in floating point, and we need the same arithmetic
// over multiprecision reals, so the project uses one template for both.
template <class R>
struct BasicComplex {
  R re{};
  R im{};

  BasicComplex() = default;
  BasicComplex(R r) : re(std::move(r)) {}
  BasicComplex(R r, R i) : re(std::move(r)), im(std::move(i)) {}

  BasicComplex& operator+=(const BasicComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BasicComplex& operator-=(const BasicComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BasicComplex& operator*=(const BasicComplex& o) {
    R r = re * o.re - im * o.im;
    R i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  BasicComplex& operator/=(const BasicComplex& o) {
    // Scaled division keeps the double instantiation safe near the
    // overflow/underflow boundary.
    using std::abs;
    R oa = abs(o.re), ob = abs(o.im);
    if (oa >= ob) {
      R t = o.im / o.re;
      R d = o.re + o.im * t;
      R r = (re + im * t) / d;
      R i = (im - re * t) / d;
      re = std::move(r);
      im = std::move(i);
    } else {
      R t = o.re / o.im;
      R d = o.re * t + o.im;
      R r = (re * t + im) / d;
      R i = (im * t - re) / d;
      re = std::move(r);
      im = std::move(i);
    }
    return *this;
  }

  friend BasicComplex operator+(BasicComplex a, const BasicComplex& b) { return a += b; }
  friend BasicComplex operator-(BasicComplex a, const BasicComplex& b) { return a -= b; }
  friend BasicComplex operator*(BasicComplex a, const BasicComplex& b) { return a *= b; }
  friend BasicComplex operator/(BasicComplex a, const BasicComplex& b) { return a /= b; }
  friend BasicComplex operator-(const BasicComplex& a) { return BasicComplex(-a.re, -a.im); }

  friend bool operator==(const BasicComplex& a, const BasicComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const BasicComplex& a, const BasicComplex& b) { return !(a == b); }
};

template <class R>
R abs(const BasicComplex<R>& z) {
  using std::abs;
  using std::sqrt;
  R a = abs(z.re), b = abs(z.im);
  if (a == R(0) && b == R(0)) return R(0);
  // hypot-style scaling
  if (a < b) std::swap(a, b);
  R t = b / a;
  return a * sqrt(R(1) + t * t);
}

template <class R>
BasicComplex<R> conj(const BasicComplex<R>& z) {
  return BasicComplex<R>(z.re, -z.im);
}

}  // namespace qbil
