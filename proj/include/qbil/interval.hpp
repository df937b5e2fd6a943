#pragma once

#include <algorithm>

#include "qbil/catalog.hpp"

namespace qbil {

// Closed rational interval. All endpoint arithmetic is exact, so enclosures
// are rigorous; rounding happens only when a bound is reported as a double.
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rational v) : lo(v), hi(std::move(v)) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) std::swap(lo, hi);
  }

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational abs_hi() const { return std::max(Rational(-lo), hi); }
  Rational width() const { return hi - lo; }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
  }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    return RatInterval(std::min(std::min(c1, c2), std::min(c3, c4)),
                       std::max(std::max(c1, c2), std::max(c3, c4)));
  }
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) fail(errc::degenerate_point, "interval division by zero");
    RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return a * inv;
  }
};

// Largest possible |x - y| over x in a, y in b.
inline Rational interval_gap(const RatInterval& a, const RatInterval& b) {
  Rational g1 = b.hi - a.lo;
  Rational g2 = a.hi - b.lo;
  Rational g = std::max(g1, g2);
  return g < 0 ? Rational(0) : g;
}

// (x;q)_inf enclosure: exact partial product times a remainder interval
// bounded through the geometric series, cut once |x q^J| <= slack.
inline RatInterval qpoch_inf_interval(const Rational& x, const QBase<Rational>& q,
                                      const Rational& slack, long* factors = nullptr) {
  Rational ax = x < 0 ? Rational(-x) : x;
  Rational cur = ax;
  Rational prod(1);
  Rational xqj = x;
  long j = 0;
  while (cur > slack) {
    prod *= (Rational(1) - xqj);
    xqj *= q.q;
    cur *= q.absq;
    if (++j > 100000) fail(errc::no_contraction, "interval product did not truncate");
  }
  if (factors) *factors = j;
  Rational S = cur / (Rational(1) - q.absq);
  if (S >= 1) fail(errc::no_contraction, "interval product remainder not contracting");
  RatInterval rem(Rational(1) - S, Rational(1) / (Rational(1) - S));
  return RatInterval(prod) * rem;
}

// Exact-endpoint interval for a rational prefactor (finite entries exact,
// infinite entries enclosed with the given relative slack per product).
inline RatInterval eval_prefactor_interval(const PochRatio<Rational>& p, EvalCtx<Rational>& cx,
                                           const Rational& slack) {
  RatInterval out{p.scalar};
  for (const auto& e : p.num) {
    if (e.inf) {
      out = out * qpoch_inf_interval(e.x, cx.q, slack);
    } else {
      Ext<Rational> v = qpoch(e.x, cx, e.k);
      if (v.pole) fail(errc::degenerate_point, "pole in certified prefactor");
      out = out * RatInterval(v.v);
    }
  }
  for (const auto& e : p.den) {
    if (e.inf) {
      out = out / qpoch_inf_interval(e.x, cx.q, slack);
    } else {
      Ext<Rational> v = qpoch(e.x, cx, e.k);
      if (v.pole || v.is_zero())
        fail(errc::degenerate_point, "vanishing denominator in certified prefactor");
      out = out / RatInterval(v.v);
    }
  }
  QBase<Rational> q2(cx.q.q * cx.q.q);
  for (const Rational& y : p.num_pair_sq) out = out * qpoch_inf_interval(y, q2, slack);
  for (const Rational& y : p.den_pair_sq) out = out / qpoch_inf_interval(y, q2, slack);
  return out;
}

}  // namespace qbil
