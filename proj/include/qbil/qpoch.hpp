#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "qbil/numerics.hpp"

namespace qbil {

// ---------------------------------------------------------------------------
// Base, evaluation context, diagnostics
// ---------------------------------------------------------------------------

template <class T>
struct QBase {
  T q;
  typename field_traits<T>::real absq;

  explicit QBase(T qv) : q(std::move(qv)), absq(field_traits<T>::mag(q)) {
    if (!(absq > 0) || !(absq < 1))
      fail(errc::invalid_spec, "base must satisfy 0 < |q| < 1");
  }
};

struct Diag {
  long series_count = 0;
  long total_terms = 0;
  long max_series_terms = 0;
  long products = 0;
  long max_product_factors = 0;
  double max_product_remainder = 0.0;  // relative truncation bound over all infinite products
  double min_denominator_margin = 1e308;
  bool any_terminated = false;
};

struct EvalOptions {
  Tolerance tol = Tolerance::for_tower(Tower::Double);
  long max_terms = 10000;
  double degenerate_radius = 1e-6;
  double power_match_tol = 1e-12;  // q-power detection in float towers
  int termination_scan = 64;
  unsigned big_digits = kDefaultBigDigits;
};

template <class T>
struct EvalCtx {
  QBase<T> q;
  EvalOptions opt;
  Diag* diag = nullptr;

  EvalCtx(QBase<T> base, EvalOptions o, Diag* d = nullptr)
      : q(std::move(base)), opt(o), diag(d) {
    opt.tol.validate();
  }
  T qpow(long e) const { return pow_int(q.q, e); }
  typename field_traits<T>::real rtol(double v) const {
    return field_traits<T>::real_from_double(v);
  }
};

// ---------------------------------------------------------------------------
// ExtendedValue: finite scalar or an explicit pole marker. Poles come from
// q-shifted factorials at negative index whose defining product vanishes; a
// pole in a denominator is a legitimate zero, a pole against an exact zero is
// indeterminate and always an error.
// ---------------------------------------------------------------------------

template <class T>
struct Ext {
  T v{1};
  bool pole = false;

  Ext() = default;
  Ext(T x) : v(std::move(x)) {}
  static Ext make_pole() {
    Ext e;
    e.pole = true;
    return e;
  }
  bool is_zero() const { return !pole && v == T(0); }

  Ext& operator*=(const Ext& o) {
    if (pole || o.pole) {
      if ((pole && o.is_zero()) || (o.pole && is_zero()))
        fail(errc::indeterminate_product, "pole times exact zero");
      pole = true;
      return *this;
    }
    v *= o.v;
    return *this;
  }
  friend Ext operator*(Ext a, const Ext& b) { return a *= b; }

  Ext reciprocal() const {
    if (pole) return Ext(T(0));
    if (is_zero()) return make_pole();
    return Ext(T(1) / v);
  }
  friend Ext operator/(const Ext& a, const Ext& b) { return Ext(a) *= b.reciprocal(); }

  bool equals(const Ext& o) const {
    if (pole || o.pole) return pole == o.pole;
    return v == o.v;
  }
};

// ---------------------------------------------------------------------------
// q-shifted factorials
// ---------------------------------------------------------------------------

// (a;q)_k for finite k of either sign. Negative-index factors are computed as
// 1 - a/q^j so that structurally matching values cancel exactly in floating
// point as well as in the exact tower.
template <class T>
Ext<T> qpoch(const T& a, const EvalCtx<T>& cx, long k, double* den_margin = nullptr) {
  auto track = [&](const T& factor, const T& u) {
    if (den_margin) {
      double m = field_traits<T>::mag_to_double(mag(factor)) /
                 (1.0 + field_traits<T>::mag_to_double(mag(u)));
      *den_margin = std::min(*den_margin, m);
    }
  };
  if (k == 0) return Ext<T>(T(1));
  if (k > 0) {
    T prod(1);
    T aqj = a;
    for (long j = 0; j < k; ++j) {
      T f = T(1) - aqj;
      track(f, aqj);
      prod *= f;
      aqj *= cx.q.q;
    }
    return Ext<T>(prod);
  }
  T prod(1);
  T qj(1);
  bool zero = false;
  for (long j = 1; j <= -k; ++j) {
    qj *= cx.q.q;
    T u = a / qj;
    T f = T(1) - u;
    track(f, u);
    if (f == T(0)) zero = true;
    prod *= f;
  }
  if (zero) return Ext<T>::make_pole();
  if (prod == T(0)) return Ext<T>::make_pole();
  return Ext<T>(T(1) / prod);
}

// (a;q)_inf, truncated once |a q^j| drops below term_tol/2; the remainder is
// bounded by the geometric tail and recorded in diagnostics.
template <class T>
T qpoch_inf(const T& a, const EvalCtx<T>& cx, double* den_margin = nullptr) {
  if constexpr (field_traits<T>::exact)
    fail(errc::exact_infinite_product, "infinite q-product requested in exact tower");
  using R = typename field_traits<T>::real;
  R thresh = cx.rtol(cx.opt.tol.term_tol / 2.0);
  R cur = mag(a);
  T prod(1);
  T aqj = a;
  long j = 0;
  while (cur >= thresh) {
    T f = T(1) - aqj;
    if (den_margin) {
      double m = field_traits<T>::mag_to_double(mag(f)) /
                 (1.0 + field_traits<T>::mag_to_double(cur));
      *den_margin = std::min(*den_margin, m);
    }
    prod *= f;
    aqj *= cx.q.q;
    cur *= cx.q.absq;
    if (++j > 4000000) fail(errc::non_convergent, "infinite product did not truncate");
  }
  if (cx.diag) {
    cx.diag->products++;
    cx.diag->max_product_factors = std::max(cx.diag->max_product_factors, j);
    double s = field_traits<T>::mag_to_double(cur) /
               (1.0 - field_traits<T>::mag_to_double(cx.q.absq));
    if (s < 0.5) {
      double bound = s / (1.0 - s);
      cx.diag->max_product_remainder = std::max(cx.diag->max_product_remainder, bound);
    }
  }
  return prod;
}

template <class T>
Ext<T> qpoch_multi(const std::vector<T>& params, const EvalCtx<T>& cx, long k,
                   double* den_margin = nullptr) {
  bool pole = false, zero = false;
  T prod(1);
  for (const T& a : params) {
    Ext<T> e = qpoch(a, cx, k, den_margin);
    if (e.pole)
      pole = true;
    else if (e.is_zero())
      zero = true;
    else
      prod *= e.v;
  }
  if (pole && zero) fail(errc::indeterminate_product, "pole times exact zero in product");
  if (pole) return Ext<T>::make_pole();
  if (zero) return Ext<T>(T(0));
  return Ext<T>(prod);
}

template <class T>
T qpoch_multi_inf(const std::vector<T>& params, const EvalCtx<T>& cx,
                  double* den_margin = nullptr) {
  T prod(1);
  for (const T& a : params) prod *= qpoch_inf(a, cx, den_margin);
  return prod;
}

// Both sides of the index-splitting law (a;q)_{n+m} = (a;q)_n (a q^n;q)_m,
// returned for test consumption.
template <class T>
std::pair<Ext<T>, Ext<T>> qpoch_split(const T& a, const EvalCtx<T>& cx, long n, long m) {
  Ext<T> lhs = qpoch(a, cx, n + m);
  Ext<T> rhs = qpoch(a, cx, n) * qpoch(T(a * cx.qpow(n)), cx, m);
  return {lhs, rhs};
}

// (a;q)_{-n} via the reciprocal law 1/(a q^{-n};q)_n; independent of the
// direct negative-index route, so the two serve as mutual oracles.
template <class T>
T qpoch_negate(const T& a, const EvalCtx<T>& cx, long n) {
  if (n <= 0) fail(errc::invalid_spec, "qpoch_negate needs a positive index");
  T base = a / cx.qpow(n);
  T prod(1);
  T u = base;
  for (long j = 0; j < n; ++j) {
    T f = T(1) - u;
    if (f == T(0)) fail(errc::pole_encountered, "vanishing factor in negated q-factorial");
    prod *= f;
    u *= cx.q.q;
  }
  if (prod == T(0)) fail(errc::pole_encountered, "vanishing factor in negated q-factorial");
  return T(1) / prod;
}

// (x;q)_inf (-x;q)_inf computed as (x^2;q^2)_inf. Callers that only know the
// square of the pair pass it to paired_infinite_sq directly; no square roots
// are ever taken.
template <class T>
T paired_infinite_sq(const T& x_squared, const EvalCtx<T>& cx, double* den_margin = nullptr) {
  QBase<T> q2(T(cx.q.q * cx.q.q));
  EvalCtx<T> cx2(q2, cx.opt, cx.diag);
  return qpoch_inf(x_squared, cx2, den_margin);
}

template <class T>
T paired_infinite(const T& x, const EvalCtx<T>& cx, double* den_margin = nullptr) {
  return paired_infinite_sq(T(x * x), cx, den_margin);
}

// ---------------------------------------------------------------------------
// q-power recognition (termination and pole scans)
// ---------------------------------------------------------------------------

template <class T>
bool near_one(const T& w, const EvalCtx<T>& cx) {
  if constexpr (field_traits<T>::exact) {
    return w == T(1);
  } else {
    using FT = field_traits<T>;
    double d = FT::mag_to_double(mag(T(w - T(1))));
    return d <= cx.opt.power_match_tol * (1.0 + FT::mag_to_double(mag(w)));
  }
}

// Smallest n in [0, scan] with x = q^{-n}, if any.
template <class T>
std::optional<long> match_neg_q_power(const T& x, const EvalCtx<T>& cx) {
  T w = x;
  for (int n = 0; n <= cx.opt.termination_scan; ++n) {
    if (near_one(w, cx)) return n;
    w *= cx.q.q;
  }
  return std::nullopt;
}

// Smallest j in [jmin, scan] with x = q^{+j}, if any.
template <class T>
std::optional<long> match_pos_q_power(const T& x, const EvalCtx<T>& cx, long jmin = 0) {
  T w = x;
  for (long j = 0; j <= cx.opt.termination_scan; ++j) {
    if (j >= jmin && near_one(w, cx)) return j;
    w = w / cx.q.q;
  }
  return std::nullopt;
}

}  // namespace qbil
