#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qbil/point.hpp"
#include "qbil/sampling.hpp"
#include "qbil/series.hpp"

namespace qbil {

// ---------------------------------------------------------------------------
// Prefactors: ratios of q-shifted factorials (finite, infinite, and paired
// square-free (y;q^2)_inf entries) times a free scalar factor.
// ---------------------------------------------------------------------------

template <class T>
struct PochRatio {
  struct Entry {
    T x;
    long k = 0;
    bool inf = true;
  };
  std::vector<Entry> num, den;
  std::vector<T> num_pair_sq, den_pair_sq;  // (y;q^2)_inf entries, y already squared
  T scalar{1};

  PochRatio& ni(std::initializer_list<T> xs) {
    for (const T& x : xs) num.push_back({x, 0, true});
    return *this;
  }
  PochRatio& di(std::initializer_list<T> xs) {
    for (const T& x : xs) den.push_back({x, 0, true});
    return *this;
  }
  PochRatio& nf(T x, long k) {
    num.push_back({std::move(x), k, false});
    return *this;
  }
  PochRatio& df(T x, long k) {
    den.push_back({std::move(x), k, false});
    return *this;
  }
  PochRatio& npair(T y_squared) {
    num_pair_sq.push_back(std::move(y_squared));
    return *this;
  }
  PochRatio& dpair(T y_squared) {
    den_pair_sq.push_back(std::move(y_squared));
    return *this;
  }
  PochRatio& times(T v) {
    scalar *= v;
    return *this;
  }
};

// Evaluates a prefactor. A vanishing or pole-carrying denominator, or any
// denominator factor within the degenerate-point radius of zero, raises
// DegeneratePoint; a vanishing numerator gives an exact zero.
template <class T>
T eval_prefactor(const PochRatio<T>& p, EvalCtx<T>& cx) {
  double margin = 1e308;
  Ext<T> den(T(1));
  for (const auto& e : p.den) {
    if (e.inf)
      den *= Ext<T>(qpoch_inf(e.x, cx, &margin));
    else
      den *= qpoch(e.x, cx, e.k, &margin);
  }
  for (const T& y : p.den_pair_sq) den *= Ext<T>(paired_infinite_sq(y, cx, &margin));
  if (cx.diag) cx.diag->min_denominator_margin = std::min(cx.diag->min_denominator_margin, margin);
  if (margin < cx.opt.degenerate_radius)
    fail(errc::degenerate_point, "prefactor denominator within guard radius of zero");
  if (den.pole || den.is_zero())
    fail(errc::degenerate_point, "prefactor denominator vanishes");

  Ext<T> num(p.scalar);
  if (num.is_zero()) return T(0);
  for (const auto& e : p.num) {
    if (e.inf)
      num *= Ext<T>(qpoch_inf(e.x, cx));
    else
      num *= qpoch(e.x, cx, e.k);
    if (num.is_zero()) return T(0);
  }
  for (const T& y : p.num_pair_sq) num *= Ext<T>(paired_infinite_sq(y, cx));
  if (num.pole) fail(errc::degenerate_point, "prefactor numerator has a pole");
  return num.v / den.v;
}

// ---------------------------------------------------------------------------
// Terms: prefactor times an optional series (or a custom inner sum, used by
// the kernel identities whose summands carry n-shifted factorials).
// ---------------------------------------------------------------------------

template <class T>
struct TermSpec {
  PochRatio<T> pre;
  std::optional<AnySeries<T>> series;
  std::function<T(EvalCtx<T>&)> custom;
};

template <class T>
using Terms = std::vector<TermSpec<T>>;

template <class T>
T eval_terms(const Terms<T>& terms, EvalCtx<T>& cx) {
  T total(0);
  for (const auto& t : terms) {
    T pre = eval_prefactor(t.pre, cx);
    if (pre == T(0)) continue;  // dead term: its series must not be forced
    if (t.custom)
      total += pre * t.custom(cx);
    else if (t.series)
      total += pre * eval_series(*t.series, cx);
    else
      total += pre;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Constraints
// ---------------------------------------------------------------------------

template <class T>
struct Constraint {
  std::string name;
  enum Kind { EqualsOne, ModulusLtOne } kind;
  T value;  // equality: value == 1; inequality: |value| < 1
};

struct ConstraintResult {
  std::string name;
  bool equality = false;
  bool satisfied = false;
  double magnitude = 0.0;  // |value| (equality: |value - 1| relative)
  bool waived_by_termination = false;
};

struct ConstraintReport {
  bool pass = true;
  bool terminating = false;
  std::vector<ConstraintResult> entries;
};

// ---------------------------------------------------------------------------
// Identity descriptors
// ---------------------------------------------------------------------------

struct ShapeRanges {
  struct Range {
    int lo = 0, hi = 0;
    bool used = false;
  };
  Range r, s, N, n, m;  // m: per-element range for the s offsets
};

struct IdentityMeta {
  std::string id;
  std::string title;
  std::string source;            // classical citation
  std::string constraints_text;  // human-readable domain summary
  ShapeRanges shape;
  Tower recommended = Tower::Big;
  bool exact_ok = false;
};

template <class T>
struct IdentityOps {
  std::function<Point<T>(const PointRecord&, EvalCtx<T>&)> complete;
  std::function<Terms<T>(const Point<T>&, const Shape&, EvalCtx<T>&)> lhs, rhs;
  std::function<std::vector<Constraint<T>>(const Point<T>&, const Shape&, EvalCtx<T>&)> constraints;
  std::function<bool(const Point<T>&, const Shape&, EvalCtx<T>&)> terminates;
};

struct Identity {
  IdentityMeta meta;
  std::function<std::vector<std::string>(const Shape&)> param_names;
  std::function<Shape(Rng&, const ShapeRanges&)> sample_shape;
  std::function<void(Rng&, const Shape&, PointD&)> sample_params;
  std::function<void(Rng&, const Shape&, PointX&)> sample_params_exact;  // exact-capable only
  IdentityOps<CDouble> d;
  IdentityOps<CBig> b;
  IdentityOps<Rational> x;

  template <class T>
  const IdentityOps<T>& ops() const {
    if constexpr (std::is_same_v<T, CDouble>)
      return d;
    else if constexpr (std::is_same_v<T, CBig>)
      return b;
    else
      return x;
  }
};

const std::vector<Identity>& catalog();
const Identity& find_identity(std::string_view id);

// ---------------------------------------------------------------------------
// Registered specialization maps between catalog identities
// ---------------------------------------------------------------------------

struct SpecializationMap {
  std::string source_id;
  std::string target_id;
  std::string name;  // e.g. "b=q"
  // Generates a matched pair of points: evaluating source and target at them
  // gives equal values, side for side.
  std::function<void(Rng&, PointRecord& source, PointRecord& target)> generate;
};

const std::vector<SpecializationMap>& specializations();
const SpecializationMap& find_specialization(std::string_view source_id, std::string_view name);

// ---------------------------------------------------------------------------
// Poisedness classification of explicit series specs
// ---------------------------------------------------------------------------

struct Poisedness {
  bool balanced = false;
  bool well_poised = false;
  bool very_well_poised = false;
};

template <class T>
bool near_equal(const T& x, const T& y, const EvalCtx<T>& cx) {
  if constexpr (field_traits<T>::exact) {
    return x == y;
  } else {
    using FT = field_traits<T>;
    double d = FT::mag_to_double(mag(T(x - y)));
    double s = 1.0 + std::max(FT::mag_to_double(mag(x)), FT::mag_to_double(mag(y)));
    return d <= cx.opt.power_match_tol * s;
  }
}

template <class T>
Poisedness poisedness(const SeriesSpec<T>& s, const EvalCtx<T>& cx) {
  Poisedness p;
  const auto& up = s.upper;
  const auto& lo = s.lower;
  const T& q = cx.q.q;
  if (s.kind == SeriesKind::Unilateral) {
    if (up.size() != lo.size() + 1) return p;
    T pu(1), pl(1);
    for (const T& a : up) pu *= a;
    for (const T& b : lo) pl *= b;
    p.balanced = near_equal(pl, T(pu * q), cx) && near_equal(s.z, q, cx);
    bool wp = up.size() >= 2;
    T a1q = up[0] * q;
    for (size_t i = 0; i + 1 < up.size() && wp; ++i)
      wp = near_equal(a1q, T(up[i + 1] * lo[i]), cx);
    p.well_poised = wp;
    if (wp && up.size() >= 3)
      p.very_well_poised = near_equal(up[1], T(-up[2]), cx) &&
                           near_equal(T(up[1] * up[1]), T(q * q * up[0]), cx);
  } else {
    if (up.size() != lo.size()) return p;
    bool wp = !up.empty();
    T a1b1 = up[0] * lo[0];
    for (size_t i = 1; i < up.size() && wp; ++i) wp = near_equal(a1b1, T(up[i] * lo[i]), cx);
    p.well_poised = wp;
    if (wp && up.size() >= 2)
      p.very_well_poised = near_equal(up[0], T(-up[1]), cx) &&
                           near_equal(up[0], T(q * lo[0]), cx) &&
                           near_equal(up[1], T(-(q * lo[1])), cx);
  }
  return p;
}

}  // namespace qbil
