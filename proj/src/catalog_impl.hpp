#pragma once

// Internal scaffolding shared by the catalog translation units.

#include <string>
#include <vector>

#include "qbil/catalog.hpp"

namespace qbil {
namespace cat {

inline std::string idx(const char* base, int i) { return std::string(base) + std::to_string(i); }

template <class T>
std::vector<T> list_of(const Point<T>& P, const char* base, int lo, int hi) {
  std::vector<T> v;
  v.reserve(size_t(hi - lo + 1));
  for (int i = lo; i <= hi; ++i) v.push_back(P[idx(base, i)]);
  return v;
}

inline void names_of(std::vector<std::string>& out, const char* base, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) out.push_back(idx(base, i));
}

template <class T>
T product(const std::vector<T>& xs) {
  T p(1);
  for (const T& x : xs) p *= x;
  return p;
}

template <class T>
SeriesSpec<T> phi(std::vector<T> upper, std::vector<T> lower, T z) {
  return SeriesSpec<T>{SeriesKind::Unilateral, std::move(upper), std::move(lower), std::move(z)};
}

template <class T>
SeriesSpec<T> psi(std::vector<T> upper, std::vector<T> lower, T z) {
  return SeriesSpec<T>{SeriesKind::Bilateral, std::move(upper), std::move(lower), std::move(z)};
}

template <class T>
VWPSpec<T> vwp(SeriesKind kind, T sigma, std::vector<T> upper, const T& q, T z) {
  VWPSpec<T> s;
  s.kind = kind;
  s.sigma = sigma;
  s.lower.reserve(upper.size());
  for (const T& u : upper) s.lower.push_back(sigma * q / u);
  s.upper = std::move(upper);
  s.z = std::move(z);
  return s;
}

template <class T>
TermSpec<T> term(PochRatio<T> pre, AnySeries<T> s) {
  TermSpec<T> t;
  t.pre = std::move(pre);
  t.series = std::move(s);
  return t;
}

template <class T>
TermSpec<T> term(PochRatio<T> pre) {
  TermSpec<T> t;
  t.pre = std::move(pre);
  return t;
}

template <class T, class MkTerm>
Terms<T> idem_sum(const Point<T>& pt, const IdemGroup& g, MkTerm mk) {
  Terms<T> out;
  for (const Point<T>& inst : expand_idem(pt, g)) out.push_back(mk(inst));
  return out;
}

inline IdemGroup tail_group(const std::string& head, const char* base, int lo, int hi) {
  IdemGroup g{head, {}};
  for (int i = lo; i <= hi; ++i) g.tail.push_back(idx(base, i));
  return g;
}

template <class T>
Constraint<T> equals_one(std::string name, T value) {
  return Constraint<T>{std::move(name), Constraint<T>::EqualsOne, std::move(value)};
}

template <class T>
Constraint<T> mod_lt_one(std::string name, T value) {
  return Constraint<T>{std::move(name), Constraint<T>::ModulusLtOne, std::move(value)};
}

inline Shape default_shape(Rng& g, const ShapeRanges& R) {
  Shape sh;
  if (R.r.used) sh.r = g.uniform_int(R.r.lo, R.r.hi);
  if (R.s.used) sh.s = g.uniform_int(R.s.lo, R.s.hi);
  if (R.N.used) sh.N = g.uniform_int(R.N.lo, R.N.hi);
  if (R.n.used) sh.n = g.uniform_int(R.n.lo, R.n.hi);
  if (R.m.used)
    for (int i = 0; i < sh.s; ++i) sh.m.push_back(g.uniform_int(R.m.lo, R.m.hi));
  return sh;
}

inline CDouble sample_q(Rng& g) { return g.annulus(0.18, 0.5); }

// Termination predicate on the leading LHS series of an identity: a
// unilateral series must terminate above, a bilateral one on both sides.
template <class Impl, class T>
bool lead_series_terminates(const Point<T>& pt, const Shape& sh, EvalCtx<T>& cx) {
  Terms<T> terms = Impl::template lhs<T>(pt, sh, cx);
  if (terms.empty() || !terms[0].series) return false;
  return std::visit(
      [&](const auto& s) {
        Termination t = detect_termination(s, cx);
        if (s.kind == SeriesKind::Unilateral) return t.above.has_value();
        return t.above.has_value() && t.below.has_value();
      },
      *terms[0].series);
}

// ---------------------------------------------------------------------------
// Type-erasing glue
// ---------------------------------------------------------------------------

template <class Impl, class T>
IdentityOps<T> make_ops() {
  IdentityOps<T> ops;
  ops.complete = [](const PointRecord& pr, EvalCtx<T>& cx) {
    Point<T> pt = promote_point<T>(pr);
    Impl::template derive<T>(pt, pr.shape, cx);
    return pt;
  };
  ops.lhs = [](const Point<T>& pt, const Shape& sh, EvalCtx<T>& cx) {
    return Impl::template lhs<T>(pt, sh, cx);
  };
  ops.rhs = [](const Point<T>& pt, const Shape& sh, EvalCtx<T>& cx) {
    return Impl::template rhs<T>(pt, sh, cx);
  };
  ops.constraints = [](const Point<T>& pt, const Shape& sh, EvalCtx<T>& cx) {
    return Impl::template constraints<T>(pt, sh, cx);
  };
  ops.terminates = [](const Point<T>& pt, const Shape& sh, EvalCtx<T>& cx) {
    return lead_series_terminates<Impl, T>(pt, sh, cx);
  };
  return ops;
}

template <class Impl>
Identity make_identity() {
  Identity I;
  I.meta = Impl::meta();
  I.param_names = [](const Shape& sh) { return Impl::params(sh); };
  I.sample_shape = [](Rng& g, const ShapeRanges& R) { return default_shape(g, R); };
  I.sample_params = [](Rng& g, const Shape& sh, PointD& pt) { Impl::sample(g, sh, pt); };
  if constexpr (requires(Rng& g, const Shape& sh, PointX& pt) { Impl::sample_exact(g, sh, pt); }) {
    I.sample_params_exact = [](Rng& g, const Shape& sh, PointX& pt) {
      Impl::sample_exact(g, sh, pt);
    };
  }
  I.d = make_ops<Impl, CDouble>();
  I.b = make_ops<Impl, CBig>();
  I.x = make_ops<Impl, Rational>();
  return I;
}

void register_core(std::vector<Identity>&);
void register_slater(std::vector<Identity>&);
void register_ckm(std::vector<Identity>&);
void register_kernels(std::vector<Identity>&);

}  // namespace cat
}  // namespace qbil
