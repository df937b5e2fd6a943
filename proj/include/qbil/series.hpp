#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qbil/qpoch.hpp"

namespace qbil {

enum class SeriesKind { Unilateral, Bilateral };

// Plain series: sum over k of
//   prod (a_i;q)_k / prod (b_j;q)_k * ((-1)^k q^{C(k,2)})^e * z^k
// with e = 1+s-r and an implicit (q;q)_k denominator for unilateral series
// (k >= 0), e = s-r and no implicit factor for bilateral series (all k).
template <class T>
struct SeriesSpec {
  SeriesKind kind = SeriesKind::Unilateral;
  std::vector<T> upper;
  std::vector<T> lower;
  T z{};
};

// Very-well-poised series, held in sigma form: the classical +-sqrt(sigma)
// parameter pair is represented by the factor (1-sigma q^{2k})/(1-sigma), so
// no square root of a parameter is ever materialized. `lower` is normally
// sigma q / upper[i].
template <class T>
struct VWPSpec {
  SeriesKind kind = SeriesKind::Bilateral;
  T sigma{};
  std::vector<T> upper;
  std::vector<T> lower;
  T z{};
};

template <class T>
using AnySeries = std::variant<SeriesSpec<T>, VWPSpec<T>>;

struct Termination {
  // Terms vanish for k > above (an upper parameter equals q^{-above}).
  std::optional<long> above;
  // Terms vanish for k <= below (a bilateral lower parameter equals
  // q^{-below}; below is negative).
  std::optional<long> below;
};

struct SeriesDiag {
  long terms = 0;
  bool terminated = false;
  double last_term = 0.0;
};

template <class T>
struct TailCert {
  long K = 0;
  typename field_traits<T>::real rho{};    // certified bound on all term ratios past K
  typename field_traits<T>::real bound{};  // |sum_{k>K} t_k| <= bound
};

namespace detail {

template <class T>
Termination detect_termination_lists(const std::vector<T>& upper, const std::vector<T>& lower,
                                     SeriesKind kind, const EvalCtx<T>& cx) {
  Termination t;
  for (const T& a : upper) {
    auto n = match_neg_q_power(a, cx);
    if (n && (!t.above || *n < *t.above)) t.above = *n;
  }
  if (kind == SeriesKind::Bilateral) {
    for (const T& b : lower) {
      auto j = match_pos_q_power(b, cx, 1);
      if (j && (!t.below || -*j > *t.below)) t.below = -*j;
    }
  }
  return t;
}

// Forward-direction pole guard: a lower parameter q^{-j} makes terms with
// k > j undefined unless the series has died before reaching them.
template <class T>
void guard_forward_poles(const std::vector<T>& lower, std::optional<long> above,
                         const EvalCtx<T>& cx) {
  for (const T& b : lower) {
    auto j = match_neg_q_power(b, cx);
    if (!j) continue;
    if (!above || *above > *j) {
      if (above && *above == *j) continue;
      fail(errc::pole_in_term, "lower parameter q^-" + std::to_string(*j) +
                                   " hit inside summation range");
    }
    if (above && *above == *j + 1)
      fail(errc::indeterminate_product, "upper zero against lower pole at same index");
  }
}

// Backward-direction guard for bilateral series: an upper parameter q^{+j}
// makes term -j infinite unless a lower parameter q^{+j'} with j' < j has
// already annihilated that range; equal indices are indeterminate.
template <class T>
void guard_backward_poles(const std::vector<T>& upper, std::optional<long> below,
                          const EvalCtx<T>& cx) {
  long jb = below ? -*below : -1;  // terms vanish for k <= -jb
  for (const T& a : upper) {
    auto j = match_pos_q_power(a, cx, 1);
    if (!j) continue;
    if (jb < 0 || *j < jb)
      fail(errc::pole_in_term, "upper parameter q^+" + std::to_string(*j) +
                                   " gives a pole at negative index");
    if (*j == jb)
      fail(errc::indeterminate_product, "pole against zero at the same negative index");
  }
}

template <class T>
void note_series(EvalCtx<T>& cx, const SeriesDiag& sd) {
  if (!cx.diag) return;
  cx.diag->series_count++;
  cx.diag->total_terms += sd.terms;
  cx.diag->max_series_terms = std::max(cx.diag->max_series_terms, sd.terms);
  cx.diag->any_terminated = cx.diag->any_terminated || sd.terminated;
}

// Core summation loop. Terms are term(k) = core_k * extra(k) with
// core_{k+1} = core_k * ratio(k); `kend`, when set, is the last index (the
// loop then consumes exactly kend-k0+1 terms and applies no stopping rule).
template <class T, class Ratio, class Extra>
T sum_terms(T core0, long k0, std::optional<long> kend, Ratio&& ratio, Extra&& extra,
            EvalCtx<T>& cx, SeriesDiag& sd) {
  using FT = field_traits<T>;
  using R = typename FT::real;
  sd.terminated = kend.has_value();
  if (core0 == T(0)) {
    sd.terms = 1;
    return T(0);
  }
  T core = core0;
  T term = core * extra(k0);
  T sum = term;
  sd.terms = 1;
  if (kend && *kend == k0) {
    sd.last_term = FT::mag_to_double(mag(term));
    return sum;
  }
  R floor = cx.rtol(cx.opt.tol.zero_floor);
  R ttol = cx.rtol(cx.opt.tol.term_tol);
  R decay = cx.rtol(0.99);
  R prev_mag = mag(term);
  int consecutive_small = 0;
  for (long k = k0;; ++k) {
    if (kend && k >= *kend) break;
    if (sd.terms >= cx.opt.max_terms)
      fail(errc::non_convergent, "stopping rule unmet at max_terms");
    core *= ratio(k);
    term = core * extra(k + 1);
    sum += term;
    ++sd.terms;
    R tm = mag(term);
    if (!kend) {
      R pm = mag(sum);
      if (pm < floor) pm = floor;
      bool small = tm <= ttol * pm;
      bool decaying = prev_mag == R(0) || tm < decay * prev_mag;
      consecutive_small = (small && decaying) ? consecutive_small + 1 : 0;
      if (consecutive_small >= 3) {
        sd.last_term = FT::mag_to_double(tm);
        break;
      }
    }
    prev_mag = tm;
    sd.last_term = FT::mag_to_double(tm);
  }
  return sum;
}

template <class T>
void require_mod_below_one(const T& v, errc code, const char* what, const EvalCtx<T>& cx) {
  double m = field_traits<T>::mag_to_double(mag(v));
  (void)cx;
  if (!(m < 1.0 - 1e-12)) fail(code, std::string(what) + " violates |.| < 1");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// detect_termination
// ---------------------------------------------------------------------------

template <class T>
Termination detect_termination(const SeriesSpec<T>& s, const EvalCtx<T>& cx) {
  return detail::detect_termination_lists(s.upper, s.lower, s.kind, cx);
}

template <class T>
Termination detect_termination(const VWPSpec<T>& s, const EvalCtx<T>& cx) {
  return detail::detect_termination_lists(s.upper, s.lower, s.kind, cx);
}

// ---------------------------------------------------------------------------
// Unilateral evaluation
// ---------------------------------------------------------------------------

template <class T>
T eval_phi(const SeriesSpec<T>& s, EvalCtx<T>& cx, SeriesDiag* out = nullptr) {
  if (s.kind != SeriesKind::Unilateral) fail(errc::invalid_spec, "eval_phi needs a unilateral spec");
  SeriesDiag sd;
  long e = 1 + long(s.lower.size()) - long(s.upper.size());
  Termination t = detect_termination(s, cx);
  detail::guard_forward_poles(s.lower, t.above, cx);
  if (s.z == T(0)) {
    sd.terms = 1;
    sd.terminated = true;
    detail::note_series(cx, sd);
    if (out) *out = sd;
    return T(1);
  }
  if (!t.above) {
    if (e < 0) fail(errc::non_convergent, "series with negative exponent does not terminate");
    if (e == 0) detail::require_mod_below_one(s.z, errc::non_convergent, "argument", cx);
  }
  std::vector<T> aq = s.upper;
  std::vector<T> bq = s.lower;
  T qk1 = cx.q.q;  // q^{k+1}
  T qk(1);         // q^k
  auto ratio = [&](long) {
    T r = s.z;
    for (T& a : aq) {
      r *= (T(1) - a);
      a *= cx.q.q;
    }
    for (T& b : bq) {
      r /= (T(1) - b);
      b *= cx.q.q;
    }
    r /= (T(1) - qk1);
    if (e != 0) r *= pow_int(T(-qk), e);
    qk1 *= cx.q.q;
    qk *= cx.q.q;
    return r;
  };
  T value = detail::sum_terms(T(1), 0, t.above, ratio, [](long) { return T(1); }, cx, sd);
  detail::note_series(cx, sd);
  if (out) *out = sd;
  return value;
}

// ---------------------------------------------------------------------------
// Bilateral evaluation
// ---------------------------------------------------------------------------

// Spec for the k <= -1 part of a bilateral series, as a unilateral series
// plus the k = -1 base term: backward sum = base * eval_phi(tail_spec).
template <class T>
struct ReversedBilateral {
  SeriesSpec<T> tail_spec;
  T base{};
};

template <class T>
ReversedBilateral<T> reverse_bilateral(const SeriesSpec<T>& s, const EvalCtx<T>& cx) {
  if (s.kind != SeriesKind::Bilateral || s.upper.size() != s.lower.size())
    fail(errc::invalid_spec, "reversal needs a bilateral spec with r = s");
  if (s.z == T(0)) fail(errc::divergent_domain, "bilateral series with z = 0 diverges below");
  for (const T& a : s.upper) {
    auto j = match_pos_q_power(a, cx, 1);
    if (j) fail(errc::pole_in_term, "upper parameter q^+" + std::to_string(*j) + " in reversal");
  }
  ReversedBilateral<T> rev;
  T base = T(1) / s.z;
  T num(1), den(1);
  for (const T& b : s.lower) num *= (cx.q.q - b);
  for (const T& a : s.upper) den *= (cx.q.q - a);
  if (den == T(0)) fail(errc::pole_in_term, "upper parameter equals q in reversal");
  base *= num / den;
  rev.base = base;
  rev.tail_spec.kind = SeriesKind::Unilateral;
  T q2 = cx.q.q * cx.q.q;
  T w(1);
  for (const T& b : s.lower) {
    if (b == T(0)) fail(errc::invalid_spec, "cannot reverse a zero lower parameter");
    rev.tail_spec.upper.push_back(q2 / b);
    w *= b;
  }
  // Explicit upper q cancels the implicit (q;q)_k of the unilateral form.
  rev.tail_spec.upper.push_back(cx.q.q);
  for (const T& a : s.upper) {
    rev.tail_spec.lower.push_back(q2 / a);
    w /= a;
  }
  rev.tail_spec.z = w / s.z;
  return rev;
}

namespace detail {

// Backward part of a bilateral sum, iterated directly with the stable form
// (q^{j+1} - b)/(q^{j+1} - a) so nothing grows with j. An optional sigma
// folds the very-well-poised factor into the same recurrence.
template <class T>
T backward_sum(const std::vector<T>& upper, const std::vector<T>& lower, const T& z,
               const std::optional<T>& sigma, EvalCtx<T>& cx, SeriesDiag& sd) {
  // ratio check |B/(A z)| < 1 (for vwp specs the sigma pair contributes
  // q^{-2} against sigma^{-1}, already accounted by the closed form below).
  T A(1), B(1);
  for (const T& a : upper) A *= a;
  for (const T& b : lower) B *= b;
  if (sigma) {
    if (A == T(0)) fail(errc::divergent_domain, "vanishing parameter product");
    T edge = B / (A * z * cx.q.q * cx.q.q);
    require_mod_below_one(edge, errc::divergent_domain, "backward ratio", cx);
  } else {
    if (A == T(0)) fail(errc::divergent_domain, "vanishing upper parameter product");
    require_mod_below_one(T(B / (A * z)), errc::divergent_domain, "backward ratio", cx);
  }
  T base = T(1) / z;
  {
    T num(1), den(1);
    for (const T& b : lower) num *= (cx.q.q - b);
    for (const T& a : upper) den *= (cx.q.q - a);
    if (den == T(0)) fail(errc::pole_in_term, "upper parameter equals q");
    base *= num / den;
    if (sigma) {
      T q2 = cx.q.q * cx.q.q;
      T d = q2 * (T(1) - *sigma);
      if (d == T(0)) fail(errc::sigma_degenerate, "special parameter equals 1");
      base *= (q2 - *sigma) / d;
    }
  }
  T u = cx.q.q;       // q^{j+1}
  T w = cx.q.q * cx.q.q;  // q^{2j+2}, used by the sigma factor
  T q2 = cx.q.q * cx.q.q;
  auto ratio = [&](long) {
    u *= cx.q.q;
    T r = T(1) / z;
    for (size_t i = 0; i < lower.size(); ++i) r *= (u - lower[i]) / (u - upper[i]);
    if (sigma) {
      T wn = w * q2;
      r *= (*sigma - wn) / (q2 * (*sigma - w));
      w = wn;
    }
    return r;
  };
  return sum_terms(base, 0, std::nullopt, ratio, [](long) { return T(1); }, cx, sd);
}

}  // namespace detail

template <class T>
T eval_psi(const SeriesSpec<T>& s, EvalCtx<T>& cx, SeriesDiag* out = nullptr) {
  if (s.kind != SeriesKind::Bilateral) fail(errc::invalid_spec, "eval_psi needs a bilateral spec");
  if (s.upper.size() != s.lower.size())
    fail(errc::invalid_spec, "bilateral evaluation requires r = s");
  Termination t = detect_termination(s, cx);
  detail::guard_forward_poles(s.lower, t.above, cx);
  detail::guard_backward_poles(s.upper, t.below, cx);
  SeriesDiag sd;
  T total(0);

  long k_start = 0;
  if (t.below) {
    k_start = *t.below + 1;
  } else if (s.z == T(0)) {
    fail(errc::divergent_domain, "bilateral series with z = 0 diverges below");
  }
  if (!t.above) detail::require_mod_below_one(s.z, errc::divergent_domain, "argument", cx);

  // Forward part (from the lowest live index when terminating below). The
  // first term is built from pairwise (q^j - b)/(q^j - a) factors so that no
  // intermediate grows with the depth of the start index.
  {
    T first(1);
    if (k_start != 0) {
      T u(1);
      for (long j = 1; j <= -k_start; ++j) {
        u *= cx.q.q;
        for (size_t i = 0; i < s.upper.size(); ++i) {
          T d = u - s.upper[i];
          if (d == T(0)) fail(errc::pole_in_term, "pole at lowest live index");
          first *= (u - s.lower[i]) / d;
        }
      }
      first *= pow_int(s.z, k_start);
    }
    std::vector<T> aq(s.upper), bq(s.lower);
    for (T& a : aq) a *= cx.qpow(k_start);
    for (T& b : bq) b *= cx.qpow(k_start);
    auto ratio = [&](long) {
      T r = s.z;
      for (size_t i = 0; i < aq.size(); ++i) {
        r *= (T(1) - aq[i]) / (T(1) - bq[i]);
        aq[i] *= cx.q.q;
        bq[i] *= cx.q.q;
      }
      return r;
    };
    SeriesDiag fwd;
    total += detail::sum_terms(first, k_start, t.above, ratio, [](long) { return T(1); }, cx, fwd);
    sd.terms += fwd.terms;
    sd.terminated = fwd.terminated;
    sd.last_term = fwd.last_term;
  }

  // Backward part k <= k_start - 1 exists only without below-termination.
  if (!t.below) {
    SeriesDiag bwd;
    total += detail::backward_sum(s.upper, s.lower, s.z, std::optional<T>(), cx, bwd);
    sd.terms += bwd.terms;
  }
  detail::note_series(cx, sd);
  if (out) *out = sd;
  return total;
}

// ---------------------------------------------------------------------------
// Very-well-poised evaluation (sigma form)
// ---------------------------------------------------------------------------

template <class T>
T eval_vwp(const VWPSpec<T>& s, EvalCtx<T>& cx, SeriesDiag* out = nullptr) {
  if (s.upper.size() != s.lower.size())
    fail(errc::invalid_spec, "vwp spec needs matching upper/lower lists");
  // sigma = q^{-2k} makes the factor (1 - sigma q^{2k}) vanish inside the
  // summation range; for bilateral series the range also covers sigma = q^{2k}.
  if (auto n = match_neg_q_power(s.sigma, cx); n && *n % 2 == 0)
    fail(errc::sigma_degenerate, "special parameter is q^-2k");
  if (s.kind == SeriesKind::Bilateral) {
    if (auto j = match_pos_q_power(s.sigma, cx, 1); j && *j % 2 == 0)
      fail(errc::sigma_degenerate, "special parameter is q^+2k");
  }
  T one_minus_sigma = T(1) - s.sigma;
  {
    double m = field_traits<T>::mag_to_double(mag(one_minus_sigma)) /
               (1.0 + field_traits<T>::mag_to_double(mag(s.sigma)));
    if (m < cx.opt.degenerate_radius)
      fail(errc::sigma_degenerate, "special parameter too close to 1");
  }
  Termination t = detect_termination(s, cx);
  detail::guard_forward_poles(s.lower, t.above, cx);
  SeriesDiag sd;
  T total(0);

  if (s.kind == SeriesKind::Unilateral) {
    if (s.z == T(0)) {
      sd.terms = 1;
      sd.terminated = true;
      detail::note_series(cx, sd);
      if (out) *out = sd;
      return T(1);
    }
    if (!t.above) detail::require_mod_below_one(s.z, errc::non_convergent, "argument", cx);
    std::vector<T> aq(s.upper), bq(s.lower);
    T sq = s.sigma;  // sigma q^k
    T qk1 = cx.q.q;
    auto ratio = [&](long) {
      T r = s.z * (T(1) - sq) / (T(1) - qk1);
      for (size_t i = 0; i < aq.size(); ++i) {
        r *= (T(1) - aq[i]) / (T(1) - bq[i]);
        aq[i] *= cx.q.q;
        bq[i] *= cx.q.q;
      }
      sq *= cx.q.q;
      qk1 *= cx.q.q;
      return r;
    };
    T sq2k = s.sigma;  // sigma q^{2k}
    T q2 = cx.q.q * cx.q.q;
    auto extra = [&, first = true](long) mutable {
      if (first) {
        first = false;
        return T(1);
      }
      sq2k *= q2;
      return T((T(1) - sq2k) / one_minus_sigma);
    };
    total = detail::sum_terms(T(1), 0, t.above, ratio, extra, cx, sd);
    detail::note_series(cx, sd);
    if (out) *out = sd;
    return total;
  }

  // Bilateral.
  detail::guard_backward_poles(s.upper, t.below, cx);
  long k_start = 0;
  if (t.below)
    k_start = *t.below + 1;
  else if (s.z == T(0))
    fail(errc::divergent_domain, "bilateral series with z = 0 diverges below");
  if (!t.above) detail::require_mod_below_one(s.z, errc::divergent_domain, "argument", cx);

  {
    T first(1);
    if (k_start != 0) {
      T u(1);
      for (long j = 1; j <= -k_start; ++j) {
        u *= cx.q.q;
        for (size_t i = 0; i < s.upper.size(); ++i) {
          T d = u - s.upper[i];
          if (d == T(0)) fail(errc::pole_in_term, "pole at lowest live index");
          first *= (u - s.lower[i]) / d;
        }
      }
      first *= pow_int(s.z, k_start);
      first *= (T(1) - s.sigma * cx.qpow(2 * k_start)) / one_minus_sigma;
    }
    std::vector<T> aq(s.upper), bq(s.lower);
    for (T& a : aq) a *= cx.qpow(k_start);
    for (T& b : bq) b *= cx.qpow(k_start);
    T q2 = cx.q.q * cx.q.q;
    T sq2k = s.sigma * cx.qpow(2 * k_start);  // sigma q^{2k}
    auto ratio = [&](long) {
      T next = sq2k * q2;
      T r = s.z * (T(1) - next) / (T(1) - sq2k);
      sq2k = next;
      for (size_t i = 0; i < aq.size(); ++i) {
        r *= (T(1) - aq[i]) / (T(1) - bq[i]);
        aq[i] *= cx.q.q;
        bq[i] *= cx.q.q;
      }
      return r;
    };
    SeriesDiag fwd;
    total += detail::sum_terms(first, k_start, t.above, ratio, [](long) { return T(1); }, cx, fwd);
    sd.terms += fwd.terms;
    sd.terminated = fwd.terminated;
    sd.last_term = fwd.last_term;
  }
  if (!t.below) {
    SeriesDiag bwd;
    total += detail::backward_sum(s.upper, s.lower, s.z, std::optional<T>(s.sigma), cx, bwd);
    sd.terms += bwd.terms;
  }
  detail::note_series(cx, sd);
  if (out) *out = sd;
  return total;
}

template <class T>
T eval_series(const AnySeries<T>& s, EvalCtx<T>& cx, SeriesDiag* out = nullptr) {
  if (std::holds_alternative<VWPSpec<T>>(s)) return eval_vwp(std::get<VWPSpec<T>>(s), cx, out);
  const SeriesSpec<T>& p = std::get<SeriesSpec<T>>(s);
  return p.kind == SeriesKind::Unilateral ? eval_phi(p, cx, out) : eval_psi(p, cx, out);
}

// ---------------------------------------------------------------------------
// Certified geometric tail bounds
// ---------------------------------------------------------------------------

enum class TailSide { Forward, Backward };

// Certified bound for the tail past index K (forward: k > K with K >= 0;
// backward: k < -K with K >= 1, i.e. |t_{-K}| is the anchor term). rho
// majorizes every subsequent term ratio; both are exact in the rational
// tower, so the certificate is rigorous there.
template <class T>
TailCert<T> tail_bound(const SeriesSpec<T>& s, long K, const EvalCtx<T>& cx,
                       TailSide side = TailSide::Forward,
                       const std::optional<T>& sigma = std::nullopt) {
  using FT = field_traits<T>;
  using R = typename FT::real;
  auto rmag = [](const T& v) { return FT::mag(v); };
  R one(1);
  R rho;
  if (side == TailSide::Forward) {
    if (K < 0) fail(errc::invalid_spec, "forward tail anchor must be >= 0");
    R qK = pow_int(cx.q.absq, K);
    R qK1 = qK * cx.q.absq;
    rho = rmag(s.z);
    for (const T& a : s.upper) rho *= one + rmag(a) * qK;
    for (const T& b : s.lower) {
      R d = one - rmag(b) * qK1;
      if (!(d > 0)) fail(errc::no_contraction, "lower parameter too large at cut index");
      rho /= d;
    }
    if (s.kind == SeriesKind::Unilateral) {
      R d = one - pow_int(cx.q.absq, K + 1);
      rho /= d;
    }
    if (sigma) {
      R s2 = rmag(*sigma);
      R q2K = qK * qK;
      R d = one - s2 * q2K;
      if (!(d > 0)) fail(errc::no_contraction, "special parameter too large at cut index");
      rho *= (one + s2 * q2K * cx.q.absq * cx.q.absq) / d;
    }
  } else {
    if (K < 1) fail(errc::invalid_spec, "backward tail anchor must be >= 1");
    if (s.upper.size() != s.lower.size())
      fail(errc::invalid_spec, "backward tail needs r = s");
    R qK1 = pow_int(cx.q.absq, K + 1);
    rho = one / rmag(s.z);
    for (size_t i = 0; i < s.upper.size(); ++i) {
      R d = rmag(s.upper[i]) - qK1;
      if (!(d > 0)) fail(errc::no_contraction, "upper parameter too small at cut index");
      rho *= (rmag(s.lower[i]) + qK1) / d;
    }
    if (sigma) {
      R q2 = cx.q.absq * cx.q.absq;
      R q2K = pow_int(cx.q.absq, 2 * K);
      R d = rmag(*sigma) - q2K;
      if (!(d > 0)) fail(errc::no_contraction, "special parameter too small at cut index");
      rho *= (rmag(*sigma) + q2K * q2) / (q2 * d);
    }
  }
  if (!(rho < one)) fail(errc::no_contraction, "no contracting ratio at requested cut");
  // |t_K| computed directly.
  long k = side == TailSide::Forward ? K : -K;
  Ext<T> num = qpoch_multi(s.upper, cx, k);
  Ext<T> den = qpoch_multi(s.lower, cx, k);
  if (s.kind == SeriesKind::Unilateral) den *= qpoch(cx.q.q, cx, k);
  Ext<T> v = num / den;
  if (v.pole) fail(errc::pole_in_term, "pole at tail anchor");
  R tK = rmag(T(v.v * pow_int(s.z, k)));
  if (sigma) {
    T f = (T(1) - *sigma * cx.qpow(2 * k)) / (T(1) - *sigma);
    tK *= rmag(f);
  }
  TailCert<T> cert;
  cert.K = K;
  cert.rho = rho;
  cert.bound = tK * rho / (one - rho);
  return cert;
}

template <class T>
TailCert<T> tail_bound(const VWPSpec<T>& s, long K, const EvalCtx<T>& cx,
                       TailSide side = TailSide::Forward) {
  SeriesSpec<T> plain;
  plain.kind = s.kind;
  plain.upper = s.upper;
  plain.lower = s.lower;
  plain.z = s.z;
  return tail_bound(plain, K, cx, side, std::optional<T>(s.sigma));
}

}  // namespace qbil
