#include "qbil/verify.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "qbil/interval.hpp"

namespace qbil {

namespace {

using clock_t_ = std::chrono::steady_clock;

double ms_since(clock_t_::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_t_::now() - t0).count();
}

template <class T>
constexpr Tower tower_of() {
  if constexpr (std::is_same_v<T, CDouble>)
    return Tower::Double;
  else if constexpr (std::is_same_v<T, CBig>)
    return Tower::Big;
  else
    return Tower::Exact;
}

template <class T>
std::string format_value(const T& v, unsigned digits) {
  if constexpr (std::is_same_v<T, CDouble>) {
    (void)digits;
    return format_double(v.re) + (v.im < 0 ? "" : "+") + format_double(v.im) + "i";
  } else if constexpr (std::is_same_v<T, CBig>) {
    return to_string(v.re, digits) + (v.im < 0 ? "" : "+") + to_string(v.im, digits) + "i";
  } else {
    (void)digits;
    return v.str();
  }
}

template <class T>
QBase<T> base_of(const PointRecord& pr) {
  if constexpr (field_traits<T>::exact) {
    if (!pr.xp) fail(errc::illegal_demotion, "exact tower requires an exact point");
    return QBase<T>((*pr.xp)["q"]);
  } else {
    if (pr.xp) return QBase<T>(field_traits<T>::from_rational((*pr.xp)["q"]));
    const CDouble& q = pr.fp["q"];
    return QBase<T>(field_traits<T>::from_parts(q.re, q.im));
  }
}

template <class T>
EvalOptions eval_options(const CheckOptions& o) {
  EvalOptions eo;
  eo.tol = Tolerance::for_tower(tower_of<T>(), o.big_digits);
  eo.max_terms = o.max_terms;
  eo.big_digits = o.big_digits;
  return eo;
}

// Constraint evaluation shared by checking and sampling. With `margin` set
// (sampling), inequalities must hold with |value| <= margin and are never
// waived by termination.
template <class T>
bool evaluate_constraints(const Identity& I, const Point<T>& pt, const Shape& sh, EvalCtx<T>& cx,
                          std::vector<ConstraintResult>* out, double margin = 0.0) {
  const auto& ops = I.ops<T>();
  std::vector<Constraint<T>> cons = ops.constraints(pt, sh, cx);
  bool terminating = margin == 0.0 && ops.terminates(pt, sh, cx);
  bool pass = true;
  for (const auto& c : cons) {
    ConstraintResult r;
    r.name = c.name;
    if (c.kind == Constraint<T>::EqualsOne) {
      r.equality = true;
      if constexpr (field_traits<T>::exact) {
        r.satisfied = c.value == T(1);
        r.magnitude = r.satisfied ? 0.0 : 1.0;
      } else {
        double d = field_traits<T>::mag_to_double(mag(T(c.value - T(1))));
        r.magnitude = d;
        r.satisfied = d <= 1e-12 * (1.0 + field_traits<T>::mag_to_double(mag(c.value)));
      }
    } else {
      double m = field_traits<T>::mag_to_double(mag(c.value));
      r.magnitude = m;
      double limit = margin > 0.0 ? margin : 1.0 - 1e-12;
      r.satisfied = m < limit;
      if (!r.satisfied && terminating) {
        r.satisfied = true;
        r.waived_by_termination = true;
      }
    }
    pass = pass && r.satisfied;
    if (out) out->push_back(std::move(r));
  }
  return pass;
}

template <class T>
void run_check(const Identity& I, const PointRecord& pr, const CheckOptions& o,
               VerificationReport& rep) {
  if constexpr (std::is_same_v<T, CBig>) set_big_digits(o.big_digits);
  Diag diag;
  EvalCtx<T> cx(base_of<T>(pr), eval_options<T>(o), &diag);
  const auto& ops = I.ops<T>();
  Point<T> pt = ops.complete(pr, cx);
  bool cons_ok = evaluate_constraints(I, pt, pr.shape, cx, &rep.constraint_results);
  if (!cons_ok) {
    rep.status = Status::CONSTRAINT_VIOLATION;
    rep.diagnostics = diag;
    return;
  }
  T lhs = eval_terms(ops.lhs(pt, pr.shape, cx), cx);
  T rhs = eval_terms(ops.rhs(pt, pr.shape, cx), cx);
  rep.lhs = format_value(lhs, o.big_digits);
  rep.rhs = format_value(rhs, o.big_digits);
  using FT = field_traits<T>;
  using R = typename FT::real;
  R absr = mag(T(lhs - rhs));
  R den = std::max(mag(lhs), mag(rhs));
  R floor = FT::real_from_double(cx.opt.tol.zero_floor);
  if (den < floor) den = floor;
  rep.abs_residual = FT::mag_to_double(absr);
  rep.rel_residual = FT::mag_to_double(R(absr / den));
  rep.diagnostics = diag;
  if constexpr (field_traits<T>::exact) {
    rep.status = (lhs == rhs) ? Status::PASS : Status::FAIL;
  } else {
    double tol = o.residual_tol ? *o.residual_tol : tolerance_for(I, tower_of<T>());
    rep.status = rep.rel_residual < tol ? Status::PASS : Status::FAIL;
  }
}

// Quick double-tower evaluability probe used by rejection sampling.
bool dry_run(const Identity& I, const PointRecord& pr, const CheckOptions& o) {
  try {
    if (pr.xp) {
      CheckOptions ox = o;
      ox.max_terms = o.max_terms;
      Diag diag;
      EvalCtx<Rational> cx(base_of<Rational>(pr), eval_options<Rational>(ox), &diag);
      Point<Rational> pt = I.x.complete(pr, cx);
      if (!evaluate_constraints(I, pt, pr.shape, cx, nullptr, 0.9)) return false;
      (void)eval_terms(I.x.lhs(pt, pr.shape, cx), cx);
      (void)eval_terms(I.x.rhs(pt, pr.shape, cx), cx);
      return true;
    }
    Diag diag;
    EvalCtx<CDouble> cx(base_of<CDouble>(pr), eval_options<CDouble>(o), &diag);
    Point<CDouble> pt = I.d.complete(pr, cx);
    if (!evaluate_constraints(I, pt, pr.shape, cx, nullptr, 0.9)) return false;
    (void)eval_terms(I.d.lhs(pt, pr.shape, cx), cx);
    (void)eval_terms(I.d.rhs(pt, pr.shape, cx), cx);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ShapeRanges capped_ranges(const Identity& I, const CheckOptions& o) {
  ShapeRanges r = I.meta.shape;
  if (r.r.used) r.r.hi = std::min(r.r.hi, o.r_max);
  if (r.s.used) r.s.hi = std::min(r.s.hi, o.s_max);
  if (r.m.used) r.m.hi = std::min(r.m.hi, o.m_max);
  if (r.r.used) r.r.lo = std::min(r.r.lo, r.r.hi);
  if (r.s.used) r.s.lo = std::min(r.s.lo, r.s.hi);
  if (r.m.used) r.m.lo = std::min(r.m.lo, r.m.hi);
  return r;
}

}  // namespace

double tolerance_for(const Identity& I, Tower t) {
  const std::string& id = I.meta.id;
  auto is = [&](const char* s) { return id == s; };
  if (t == Tower::Exact) return 0.0;
  if (t == Tower::Big) {
    // Criteria thresholds for the deep identities; the shallow classical
    // sums are held to near-arithmetic accuracy.
    if (is("ramanujan_1psi1")) return 1e-40;
    if (is("q_binomial") || is("q_binomial_terminating") || is("pfaff_saalschutz") ||
        is("heine_euler") || is("rogers_6phi5") || is("jackson_8phi7") ||
        is("pfaff_saalschutz_nt") || is("bailey_6psi6"))
      return 1e-38;
    if (is("bailey_8phi7_nt") || is("bailey_8phi7_tf")) return 1e-10;
    if (is("mjackson_8psi8") || is("tenpsi10")) return 1e-9;
    if (is("slater_vwp_2r") || is("slater_wp_2r") || is("slater_wp_2r_general")) return 1e-8;
    if (is("slater_rpsir")) return 1e-9;
    if (is("slater_rpsir_general") || is("slater_rpsir_general_rev")) return 1e-8;
    if (is("kernel_key1") || is("kernel_87ntgl2") || is("kernel_key32")) return 1e-11;
    return 1e-9;  // Chu-type suite
  }
  // double tower
  if (is("q_binomial") || is("q_binomial_terminating") || is("ramanujan_1psi1") ||
      is("pfaff_saalschutz") || is("heine_euler"))
    return 1e-12;
  if (is("pfaff_saalschutz_nt")) return 1e-11;
  if (is("rogers_6phi5") || is("bailey_6psi6") || is("jackson_8phi7")) return 1e-10;
  if (is("kernel_key1") || is("kernel_87ntgl2") || is("kernel_key32")) return 1e-8;
  return 1e-6;
}

Tower pick_tower(const Identity& I, const CheckOptions& o) {
  return o.tower_forced ? o.tower : I.meta.recommended;
}

PointRecord sample_point(const Identity& I, uint64_t seed, uint64_t index,
                         const CheckOptions& o) {
  Rng g(mix_seed(seed, I.meta.id, index));
  ShapeRanges ranges = capped_ranges(I, o);
  bool exact = pick_tower(I, o) == Tower::Exact;
  if (exact && !I.sample_params_exact)
    fail(errc::exact_infinite_product,
         "identity '" + I.meta.id + "' has no exact-rational sampler");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PointRecord pr;
    pr.shape = o.shape ? *o.shape : I.sample_shape(g, ranges);
    if (exact) {
      PointX px;
      I.sample_params_exact(g, pr.shape, px);
      pr.xp = std::move(px);
    } else {
      I.sample_params(g, pr.shape, pr.fp);
    }
    if (dry_run(I, pr, o)) return pr;
  }
  fail(errc::sampling_exhausted, "no admissible point after 1000 attempts");
}

VerificationReport check_identity(const Identity& I, const PointRecord& pr,
                                  const CheckOptions& o) {
  VerificationReport rep;
  rep.identity = I.meta.id;
  rep.point = pr;
  rep.tower = pick_tower(I, o);
  auto t0 = clock_t_::now();
  try {
    switch (rep.tower) {
      case Tower::Double: run_check<CDouble>(I, pr, o, rep); break;
      case Tower::Big: run_check<CBig>(I, pr, o, rep); break;
      case Tower::Exact: run_check<Rational>(I, pr, o, rep); break;
    }
  } catch (const Error& e) {
    rep.error = errc_name(e.code());
    rep.status = e.code() == errc::degenerate_point ? Status::DEGENERATE : Status::ERROR;
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

SweepResult sweep(const Identity& I, long n_points, uint64_t seed, const CheckOptions& o) {
  if (n_points < 1) fail(errc::invalid_spec, "sweep needs at least one point");
  auto t0 = clock_t_::now();
  SweepResult res;
  res.reports.resize(size_t(n_points));
  long workers = o.workers > 0 ? o.workers : long(std::thread::hardware_concurrency());
  workers = std::max<long>(1, std::min<long>(workers, n_points));
  std::atomic<long> next{0};
  auto work = [&] {
    set_big_digits(o.big_digits);
    for (;;) {
      long i = next.fetch_add(1);
      if (i >= n_points) return;
      VerificationReport rep;
      try {
        PointRecord pr = sample_point(I, seed, uint64_t(i), o);
        rep = check_identity(I, pr, o);
      } catch (const Error& e) {
        rep.identity = I.meta.id;
        rep.status = Status::SKIP;
        rep.error = errc_name(e.code());
      }
      rep.seed = seed;
      rep.index = i;
      res.reports[size_t(i)] = std::move(rep);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  SweepSummary& s = res.summary;
  s.identity = I.meta.id;
  s.n_points = n_points;
  for (const auto& r : res.reports) {
    if (r.status == Status::PASS) {
      s.pass++;
      s.max_residual = std::max(s.max_residual, r.rel_residual);
    } else if (r.status == Status::FAIL) {
      s.fail++;
      s.max_residual = std::max(s.max_residual, r.rel_residual);
    } else {
      s.skip++;
    }
  }
  s.wall_s = ms_since(t0) / 1e3;
  return res;
}

std::vector<VerificationReport> check_kernel(const Identity& I, int n_lo, int n_hi,
                                             const PointRecord& base, const CheckOptions& o) {
  if (n_lo > n_hi) fail(errc::invalid_spec, "empty kernel index range");
  std::vector<VerificationReport> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    PointRecord pr = base;
    pr.shape.n = n;
    VerificationReport rep = check_identity(I, pr, o);
    rep.index = n;
    out.push_back(std::move(rep));
  }
  return out;
}

VerificationReport check_exact_terminating(const Identity& I, const PointRecord& pr,
                                           const CheckOptions& o) {
  CheckOptions ox = o;
  ox.tower = Tower::Exact;
  ox.tower_forced = true;
  return check_identity(I, pr, ox);
}

// ---------------------------------------------------------------------------
// Certified verification
// ---------------------------------------------------------------------------

namespace {

// Exact partial sum of the first `count` backward terms t_{-1} .. t_{-count}.
Rational backward_partial(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                          const Rational& z, const std::optional<Rational>& sigma, long count,
                          EvalCtx<Rational>& cx) {
  const Rational& q = cx.q.q;
  Rational base = Rational(1) / z;
  {
    Rational num(1), den(1);
    for (const Rational& b : lower) num *= (q - b);
    for (const Rational& a : upper) den *= (q - a);
    if (den == 0) fail(errc::pole_in_term, "upper parameter equals q");
    base *= num / den;
    if (sigma) {
      Rational q2 = q * q;
      Rational d = q2 * (Rational(1) - *sigma);
      if (d == 0) fail(errc::sigma_degenerate, "special parameter equals 1");
      base *= (q2 - *sigma) / d;
    }
  }
  Rational sum = base;
  Rational term = base;
  Rational u = q;
  Rational w = q * q;
  Rational q2 = q * q;
  for (long j = 1; j < count; ++j) {
    u *= q;
    Rational r = Rational(1) / z;
    for (size_t i = 0; i < lower.size(); ++i) r *= (u - lower[i]) / (u - upper[i]);
    if (sigma) {
      Rational wn = w * q2;
      r *= (*sigma - wn) / (q2 * (*sigma - w));
      w = wn;
    }
    term *= r;
    sum += term;
  }
  return sum;
}

Rational forward_partial(const SeriesSpec<Rational>& s, const std::optional<Rational>& sigma,
                         long K, EvalCtx<Rational>& cx) {
  const Rational& q = cx.q.q;
  std::vector<Rational> aq = s.upper, bq = s.lower;
  Rational qk1 = q;
  Rational sum(1), core(1);
  Rational sq2k = sigma ? *sigma : Rational(0);
  Rational q2 = q * q;
  for (long k = 0; k < K; ++k) {
    Rational r = s.z;
    for (size_t i = 0; i < aq.size(); ++i) {
      r *= (Rational(1) - aq[i]);
      aq[i] *= q;
    }
    for (size_t i = 0; i < bq.size(); ++i) {
      Rational d = Rational(1) - bq[i];
      if (d == 0) fail(errc::pole_in_term, "pole in certified partial sum");
      r /= d;
      bq[i] *= q;
    }
    if (s.kind == SeriesKind::Unilateral) {
      r /= (Rational(1) - qk1);
      qk1 *= q;
    }
    if (sigma) {
      Rational next = sq2k * q2;
      Rational d = Rational(1) - sq2k;
      if (d == 0) fail(errc::sigma_degenerate, "vanishing vwp factor in partial sum");
      r *= (Rational(1) - next) / d;
      sq2k = next;
    }
    core *= r;
    sum += core;
  }
  return sum;
}

struct CertSeries {
  RatInterval value;
  long cut_fwd = 0, cut_bwd = 0;
};

CertSeries certify_series(const AnySeries<Rational>& any, EvalCtx<Rational>& cx,
                          const Rational& tail_target) {
  SeriesSpec<Rational> plain;
  std::optional<Rational> sigma;
  if (std::holds_alternative<VWPSpec<Rational>>(any)) {
    const auto& v = std::get<VWPSpec<Rational>>(any);
    plain.kind = v.kind;
    plain.upper = v.upper;
    plain.lower = v.lower;
    plain.z = v.z;
    sigma = v.sigma;
  } else {
    plain = std::get<SeriesSpec<Rational>>(any);
  }
  auto find_cut = [&](TailSide side) {
    for (long K = 8; K <= 65536; K *= 2) {
      try {
        TailCert<Rational> cert = tail_bound(plain, K, cx, side, sigma);
        if (cert.bound <= tail_target) return cert;
      } catch (const Error& e) {
        if (e.code() != errc::no_contraction) throw;
      }
    }
    fail(errc::no_contraction, "no certified tail cut found");
  };
  CertSeries out;
  TailCert<Rational> fwd = find_cut(TailSide::Forward);
  out.cut_fwd = fwd.K;
  Rational value = forward_partial(plain, sigma, fwd.K, cx);
  RatInterval iv = RatInterval(value) + RatInterval(-fwd.bound, fwd.bound);
  if (plain.kind == SeriesKind::Bilateral) {
    TailCert<Rational> bwd = find_cut(TailSide::Backward);
    out.cut_bwd = bwd.K;
    Rational bval = backward_partial(plain.upper, plain.lower, plain.z, sigma, bwd.K, cx);
    iv = iv + RatInterval(bval) + RatInterval(-bwd.bound, bwd.bound);
  }
  out.value = iv;
  return out;
}

RatInterval certify_side(const Terms<Rational>& terms, EvalCtx<Rational>& cx,
                         const Rational& slack, const Rational& tail_target, long& cut_fwd,
                         long& cut_bwd, long& product_cut) {
  RatInterval total{Rational(0)};
  for (const auto& t : terms) {
    if (t.custom) fail(errc::invalid_spec, "identity is not certifiable");
    RatInterval pre = eval_prefactor_interval(t.pre, cx, slack);
    long pj = 0;
    for (const auto& e : t.pre.num)
      if (e.inf) pj++;
    product_cut = std::max(product_cut, pj);
    if (t.series) {
      CertSeries s = certify_series(*t.series, cx, tail_target);
      cut_fwd = std::max(cut_fwd, s.cut_fwd);
      cut_bwd = std::max(cut_bwd, s.cut_bwd);
      total = total + pre * s.value;
    } else {
      total = total + pre;
    }
  }
  return total;
}

}  // namespace

VerificationReport certify(const Identity& I, const PointRecord& pr, const Rational& eps,
                           const CheckOptions& o) {
  VerificationReport rep;
  rep.identity = I.meta.id;
  rep.point = pr;
  rep.tower = Tower::Exact;
  auto t0 = clock_t_::now();
  try {
    if (eps <= 0) fail(errc::certification_too_tight, "eps must be strictly positive");
    if (!pr.xp) fail(errc::illegal_demotion, "certification requires an exact rational point");
    CheckOptions ox = o;
    Diag diag;
    EvalOptions eo = eval_options<Rational>(ox);
    EvalCtx<Rational> cx(base_of<Rational>(pr), eo, &diag);
    Point<Rational> pt = I.x.complete(pr, cx);
    if (!evaluate_constraints(I, pt, pr.shape, cx, &rep.constraint_results)) {
      rep.status = Status::CONSTRAINT_VIOLATION;
      return rep;
    }
    Rational slack = eps / 1024;
    Rational tail_target = eps / 64;
    for (int round = 0; round < 4; ++round) {
      CertSummary cert;
      cert.eps = eps.convert_to<double>();
      long pcut = 0;
      RatInterval L = certify_side(I.x.lhs(pt, pr.shape, cx), cx, slack, tail_target,
                                   cert.forward_cut, cert.backward_cut, pcut);
      RatInterval R = certify_side(I.x.rhs(pt, pr.shape, cx), cx, slack, tail_target,
                                   cert.forward_cut, cert.backward_cut, pcut);
      cert.product_cut = pcut;
      Rational gap = interval_gap(L, R);
      cert.gap = gap.convert_to<double>();
      rep.lhs = ((L.lo + L.hi) / 2).str();
      rep.rhs = ((R.lo + R.hi) / 2).str();
      rep.abs_residual = cert.gap;
      rep.rel_residual = cert.gap;
      if (gap <= eps) {
        cert.certified = true;
        rep.certificate = cert;
        rep.status = Status::PASS;
        rep.wall_ms = ms_since(t0);
        return rep;
      }
      slack /= 100000;
      tail_target /= 100000;
      rep.certificate = cert;
    }
    fail(errc::certification_too_tight, "could not certify the requested enclosure");
  } catch (const Error& e) {
    rep.error = errc_name(e.code());
    rep.status = e.code() == errc::degenerate_point ? Status::DEGENERATE : Status::ERROR;
  }
  rep.wall_ms = ms_since(t0);
  return rep;
}

double check_specialization(const SpecializationMap& map, uint64_t seed, const CheckOptions& o) {
  const Identity& S = find_identity(map.source_id);
  const Identity& Tg = find_identity(map.target_id);
  Rng g(mix_seed(seed, map.source_id + ":" + map.name, 0));
  for (int attempt = 0; attempt < 200; ++attempt) {
    PointRecord src, tgt;
    map.generate(g, src, tgt);
    if (!dry_run(S, src, o) || !dry_run(Tg, tgt, o)) continue;
    auto eval_side = [&](const Identity& I, const PointRecord& pr, bool lhs_side) {
      CheckOptions oo = o;
      oo.tower_forced = true;
      if (oo.tower == Tower::Exact) fail(errc::invalid_spec, "maps are float-tower checks");
      if (oo.tower == Tower::Big) set_big_digits(oo.big_digits);
      if (oo.tower == Tower::Double) {
        Diag diag;
        EvalCtx<CDouble> cx(base_of<CDouble>(pr), eval_options<CDouble>(oo), &diag);
        Point<CDouble> pt = I.d.complete(pr, cx);
        CDouble v = eval_terms(lhs_side ? I.d.lhs(pt, pr.shape, cx) : I.d.rhs(pt, pr.shape, cx),
                               cx);
        return Scalar(v);
      }
      Diag diag;
      EvalCtx<CBig> cx(base_of<CBig>(pr), eval_options<CBig>(oo), &diag);
      Point<CBig> pt = I.b.complete(pr, cx);
      CBig v =
          eval_terms(lhs_side ? I.b.lhs(pt, pr.shape, cx) : I.b.rhs(pt, pr.shape, cx), cx);
      return Scalar(v);
    };
    try {
      Tolerance tol = Tolerance::for_tower(o.tower == Tower::Big ? Tower::Big : Tower::Double,
                                           o.big_digits);
      tol.residual_tol = 0.5;  // we only want the residual value here
      double worst = 0.0;
      worst = std::max(worst,
                       approx_eq(eval_side(S, src, true), eval_side(Tg, tgt, true), tol).residual);
      worst = std::max(
          worst, approx_eq(eval_side(S, src, false), eval_side(Tg, tgt, false), tol).residual);
      return worst;
    } catch (const Error&) {
      continue;
    }
  }
  fail(errc::sampling_exhausted, "no admissible specialization sample");
}

}  // namespace qbil
