// Bilateral identities of Chu-Gasper-Karlsson-Minton type: series carrying
// paired parameters h q^m over h with nonnegative integer offsets m, plus
// their well-poised and very-well-poised extensions and the factored 2psi2
// evaluations.

#include "catalog_impl.hpp"

namespace qbil {
namespace cat {
namespace {

template <class T>
void append_ckm_pairs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx, std::vector<T>& upper,
                      std::vector<T>& lower) {
  // upper gains h_i q^{m_i}, lower gains h_i
  for (int i = 1; i <= sh.s; ++i) {
    const T& h = P[idx("h", i)];
    upper.push_back(h * cx.qpow(sh.m[size_t(i - 1)]));
    lower.push_back(h);
  }
}

template <class T>
PochRatio<T>& ckm_offset_factors(PochRatio<T>& pre, const Point<T>& P, const Shape& sh,
                                 EvalCtx<T>& cx, const T& c1) {
  // prod_i (h_i q/c1;q)_{m_i} / (h_i;q)_{m_i}
  for (int i = 1; i <= sh.s; ++i) {
    const T& h = P[idx("h", i)];
    pre.nf(h * cx.q.q / c1, sh.m[size_t(i - 1)]).df(h, sh.m[size_t(i - 1)]);
  }
  return pre;
}

inline void sample_hs(Rng& g, const Shape& sh, PointD& pt) {
  for (int i = 1; i <= sh.s; ++i) pt.set(idx("h", i), g.annulus(0.9, 1.6));
}

// ------------------------------------------------------------------ chutf
struct Chu2sTF {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "chu_2s_tf";
    m.title = "Chu's transformation of a (2+s)psi(2+s) with integer-shifted pairs";
    m.source = "Chu 1998, Eq. (15)";
    m.constraints_text = "|q/a| < |q^N| < |b q^{|m|+1}/(cd)|";
    m.shape.s = {0, 3, true};
    m.shape.m = {0, 4, true};
    m.shape.N = {-3, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a", "b", "c", "d"};
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    pt.set("a", pow_int(q, 1 - sh.N) / g.annulus(0.2, 0.8));
    CDouble b = g.annulus(0.8, 1.6), c = g.annulus(0.8, 1.6);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("d", b * pow_int(q, long(sh.m_total()) + 1 - sh.N) * g.annulus(0.2, 0.75) / c);
    sample_hs(g, sh, pt);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"];
    return {mod_lt_one<T>("|q^{1-N}/a| < 1", T(cx.qpow(1 - sh.N) / a)),
            mod_lt_one<T>("|cd q^{N-|m|-1}/b| < 1",
                          T(c * d * cx.qpow(sh.N - sh.m_total() - 1) / b))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    std::vector<T> upper{P["a"], P["b"]}, lower{P["c"], P["d"]};
    append_ckm_pairs(P, sh, cx, upper, lower);
    return {term<T>(PochRatio<T>{},
                    psi<T>(std::move(upper), std::move(lower), T(cx.qpow(1 - sh.N) / P["a"])))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &q = cx.q.q;
    PochRatio<T> pre;
    pre.times(pow_int(b, sh.N));
    pre.ni({q, b * q / a, c / b, d / b}).di({q / a, q / b, c, d});
    std::vector<T> upper{b * q / c, b * q / d}, lower{b * q / a};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      long mi = sh.m[size_t(i - 1)];
      pre.nf(h / b, mi).df(h, mi);
      upper.push_back(b * q / h);
      lower.push_back(b * cx.qpow(1 - mi) / h);
    }
    T w = c * d * cx.qpow(sh.N - sh.m_total() - 1) / b;
    return {term<T>(std::move(pre), phi<T>(std::move(upper), std::move(lower), w))};
  }
};

// ------------------------------------------------------------------ chugl
struct ChuVWPSum {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "chu_vwp_sum";
    m.title = "Chu's very-well-poised (6+2s)psi(6+2s) summation";
    m.source = "Chu 1999, Theorem 2";
    m.constraints_text = "|a q^{1-|m|}/(bc)| < 1 or terminating";
    m.shape.s = {0, 3, true};
    m.shape.m = {0, 4, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a", "b", "c", "d"};
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.4), b = g.annulus(0.85, 1.5);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("d", g.annulus(0.85, 1.4));
    pt.set("c", a * pow_int(q, 1 - long(sh.m_total())) / (b * g.annulus(0.25, 0.75)));
    sample_hs(g, sh, pt);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return P["a"] * cx.qpow(1 - sh.m_total()) / (P["b"] * P["c"]);
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a q^{1-|m|}/(bc)| < 1", arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &d = P["d"];
    std::vector<T> upper{P["b"], P["c"], d, a / d};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      upper.push_back(h);
      upper.push_back(a * cx.qpow(1 + sh.m[size_t(i - 1)]) / h);
    }
    return {term<T>(PochRatio<T>{},
                    vwp<T>(SeriesKind::Bilateral, a, std::move(upper), cx.q.q, arg(P, sh, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &q = cx.q.q;
    T aq = a * q;
    PochRatio<T> pre;
    pre.ni({q, q, aq, q / a, aq / (b * d), aq / (c * d), d * q / b, d * q / c})
        .di({aq / b, aq / c, aq / d, d * q / a, q / b, q / c, q / d, d * q});
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      long mi = sh.m[size_t(i - 1)];
      pre.nf(aq / (d * h), mi).nf(d * q / h, mi).df(aq / h, mi).df(q / h, mi);
    }
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ chugen1gl
struct CKMGeneral {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_general";
    m.title = "general (r+s)psi(r+s) transformation with integer-shifted pairs";
    m.source = "extends Chu 1998 and Slater 1952";
    m.constraints_text = "|b_1...b_r q^{-|m|}/(a_1...a_r)| < |z| < 1 or terminating";
    m.shape.r = {1, 3, true};
    m.shape.s = {0, 2, true};
    m.shape.m = {0, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q"};
    names_of(v, "a", 1, sh.r);
    names_of(v, "b", 1, sh.r);
    names_of(v, "c", 1, sh.r);
    names_of(v, "h", 1, sh.s);
    v.push_back("z");
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    double qm = std::pow(abs(q), double(sh.m_total()));
    std::vector<CDouble> as, bs;
    double cap = 0.45 * qm;
    // keep each |b_i/a_i| sane even when the cap is tiny
    as.clear();
    bs.clear();
    double ratio = 1.0;
    for (int i = 0; i < sh.r; ++i) {
      CDouble a = g.annulus(0.8, 1.5);
      double lo = std::pow(cap, 1.0 / sh.r) * 0.5, hi = std::pow(cap, 1.0 / sh.r);
      CDouble beta = g.annulus(lo, hi);
      as.push_back(a);
      bs.push_back(a * beta);
      ratio *= abs(beta);
    }
    for (int i = 0; i < sh.r; ++i) {
      pt.set(idx("a", i + 1), as[size_t(i)]);
      pt.set(idx("b", i + 1), bs[size_t(i)]);
      pt.set(idx("c", i + 1), g.annulus(0.75, 1.3));
    }
    sample_hs(g, sh, pt);
    pt.set("z", g.between(ratio / qm, 0.9));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    T A = product(list_of(P, "a", 1, sh.r));
    T B = product(list_of(P, "b", 1, sh.r));
    const T& z = P["z"];
    return {mod_lt_one<T>("|z| < 1", z),
            mod_lt_one<T>("|b_1...b_r q^{-|m|}/(a_1...a_r z)| < 1",
                          T(B * cx.qpow(-sh.m_total()) / (A * z)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    std::vector<T> upper = list_of(P, "a", 1, sh.r);
    std::vector<T> lower = list_of(P, "b", 1, sh.r);
    append_ckm_pairs(P, sh, cx, upper, lower);
    return {term<T>(PochRatio<T>{}, psi<T>(std::move(upper), std::move(lower), P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T A = product(list_of(P, "a", 1, sh.r)) / product(list_of(P, "c", 1, sh.r));
    return idem_sum<T>(P, tail_group("c1", "c", 2, sh.r), [&](const Point<T>& I) {
      const T &q = cx.q.q, &z = I["z"];
      const T& h = I["c1"];
      PochRatio<T> pre;
      ckm_offset_factors(pre, I, sh, cx, h);
      pre.ni({A * h * z, q / (A * h * z)}).di({A * z * q, T(1) / (A * z)});
      std::vector<T> upper, lower;
      for (int i = 1; i <= sh.r; ++i) {
        const T& ai = I[idx("a", i)];
        const T& bi = I[idx("b", i)];
        pre.ni({h / ai, bi * q / h}).di({q / ai, bi});
        upper.push_back(ai * q / h);
        lower.push_back(bi * q / h);
      }
      for (int i = 2; i <= sh.r; ++i) {
        const T& ci = I[idx("c", i)];
        pre.ni({ci, q / ci}).di({h / ci, ci * q / h});
      }
      for (int i = 1; i <= sh.s; ++i) {
        const T& hi = I[idx("h", i)];
        upper.push_back(hi * cx.qpow(1 + sh.m[size_t(i - 1)]) / h);
        lower.push_back(hi * q / h);
      }
      return term<T>(std::move(pre), psi<T>(std::move(upper), std::move(lower), z));
    });
  }
};

// ------------------------------------------------------------------ chutfgen
struct CKMKm1 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_km1";
    m.title = "(2+s)psi(2+s) transformation with free base point e";
    m.source = "extends Chu 1998";
    m.constraints_text = "|e/(ab)| < |q^N| < |e q^{|m|}/(cd)|";
    m.shape.s = {0, 3, true};
    m.shape.m = {0, 4, true};
    m.shape.N = {-3, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a", "b", "c", "d", "e"};
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble e = g.annulus(0.8, 1.4), b = g.annulus(0.8, 1.5), c = g.annulus(0.8, 1.5);
    pt.set("e", e);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("a", e * pow_int(q, -sh.N) / (b * g.annulus(0.2, 0.75)));
    pt.set("d", e * pow_int(q, long(sh.m_total()) - sh.N) * g.annulus(0.2, 0.75) / c);
    sample_hs(g, sh, pt);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return P["e"] * cx.qpow(-sh.N) / (P["a"] * P["b"]);
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    const T &c = P["c"], &d = P["d"], &e = P["e"];
    return {mod_lt_one<T>("|e q^{-N}/(ab)| < 1", arg(P, sh, cx)),
            mod_lt_one<T>("|cd q^{N-|m|}/e| < 1",
                          T(c * d * cx.qpow(sh.N - sh.m_total()) / e))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    std::vector<T> upper{P["a"], P["b"]}, lower{P["c"], P["d"]};
    append_ckm_pairs(P, sh, cx, upper, lower);
    return {term<T>(PochRatio<T>{}, psi<T>(std::move(upper), std::move(lower), arg(P, sh, cx)))};
  }
  template <class T>
  static PochRatio<T> common_pre(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &q = cx.q.q;
    PochRatio<T> pre;
    pre.times(pow_int(T(e / q), sh.N));
    pre.ni({e / a, e / b, c * q / e, d * q / e}).di({q / a, q / b, c, d});
    ckm_offset_factors(pre, P, sh, cx, e);
    return pre;
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &q = cx.q.q;
    std::vector<T> upper{a * q / e, b * q / e}, lower{c * q / e, d * q / e};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      upper.push_back(h * cx.qpow(1 + sh.m[size_t(i - 1)]) / e);
      lower.push_back(h * q / e);
    }
    return {term<T>(common_pre(P, sh, cx),
                    psi<T>(std::move(upper), std::move(lower), arg(P, sh, cx)))};
  }
};

// ------------------------------------------------------------------ chutfgen1
struct CKMKm1Rev {
  static IdentityMeta meta() {
    IdentityMeta m = CKMKm1::meta();
    m.id = "ckm_km1_rev";
    m.title = "(2+s)psi(2+s) transformation with free base point e, reversed";
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) { return CKMKm1::params(sh); }
  static void sample(Rng& g, const Shape& sh, PointD& pt) { CKMKm1::sample(g, sh, pt); }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return CKMKm1::constraints(P, sh, cx);
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return CKMKm1::lhs(P, sh, cx);
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"];
    std::vector<T> upper{e / c, e / d}, lower{e / a, e / b};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      upper.push_back(e / h);
      lower.push_back(e * cx.qpow(-sh.m[size_t(i - 1)]) / h);
    }
    T w = c * d * cx.qpow(sh.N - sh.m_total()) / e;
    return {term<T>(CKMKm1::common_pre(P, sh, cx),
                    psi<T>(std::move(upper), std::move(lower), w))};
  }
};

// ------------------------------------------------------------------ km2gl
struct CKMKm2 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_km2";
    m.title = "(1+s)psi(1+s) base-shift transformation";
    m.source = "extends Chu 1998";
    m.constraints_text = "|b q^{-|m|}/a| < |z| < 1 or terminating";
    m.shape.s = {0, 3, true};
    m.shape.m = {0, 4, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a", "b", "c", "z"};
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.8, 1.6);
    CDouble beta = g.annulus(0.1, 0.5);
    pt.set("a", a);
    pt.set("b", a * beta * pow_int(q, long(sh.m_total())));
    pt.set("c", g.annulus(0.7, 1.4));
    sample_hs(g, sh, pt);
    pt.set("z", g.between(abs(beta), 0.9));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &z = P["z"];
    return {mod_lt_one<T>("|z| < 1", z),
            mod_lt_one<T>("|b q^{-|m|}/(a z)| < 1", T(b * cx.qpow(-sh.m_total()) / (a * z)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    std::vector<T> upper{P["a"]}, lower{P["b"]};
    append_ckm_pairs(P, sh, cx, upper, lower);
    return {term<T>(PochRatio<T>{}, psi<T>(std::move(upper), std::move(lower), P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &z = P["z"], &q = cx.q.q;
    PochRatio<T> pre;
    pre.ni({c / a, b * q / c, a * z, q / (a * z)}).di({q / a, b, a * z * q / c, c / (a * z)});
    ckm_offset_factors(pre, P, sh, cx, c);
    std::vector<T> upper{a * q / c}, lower{b * q / c};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      upper.push_back(h * cx.qpow(1 + sh.m[size_t(i - 1)]) / c);
      lower.push_back(h * q / c);
    }
    return {term<T>(std::move(pre), psi<T>(std::move(upper), std::move(lower), z))};
  }
};

// ------------------------------------------------------------------ km3gl
struct CKMKm3 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_km3";
    m.title = "very-well-poised (6+2s)psi(6+2s) base-shift transformation";
    m.source = "extends Chu 1999";
    m.constraints_text = "|a^2 q^{1-|m|}/(bcde)| < 1 or terminating";
    m.shape.s = {0, 2, true};
    m.shape.m = {0, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a", "b", "c", "d", "e", "f"};
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.4), b = g.annulus(0.85, 1.5), d = g.annulus(0.85, 1.5),
            e = g.annulus(0.85, 1.5);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("d", d);
    pt.set("e", e);
    pt.set("f", g.annulus(0.8, 1.3));
    pt.set("c", a * a * pow_int(q, 1 - long(sh.m_total())) / (b * d * e * g.annulus(0.25, 0.75)));
    sample_hs(g, sh, pt);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T& a = P["a"];
    return a * a * cx.qpow(1 - sh.m_total()) / (P["b"] * P["c"] * P["d"] * P["e"]);
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^2 q^{1-|m|}/(bcde)| < 1", arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T& a = P["a"];
    std::vector<T> upper{P["b"], P["c"], P["d"], P["e"]};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      upper.push_back(h);
      upper.push_back(a * cx.qpow(1 + sh.m[size_t(i - 1)]) / h);
    }
    return {term<T>(PochRatio<T>{},
                    vwp<T>(SeriesKind::Bilateral, a, std::move(upper), cx.q.q, arg(P, sh, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"],
            &q = cx.q.q;
    T aq = a * q;
    PochRatio<T> pre;
    pre.ni({aq, q / a, f * q / b, f * q / c, f * q / d, f * q / e, aq / (b * f), aq / (c * f),
            aq / (d * f), aq / (e * f)})
        .di({q / b, q / c, q / d, q / e, aq / b, aq / c, aq / d, aq / e, f * f * q / a,
             aq / (f * f)});
    std::vector<T> upper{b * f / a, c * f / a, d * f / a, e * f / a};
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      long mi = sh.m[size_t(i - 1)];
      pre.nf(f * q / h, mi).nf(aq / (f * h), mi).df(aq / h, mi).df(q / h, mi);
      upper.push_back(f * h / a);
      upper.push_back(f * cx.qpow(1 + mi) / h);
    }
    return {term<T>(std::move(pre), vwp<T>(SeriesKind::Bilateral, f * f / a, std::move(upper), q,
                                           arg(P, sh, cx)))};
  }
};

// ------------------------------------------------------------------ ul1
struct CKMUl1 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_2psi2_ul1";
    m.title = "factored 2psi2 evaluation";
    m.source = "specialization of the base-shift family";
    m.constraints_text = "|q| < |z| < 1";
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "h", "z"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    pt.set("a", g.annulus(0.7, 1.6));
    pt.set("h", g.annulus(0.75, 1.35));
    pt.set("z", g.between(abs(q), 0.9));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T& z = P["z"];
    return {mod_lt_one<T>("|z| < 1", z), mod_lt_one<T>("|q/z| < 1", T(cx.q.q / z))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &h = P["h"], &q = cx.q.q;
    return {term<T>(PochRatio<T>{}, psi<T>({a, h * q}, {a * q * q, h}, P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &h = P["h"], &z = P["z"], &q = cx.q.q;
    T denom = T(1) - h;
    double m = field_traits<T>::mag_to_double(mag(denom)) /
               (1.0 + field_traits<T>::mag_to_double(mag(h)));
    if (m < cx.opt.degenerate_radius)
      fail(errc::degenerate_point, "offset parameter too close to 1");
    T bracket = ((T(1) - h / (a * q)) - (T(1) - h / a) * z / q) / denom;
    PochRatio<T> pre;
    pre.times(bracket);
    pre.ni({q * q, q, a * z, q / (a * z)}).di({q / a, a * q * q, z / q, q * q / z});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ ul2
struct CKMUl2 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_2psi2_ul2";
    m.title = "completely factored 2psi2 evaluation";
    m.source = "specialization of the base-shift family";
    m.constraints_text = "|q| < |h/a| < 1";
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "h"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.5);
    pt.set("a", a);
    pt.set("h", a * g.between(abs(q), 0.9));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &h = P["h"];
    return {mod_lt_one<T>("|h/a| < 1", T(h / a)),
            mod_lt_one<T>("|aq/h| < 1", T(a * cx.q.q / h))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &h = P["h"], &q = cx.q.q;
    return {term<T>(PochRatio<T>{}, psi<T>({a, h * q}, {a * q * q, h}, T(-(h / a))))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &h = P["h"], &q = cx.q.q;
    T denom = T(1) - h;
    double m = field_traits<T>::mag_to_double(mag(denom)) /
               (1.0 + field_traits<T>::mag_to_double(mag(h)));
    if (m < cx.opt.degenerate_radius)
      fail(errc::degenerate_point, "offset parameter too close to 1");
    T bracket = (T(1) - h * h / (a * a * q)) / denom;
    PochRatio<T> pre;
    pre.times(bracket);
    pre.ni({q * q, q, -h, -(q / h)}).di({q / a, a * q * q, -(h / (a * q)), -(a * q * q / h)});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ chugen2gl
struct CKMWPGeneral {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_wp_general";
    m.title = "well-poised (2r+2s)psi(2r+2s) transformation with integer-shifted pairs";
    m.source = "extends Chu 1999 and Slater 1952";
    m.constraints_text = "|a^r q^{r-|m|}/(b_1...b_2r)| < 1 or terminating";
    m.shape.r = {1, 3, true};
    m.shape.s = {0, 2, true};
    m.shape.m = {0, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a"};
    names_of(v, "b", 1, 2 * sh.r);
    names_of(v, "a", 1, sh.r);
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.3);
    pt.set("a", a);
    CDouble prod(1.0, 0.0);
    for (int i = 1; i < 2 * sh.r; ++i) {
      CDouble v = g.annulus(0.85, 1.5);
      pt.set(idx("b", i), v);
      prod *= v;
    }
    CDouble scale = -pow_int(a, sh.r) * pow_int(q, sh.r - long(sh.m_total()));
    pt.set(idx("b", 2 * sh.r), scale / (prod * g.annulus(0.25, 0.75)));
    for (int i = 1; i <= sh.r; ++i) pt.set(idx("a", i), g.annulus(0.75, 1.35));
    sample_hs(g, sh, pt);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return -(pow_int(P["a"], sh.r) * cx.qpow(sh.r - sh.m_total())) /
           product(list_of(P, "b", 1, 2 * sh.r));
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^r q^{r-|m|}/(b_1...b_2r)| < 1", arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &q = cx.q.q;
    std::vector<T> upper, lower;
    for (int j = 1; j <= 2 * sh.r; ++j) {
      const T& bj = P[idx("b", j)];
      upper.push_back(bj);
      lower.push_back(a * q / bj);
    }
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      long mi = sh.m[size_t(i - 1)];
      upper.push_back(h);
      upper.push_back(a * cx.qpow(1 + mi) / h);
      lower.push_back(a * q / h);
      lower.push_back(h * cx.qpow(-mi));
    }
    return {term<T>(PochRatio<T>{}, psi<T>(std::move(upper), std::move(lower), arg(P, sh, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T z = arg(P, sh, cx);
    return idem_sum<T>(P, tail_group("a1", "a", 2, sh.r), [&](const Point<T>& I) {
      const T &a = I["a"], &q = cx.q.q;
      const T& h = I["a1"];
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({a, q / a});
      for (int i = 2; i <= sh.r; ++i) {
        const T& ai = I[idx("a", i)];
        pre.ni({ai, q / ai, ai / a, aq / ai});
        pre.di({ai / h, h * q / ai, h * ai / a, aq / (h * ai)});
      }
      std::vector<T> upper, lower;
      for (int j = 1; j <= 2 * sh.r; ++j) {
        const T& bj = I[idx("b", j)];
        pre.ni({h * q / bj, aq / (h * bj)}).di({q / bj, aq / bj});
        upper.push_back(h * bj / a);
        lower.push_back(h * q / bj);
      }
      pre.di({h * h / a, aq / (h * h)});
      pre.npair(h * h / a).npair(aq * q / (h * h));
      pre.dpair(q * q / a).dpair(a);
      for (int i = 1; i <= sh.s; ++i) {
        const T& hi = I[idx("h", i)];
        long mi = sh.m[size_t(i - 1)];
        pre.nf(h * q / hi, mi).nf(aq / (h * hi), mi).df(aq / hi, mi).df(q / hi, mi);
        upper.push_back(h * hi / a);
        upper.push_back(h * cx.qpow(1 + mi) / hi);
        lower.push_back(h * q / hi);
        lower.push_back(h * hi * cx.qpow(-mi) / a);
      }
      return term<T>(std::move(pre), psi<T>(std::move(upper), std::move(lower), z));
    });
  }
};

// ------------------------------------------------------------------ chugen3gl
struct CKMVWPGeneral {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ckm_vwp_general";
    m.title = "very-well-poised 2r psi 2r transformation with integer-shifted pairs";
    m.source = "extends Chu 1999 and Slater 1952";
    m.constraints_text = "|a^{r-1} q^{r-2-|m|}/(b_3...b_2r)| < 1 or terminating";
    m.shape.r = {3, 5, true};
    m.shape.s = {0, 2, true};
    m.shape.m = {0, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a"};
    names_of(v, "b", 3, 2 * sh.r);
    names_of(v, "a", 3, sh.r);
    names_of(v, "h", 1, sh.s);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.3);
    pt.set("a", a);
    CDouble prod(1.0, 0.0);
    for (int i = 3; i < 2 * sh.r; ++i) {
      CDouble v = g.annulus(0.85, 1.5);
      pt.set(idx("b", i), v);
      prod *= v;
    }
    CDouble scale = pow_int(a, sh.r - 1) * pow_int(q, sh.r - 2 - long(sh.m_total()));
    pt.set(idx("b", 2 * sh.r), scale / (prod * g.annulus(0.25, 0.75)));
    for (int i = 3; i <= sh.r; ++i) pt.set(idx("a", i), g.annulus(0.8, 1.3));
    sample_hs(g, sh, pt);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return pow_int(P["a"], sh.r - 1) * cx.qpow(sh.r - 2 - sh.m_total()) /
           product(list_of(P, "b", 3, 2 * sh.r));
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^{r-1} q^{r-2-|m|}/(b_3...b_2r)| < 1", arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T& a = P["a"];
    std::vector<T> upper = list_of(P, "b", 3, 2 * sh.r);
    for (int i = 1; i <= sh.s; ++i) {
      const T& h = P[idx("h", i)];
      upper.push_back(h);
      upper.push_back(a * cx.qpow(1 + sh.m[size_t(i - 1)]) / h);
    }
    return {term<T>(PochRatio<T>{},
                    vwp<T>(SeriesKind::Bilateral, a, std::move(upper), cx.q.q, arg(P, sh, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T z = arg(P, sh, cx);
    return idem_sum<T>(P, tail_group("a3", "a", 4, sh.r), [&](const Point<T>& I) {
      const T &a = I["a"], &q = cx.q.q;
      const T& h = I["a3"];
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({aq, q / a});
      for (int i = 4; i <= sh.r; ++i) {
        const T& ai = I[idx("a", i)];
        pre.ni({ai, q / ai, ai / a, aq / ai});
        pre.di({ai / h, h * q / ai, h * ai / a, aq / (h * ai)});
      }
      std::vector<T> upper;
      for (int j = 3; j <= 2 * sh.r; ++j) {
        const T& bj = I[idx("b", j)];
        pre.ni({h * q / bj, aq / (h * bj)}).di({q / bj, aq / bj});
        upper.push_back(h * bj / a);
      }
      pre.di({h * h * q / a, aq / (h * h)});
      for (int i = 1; i <= sh.s; ++i) {
        const T& hi = I[idx("h", i)];
        long mi = sh.m[size_t(i - 1)];
        pre.nf(h * q / hi, mi).nf(aq / (h * hi), mi).df(aq / hi, mi).df(q / hi, mi);
        upper.push_back(h * hi / a);
        upper.push_back(h * cx.qpow(1 + mi) / hi);
      }
      return term<T>(std::move(pre),
                     vwp<T>(SeriesKind::Bilateral, h * h / a, std::move(upper), q, z));
    });
  }
};

}  // namespace

void register_ckm(std::vector<Identity>& out) {
  out.push_back(make_identity<Chu2sTF>());
  out.push_back(make_identity<ChuVWPSum>());
  out.push_back(make_identity<CKMGeneral>());
  out.push_back(make_identity<CKMKm1>());
  out.push_back(make_identity<CKMKm1Rev>());
  out.push_back(make_identity<CKMKm2>());
  out.push_back(make_identity<CKMKm3>());
  out.push_back(make_identity<CKMUl1>());
  out.push_back(make_identity<CKMUl2>());
  out.push_back(make_identity<CKMWPGeneral>());
  out.push_back(make_identity<CKMVWPGeneral>());
}

}  // namespace cat
}  // namespace qbil
