// Classical summation and transformation formulas: q-binomial theorem,
// Ramanujan's 1psi1, q-Pfaff-Saalschutz (terminating and not), Heine's
// transformation, Rogers' 6phi5, Jackson's terminating 8phi7, Bailey's 6psi6
// and nonterminating 8phi7 (summation and transformation), M. Jackson's
// 8psi8, and the 10psi10 transformation.

#include "catalog_impl.hpp"

namespace qbil {
namespace cat {
namespace {

// ------------------------------------------------------------------ 10gl
struct QBinomial {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "q_binomial";
    m.title = "q-binomial theorem";
    m.source = "Cauchy 1843; Gasper-Rahman (1.3.2)";
    m.constraints_text = "|z| < 1 or terminating";
    m.recommended = Tower::Double;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "z"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    pt.set("a", g.annulus(0.3, 2.2));
    pt.set("z", g.annulus(0.2, 0.8));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    return {mod_lt_one<T>("|z| < 1", P["z"])};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    return {term<T>(PochRatio<T>{}, phi<T>({P["a"]}, {}, P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    const T &a = P["a"], &z = P["z"];
    PochRatio<T> pre;
    pre.ni({T(a * z)}).di({z});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 10tgl
struct QBinomialTerminating {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "q_binomial_terminating";
    m.title = "terminating q-binomial theorem";
    m.source = "Gasper-Rahman (II.4)";
    m.constraints_text = "none (terminating)";
    m.shape.n = {0, 10, true};
    m.recommended = Tower::Double;
    m.exact_ok = true;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "z"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    pt.set("z", g.annulus(0.3, 1.8));
  }
  static void sample_exact(Rng& g, const Shape&, PointX& pt) {
    pt.set("q", g.rational_base());
    pt.set("z", g.rational(6, 6));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>&, const Shape&, EvalCtx<T>&) {
    return {};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return {term<T>(PochRatio<T>{}, phi<T>({cx.qpow(-sh.n)}, {}, P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    PochRatio<T> pre;
    pre.nf(T(P["z"] * cx.qpow(-sh.n)), sh.n);
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 11gl
struct Ramanujan1Psi1 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "ramanujan_1psi1";
    m.title = "Ramanujan's 1psi1 summation";
    m.source = "Ramanujan; Gasper-Rahman (5.2.1)";
    m.constraints_text = "|b/a| < |z| < 1 or terminating";
    m.recommended = Tower::Double;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "z"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    CDouble a = g.annulus(0.7, 1.8);
    CDouble beta = g.annulus(0.08, 0.5);
    pt.set("a", a);
    pt.set("b", a * beta);
    pt.set("z", g.between(abs(beta), 0.9));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    const T &a = P["a"], &b = P["b"], &z = P["z"];
    return {mod_lt_one<T>("|z| < 1", z), mod_lt_one<T>("|b/(a z)| < 1", T(b / (a * z)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    return {term<T>(PochRatio<T>{}, psi<T>({P["a"]}, {P["b"]}, P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &z = P["z"], &q = cx.q.q;
    PochRatio<T> pre;
    pre.ni({q, b / a, a * z, q / (a * z)}).di({b, q / a, z, b / (a * z)});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 32gl
struct PfaffSaalschutz {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "pfaff_saalschutz";
    m.title = "terminating q-Pfaff-Saalschutz summation";
    m.source = "Gasper-Rahman (II.12)";
    m.constraints_text = "none (terminating, balanced)";
    m.shape.n = {0, 8, true};
    m.recommended = Tower::Double;
    m.exact_ok = true;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    pt.set("a", g.annulus(0.4, 2.2));
    pt.set("b", g.annulus(0.4, 2.2));
    pt.set("c", g.annulus(0.4, 2.2));
  }
  static void sample_exact(Rng& g, const Shape&, PointX& pt) {
    pt.set("q", g.rational_base());
    pt.set("a", g.rational(5, 5));
    pt.set("b", g.rational(5, 5));
    pt.set("c", g.rational(5, 5));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>&, const Shape&, EvalCtx<T>&) {
    return {};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &q = cx.q.q;
    T qmn = cx.qpow(-sh.n);
    return {term<T>(PochRatio<T>{}, phi<T>({a, b, qmn}, {c, a * b * q * qmn / c}, q))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>&) {
    const T &a = P["a"], &b = P["b"], &c = P["c"];
    PochRatio<T> pre;
    pre.nf(c / a, sh.n).nf(c / b, sh.n).df(c, sh.n).df(c / (a * b), sh.n);
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 32ntgl
struct PfaffSaalschutzNT {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "pfaff_saalschutz_nt";
    m.title = "nonterminating q-Pfaff-Saalschutz summation";
    m.source = "Gasper-Rahman (II.24)";
    m.constraints_text = "ef = abcq";
    m.recommended = Tower::Double;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c", "e"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    pt.set("a", g.annulus(0.35, 1.6));
    pt.set("b", g.annulus(0.35, 1.6));
    pt.set("c", g.annulus(0.35, 1.6));
    pt.set("e", g.annulus(0.5, 1.8));
  }
  template <class T>
  static void derive(Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    if (!P.has("f")) P.set("f", T(P["a"] * P["b"] * P["c"] * cx.q.q / P["e"]));
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &e = P["e"], &f = P["f"];
    return {equals_one<T>("ef = abcq", T(e * f / (a * b * c * cx.q.q)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &e = P["e"], &f = P["f"], &q = cx.q.q;
    Terms<T> out;
    out.push_back(term<T>(PochRatio<T>{}, phi<T>({a, b, c}, {e, f}, q)));
    PochRatio<T> pre;
    pre.ni({q / e, a, b, c, f * q / e}).di({e / q, a * q / e, b * q / e, c * q / e, f});
    out.push_back(
        term<T>(std::move(pre), phi<T>({a * q / e, b * q / e, c * q / e}, {q * q / e, f * q / e}, q)));
    return out;
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &e = P["e"], &f = P["f"], &q = cx.q.q;
    PochRatio<T> pre;
    pre.ni({q / e, f / a, f / b, f / c}).di({a * q / e, b * q / e, c * q / e, f});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ qeulertf
struct HeineEuler {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "heine_euler";
    m.title = "Heine's q-Euler transformation of 2phi1";
    m.source = "Heine; Gasper-Rahman (1.4.3)";
    m.constraints_text = "max(|z|, |abz/c|) < 1";
    m.recommended = Tower::Double;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c", "z"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    CDouble a = g.annulus(0.4, 1.8), b = g.annulus(0.4, 1.8), c = g.annulus(0.4, 1.8);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", c);
    double cap = std::min(1.0, abs(c) / (abs(a) * abs(b)));
    pt.set("z", g.annulus(0.18 * cap, 0.8 * cap));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &z = P["z"];
    return {mod_lt_one<T>("|z| < 1", z), mod_lt_one<T>("|abz/c| < 1", T(a * b * z / c))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    return {term<T>(PochRatio<T>{}, phi<T>({P["a"], P["b"]}, {P["c"]}, P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>&) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &z = P["z"];
    T w = a * b * z / c;
    PochRatio<T> pre;
    pre.ni({w}).di({z});
    return {term<T>(std::move(pre), phi<T>({c / a, c / b}, {c}, w))};
  }
};

// ------------------------------------------------------------------ 65gl
struct Rogers6Phi5 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "rogers_6phi5";
    m.title = "Rogers' nonterminating 6phi5 summation";
    m.source = "Rogers 1895; Gasper-Rahman (2.7.1)";
    m.constraints_text = "|aq/(bcd)| < 1 or terminating";
    m.recommended = Tower::Double;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c", "d"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.5, 1.6), b = g.annulus(0.8, 1.7), c = g.annulus(0.8, 1.7);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("d", a * q / (b * c * g.annulus(0.25, 0.8)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"];
    return {mod_lt_one<T>("|aq/(bcd)| < 1", T(a * cx.q.q / (b * c * d)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &q = cx.q.q;
    T z = a * q / (b * c * d);
    return {term<T>(PochRatio<T>{}, vwp<T>(SeriesKind::Unilateral, a, {b, c, d}, q, z))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &q = cx.q.q;
    T aq = a * q;
    PochRatio<T> pre;
    pre.ni({aq, aq / (b * c), aq / (b * d), aq / (c * d)})
        .di({aq / b, aq / c, aq / d, aq / (b * c * d)});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 87gl
struct Jackson8Phi7 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "jackson_8phi7";
    m.title = "Jackson's terminating 8phi7 summation";
    m.source = "F. H. Jackson 1921; Gasper-Rahman (2.6.2)";
    m.constraints_text = "none (terminating, balanced very-well-poised)";
    m.shape.n = {0, 8, true};
    m.recommended = Tower::Double;
    m.exact_ok = true;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c", "d"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    pt.set("a", g.annulus(0.5, 1.8));
    pt.set("b", g.annulus(0.5, 1.8));
    pt.set("c", g.annulus(0.5, 1.8));
    pt.set("d", g.annulus(0.5, 1.8));
  }
  static void sample_exact(Rng& g, const Shape&, PointX& pt) {
    pt.set("q", g.rational_base());
    pt.set("a", g.rational(5, 4));
    pt.set("b", g.rational(5, 4));
    pt.set("c", g.rational(5, 4));
    pt.set("d", g.rational(5, 4));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>&, const Shape&, EvalCtx<T>&) {
    return {};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &q = cx.q.q;
    T qmn = cx.qpow(-sh.n);
    T e7 = a * a * q / (b * c * d * qmn);  // a^2 q^{1+n} / (bcd)
    return {term<T>(PochRatio<T>{}, vwp<T>(SeriesKind::Unilateral, a, {b, c, d, e7, qmn}, q, q))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &q = cx.q.q;
    T aq = a * q;
    PochRatio<T> pre;
    pre.nf(aq, sh.n)
        .nf(aq / (b * c), sh.n)
        .nf(aq / (b * d), sh.n)
        .nf(aq / (c * d), sh.n)
        .df(aq / b, sh.n)
        .df(aq / c, sh.n)
        .df(aq / d, sh.n)
        .df(aq / (b * c * d), sh.n);
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 66gl
struct Bailey6Psi6 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "bailey_6psi6";
    m.title = "Bailey's very-well-poised 6psi6 summation";
    m.source = "Bailey 1936, Eq. (4.7); Gasper-Rahman (5.3.1)";
    m.constraints_text = "|a^2 q/(bcde)| < 1 or terminating";
    m.recommended = Tower::Double;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c", "d", "e"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.6, 1.5), b = g.annulus(0.8, 1.7), c = g.annulus(0.8, 1.7),
            d = g.annulus(0.8, 1.7);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("d", d);
    pt.set("e", a * a * q / (b * c * d * g.annulus(0.25, 0.8)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"];
    return {mod_lt_one<T>("|a^2 q/(bcde)| < 1", T(a * a * cx.q.q / (b * c * d * e)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &q = cx.q.q;
    T z = a * a * q / (b * c * d * e);
    return {term<T>(PochRatio<T>{}, vwp<T>(SeriesKind::Bilateral, a, {b, c, d, e}, q, z))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &q = cx.q.q;
    T aq = a * q;
    T z = a * a * q / (b * c * d * e);
    PochRatio<T> pre;
    pre.ni({aq, aq / (b * c), aq / (b * d), aq / (b * e), aq / (c * d), aq / (c * e),
            aq / (d * e), q, q / a})
        .di({aq / b, aq / c, aq / d, aq / e, q / b, q / c, q / d, q / e, z});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 87ntgl
struct Bailey8Phi7NT {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "bailey_8phi7_nt";
    m.title = "Bailey's nonterminating very-well-poised 8phi7 summation";
    m.source = "Bailey 1936; Gasper-Rahman (2.11.7)";
    m.constraints_text = "a^2 q = bcdef";
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) {
    return {"q", "a", "b", "c", "d", "e"};
  }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.4), b = g.annulus(0.8, 1.4), c = g.annulus(0.8, 1.4),
            d = g.annulus(0.8, 1.4);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("d", d);
    CDouble f = g.annulus(0.5, 1.5);
    pt.set("e", a * a * q / (b * c * d * f));
  }
  template <class T>
  static void derive(Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    if (!P.has("f"))
      P.set("f", T(P["a"] * P["a"] * cx.q.q / (P["b"] * P["c"] * P["d"] * P["e"])));
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"];
    return {equals_one<T>("a^2 q = bcdef", T(b * c * d * e * f / (a * a * cx.q.q)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"],
            &q = cx.q.q;
    Terms<T> out;
    out.push_back(
        term<T>(PochRatio<T>{}, vwp<T>(SeriesKind::Unilateral, a, {b, c, d, e, f}, q, q)));
    T aq = a * q;
    PochRatio<T> pre;
    pre.ni({aq, c, d, e, f, b / a, b * q / c, b * q / d, b * q / e, b * q / f})
        .di({a / b, aq / c, aq / d, aq / e, aq / f, b * c / a, b * d / a, b * e / a, b * f / a,
             b * b * q / a});
    out.push_back(term<T>(
        std::move(pre),
        vwp<T>(SeriesKind::Unilateral, b * b / a, {b, b * c / a, b * d / a, b * e / a, b * f / a},
               q, q)));
    return out;
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"],
            &q = cx.q.q;
    T aq = a * q;
    PochRatio<T> pre;
    pre.ni({aq, b / a, aq / (c * d), aq / (c * e), aq / (c * f), aq / (d * e), aq / (d * f),
            aq / (e * f)})
        .di({aq / c, aq / d, aq / e, aq / f, b * c / a, b * d / a, b * e / a, b * f / a});
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 87tntgl
struct Bailey8Phi7TF {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "bailey_8phi7_tf";
    m.title = "Bailey's transformation of a nonterminating 8phi7";
    m.source = "Bailey 1936, Eq. (4.3); Gasper-Rahman (2.10.1)";
    m.constraints_text = "max(|aq/(ef)|, |lq/(ef)|) < 1, l = a^2 q/(bcd)";
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) {
    return {"q", "a", "b", "c", "d", "e", "f"};
  }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.4), b = g.annulus(0.9, 1.5), c = g.annulus(0.9, 1.5),
            d = g.annulus(0.9, 1.5), e = g.annulus(0.9, 1.6);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("d", d);
    pt.set("e", e);
    pt.set("f", a * q / (e * g.annulus(0.3, 0.8)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"],
            &q = cx.q.q;
    T lambda = a * a * q / (b * c * d);
    return {mod_lt_one<T>("|aq/(ef)| < 1", T(a * q / (e * f))),
            mod_lt_one<T>("|lq/(ef)| < 1", T(lambda * q / (e * f)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"],
            &q = cx.q.q;
    T z = a * a * q * q / (b * c * d * e * f);
    return {term<T>(PochRatio<T>{}, vwp<T>(SeriesKind::Unilateral, a, {b, c, d, e, f}, q, z))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"], &f = P["f"],
            &q = cx.q.q;
    T lambda = a * a * q / (b * c * d);
    T aq = a * q;
    T lq = lambda * q;
    PochRatio<T> pre;
    pre.ni({aq, aq / (e * f), lq / e, lq / f}).di({aq / e, aq / f, lq, lq / (e * f)});
    return {term<T>(std::move(pre),
                    vwp<T>(SeriesKind::Unilateral, lambda,
                           {lambda * b / a, lambda * c / a, lambda * d / a, e, f}, q,
                           aq / (e * f)))};
  }
};

// ------------------------------------------------------------------ 88gl
struct MJackson8Psi8 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "mjackson_8psi8";
    m.title = "M. Jackson's very-well-poised 8psi8 transformation";
    m.source = "M. Jackson 1950, Eq. (2.2); Gasper-Rahman (5.6.2)";
    m.constraints_text = "|a^3 q^2/(bcdefg)| < 1 or terminating";
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) {
    return {"q", "a", "b", "c", "d", "e", "f", "g"};
  }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.4);
    pt.set("a", a);
    CDouble prod(1.0, 0.0);
    for (const char* nm : {"b", "c", "d", "e", "f"}) {
      CDouble v = g.annulus(0.85, 1.6);
      pt.set(nm, v);
      prod *= v;
    }
    pt.set("g", a * a * a * q * q / (prod * g.annulus(0.25, 0.75)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, EvalCtx<T>& cx) {
    const T& a = P["a"];
    return a * a * a * cx.q.q * cx.q.q /
           (P["b"] * P["c"] * P["d"] * P["e"] * P["f"] * P["g"]);
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^3 q^2/(bcdefg)| < 1", arg(P, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    return {term<T>(PochRatio<T>{},
                    vwp<T>(SeriesKind::Bilateral, P["a"],
                           {P["b"], P["c"], P["d"], P["e"], P["f"], P["g"]}, cx.q.q, arg(P, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    T z = arg(P, cx);
    return idem_sum<T>(P, IdemGroup{"b", {"c"}}, [&](const Point<T>& I) {
      const T &a = I["a"], &b = I["b"], &c = I["c"], &d = I["d"], &e = I["e"], &f = I["f"],
              &g = I["g"], &q = cx.q.q;
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({q, aq, q / a, c, c / a, b * q / d, b * q / e, b * q / f, b * q / g, aq / (b * d),
              aq / (b * e), aq / (b * f), aq / (b * g)})
          .di({q / b, q / d, q / e, q / f, q / g, aq / b, aq / d, aq / e, aq / f, aq / g, c / b,
               b * c / a, b * b * q / a});
      return term<T>(std::move(pre),
                     vwp<T>(SeriesKind::Unilateral, b * b / a,
                            {b * c / a, b * d / a, b * e / a, b * f / a, b * g / a}, q, z));
    });
  }
};

// ------------------------------------------------------------------ 1010gl
struct TenPsi10 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "tenpsi10";
    m.title = "very-well-poised 10psi10 transformation";
    m.source = "Slater 1952; Gasper-Rahman (5.6.3)";
    m.constraints_text = "|a^4 q^3/(bcdefghy)| < 1 or terminating";
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) {
    return {"q", "a", "b", "c", "d", "e", "f", "g", "h", "y"};
  }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.4);
    pt.set("a", a);
    CDouble prod(1.0, 0.0);
    for (const char* nm : {"b", "c", "d", "e", "f", "g", "h"}) {
      CDouble v = g.annulus(0.85, 1.6);
      pt.set(nm, v);
      prod *= v;
    }
    CDouble a4q3 = a * a * a * a * q * q * q;
    pt.set("y", a4q3 / (prod * g.annulus(0.25, 0.75)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, EvalCtx<T>& cx) {
    const T &a = P["a"], &q = cx.q.q;
    return a * a * a * a * q * q * q /
           (P["b"] * P["c"] * P["d"] * P["e"] * P["f"] * P["g"] * P["h"] * P["y"]);
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^4 q^3/(bcdefghy)| < 1", arg(P, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    return {term<T>(PochRatio<T>{},
                    vwp<T>(SeriesKind::Bilateral, P["a"],
                           {P["b"], P["c"], P["d"], P["e"], P["f"], P["g"], P["h"], P["y"]},
                           cx.q.q, arg(P, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    T z = arg(P, cx);
    return idem_sum<T>(P, IdemGroup{"b", {"c", "d"}}, [&](const Point<T>& I) {
      const T &a = I["a"], &b = I["b"], &c = I["c"], &d = I["d"], &e = I["e"], &f = I["f"],
              &g = I["g"], &h = I["h"], &y = I["y"], &q = cx.q.q;
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({q, aq, q / a, c, c / a, d, d / a, b * q / e, b * q / f, b * q / g, b * q / h,
              b * q / y, aq / (b * e), aq / (b * f), aq / (b * g), aq / (b * h), aq / (b * y)})
          .di({q / b, q / e, q / f, q / g, q / h, q / y, aq / b, aq / e, aq / f, aq / g, aq / h,
               aq / y, b * c / a, b * d / a, c / b, d / b, b * b * q / a});
      return term<T>(std::move(pre),
                     vwp<T>(SeriesKind::Unilateral, b * b / a,
                            {b * c / a, b * d / a, b * e / a, b * f / a, b * g / a, b * h / a,
                             b * y / a},
                            q, z));
    });
  }
};

}  // namespace

void register_core(std::vector<Identity>& out) {
  out.push_back(make_identity<QBinomial>());
  out.push_back(make_identity<QBinomialTerminating>());
  out.push_back(make_identity<Ramanujan1Psi1>());
  out.push_back(make_identity<PfaffSaalschutz>());
  out.push_back(make_identity<PfaffSaalschutzNT>());
  out.push_back(make_identity<HeineEuler>());
  out.push_back(make_identity<Rogers6Phi5>());
  out.push_back(make_identity<Jackson8Phi7>());
  out.push_back(make_identity<Bailey6Psi6>());
  out.push_back(make_identity<Bailey8Phi7NT>());
  out.push_back(make_identity<Bailey8Phi7TF>());
  out.push_back(make_identity<MJackson8Psi8>());
  out.push_back(make_identity<TenPsi10>());
}

}  // namespace cat
}  // namespace qbil
