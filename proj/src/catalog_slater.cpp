// Slater's transformations: the very-well-poised 2r psi 2r family (with its
// well-poised and fully general forms) and the general r psi r family (with
// the unilateral-right-side form and both general forms related by series
// reversal).

#include "catalog_impl.hpp"

namespace qbil {
namespace cat {
namespace {

// Scales the moduli of b_i = a_i * beta_i so that prod |beta| <= cap.
inline void sample_annulus_pairs(Rng& g, int r, double cap, std::vector<CDouble>& as,
                                 std::vector<CDouble>& bs) {
  as.clear();
  bs.clear();
  std::vector<CDouble> betas;
  double prod = 1.0;
  for (int i = 0; i < r; ++i) {
    as.push_back(g.annulus(0.8, 1.5));
    betas.push_back(g.annulus(0.15, 0.7));
    prod *= abs(betas.back());
  }
  if (prod > cap) {
    double scale = std::pow(cap / prod, 1.0 / r);
    for (auto& b : betas) b = b * CDouble(scale, 0.0);
    prod = cap;
  }
  for (int i = 0; i < r; ++i) bs.push_back(as[size_t(i)] * betas[size_t(i)]);
}

// ------------------------------------------------------------------ 2r2rgl
struct SlaterVWP2r {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "slater_vwp_2r";
    m.title = "Slater's very-well-poised 2r psi 2r transformation";
    m.source = "Slater 1952";
    m.constraints_text = "|a^{r-1} q^{r-2}/(b_3...b_2r)| < 1 or terminating";
    m.shape.r = {3, 6, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a"};
    names_of(v, "b", 3, 2 * sh.r);
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
    CDouble scale = pow_int(a, sh.r - 1) * pow_int(q, sh.r - 2);
    pt.set(idx("b", 2 * sh.r), scale / (prod * g.annulus(0.25, 0.75)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return pow_int(P["a"], sh.r - 1) * cx.qpow(sh.r - 2) / product(list_of(P, "b", 3, 2 * sh.r));
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^{r-1} q^{r-2}/(b_3...b_2r)| < 1", arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return {term<T>(PochRatio<T>{}, vwp<T>(SeriesKind::Bilateral, P["a"],
                                           list_of(P, "b", 3, 2 * sh.r), cx.q.q,
                                           arg(P, sh, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T z = arg(P, sh, cx);
    return idem_sum<T>(P, tail_group("b3", "b", 4, sh.r), [&](const Point<T>& I) {
      const T &a = I["a"], &q = cx.q.q;
      const T& h = I["b3"];
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({q, aq, q / a}).di({q / h, aq / h});
      for (int i = 4; i <= sh.r; ++i) {
        const T& bi = I[idx("b", i)];
        pre.ni({bi, bi / a}).di({bi / h, h * bi / a});
      }
      for (int l = sh.r + 1; l <= 2 * sh.r; ++l) {
        const T& bl = I[idx("b", l)];
        pre.ni({h * q / bl, aq / (h * bl)}).di({q / bl, aq / bl});
      }
      pre.di({h * h * q / a});
      std::vector<T> upper;
      for (int j = 4; j <= 2 * sh.r; ++j) upper.push_back(h * I[idx("b", j)] / a);
      return term<T>(std::move(pre),
                     vwp<T>(SeriesKind::Unilateral, h * h / a, std::move(upper), q, z));
    });
  }
};

// ------------------------------------------------------------------ slw2r2rgl
struct SlaterWP2r {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "slater_wp_2r";
    m.title = "Slater's well-poised 2r psi 2r transformation";
    m.source = "Slater 1952";
    m.constraints_text = "|a^r q^r/(b_1...b_2r)| < 1 or terminating";
    m.shape.r = {2, 5, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a"};
    names_of(v, "b", 1, 2 * sh.r);
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
    CDouble scale = -pow_int(a, sh.r) * pow_int(q, sh.r);
    pt.set(idx("b", 2 * sh.r), scale / (prod * g.annulus(0.25, 0.75)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static T arg(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return -(pow_int(P["a"], sh.r) * cx.qpow(sh.r)) / product(list_of(P, "b", 1, 2 * sh.r));
  }
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^r q^r/(b_1...b_2r)| < 1", arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    std::vector<T> upper = list_of(P, "b", 1, 2 * sh.r);
    std::vector<T> lower;
    for (const T& b : upper) lower.push_back(P["a"] * cx.q.q / b);
    return {term<T>(PochRatio<T>{}, psi<T>(std::move(upper), std::move(lower), arg(P, sh, cx)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T z = arg(P, sh, cx);
    return idem_sum<T>(P, tail_group("b1", "b", 2, sh.r), [&](const Point<T>& I) {
      const T &a = I["a"], &q = cx.q.q;
      const T& h = I["b1"];
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({q, a, q / a}).di({q / h, aq / h});
      for (int i = 2; i <= sh.r; ++i) {
        const T& bi = I[idx("b", i)];
        pre.ni({bi, bi / a}).di({bi / h, h * bi / a});
      }
      for (int l = sh.r + 1; l <= 2 * sh.r; ++l) {
        const T& bl = I[idx("b", l)];
        pre.ni({h * q / bl, aq / (h * bl)}).di({q / bl, aq / bl});
      }
      pre.di({h * h * q / a});
      pre.npair(h * h * q * q / a).npair(aq * q / (h * h));
      pre.dpair(q * q / a).dpair(a);
      std::vector<T> upper{h * h / a};
      std::vector<T> lower;
      for (int j = 2; j <= 2 * sh.r; ++j) {
        const T& bj = I[idx("b", j)];
        upper.push_back(h * bj / a);
        lower.push_back(h * q / bj);
      }
      return term<T>(std::move(pre), phi<T>(std::move(upper), std::move(lower), z));
    });
  }
};

// ------------------------------------------------------------------ sl2r2rgl
struct SlaterWP2rGeneral {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "slater_wp_2r_general";
    m.title = "Slater's general well-poised 2r psi 2r transformation";
    m.source = "Slater 1952";
    m.constraints_text = "|a^r q^r/(b_1...b_2r)| < 1 or terminating";
    m.shape.r = {2, 4, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q", "a"};
    names_of(v, "b", 1, 2 * sh.r);
    names_of(v, "a", 1, sh.r);
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    SlaterWP2r::sample(g, sh, pt);
    for (int i = 1; i <= sh.r; ++i) pt.set(idx("a", i), g.annulus(0.75, 1.35));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|a^r q^r/(b_1...b_2r)| < 1", SlaterWP2r::arg(P, sh, cx))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return SlaterWP2r::lhs(P, sh, cx);
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T z = SlaterWP2r::arg(P, sh, cx);
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
      return term<T>(std::move(pre), psi<T>(std::move(upper), std::move(lower), z));
    });
  }
};

// ------------------------------------------------------------------ slgentfu
struct SlaterRPsiR {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "slater_rpsir";
    m.title = "Slater's r psi r transformation (unilateral right side)";
    m.source = "Slater 1952";
    m.constraints_text = "|b_1...b_r/(a_1...a_r)| < |z| < 1 or terminating";
    m.shape.r = {1, 4, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q"};
    names_of(v, "a", 1, sh.r);
    names_of(v, "b", 1, sh.r);
    v.push_back("z");
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    pt.set("q", sample_q(g));
    std::vector<CDouble> as, bs;
    sample_annulus_pairs(g, sh.r, 0.45, as, bs);
    double ratio = 1.0;
    for (int i = 0; i < sh.r; ++i) {
      pt.set(idx("a", i + 1), as[size_t(i)]);
      pt.set(idx("b", i + 1), bs[size_t(i)]);
      ratio *= abs(bs[size_t(i)]) / abs(as[size_t(i)]);
    }
    pt.set("z", g.between(ratio, 0.9));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>&) {
    T A = product(list_of(P, "a", 1, sh.r));
    T B = product(list_of(P, "b", 1, sh.r));
    const T& z = P["z"];
    return {mod_lt_one<T>("|z| < 1", z),
            mod_lt_one<T>("|b_1...b_r/(a_1...a_r z)| < 1", T(B / (A * z)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>&) {
    return {term<T>(PochRatio<T>{},
                    psi<T>(list_of(P, "a", 1, sh.r), list_of(P, "b", 1, sh.r), P["z"]))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T A = product(list_of(P, "a", 1, sh.r));
    T B = product(list_of(P, "b", 1, sh.r));
    T w = B / (A * P["z"]);
    return idem_sum<T>(P, tail_group("a1", "a", 2, sh.r), [&](const Point<T>& I) {
      const T &q = cx.q.q, &z = I["z"];
      const T& h = I["a1"];
      PochRatio<T> pre;
      pre.ni({q, h * z, q / (h * z)}).di({q / h, z, q / z});
      std::vector<T> upper, lower;
      for (int i = 2; i <= sh.r; ++i) {
        const T& ai = I[idx("a", i)];
        pre.ni({ai}).di({ai / h});
        lower.push_back(h * q / ai);
      }
      for (int j = 1; j <= sh.r; ++j) {
        const T& bj = I[idx("b", j)];
        pre.ni({bj / h}).di({bj});
        upper.push_back(h * q / bj);
      }
      return term<T>(std::move(pre), phi<T>(std::move(upper), std::move(lower), w));
    });
  }
};

// ------------------------------------------------------------------ slgentf
struct SlaterRPsiRGeneral {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "slater_rpsir_general";
    m.title = "Slater's general r psi r transformation";
    m.source = "Slater 1952";
    m.constraints_text = "|b_1...b_r/(a_1...a_r)| < |z| < 1 or terminating";
    m.shape.r = {1, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    std::vector<std::string> v{"q"};
    names_of(v, "a", 1, sh.r);
    names_of(v, "b", 1, sh.r);
    names_of(v, "c", 1, sh.r);
    v.push_back("z");
    return v;
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    SlaterRPsiR::sample(g, sh, pt);
    for (int i = 1; i <= sh.r; ++i) pt.set(idx("c", i), g.annulus(0.75, 1.3));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>& cx) {
    return SlaterRPsiR::constraints(P, sh, cx);
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    return SlaterRPsiR::lhs(P, sh, cx);
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T A = product(list_of(P, "a", 1, sh.r)) / product(list_of(P, "c", 1, sh.r));
    return idem_sum<T>(P, tail_group("c1", "c", 2, sh.r), [&](const Point<T>& I) {
      const T &q = cx.q.q, &z = I["z"];
      const T& h = I["c1"];
      PochRatio<T> pre;
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
      return term<T>(std::move(pre), psi<T>(std::move(upper), std::move(lower), z));
    });
  }
};

// ------------------------------------------------------------------ slgentf1
struct SlaterRPsiRGeneralRev {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "slater_rpsir_general_rev";
    m.title = "Slater's general r psi r transformation, reversed form";
    m.source = "Slater 1952";
    m.constraints_text = "|b_1...b_r/(a_1...a_r)| < |z| < 1 or terminating";
    m.shape.r = {1, 3, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape& sh) {
    return SlaterRPsiRGeneral::params(sh);
  }
  static void sample(Rng& g, const Shape& sh, PointD& pt) {
    pt.set("q", sample_q(g));
    std::vector<CDouble> as, bs;
    sample_annulus_pairs(g, sh.r, 0.45, as, bs);
    CDouble A(1.0, 0.0), B(1.0, 0.0), Cp(1.0, 0.0);
    for (int i = 0; i < sh.r; ++i) {
      pt.set(idx("a", i + 1), as[size_t(i)]);
      pt.set(idx("b", i + 1), bs[size_t(i)]);
      CDouble c = g.annulus(0.75, 1.3);
      pt.set(idx("c", i + 1), c);
      A *= as[size_t(i)];
      B *= bs[size_t(i)];
      Cp *= c;
    }
    // |c_1...c_r z| placed geometrically between |B| and |A|
    pt.set("z", g.between(abs(B), abs(A)) / Cp);
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape& sh,
                                                EvalCtx<T>&) {
    T A = product(list_of(P, "a", 1, sh.r));
    T B = product(list_of(P, "b", 1, sh.r));
    T Cp = product(list_of(P, "c", 1, sh.r));
    const T& z = P["z"];
    return {mod_lt_one<T>("|c_1...c_r z/(a_1...a_r)| < 1", T(Cp * z / A)),
            mod_lt_one<T>("|b_1...b_r/(c_1...c_r z)| < 1", T(B / (Cp * z)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>&) {
    T A = product(list_of(P, "a", 1, sh.r));
    T Cp = product(list_of(P, "c", 1, sh.r));
    return {term<T>(PochRatio<T>{}, psi<T>(list_of(P, "a", 1, sh.r), list_of(P, "b", 1, sh.r),
                                           T(Cp * P["z"] / A)))};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    T B = product(list_of(P, "b", 1, sh.r));
    T Cp = product(list_of(P, "c", 1, sh.r));
    T w = B / (Cp * P["z"]);
    return idem_sum<T>(P, tail_group("c1", "c", 2, sh.r), [&](const Point<T>& I) {
      const T &q = cx.q.q, &z = I["z"];
      const T& h = I["c1"];
      PochRatio<T> pre;
      pre.ni({h * z, q / (h * z)}).di({z, q / z});
      std::vector<T> upper, lower;
      for (int i = 1; i <= sh.r; ++i) {
        const T& ai = I[idx("a", i)];
        const T& bi = I[idx("b", i)];
        pre.ni({h * q / ai, bi / h}).di({q / ai, bi});
        upper.push_back(h * q / bi);
        lower.push_back(h * q / ai);
      }
      for (int i = 2; i <= sh.r; ++i) {
        const T& ci = I[idx("c", i)];
        pre.ni({ci, q / ci}).di({h * q / ci, ci / h});
      }
      return term<T>(std::move(pre), psi<T>(std::move(upper), std::move(lower), w));
    });
  }
};

}  // namespace

void register_slater(std::vector<Identity>& out) {
  out.push_back(make_identity<SlaterVWP2r>());
  out.push_back(make_identity<SlaterWP2r>());
  out.push_back(make_identity<SlaterWP2rGeneral>());
  out.push_back(make_identity<SlaterRPsiR>());
  out.push_back(make_identity<SlaterRPsiRGeneral>());
  out.push_back(make_identity<SlaterRPsiRGeneralRev>());
}

}  // namespace cat
}  // namespace qbil
