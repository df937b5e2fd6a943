// Kernel identities: finite-n parameterized summations whose bilateralization
// under n-dependent weights produces the 6psi6, 8psi8 and r psi r families.
// Their summands carry q-shifted factorials at indices n+k and n-k; terms are
// ratio-stepped, with the n-k factors in the stable (q^{k+1-n} - x) form so
// nothing grows with k.

#include "catalog_impl.hpp"

namespace qbil {
namespace cat {
namespace {

template <class T>
void guard_kernel_sigma(const T& sigma, EvalCtx<T>& cx) {
  T d = T(1) - sigma;
  double m = field_traits<T>::mag_to_double(mag(d)) /
             (1.0 + field_traits<T>::mag_to_double(mag(sigma)));
  if (m < cx.opt.degenerate_radius)
    fail(errc::degenerate_point, "kernel special parameter too close to 1");
  if (auto j = match_neg_q_power(sigma, cx); j && *j % 2 == 0)
    fail(errc::degenerate_point, "kernel special parameter is q^-2k");
}

template <class T>
T ext_value(const Ext<T>& num, const Ext<T>& den) {
  Ext<T> v = num / den;
  if (v.pole) fail(errc::pole_in_term, "pole in kernel summand");
  return v.v;
}

// ------------------------------------------------------------------ key1
struct KernelKey1 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "kernel_key1";
    m.title = "one-parameter kernel summation (6psi6 seed)";
    m.source = "rewriting of Rogers' 6phi5 summation";
    m.constraints_text = "|aq/(bc)| < 1";
    m.shape.n = {-5, 5, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.6, 1.3), b = g.annulus(0.8, 1.5);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", a * q / (b * g.annulus(0.25, 0.75)));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    return {mod_lt_one<T>("|aq/(bc)| < 1", T(P["a"] * cx.q.q / (P["b"] * P["c"])))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T a = P["a"], b = P["b"], c = P["c"], q = cx.q.q;
    const long n = sh.n;
    PochRatio<T> pre;
    pre.ni({c * q / b, q / a, q, a * q / (b * c)}).di({c * q / a, q / b, a * q / b, q / c});
    TermSpec<T> t;
    t.pre = std::move(pre);
    t.custom = [=](EvalCtx<T>& icx) {
      const T& qq = icx.q.q;
      T sigma = c / a;
      guard_kernel_sigma(sigma, icx);
      T w = a / b;
      // The factor 1/(q;q)_{n+k} kills all terms with n+k < 0.
      const long k0 = std::max<long>(0, -n);
      Ext<T> num = qpoch(sigma, icx, k0) * qpoch(T(b / a), icx, k0) * qpoch(c, icx, n + k0) *
                   qpoch(a, icx, n - k0);
      Ext<T> den = qpoch(qq, icx, k0) * qpoch(T(c * qq / b), icx, k0) *
                   qpoch(qq, icx, n + k0) * qpoch(T(a * qq / c), icx, n - k0);
      T first = ext_value(num, den) * pow_int(w, k0);
      first *= (T(1) - sigma * icx.qpow(2 * k0)) / (T(1) - sigma);
      // running quantities at index k
      T sq2k = sigma * icx.qpow(2 * k0);
      T q2 = qq * qq;
      T sqk = sigma * icx.qpow(k0);
      T bqk = (b / a) * icx.qpow(k0);
      T qk1 = icx.qpow(k0 + 1);
      T lqk = (c * qq / b) * icx.qpow(k0);
      T cqnk = c * icx.qpow(n + k0);
      T qnk1 = icx.qpow(n + k0 + 1);
      T u = icx.qpow(k0 + 1 - n);
      T aoc = a * qq / c;
      auto ratio = [=](long) mutable {
        T next = sq2k * q2;
        T r = w * (T(1) - next) / (T(1) - sq2k);
        sq2k = next;
        r *= (T(1) - sqk) * (T(1) - bqk) / ((T(1) - qk1) * (T(1) - lqk));
        r *= (T(1) - cqnk) / (T(1) - qnk1);
        r *= (u - aoc) / (u - a);
        sqk *= qq;
        bqk *= qq;
        qk1 *= qq;
        lqk *= qq;
        cqnk *= qq;
        qnk1 *= qq;
        u *= qq;
        return r;
      };
      SeriesDiag sd;
      T v = detail::sum_terms(first, k0, std::nullopt, ratio, [](long) { return T(1); }, icx, sd);
      detail::note_series(icx, sd);
      return v;
    };
    return {std::move(t)};
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &q = cx.q.q;
    PochRatio<T> pre;
    pre.nf(b, sh.n).nf(c, sh.n).df(a * q / b, sh.n).df(a * q / c, sh.n);
    pre.times(pow_int(T(a / b), sh.n));
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ 87ntgl2
struct Kernel87NTgl2 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "kernel_87ntgl2";
    m.title = "two-term kernel summation (8psi8 seed)";
    m.source = "rewriting of Bailey's nonterminating 8phi7 summation";
    m.constraints_text = "|bcde/(a^2 q)| < 1";
    m.shape.n = {-5, 5, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a", "b", "c", "d", "e"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    CDouble q = sample_q(g);
    pt.set("q", q);
    CDouble a = g.annulus(0.7, 1.3), b = g.annulus(0.85, 1.4), c = g.annulus(0.85, 1.4),
            d = g.annulus(0.85, 1.4);
    pt.set("a", a);
    pt.set("b", b);
    pt.set("c", c);
    pt.set("d", d);
    pt.set("e", a * a * q * g.annulus(0.25, 0.7) / (b * c * d));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>& P, const Shape&, EvalCtx<T>& cx) {
    const T &a = P["a"], &b = P["b"], &c = P["c"], &d = P["d"], &e = P["e"];
    return {mod_lt_one<T>("|bcde/(a^2 q)| < 1", T(b * c * d * e / (a * a * cx.q.q)))};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const long n = sh.n;
    return idem_sum<T>(P, IdemGroup{"b", {"c"}}, [&](const Point<T>& I) {
      const T a = I["a"], b = I["b"], c = I["c"], d = I["d"], e = I["e"], q = cx.q.q;
      T cde = c * d * e;
      T aq = a * q;
      PochRatio<T> pre;
      pre.ni({b * q / d, aq * q / cde, a * aq * q / cde, b * q / e, aq / (b * e), c, c / a,
              aq / (b * d)})
          .di({a * b * q * q / cde, c / b, q / d, aq / d, b * c / a,
               a * aq * q / (b * cde), q / e, aq / e});
      TermSpec<T> t;
      t.pre = std::move(pre);
      t.custom = [=](EvalCtx<T>& icx) {
        const T& qq = icx.q.q;
        T sigma = a * b * qq / cde;
        guard_kernel_sigma(sigma, icx);
        T w = b * cde / (a * a * qq);
        T up_shift = a * a * qq * qq / cde;  // (a^2 q^2/(cde);q)_{n+k}
        T dn_shift = cde / (a * qq);         // (cde/(aq);q)_{n-k}
        T aob = a * qq / b;
        Ext<T> num = qpoch(sigma, icx, 0) * qpoch(b, icx, n) * qpoch(dn_shift, icx, n);
        Ext<T> den = qpoch(up_shift, icx, n) * qpoch(aob, icx, n);
        T first = ext_value(num, den);
        T sq2k = sigma;
        T q2 = qq * qq;
        std::vector<T> ups{sigma, aq / (d * e), aq / (c * e), aq / (c * d)};
        std::vector<T> los{qq, b * qq / c, b * qq / d, b * qq / e};
        T bqn = b * icx.qpow(n);
        T upqn = up_shift * icx.qpow(n);
        T u = icx.qpow(1 - n);
        auto ratio = [=](long) mutable {
          T next = sq2k * q2;
          T r = w * (T(1) - next) / (T(1) - sq2k);
          sq2k = next;
          for (size_t i = 0; i < ups.size(); ++i) {
            r *= (T(1) - ups[i]) / (T(1) - los[i]);
            ups[i] *= qq;
            los[i] *= qq;
          }
          r *= (T(1) - bqn) / (T(1) - upqn);
          bqn *= qq;
          upqn *= qq;
          r *= (u - aob) / (u - dn_shift);
          u *= qq;
          return r;
        };
        SeriesDiag sd;
        T v =
            detail::sum_terms(first, 0, std::nullopt, ratio, [](long) { return T(1); }, icx, sd);
        detail::note_series(icx, sd);
        return v;
      };
      return t;
    });
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const T &a = P["a"], &q = cx.q.q;
    PochRatio<T> pre;
    for (const char* nm : {"b", "c", "d", "e"}) {
      pre.nf(P[nm], sh.n);
      pre.df(a * q / P[nm], sh.n);
    }
    return {term(std::move(pre))};
  }
};

// ------------------------------------------------------------------ key32gl
struct KernelKey32 {
  static IdentityMeta meta() {
    IdentityMeta m;
    m.id = "kernel_key32";
    m.title = "balanced kernel summation (r psi r seed)";
    m.source = "equivalent to the nonterminating q-Pfaff-Saalschutz summation";
    m.constraints_text = "generic parameters";
    m.shape.n = {-5, 5, true};
    m.recommended = Tower::Big;
    return m;
  }
  static std::vector<std::string> params(const Shape&) { return {"q", "a1", "a2", "b1", "b2"}; }
  static void sample(Rng& g, const Shape&, PointD& pt) {
    pt.set("q", sample_q(g));
    pt.set("a1", g.annulus(0.7, 1.4));
    pt.set("a2", g.annulus(0.7, 1.4));
    pt.set("b1", g.annulus(0.6, 1.3));
    pt.set("b2", g.annulus(0.6, 1.3));
  }
  template <class T>
  static void derive(Point<T>&, const Shape&, EvalCtx<T>&) {}
  template <class T>
  static std::vector<Constraint<T>> constraints(const Point<T>&, const Shape&, EvalCtx<T>&) {
    return {};
  }
  template <class T>
  static Terms<T> lhs(const Point<T>& P, const Shape& sh, EvalCtx<T>& cx) {
    const long n = sh.n;
    return idem_sum<T>(P, IdemGroup{"a1", {"a2"}}, [&](const Point<T>& I) {
      const T a1 = I["a1"], a2 = I["a2"], b1 = I["b1"], b2 = I["b2"];
      PochRatio<T> pre;
      pre.ni({b1 * b2 / a2, b2 / a1, a2, b1 / a1})
          .di({a2 / a1, b1, b1 * b2 / (a1 * a2), b2});
      TermSpec<T> t;
      t.pre = std::move(pre);
      t.custom = [=](EvalCtx<T>& icx) {
        const T& qq = icx.q.q;
        T shift = b1 * b2 / a2;
        Ext<T> num = qpoch(a1, icx, n);
        Ext<T> den = qpoch(shift, icx, n);
        T first = ext_value(num, den);
        std::vector<T> ups{b1 / a2, b2 / a2};
        std::vector<T> los{qq, a1 * qq / a2};
        T a1qn = a1 * icx.qpow(n);
        T shqn = shift * icx.qpow(n);
        auto ratio = [=](long) mutable {
          T r = qq;
          for (size_t i = 0; i < ups.size(); ++i) {
            r *= (T(1) - ups[i]) / (T(1) - los[i]);
            ups[i] *= qq;
            los[i] *= qq;
          }
          r *= (T(1) - a1qn) / (T(1) - shqn);
          a1qn *= qq;
          shqn *= qq;
          return r;
        };
        SeriesDiag sd;
        T v =
            detail::sum_terms(first, 0, std::nullopt, ratio, [](long) { return T(1); }, icx, sd);
        detail::note_series(icx, sd);
        return v;
      };
      return t;
    });
  }
  template <class T>
  static Terms<T> rhs(const Point<T>& P, const Shape& sh, EvalCtx<T>&) {
    PochRatio<T> pre;
    pre.nf(P["a1"], sh.n).nf(P["a2"], sh.n).df(P["b1"], sh.n).df(P["b2"], sh.n);
    return {term(std::move(pre))};
  }
};

}  // namespace

void register_kernels(std::vector<Identity>& out) {
  out.push_back(make_identity<KernelKey1>());
  out.push_back(make_identity<Kernel87NTgl2>());
  out.push_back(make_identity<KernelKey32>());
}

}  // namespace cat
}  // namespace qbil
