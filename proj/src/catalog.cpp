// Catalog assembly and the registered specialization maps between entries.

#include <algorithm>

#include "catalog_impl.hpp"

namespace qbil {

const std::vector<Identity>& catalog() {
  static const std::vector<Identity> all = [] {
    std::vector<Identity> v;
    cat::register_core(v);
    cat::register_slater(v);
    cat::register_ckm(v);
    cat::register_kernels(v);
    std::sort(v.begin(), v.end(),
              [](const Identity& a, const Identity& b) { return a.meta.id < b.meta.id; });
    return v;
  }();
  return all;
}

const Identity& find_identity(std::string_view id) {
  for (const Identity& I : catalog())
    if (I.meta.id == id) return I;
  fail(errc::unknown_map, "unknown identity '" + std::string(id) + "'");
}

namespace {

using cat::idx;

PointRecord sample_of(const char* id, Rng& g, std::optional<Shape> pinned = std::nullopt) {
  const Identity& I = find_identity(id);
  PointRecord pr;
  pr.shape = pinned ? *pinned : I.sample_shape(g, I.meta.shape);
  I.sample_params(g, pr.shape, pr.fp);
  return pr;
}

std::vector<SpecializationMap> build_specializations() {
  std::vector<SpecializationMap> maps;

  maps.push_back({"ramanujan_1psi1", "q_binomial", "b=q",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    tgt = sample_of("q_binomial", g);
                    src = tgt;
                    src.fp.set("b", tgt.fp["q"]);
                  }});

  maps.push_back({"bailey_6psi6", "rogers_6phi5", "e=a",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    tgt = sample_of("rogers_6phi5", g);
                    src = tgt;
                    src.fp.set("e", tgt.fp["a"]);
                  }});

  maps.push_back({"bailey_8phi7_nt", "jackson_8phi7", "f=q^-n",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    Shape sh;
                    sh.n = g.uniform_int(0, 6);
                    tgt = sample_of("jackson_8phi7", g, sh);
                    src.shape = Shape{};
                    src.fp = tgt.fp;
                    CDouble q = tgt.fp["q"], a = tgt.fp["a"];
                    CDouble bcd = tgt.fp["b"] * tgt.fp["c"] * tgt.fp["d"];
                    src.fp.set("e", a * a * q * pow_int(q, long(sh.n)) / bcd);
                  }});

  maps.push_back({"slater_wp_2r_general", "slater_wp_2r", "a_i=b_i",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    Shape sh;
                    sh.r = g.uniform_int(2, 4);
                    tgt = sample_of("slater_wp_2r", g, sh);
                    src = tgt;
                    for (int i = 1; i <= sh.r; ++i)
                      src.fp.set(idx("a", i), tgt.fp[idx("b", i)]);
                  }});

  maps.push_back({"slater_rpsir_general_rev", "slater_rpsir", "c_i=a_i",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    Shape sh;
                    sh.r = g.uniform_int(1, 3);
                    tgt = sample_of("slater_rpsir", g, sh);
                    src = tgt;
                    for (int i = 1; i <= sh.r; ++i)
                      src.fp.set(idx("c", i), tgt.fp[idx("a", i)]);
                  }});

  maps.push_back({"ckm_general", "slater_rpsir_general", "s=0",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    tgt = sample_of("slater_rpsir_general", g);
                    src = tgt;
                    src.shape.s = 0;
                    src.shape.m.clear();
                  }});

  maps.push_back({"ckm_km1_rev", "chu_2s_tf", "e=bq",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    tgt = sample_of("chu_2s_tf", g);
                    src = tgt;
                    src.fp.set("e", tgt.fp["b"] * tgt.fp["q"]);
                  }});

  maps.push_back({"ckm_km3", "chu_vwp_sum", "f=d,e=a/d",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    tgt = sample_of("chu_vwp_sum", g);
                    src = tgt;
                    src.fp.set("f", tgt.fp["d"]);
                    src.fp.set("e", tgt.fp["a"] / tgt.fp["d"]);
                  }});

  // Setting the last two parameters of the very-well-poised form to +-w with
  // a = w^2 cancels the special-parameter structure and leaves the well-poised
  // form of two ranks lower; the opposite slice at +-qw rebuilds it. The two
  // transformations are equivalent through these slices.
  maps.push_back({"slater_vwp_2r", "slater_wp_2r", "wp-slice",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    int r = g.uniform_int(2, 4);  // target rank; source rank r+2
                    CDouble w = g.annulus(0.8, 1.2);
                    CDouble q = cat::sample_q(g);
                    CDouble a = w * w;
                    tgt.shape = Shape{};
                    tgt.shape.r = r;
                    tgt.fp.set("q", q);
                    tgt.fp.set("a", a);
                    CDouble prod(1.0, 0.0);
                    for (int i = 1; i < 2 * r; ++i) {
                      CDouble v = g.annulus(0.85, 1.5);
                      tgt.fp.set(idx("b", i), v);
                      prod *= v;
                    }
                    CDouble scale = -pow_int(a, r) * pow_int(q, r);
                    tgt.fp.set(idx("b", 2 * r), scale / (prod * g.annulus(0.3, 0.75)));
                    src.shape = Shape{};
                    src.shape.r = r + 2;
                    src.fp.set("q", q);
                    src.fp.set("a", a);
                    for (int j = 3; j <= 2 * r + 2; ++j)
                      src.fp.set(idx("b", j), tgt.fp[idx("b", j - 2)]);
                    src.fp.set(idx("b", 2 * r + 3), w);
                    src.fp.set(idx("b", 2 * r + 4), -w);
                  }});

  maps.push_back({"slater_wp_2r", "slater_vwp_2r", "vwp-slice",
                  [](Rng& g, PointRecord& src, PointRecord& tgt) {
                    int r = g.uniform_int(3, 5);  // shared rank
                    CDouble w = g.annulus(0.8, 1.2);
                    CDouble q = cat::sample_q(g);
                    CDouble a = w * w;
                    tgt.shape = Shape{};
                    tgt.shape.r = r;
                    tgt.fp.set("q", q);
                    tgt.fp.set("a", a);
                    CDouble prod(1.0, 0.0);
                    for (int i = 3; i < 2 * r; ++i) {
                      CDouble v = g.annulus(0.85, 1.5);
                      tgt.fp.set(idx("b", i), v);
                      prod *= v;
                    }
                    CDouble scale = pow_int(a, r - 1) * pow_int(q, r - 2);
                    tgt.fp.set(idx("b", 2 * r), scale / (prod * g.annulus(0.3, 0.75)));
                    src.shape = Shape{};
                    src.shape.r = r;
                    src.fp.set("q", q);
                    src.fp.set("a", a);
                    for (int j = 1; j <= 2 * r - 2; ++j)
                      src.fp.set(idx("b", j), tgt.fp[idx("b", j + 2)]);
                    src.fp.set(idx("b", 2 * r - 1), q * w);
                    src.fp.set(idx("b", 2 * r), -(q * w));
                  }});

  return maps;
}

}  // namespace

const std::vector<SpecializationMap>& specializations() {
  static const std::vector<SpecializationMap> maps = build_specializations();
  return maps;
}

const SpecializationMap& find_specialization(std::string_view source_id, std::string_view name) {
  for (const auto& m : specializations())
    if (m.source_id == source_id && m.name == name) return m;
  fail(errc::unknown_map,
       "no specialization '" + std::string(name) + "' from '" + std::string(source_id) + "'");
}

}  // namespace qbil
