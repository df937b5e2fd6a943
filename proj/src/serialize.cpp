#include "qbil/serialize.hpp"

namespace qbil {

json scalar_to_json(const CDouble& v) { return json::array({v.re, v.im}); }
json scalar_to_json(const Rational& v) { return json(v.str()); }

static Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad rational literal '" + s + "'");
  }
}

static Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return Scalar(rational_from_string(j.get<std::string>()));
  if (j.is_number()) return Scalar(CDouble(j.get<double>(), 0.0));
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Scalar(CDouble(j[0].get<double>(), j[1].get<double>()));
  fail(errc::parse_error, "field '" + where + "': expected [re, im] or \"p/q\"");
}

json shape_to_json(const Shape& sh) {
  json j = json::object();
  if (sh.r) j["r"] = sh.r;
  if (sh.s) j["s"] = sh.s;
  if (sh.N) j["N"] = sh.N;
  if (sh.n) j["n"] = sh.n;
  if (!sh.m.empty()) j["m"] = sh.m;
  return j;
}

Shape shape_from_json(const json& j) {
  Shape sh;
  if (j.contains("r")) sh.r = j["r"].get<int>();
  if (j.contains("s")) sh.s = j["s"].get<int>();
  if (j.contains("N")) sh.N = j["N"].get<int>();
  if (j.contains("n")) sh.n = j["n"].get<int>();
  if (j.contains("m")) sh.m = j["m"].get<std::vector<int>>();
  if (sh.s == 0 && !sh.m.empty()) sh.s = int(sh.m.size());
  while (int(sh.m.size()) < sh.s) sh.m.push_back(0);
  return sh;
}

json point_to_json(const PointRecord& pr) {
  json params = json::object();
  if (pr.xp) {
    for (const auto& kv : pr.xp->items()) params[kv.first] = scalar_to_json(kv.second);
  } else {
    for (const auto& kv : pr.fp.items()) params[kv.first] = scalar_to_json(kv.second);
  }
  json j = json::object();
  j["params"] = std::move(params);
  json sh = shape_to_json(pr.shape);
  if (!sh.empty()) j["shape"] = std::move(sh);
  return j;
}

PointRecord point_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "point file must be a JSON object");
  PointRecord pr;
  const json& params = j.contains("params") ? j.at("params") : j;
  bool any_float = false, any_exact = false;
  PointX px;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (it.key() == "shape") continue;
    Scalar s = scalar_from_json(it.value(), it.key());
    if (s.tower() == Tower::Exact) {
      any_exact = true;
      px.set(it.key(), std::get<Rational>(s.v));
      const Rational& r = std::get<Rational>(s.v);
      pr.fp.set(it.key(), CDouble(r.convert_to<double>(), 0.0));
    } else {
      any_float = true;
      pr.fp.set(it.key(), std::get<CDouble>(s.v));
    }
  }
  if (any_exact && !any_float) pr.xp = std::move(px);
  if (j.contains("shape")) pr.shape = shape_from_json(j.at("shape"));
  return pr;
}

static json constraint_to_json(const ConstraintResult& c) {
  json j = json::object();
  j["name"] = c.name;
  j["kind"] = c.equality ? "equality" : "inequality";
  j["satisfied"] = c.satisfied;
  j["magnitude"] = c.magnitude;
  if (c.waived_by_termination) j["waived_by_termination"] = true;
  return j;
}

json report_to_json(const VerificationReport& rep) {
  json j = json::object();
  j["identity"] = rep.identity;
  j["seed"] = rep.seed;
  j["index"] = rep.index;
  j["point"] = point_to_json(rep.point);
  j["tower"] = tower_name(rep.tower);
  j["lhs"] = rep.lhs;
  j["rhs"] = rep.rhs;
  j["abs_residual"] = rep.abs_residual;
  j["rel_residual"] = rep.rel_residual;
  j["status"] = status_name(rep.status);
  if (!rep.error.empty()) j["error"] = rep.error;
  if (!rep.constraint_results.empty()) {
    json cs = json::array();
    for (const auto& c : rep.constraint_results) cs.push_back(constraint_to_json(c));
    j["constraints"] = std::move(cs);
  }
  json d = json::object();
  d["series_count"] = rep.diagnostics.series_count;
  d["total_terms"] = rep.diagnostics.total_terms;
  d["max_series_terms"] = rep.diagnostics.max_series_terms;
  d["products"] = rep.diagnostics.products;
  d["max_product_factors"] = rep.diagnostics.max_product_factors;
  d["max_product_remainder"] = rep.diagnostics.max_product_remainder;
  d["terminated"] = rep.diagnostics.any_terminated;
  j["diagnostics"] = std::move(d);
  if (rep.certificate) {
    json c = json::object();
    c["certified"] = rep.certificate->certified;
    c["eps"] = rep.certificate->eps;
    c["gap"] = rep.certificate->gap;
    c["forward_cut"] = rep.certificate->forward_cut;
    c["backward_cut"] = rep.certificate->backward_cut;
    c["product_cut"] = rep.certificate->product_cut;
    j["certificate"] = std::move(c);
  }
  return j;
}

json summary_to_json(const SweepSummary& s) {
  json j = json::object();
  j["summary"] = true;
  j["identity"] = s.identity;
  j["n_points"] = s.n_points;
  j["pass"] = s.pass;
  j["fail"] = s.fail;
  j["skip"] = s.skip;
  j["max_residual"] = s.max_residual;
  j["wall_s"] = s.wall_s;
  return j;
}

const char* kReportCsvHeader =
    "identity,seed,index,tower,status,rel_residual,abs_residual,error,series_terms,wall_ms";

std::string report_to_csv(const VerificationReport& rep) {
  std::string out;
  out += rep.identity;
  out += ',';
  out += std::to_string(rep.seed);
  out += ',';
  out += std::to_string(rep.index);
  out += ',';
  out += tower_name(rep.tower);
  out += ',';
  out += status_name(rep.status);
  out += ',';
  out += format_double(rep.rel_residual);
  out += ',';
  out += format_double(rep.abs_residual);
  out += ',';
  out += rep.error;
  out += ',';
  out += std::to_string(rep.diagnostics.total_terms);
  out += ',';
  out += format_double(rep.wall_ms);
  return out;
}

json catalog_to_json() {
  json arr = json::array();
  for (const Identity& I : catalog()) {
    json j = json::object();
    j["id"] = I.meta.id;
    j["title"] = I.meta.title;
    j["source"] = I.meta.source;
    j["constraints"] = I.meta.constraints_text;
    json sh = json::object();
    auto put = [&](const char* name, const ShapeRanges::Range& r) {
      if (r.used) sh[name] = json::array({r.lo, r.hi});
    };
    put("r", I.meta.shape.r);
    put("s", I.meta.shape.s);
    put("N", I.meta.shape.N);
    put("n", I.meta.shape.n);
    put("m", I.meta.shape.m);
    if (!sh.empty()) j["shape"] = std::move(sh);
    Shape probe;
    probe.r = I.meta.shape.r.used ? I.meta.shape.r.lo : 0;
    probe.s = I.meta.shape.s.used ? I.meta.shape.s.lo : 0;
    for (int i = 0; i < probe.s; ++i) probe.m.push_back(I.meta.shape.m.lo);
    j["params"] = I.param_names(probe);
    j["recommended_tower"] = tower_name(I.meta.recommended);
    j["exact_capable"] = I.meta.exact_ok;
    arr.push_back(std::move(j));
  }
  return arr;
}

SpecFile spec_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "spec file must be a JSON object");
  SpecFile f;
  if (!j.contains("kind")) fail(errc::parse_error, "missing field 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "unilateral")
    f.kind = SeriesKind::Unilateral;
  else if (kind == "bilateral")
    f.kind = SeriesKind::Bilateral;
  else
    fail(errc::parse_error, "field 'kind': expected 'unilateral' or 'bilateral'");
  auto read_list = [&](const char* name, std::vector<Scalar>& out) {
    if (!j.contains(name)) return;
    const json& arr = j.at(name);
    if (!arr.is_array()) fail(errc::parse_error, std::string("field '") + name + "' must be a list");
    for (size_t i = 0; i < arr.size(); ++i)
      out.push_back(scalar_from_json(arr[i], std::string(name) + "[" + std::to_string(i) + "]"));
  };
  read_list("upper", f.upper);
  read_list("lower", f.lower);
  if (!j.contains("q")) fail(errc::parse_error, "missing field 'q'");
  if (!j.contains("z")) fail(errc::parse_error, "missing field 'z'");
  f.q = scalar_from_json(j.at("q"), "q");
  f.z = scalar_from_json(j.at("z"), "z");
  for (const Scalar* s : {&f.q, &f.z})
    if (s->tower() != Tower::Exact) f.all_exact = false;
  for (const auto& v : f.upper)
    if (v.tower() != Tower::Exact) f.all_exact = false;
  for (const auto& v : f.lower)
    if (v.tower() != Tower::Exact) f.all_exact = false;
  return f;
}

}  // namespace qbil
