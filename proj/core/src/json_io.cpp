#include "seriescone/json_io.hpp"

#include <stdexcept>

namespace seriescone {

Json rat_to_json(const Rat& r) {
  if (r.is_integer()) return Json(r.num());
  return Json::array({r.num(), r.den()});
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<Int>());
  if (j.is_array() && j.size() == 2) return Rat(j[0].get<Int>(), j[1].get<Int>());
  throw std::invalid_argument("expected an integer or a [num, den] pair");
}

Json quad_to_json(const Quad& q) {
  if (q.is_rational()) return rat_to_json(q.a);
  Json j;
  j["a"] = rat_to_json(q.a);
  j["b"] = rat_to_json(q.b);
  j["D"] = q.D;
  return j;
}

Quad quad_from_json(const Json& j) {
  if (j.is_object()) {
    return Quad(rat_from_json(j.at("a")), rat_from_json(j.at("b")), j.at("D").get<Int>());
  }
  return Quad(rat_from_json(j));
}

Json vec_to_json(const RatVec& v) {
  Json j = Json::array();
  for (const Rat& c : v) j.push_back(rat_to_json(c));
  return j;
}

RatVec ratvec_from_json(const Json& j) {
  RatVec v;
  for (const Json& c : j) v.push_back(rat_from_json(c));
  return v;
}

Json vec_to_json(const IntVec& v) {
  Json j = Json::array();
  for (Int c : v) j.push_back(c);
  return j;
}

IntVec intvec_from_json(const Json& j) {
  IntVec v;
  for (const Json& c : j) v.push_back(c.get<Int>());
  return v;
}

Json cone_to_json(const Cone& c) {
  Json j;
  j["generators"] = Json::array();
  for (const IntVec& g : c.generators()) j["generators"].push_back(vec_to_json(g));
  j["facets"] = Json::array();
  for (const IntVec& f : c.facets()) j["facets"].push_back(vec_to_json(f));
  j["dim"] = c.dim();
  j["strongly_convex"] = c.strongly_convex();
  return j;
}

Cone cone_from_json(const Json& j) {
  if (j.contains("generators")) {
    std::vector<RatVec> gens;
    for (const Json& g : j.at("generators")) gens.push_back(ratvec_from_json(g));
    int n = gens.empty() ? j.value("n", 0) : static_cast<int>(gens[0].size());
    if (n == 0) throw std::invalid_argument("cone needs generators or an ambient dimension n");
    return Cone::from_generators_rat(n, gens);
  }
  if (j.contains("facets")) {
    std::vector<IntVec> facets;
    for (const Json& f : j.at("facets")) facets.push_back(primitive_direction(ratvec_from_json(f)));
    int n = facets.empty() ? j.value("n", 0) : static_cast<int>(facets[0].size());
    if (n == 0) throw std::invalid_argument("cone needs facets or an ambient dimension n");
    return Cone::from_inequalities(n, facets);
  }
  throw std::invalid_argument("cone needs generators or facets");
}

Json order_to_json(const WeightOrder& o) {
  Json j;
  j["weights"] = Json::array();
  for (const QuadVec& w : o.weights()) {
    Json row = Json::array();
    for (const Quad& q : w) row.push_back(quad_to_json(q));
    j["weights"].push_back(row);
  }
  return j;
}

WeightOrder order_from_json(const Json& j) {
  std::vector<QuadVec> ws;
  for (const Json& row : j.at("weights")) {
    QuadVec w;
    for (const Json& q : row) w.push_back(quad_from_json(q));
    ws.push_back(std::move(w));
  }
  return WeightOrder(std::move(ws));
}

Json spec_to_json(const SupportSpec& s) {
  Json j;
  j["n"] = s.n;
  j["points"] = Json::array();
  for (const RatVec& p : s.points) j["points"].push_back(vec_to_json(p));
  j["rays"] = Json::array();
  for (const auto& r : s.rays) {
    Json f;
    f["base"] = vec_to_json(r.base);
    f["step"] = vec_to_json(r.step);
    j["rays"].push_back(f);
  }
  j["semigroups"] = Json::array();
  for (const auto& g : s.semigroups) {
    Json f;
    f["base"] = vec_to_json(g.base);
    f["gens"] = Json::array();
    for (const RatVec& v : g.gens) f["gens"].push_back(vec_to_json(v));
    j["semigroups"].push_back(f);
  }
  j["ptails"] = Json::array();
  for (const auto& t : s.ptails) {
    Json f;
    f["base"] = vec_to_json(t.base);
    f["dir"] = vec_to_json(t.dir);
    f["p"] = t.p;
    j["ptails"].push_back(f);
  }
  j["scale"] = s.lattice_scale;
  return j;
}

SupportSpec spec_from_json(const Json& j) {
  SupportSpec s;
  s.n = j.at("n").get<int>();
  if (j.contains("points"))
    for (const Json& p : j.at("points")) s.points.push_back(ratvec_from_json(p));
  if (j.contains("rays"))
    for (const Json& r : j.at("rays"))
      s.rays.push_back({ratvec_from_json(r.at("base")), ratvec_from_json(r.at("step"))});
  if (j.contains("semigroups"))
    for (const Json& g : j.at("semigroups")) {
      SemigroupFamily f;
      f.base = ratvec_from_json(g.at("base"));
      for (const Json& v : g.at("gens")) f.gens.push_back(ratvec_from_json(v));
      s.semigroups.push_back(std::move(f));
    }
  if (j.contains("ptails"))
    for (const Json& t : j.at("ptails"))
      s.ptails.push_back({ratvec_from_json(t.at("base")), ratvec_from_json(t.at("dir")),
                          t.at("p").get<Int>()});
  s.lattice_scale = j.value("scale", 1);
  s.validate();
  return s;
}

namespace {

Json conditions_to_json(const std::vector<TauCondition>& conds) {
  Json j = Json::array();
  for (const TauCondition& c : conds) {
    Json e;
    e["normal"] = vec_to_json(c.normal);
    e["strict"] = c.strict;
    j.push_back(e);
  }
  return j;
}

}  // namespace

Json tau_result_to_json(const TauResult& r) {
  Json j;
  j["tau"] = cone_to_json(r.tau);
  j["tau_dual"] = cone_to_json(r.tau_dual);
  j["tau_tilde"] = cone_to_json(r.tau_tilde);
  j["tau0_conditions"] = conditions_to_json(r.tau0);
  j["tau0_empty"] = r.tau0_empty;
  j["tau1_conditions"] = conditions_to_json(r.tau1);
  return j;
}

Json threshold_to_json(const ThresholdInfo& t) {
  Json j;
  j["t"] = rat_to_json(t.t);
  j["attained"] = t.attained;
  j["level_infinite"] = t.level_infinite;
  return j;
}

Json census_to_json(const HalfspaceCensus& c) {
  Json j;
  j["below"] = c.below_infinite ? Json("infinite") : Json(c.below_count);
  j["on"] = c.on_infinite ? Json("infinite") : Json(c.on_count);
  return j;
}

Json diagnostic_to_json(const DiagnosticReport& r) {
  Json j;
  j["levels"] = Json::array();
  for (const auto& l : r.levels) {
    Json e;
    e["points"] = l.point_count;
    e["rays"] = Json::array();
    for (const IntVec& ray : l.rays) e["rays"].push_back(vec_to_json(ray));
    j["levels"].push_back(e);
  }
  switch (r.verdict) {
    case StabilizationVerdict::Stabilized:
      j["verdict"] = "stabilized";
      j["stabilized_at"] = r.stabilized_at;
      break;
    case StabilizationVerdict::NonStabilizing:
      j["verdict"] = "non-stabilizing";
      break;
    case StabilizationVerdict::Inconclusive:
      j["verdict"] = "inconclusive";
      break;
  }
  return j;
}

Json dickson_to_json(const DicksonResult& r) {
  Json j;
  j["C"] = Json::array();
  for (const IntVec& c : r.C) j["C"].push_back(vec_to_json(c));
  j["sigma"] = cone_to_json(r.sigma);
  j["certified"] = r.certified;
  return j;
}

Json normalization_to_json(const NormalizationResult& r) {
  Json j;
  j["tau"] = cone_to_json(r.tau);
  j["tau_dual"] = cone_to_json(r.tau_dual);
  j["C"] = Json::array();
  for (const RatVec& c : r.C) j["C"].push_back(vec_to_json(c));
  j["removed_points"] = Json::array();
  for (const RatVec& p : r.removed_points) j["removed_points"].push_back(vec_to_json(p));
  j["orthant_adjust"] = spec_to_json(r.orthant_adjust);
  j["residual"] = spec_to_json(r.residual);
  j["facet_witnesses"] = Json::array();
  for (const FacetWitness& w : r.facet_witnesses) {
    Json e;
    e["u"] = vec_to_json(w.u);
    e["level"] = rat_to_json(w.level);
    switch (w.kind) {
      case FacetWitness::Kind::InfiniteLevel: e["kind"] = "infinite-level"; break;
      case FacetWitness::Kind::Accumulation: e["kind"] = "accumulation"; break;
      case FacetWitness::Kind::Adjustment: e["kind"] = "adjustment"; break;
      case FacetWitness::Kind::None: e["kind"] = "none"; break;
    }
    j["facet_witnesses"].push_back(e);
  }
  j["ray_witnesses"] = Json::array();
  for (const RayFaceWitness& w : r.ray_witnesses) {
    Json e;
    e["ray"] = vec_to_json(w.ray);
    switch (w.kind) {
      case RayFaceWitness::Kind::Family: e["kind"] = "family"; break;
      case RayFaceWitness::Kind::Adjustment: e["kind"] = "adjustment"; break;
      case RayFaceWitness::Kind::None: e["kind"] = "none"; break;
    }
    if (w.gamma) e["gamma"] = vec_to_json(*w.gamma);
    j["ray_witnesses"].push_back(e);
  }
  j["residual_contained"] = r.residual_contained;
  j["certified"] = r.dickson_certified;
  return j;
}

Json fq_to_json(const Fq& f) {
  Json j;
  j["p"] = f.p();
  j["m"] = f.degree();
  j["coeffs"] = Json::array();
  for (Int c : f.coeffs()) j["coeffs"].push_back(c);
  return j;
}

Fq fq_from_json(const Json& j) {
  std::vector<Int> coeffs;
  for (const Json& c : j.at("coeffs")) coeffs.push_back(c.get<Int>());
  return Fq::of(j.at("p").get<Int>(), j.at("m").get<int>(), std::move(coeffs));
}

Json fqpoly_to_json(const FqPoly& f) {
  Json j;
  j["n"] = f.ambient_dim();
  j["terms"] = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["e"] = vec_to_json(e);
    t["c"] = fq_to_json(c);
    j["terms"].push_back(t);
  }
  return j;
}

FqPoly fqpoly_from_json(const Json& j) {
  FqPoly f(j.at("n").get<int>());
  for (const Json& t : j.at("terms")) f.add_term(ratvec_from_json(t.at("e")), fq_from_json(t.at("c")));
  return f;
}

Json asroot_to_json(const AsRoot& r) {
  Json j;
  j["root"] = fqpoly_to_json(r.root);
  j["residual"] = fqpoly_to_json(r.residual);
  j["root_set_size"] = r.root_set_size;
  return j;
}

Json gap_report_to_json(const GapReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["nu"] = rat_to_json(r.nu);
  j["K"] = rat_to_json(r.bound);
  j["levels"] = Json::array();
  for (const Rat& l : r.levels) j["levels"].push_back(rat_to_json(l));
  j["ratios"] = Json::array();
  for (const Rat& q : r.ratios) j["ratios"].push_back(rat_to_json(q));
  j["verdict"] = r.verdict;
  if (r.first_violation) j["first_violation"] = *r.first_violation;
  j["residual_zero"] = r.residual_zero;
  if (!r.residual_zero) j["residual_valuation"] = rat_to_json(r.residual_valuation);
  return j;
}

Json field_family_report_to_json(const FieldFamilyReport& r) {
  Json j;
  j["well_ordered_each"] = r.well_ordered_each;
  j["lattice_generation"] = r.lattice_generation;
  j["union_closed"] = r.union_closed;
  j["subsets_closed"] = r.subsets_closed;
  j["translations_closed"] = r.translations_closed;
  j["semigroup_closed"] = r.semigroup_closed;
  j["all"] = r.all();
  j["notes"] = r.notes;
  return j;
}

}  // namespace seriescone
