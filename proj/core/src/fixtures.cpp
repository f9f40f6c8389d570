#include "seriescone/fixtures.hpp"

#include <sstream>

namespace seriescone {

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

Int isqrt(Int k) {
  Int r = 0;
  while ((r + 1) * (r + 1) <= k) ++r;
  return r;
}

Int ceil_log2(Int k) {
  Int r = 0;
  Int v = 1;
  while (v < k) { v *= 2; ++r; }
  return r;
}

void check(FixtureResult& res, const std::string& name, bool pass, const std::string& detail = "") {
  res.checks.push_back({name, pass, detail});
}

FixtureResult finish(FixtureResult res) {
  res.pass = true;
  for (const FixtureCheck& c : res.checks) res.pass = res.pass && c.pass;
  return res;
}

std::string cone_str(const Cone& c) { return c.str(); }

}  // namespace

SupportSpec fixture_spec_ex_min(Int rebase) {
  SupportSpec s;
  s.n = 2;
  s.rays.push_back({rv({Rat(rebase), Rat(-rebase)}), rv({Rat(1), Rat(-1)})});
  return s;
}

SupportSpec fixture_spec_ex_c() {
  SupportSpec s;
  s.n = 3;
  auto ray = [&](std::initializer_list<Int> base, std::initializer_list<Int> step) {
    RatVec b, st;
    for (Int x : base) b.push_back(Rat(x));
    for (Int x : step) st.push_back(Rat(x));
    s.rays.push_back({b, st});
  };
  ray({1, 0, 0}, {1, 0, 0});    // G(x)
  ray({0, 1, 0}, {0, 1, 0});    // G(y)
  ray({0, 0, 1}, {0, 0, 1});    // z G(z)
  ray({0, 0, 1}, {1, -1, 1});   // z G(xz/y)
  ray({0, 0, 1}, {-1, 1, 1});   // z G(yz/x)
  ray({1, 0, 0}, {1, 1, -1});   // x G(xy/z)
  ray({0, 1, 0}, {1, 1, -1});   // y G(xy/z)
  return s;
}

SupportSpec fixture_spec_ex4(Int p) {
  // Accumulation skeleton: the sequences of (x g)^k run along (1,-1)-type
  // directions from drifting bases, and the base drift fills the semigroup
  // spanned by (2,-1) and (1,0).
  SupportSpec s;
  s.n = 2;
  s.lattice_scale = 1;
  s.semigroups.push_back({rv({Rat(1), Rat(0)}), {rv({Rat(2), Rat(-1)}), rv({Rat(1), Rat(0)})}});
  s.ptails.push_back({rv({Rat(1), Rat(0)}), rv({Rat(1), Rat(-1)}), p});
  s.ptails.push_back({rv({Rat(2), Rat(0)}), rv({Rat(2), Rat(-2)}), p});
  return s;
}

SupportSpec fixture_spec_last_ex(Int p) {
  SupportSpec s = fixture_spec_ex4(p);
  s.lattice_scale = 2;
  s.ptails.push_back({rv({Rat(0), Rat(0)}), rv({Rat(1, 2), Rat(1, 2)}), p});
  return s;
}

SupportSpec fixture_spec_bad_ex(bool replaced) {
  SupportSpec s;
  s.n = 2;
  if (replaced) {
    s.points.push_back(rv({Rat(0), Rat(0)}));
  } else {
    s.rays.push_back({rv({Rat(0), Rat(0)}), rv({Rat(1), Rat(0)})});
  }
  return s;
}

std::vector<std::vector<RatVec>> fixture_truncations_ex1(const std::vector<Int>& sizes) {
  std::vector<std::vector<RatVec>> out;
  for (Int n : sizes) {
    std::vector<RatVec> pts;
    for (Int k = 0; k <= n; ++k) pts.push_back(rv({Rat(k), Rat(-k - isqrt(k))}));
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<std::vector<RatVec>> fixture_truncations_ex2(const std::vector<Int>& sizes) {
  // integer staircase under the rotated logarithm: slopes decrease to -1
  // from above
  std::vector<std::vector<RatVec>> out;
  for (Int n : sizes) {
    std::vector<RatVec> pts;
    for (Int k = 0; k <= n; ++k) pts.push_back(rv({Rat(k), Rat(-k + ceil_log2(k + 1))}));
    out.push_back(std::move(pts));
  }
  return out;
}

namespace {

FixtureResult run_ex_min() {
  FixtureResult res;
  res.fixture = "ex_min";
  Cone expected_dual = Cone::from_generators(2, {{0, 1}, {1, -1}});
  Cone expected_tau = Cone::from_generators(2, {{1, 0}, {1, 1}});
  SupportSpec base = fixture_spec_ex_min(0);
  TauResult tr = tau_result(base);
  check(res, "tau_dual generators", tr.tau_dual == expected_dual, cone_str(tr.tau_dual));
  check(res, "tau generators", tr.tau == expected_tau, cone_str(tr.tau));
  for (Int n : {Int(-2), Int(1), Int(3)}) {
    SupportSpec s = fixture_spec_ex_min(n);
    NormalizationResult nr = normalize(s);
    std::vector<RatVec> expect = {rv({Rat(n), Rat(-n)})};
    std::ostringstream os;
    for (const RatVec& c : nr.C) os << "(" << c[0].str() << "," << c[1].str() << ")";
    check(res, "C at rebase " + std::to_string(n), nr.C == expect, os.str());
    check(res, "residual contained at rebase " + std::to_string(n), nr.residual_contained);
    check(res, "decomposition certified at rebase " + std::to_string(n), nr.dickson_certified);
    if (n == 3) res.report["normalize_rebase_3"] = normalization_to_json(nr);
  }
  res.report["tau"] = tau_result_to_json(tr);
  return finish(res);
}

FixtureResult run_ex_c() {
  FixtureResult res;
  res.fixture = "ex_C";
  SupportSpec s = fixture_spec_ex_c();
  Cone expected_dual = Cone::from_generators(
      3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 1}, {-1, 1, 1}, {1, 1, -1}});
  TauResult tr = tau_result(s);
  check(res, "tau_dual equals the six-vector cone", tr.tau_dual == expected_dual,
        cone_str(tr.tau_dual));
  NormalizationResult nr = normalize(s);
  check(res, "C has at least two elements", nr.C.size() >= 2,
        "size " + std::to_string(nr.C.size()));
  check(res, "residual contained", nr.residual_contained);
  check(res, "decomposition certified", nr.dickson_certified);
  std::vector<RatVec> expected_c = {rv({Rat(0), Rat(0), Rat(1)}), rv({Rat(0), Rat(1), Rat(0)}),
                                    rv({Rat(1), Rat(0), Rat(0)})};
  check(res, "C is the three unit points", nr.C == expected_c);
  // the unbounded 1-dim faces outside the orthant share no common apex
  std::vector<PolyhedronEdge> edges = unbounded_edges(nr.C, nr.tau_dual);
  std::vector<PolyhedronEdge> outside;
  Cone orth = Cone::orthant(3);
  for (const auto& e : edges)
    if (!orth.contains(e.ray)) outside.push_back(e);
  check(res, "at least four unbounded faces outside the orthant", outside.size() >= 4,
        "count " + std::to_string(outside.size()));
  bool common = false;
  if (outside.size() >= 2) {
    // a common apex would solve apex_i + t_i ray_i = q for all i; check
    // pairwise line intersections for a shared point
    common = true;
    // candidate: intersection of the first two lines, if any
    const auto& e0 = outside[0];
    bool found_candidate = false;
    RatVec q;
    for (size_t i = 1; i < outside.size() && !found_candidate; ++i) {
      // solve e0.apex + a r0 = e_i.apex + b r_i in the plane spanned by them
      // (3 equations, 2 unknowns): use two coordinates then verify the third
      const auto& ei = outside[i];
      std::vector<RatVec> a = {{Rat(e0.ray[0]), Rat(-ei.ray[0])},
                               {Rat(e0.ray[1]), Rat(-ei.ray[1])}};
      RatVec b = {ei.apex[0] - e0.apex[0], ei.apex[1] - e0.apex[1]};
      auto sol = solve_square(a, b);
      if (!sol) continue;
      RatVec cand = add(e0.apex, scaled(to_rat(e0.ray), (*sol)[0]));
      RatVec other = add(ei.apex, scaled(to_rat(ei.ray), (*sol)[1]));
      if (cand == other) {
        q = cand;
        found_candidate = true;
      }
    }
    if (!found_candidate) {
      common = false;
    } else {
      for (const auto& e : outside) {
        // q on the line apex + R ray?
        RatVec d = sub(q, e.apex);
        bool on_line = true;
        // d must be parallel to ray
        for (int i = 0; i < 3 && on_line; ++i)
          for (int j = i + 1; j < 3 && on_line; ++j) {
            Rat cross = d[static_cast<size_t>(i)] * Rat(e.ray[static_cast<size_t>(j)]) -
                        d[static_cast<size_t>(j)] * Rat(e.ray[static_cast<size_t>(i)]);
            if (!cross.is_zero()) on_line = false;
          }
        if (!on_line) { common = false; break; }
      }
    }
  }
  check(res, "no common apex", !common);
  res.report["tau"] = tau_result_to_json(tr);
  res.report["normalize"] = normalization_to_json(nr);
  return finish(res);
}

FixtureResult run_ex1() {
  FixtureResult res;
  res.fixture = "ex1";
  auto tr = fixture_truncations_ex1({4, 16, 64, 256, 1024});
  DiagnosticReport rep = non_polyhedral_diagnostic(tr);
  check(res, "verdict non-stabilizing", rep.verdict == StabilizationVerdict::NonStabilizing);
  // control: a plain ray stabilizes at once
  std::vector<std::vector<RatVec>> ray_trunc;
  for (Int n : {Int(4), Int(8), Int(16)}) {
    std::vector<RatVec> pts;
    for (Int k = 0; k <= n; ++k) pts.push_back(rv({Rat(k), Rat(-k)}));
    ray_trunc.push_back(std::move(pts));
  }
  DiagnosticReport ctrl = non_polyhedral_diagnostic(ray_trunc);
  check(res, "ray control stabilizes at level 2",
        ctrl.verdict == StabilizationVerdict::Stabilized && ctrl.stabilized_at == 2);
  res.report["diagnostic"] = diagnostic_to_json(rep);
  res.report["control"] = diagnostic_to_json(ctrl);
  return finish(res);
}

FixtureResult run_ex2() {
  FixtureResult res;
  res.fixture = "ex_2";
  auto tr = fixture_truncations_ex2({4, 16, 64, 256, 1024});
  DiagnosticReport rep = non_polyhedral_diagnostic(tr);
  check(res, "verdict non-stabilizing", rep.verdict == StabilizationVerdict::NonStabilizing);
  res.report["diagnostic"] = diagnostic_to_json(rep);
  return finish(res);
}

FixtureResult run_ex4() {
  FixtureResult res;
  res.fixture = "ex4";
  SupportSpec s = fixture_spec_ex4(2);
  TauResult tr = tau_result(s);
  Cone printed_dual = dual(Cone::from_generators(2, {{2, -1}, {0, 1}}));
  Cone expected_tau = Cone::from_generators(2, {{1, 0}, {1, 2}});
  check(res, "tau equals the duality computation", tr.tau == expected_tau, cone_str(tr.tau));
  check(res, "tau equals dual of <(2,-1),(0,1)>", tr.tau == printed_dual);
  Cone expected_tilde = Cone::from_generators(2, {{1, 0}, {1, 1}});
  check(res, "tau_tilde", tr.tau_tilde == expected_tilde, cone_str(tr.tau_tilde));
  check(res, "tau0 region empty", tr.tau0_empty);
  res.report["tau"] = tau_result_to_json(tr);
  return finish(res);
}

FqPoly monomial_fq(Int p, const RatVec& e, Int c = 1) {
  return FqPoly::monomial(static_cast<int>(e.size()), e, Fq::scalar(p, 1, c));
}

FixtureResult run_ex_saavedra() {
  FixtureResult res;
  res.fixture = "ex_saavedra";
  for (Int p : {Int(2), Int(3)}) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    FqPoly a = monomial_fq(p, {Rat(-1), Rat(3)});
    WeightOrder w1({{Quad(Rat(1)), Quad(Rat(0), Rat(1), 2)}});       // (1, sqrt 2)
    WeightOrder w2({{Quad(Rat(1)), Quad(Rat(0), Rat(1, 6), 2)}});    // (1, sqrt 2 / 6)

    AsSplit s1 = as_split(a, w1);
    check(res, "omega1 split is positive" + tag, s1.minus.is_zero() && s1.plus == a);
    AsRoot pos = as_positive_root(s1.plus, w1, 5);
    FqPoly expect_pos(2);
    Int pk = 1;
    for (int k = 0; k <= 5; ++k) {
      expect_pos.add_term({Rat(-pk), Rat(3 * pk)}, -Fq::scalar(p, 1, 1));
      pk *= p;
    }
    check(res, "omega1 root terms" + tag, pos.root == expect_pos);
    FqPoly expect_res(2);
    expect_res.add_term({Rat(-pk), Rat(3 * pk)}, -Fq::scalar(p, 1, 1));
    check(res, "omega1 residual is the single tail monomial" + tag, pos.residual == expect_res);

    AsSplit s2 = as_split(a, w2);
    check(res, "omega2 split is negative" + tag, s2.plus.is_zero() && s2.minus == a);
    AsRoot neg = as_negative_root(s2.minus, w2, 5);
    FqPoly expect_neg(2);
    Rat q(1);
    for (int i = 1; i <= 5; ++i) {
      q = q / Rat(p);
      expect_neg.add_term({-q, Rat(3) * q}, Fq::scalar(p, 1, 1));
    }
    check(res, "omega2 root terms" + tag, neg.root == expect_neg);
    FqPoly expect_res2(2);
    expect_res2.add_term({-q, Rat(3) * q}, -Fq::scalar(p, 1, 1));
    check(res, "omega2 residual is the single tail monomial" + tag, neg.residual == expect_res2);

    // both expansions solve T^p - x^{p-1} T - x^{p-1} y^3 after T = x U,
    // up to x^p times the certified residual
    for (const AsRoot* r : {&pos, &neg}) {
      FqPoly t = r->root.scaled_by_monomial({Rat(1), Rat(0)}, Fq::scalar(p, 1, 1));
      FqPoly lhs = t.pow(p) - t.scaled_by_monomial({Rat(p - 1), Rat(0)}, Fq::scalar(p, 1, 1)) -
                   monomial_fq(p, {Rat(p - 1), Rat(3)});
      FqPoly rhs = r->residual.scaled_by_monomial({Rat(p), Rat(0)}, Fq::scalar(p, 1, 1));
      check(res, std::string("composite relation ") + (r == &pos ? "omega1" : "omega2") + tag,
            lhs == rhs);
    }
    if (p == 2) {
      res.report["omega1_root"] = asroot_to_json(pos);
      res.report["omega2_root"] = asroot_to_json(neg);
    }
  }
  return finish(res);
}

FixtureResult run_bad_ex() {
  FixtureResult res;
  res.fixture = "bad_ex";
  TauResult before = tau_result(fixture_spec_bad_ex(false));
  std::vector<TauCondition> expect_before = {{{0, 1}, false}, {{1, 0}, true}};
  check(res, "tau0 conditions before", before.tau0 == expect_before);
  check(res, "tau0 region nonempty before", !before.tau0_empty);
  TauResult after = tau_result(fixture_spec_bad_ex(true));
  std::vector<TauCondition> expect_after = {{{0, 1}, false}, {{1, 0}, false}};
  check(res, "tau0 conditions after replacement", after.tau0 == expect_after);
  check(res, "tau unchanged", before.tau == after.tau && before.tau == Cone::orthant(2));
  res.report["before"] = tau_result_to_json(before);
  res.report["after"] = tau_result_to_json(after);
  return finish(res);
}

FixtureResult run_last_ex() {
  FixtureResult res;
  res.fixture = "last_ex";
  Int p = 2;
  SupportSpec xi = fixture_spec_ex4(p);
  SupportSpec xi_prime = fixture_spec_last_ex(p);
  Cone tilde_xi = tau_tilde(xi);
  Cone tilde_prime = tau_tilde(xi_prime);
  check(res, "tau_tilde unchanged by the diagonal tail", tilde_xi == tilde_prime);
  check(res, "tau_tilde is <(1,0),(1,1)>",
        tilde_prime == Cone::from_generators(2, {{1, 0}, {1, 1}}));
  // the direction (1,-1) leaves the orthant, so thresholds reject it and the
  // raw census takes over
  bool rejected = false;
  try {
    t_sigma(xi_prime, {1, -1});
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  check(res, "threshold rejects the boundary direction", rejected);
  HalfspaceCensus with_tail = halfspace_census(xi_prime, {1, -1}, Rat(1));
  check(res, "below level one infinite with the diagonal tail", with_tail.below_infinite);
  HalfspaceCensus without_tail = halfspace_census(xi, {1, -1}, Rat(1));
  check(res, "below level one finite without it",
        !without_tail.below_infinite && without_tail.below_count == 0);
  res.report["census_with_tail"] = census_to_json(with_tail);
  res.report["census_without_tail"] = census_to_json(without_tail);
  return finish(res);
}

FixtureResult run_chevalley() {
  FixtureResult res;
  res.fixture = "chevalley";
  for (Int p : {Int(2), Int(3), Int(5)}) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    FqPoly a = monomial_fq(p, {Rat(-1)});
    WeightOrder o = WeightOrder::rational({{Rat(1)}});
    AsSplit sp = as_split(a, o);
    check(res, "split is negative" + tag, sp.plus.is_zero() && sp.minus == a);
    AsRoot root = as_negative_root(sp.minus, o, 5);
    FqPoly expect(1);
    Rat q(1);
    for (int i = 1; i <= 5; ++i) {
      q = q / Rat(p);
      expect.add_term({-q}, Fq::scalar(p, 1, 1));
    }
    check(res, "root terms" + tag, root.root == expect);
    FqPoly expect_res(1);
    expect_res.add_term({-q}, -Fq::scalar(p, 1, 1));
    check(res, "residual" + tag, root.residual == expect_res);
    // x-side: T = x u solves T^p - x^{p-1} T - x^{p-1} up to x^p residual
    FqPoly t = root.root.scaled_by_monomial({Rat(1)}, Fq::scalar(p, 1, 1));
    FqPoly lhs = t.pow(p) - t.scaled_by_monomial({Rat(p - 1)}, Fq::scalar(p, 1, 1)) -
                 monomial_fq(p, {Rat(p - 1)});
    FqPoly rhs = root.residual.scaled_by_monomial({Rat(p)}, Fq::scalar(p, 1, 1));
    check(res, "composite relation" + tag, lhs == rhs);
    if (p == 2) res.report["root"] = asroot_to_json(root);
  }
  return finish(res);
}

FixtureResult run_gap_sharpness() {
  FixtureResult res;
  res.fixture = "gap_sharpness";
  for (Int p : {Int(2), Int(3), Int(5)}) {
    std::string tag = " (p=" + std::to_string(p) + ")";
    FqPoly xi(2);
    Int pk = 1;
    for (int i = 0; i <= 6; ++i) {
      xi.add_term({Rat(pk), Rat(-pk)}, Fq::scalar(p, 1, 1));
      pk *= p;
    }
    std::vector<FqPoly> coeffs(static_cast<size_t>(p) + 1, FqPoly(2));
    coeffs[0] = monomial_fq(p, {Rat(1), Rat(-1)});
    coeffs[1] = monomial_fq(p, {Rat(0), Rat(0)}, -1);
    coeffs[static_cast<size_t>(p)] = monomial_fq(p, {Rat(0), Rat(0)});
    RatVec w = {Rat(2), Rat(1)};
    GapReport rep = gap_verify(xi, coeffs, w, Rat(pk));
    check(res, "bound is p+1" + tag, rep.bound == Rat(p + 1));
    bool ratios_p = !rep.ratios.empty();
    for (const Rat& r : rep.ratios) ratios_p = ratios_p && r == Rat(p);
    check(res, "all ratios equal p" + tag, ratios_p);
    check(res, "verdict true" + tag, rep.verdict);
    check(res, "relation certified" + tag, rep.residual_zero || rep.residual_valuation >= Rat(pk));
    // perturbing one level beyond the bound flips the verdict
    FqPoly bad = xi;
    Int far = pk * (p + 2);
    bad.add_term({Rat(far), Rat(-far)}, Fq::scalar(p, 1, 1));
    GapReport rep2 = gap_verify(bad, coeffs, w, Rat(pk));
    check(res, "perturbed verdict false" + tag, !rep2.verdict && rep2.first_violation.has_value());
    if (p == 2) res.report["report"] = gap_report_to_json(rep);
  }
  return finish(res);
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"ex_min", "reference",
       "series sum (x/y)^k; the dual cone and the rebased corners are printed in the example",
       run_ex_min},
      {"ex_C", "reference",
       "six ray families in three variables; the six-vector cone has three extreme rays "
       "((1,0,0) is the half-sum of (1,-1,1) and (1,1,-1)), and the corner set cannot be a "
       "single point",
       run_ex_c},
      {"ex1", "derived", "staircase under y = -x - sqrt(x); hull slopes never stabilize",
       run_ex1},
      {"ex_2", "derived", "staircase under the rotated logarithm; slopes fall to -1 from above",
       run_ex2},
      {"ex4", "reference",
       "char-p accumulation support; the printed generator pair {(0,1),(1,2)} disagrees with "
       "direct duality of <(2,-1),(0,1)>, which yields {(1,0),(1,2)}; the computation is kept",
       run_ex4},
      {"ex_saavedra", "reference",
       "roots of T^p - x^{p-1}T - x^{p-1}y^3 under the two irrational weights; the positive "
       "branch starts at k = 0 (constant y^3 term), which the printed sum elides",
       run_ex_saavedra},
      {"bad_ex", "reference", "tau'_0 moves when a series is replaced by its constant term",
       run_bad_ex},
      {"last_ex", "reference",
       "diagonal tail added to ex4; the boundary direction (1,-1) lies outside the orthant, "
       "so thresholds reject it and the half-space census reports the infinite strict part",
       run_last_ex},
      {"chevalley", "reference", "T^p - T = 1/x; root sum x^{1 - 1/p^k} after clearing x",
       run_chevalley},
      {"gap_sharpness", "reference",
       "sum (x/y)^{p^i} is a root of T^p - T + x/y; consecutive level ratios are exactly p",
       run_gap_sharpness},
  };
  return all;
}

const Fixture* find_fixture(const std::string& name) {
  for (const Fixture& f : fixtures())
    if (f.name == name) return &f;
  return nullptr;
}

}  // namespace seriescone
