#include "seriescone/artin_schreier.hpp"

#include <stdexcept>

namespace seriescone {

AsSplit as_split(const FqPoly& a, const WeightOrder& o) {
  if (!o.total_on_lattice()) throw std::invalid_argument("order not total on the exponent lattice");
  AsSplit s{FqPoly(a.ambient_dim()), FqPoly(a.ambient_dim())};
  for (const auto& [e, c] : a.terms()) {
    if (o.sign(e) < 0) s.minus.add_term(e, c);
    else s.plus.add_term(e, c);
  }
  return s;
}

namespace {

Int prime_of(const FqPoly& a) {
  if (a.is_zero()) return 2;
  return a.terms().begin()->second.p();
}

int degree_of(const FqPoly& a) {
  if (a.is_zero()) return 1;
  return a.terms().begin()->second.degree();
}

}  // namespace

AsRoot as_negative_root(const FqPoly& a_minus, const WeightOrder& o, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be at least one");
  Int p = prime_of(a_minus);
  int n = a_minus.ambient_dim();
  for (const auto& [e, c] : a_minus.terms())
    if (o.sign(e) >= 0) throw std::invalid_argument("nonnegative exponent in the negative part");
  FqPoly root(n);
  FqPoly residual(n);
  for (const auto& [e, c] : a_minus.terms()) {
    Fq coeff = c;
    RatVec expo = e;
    for (int i = 1; i <= depth; ++i) {
      coeff = coeff.pth_root();
      expo = scaled(expo, Rat(1, p));
      root.add_term(expo, coeff);
    }
    residual.add_term(expo, -coeff);  // the depth-level tail monomial
  }
  AsRoot r{std::move(root), std::move(residual), p};
  return r;
}

AsRoot as_positive_root(const FqPoly& a_plus, const WeightOrder& o, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  Int p = prime_of(a_plus);
  int m = degree_of(a_plus);
  int n = a_plus.ambient_dim();
  RatVec zero(static_cast<size_t>(n), Rat(0));
  FqPoly strict(n);
  Fq constant(p, m);
  for (const auto& [e, c] : a_plus.terms()) {
    int s = o.sign(e);
    if (s < 0) throw std::invalid_argument("negative exponent in the positive part");
    if (s == 0) constant = constant + c;
    else strict.add_term(e, c);
  }
  FqPoly root(n);
  if (!constant.is_zero()) {
    // solve c^p - c = constant in the coefficient field, by exhaustion
    bool solved = false;
    Int q = constant.field_size();
    for (Int i = 0; i < q && !solved; ++i) {
      // enumerate elements as base-p coefficient tuples
      std::vector<Int> coeffs;
      Int v = i;
      for (int j = 0; j < m; ++j) {
        coeffs.push_back(v % p);
        v /= p;
      }
      Fq cand = Fq::of(p, m, coeffs);
      if (cand.pow(p) - cand == constant) {
        root.add_term(zero, cand);
        solved = true;
      }
    }
    if (!solved)
      throw std::invalid_argument("constant term outside the Artin-Schreier image of the field");
  }
  FqPoly power = strict;
  for (int k = 0; k <= depth; ++k) {
    root = root - power;
    if (k < depth) power = power.pow(p);
  }
  FqPoly residual = strict.is_zero() ? FqPoly(n) : -(power.pow(p));
  AsRoot r{std::move(root), std::move(residual), p};
  return r;
}

namespace {

// Deterministic generator for the sampled field-family axioms.
struct Rng {
  unsigned long long state;
  explicit Rng(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  Int range(Int lo, Int hi) {  // inclusive
    return lo + static_cast<Int>(next() % static_cast<unsigned long long>(hi - lo + 1));
  }
};

SupportSpec translated(const SupportSpec& s, const RatVec& t) {
  SupportSpec r = s;
  for (auto& p : r.points) p = add(p, t);
  for (auto& f : r.rays) f.base = add(f.base, t);
  for (auto& f : r.semigroups) f.base = add(f.base, t);
  for (auto& f : r.ptails) f.base = add(f.base, t);
  return r;
}

SupportSpec union_of(const SupportSpec& a, const SupportSpec& b) {
  SupportSpec u = a;
  u.points.insert(u.points.end(), b.points.begin(), b.points.end());
  u.rays.insert(u.rays.end(), b.rays.begin(), b.rays.end());
  u.semigroups.insert(u.semigroups.end(), b.semigroups.begin(), b.semigroups.end());
  u.ptails.insert(u.ptails.end(), b.ptails.begin(), b.ptails.end());
  u.lattice_scale = checked_mul(a.lattice_scale / gcd_ll(a.lattice_scale, b.lattice_scale),
                                b.lattice_scale);
  return u;
}

// An in-class sub-spec: drop families, advance ray bases, thin ray steps.
SupportSpec sampled_subspec(const SupportSpec& s, Rng& rng) {
  SupportSpec r;
  r.n = s.n;
  r.lattice_scale = s.lattice_scale;
  for (const auto& p : s.points)
    if (rng.range(0, 1)) r.points.push_back(p);
  for (const auto& f : s.rays) {
    if (rng.range(0, 2) == 0) continue;
    Int skip = rng.range(0, 3);
    Int stride = rng.range(1, 2);
    r.rays.push_back({add(f.base, scaled(f.step, Rat(skip))), scaled(f.step, Rat(stride))});
  }
  for (const auto& f : s.semigroups)
    if (rng.range(0, 1)) r.semigroups.push_back(f);
  for (const auto& f : s.ptails)
    if (rng.range(0, 1)) r.ptails.push_back(f);
  return r;
}

}  // namespace

FieldFamilyReport field_family_check(const std::vector<SupportSpec>& families,
                                     const WeightOrder& o, int samples) {
  FieldFamilyReport rep;
  if (families.empty()) {
    rep.notes.push_back("no families given");
    return rep;
  }
  int n = families[0].n;
  Rng rng(0x5eed5eedULL);

  rep.well_ordered_each = true;
  for (size_t i = 0; i < families.size(); ++i) {
    if (!is_well_ordered(o, families[i])) {
      rep.well_ordered_each = false;
      rep.notes.push_back("family " + std::to_string(i) + " is not well-ordered");
    }
  }

  // axiom 2: the family data must span the ambient space over Q
  {
    std::vector<RatVec> rows;
    for (const auto& s : families) {
      for (const auto& p : s.points) rows.push_back(p);
      for (const auto& f : s.rays) { rows.push_back(f.base); rows.push_back(f.step); }
      for (const auto& f : s.semigroups) {
        rows.push_back(f.base);
        for (const auto& g : f.gens) rows.push_back(g);
      }
      for (const auto& f : s.ptails) { rows.push_back(f.base); rows.push_back(f.dir); }
    }
    rep.lattice_generation = rank_of_rat(rows) == n;
    if (!rep.lattice_generation) rep.notes.push_back("family data does not span the space");
  }

  // axiom 3: unions are concatenations, still in class and well-ordered when
  // the members are
  rep.union_closed = true;
  for (size_t i = 0; i + 1 < families.size() && rep.union_closed; ++i) {
    SupportSpec u = union_of(families[i], families[i + 1]);
    u.validate();
    if (rep.well_ordered_each && !is_well_ordered(o, u)) rep.union_closed = false;
  }

  // axiom 4: sampled sub-specs
  rep.subsets_closed = true;
  for (int k = 0; k < samples; ++k) {
    const SupportSpec& s = families[static_cast<size_t>(rng.range(0, static_cast<Int>(families.size()) - 1))];
    SupportSpec sub = sampled_subspec(s, rng);
    sub.validate();
    if (rep.well_ordered_each && !sub.empty() && !is_well_ordered(o, sub)) {
      rep.subsets_closed = false;
      rep.notes.push_back("sampled sub-spec lost well-ordering");
      break;
    }
  }

  // axiom 5: sampled lattice translations
  rep.translations_closed = true;
  for (int k = 0; k < samples; ++k) {
    const SupportSpec& s = families[static_cast<size_t>(rng.range(0, static_cast<Int>(families.size()) - 1))];
    RatVec t(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = Rat(rng.range(-4, 4));
    SupportSpec moved = translated(s, t);
    moved.validate();
    if (rep.well_ordered_each && !is_well_ordered(o, moved)) {
      rep.translations_closed = false;
      break;
    }
  }

  // axiom 6: for nonnegative families the generated semigroup is again
  // well-ordered; re-present the generators as one semigroup family
  rep.semigroup_closed = true;
  for (const auto& s : families) {
    std::vector<RatVec> gens;
    bool nonneg = true;
    auto feed = [&](const RatVec& v) {
      if (o.sign(v) < 0) nonneg = false;
      else if (o.sign(v) > 0) gens.push_back(v);
    };
    for (const auto& p : s.points) feed(p);
    for (const auto& f : s.rays) { feed(f.base); feed(f.step); }
    for (const auto& f : s.semigroups) {
      feed(f.base);
      for (const auto& g : f.gens) feed(g);
    }
    for (const auto& f : s.ptails) {
      feed(f.base);
      feed(f.dir);
      // sampled tail elements
      Rat pk(f.p);
      for (int k = 0; k < 3; ++k) {
        feed(scaled(f.dir, Rat(1) - Rat(1) / pk));
        pk = pk * Rat(f.p);
      }
    }
    if (!nonneg || gens.empty()) continue;
    SupportSpec semi;
    semi.n = n;
    semi.lattice_scale = s.lattice_scale;
    semi.semigroups.push_back({RatVec(static_cast<size_t>(n), Rat(0)), gens});
    semi.validate();
    if (!is_well_ordered(o, semi)) {
      rep.semigroup_closed = false;
      rep.notes.push_back("generated semigroup lost well-ordering");
    }
  }
  return rep;
}

}  // namespace seriescone
