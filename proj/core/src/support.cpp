#include "seriescone/support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "seriescone/polyhedron.hpp"

namespace seriescone {

namespace {

std::vector<IntVec> primitive_set(const std::vector<RatVec>& dirs) {
  std::vector<IntVec> out;
  for (const RatVec& d : dirs) out.push_back(primitive_direction(d));
  return canonical_vector_set(std::move(out));
}

Cone direction_cone(const SupportSpec& s, bool with_ptails) {
  std::vector<RatVec> dirs = with_ptails ? s.all_directions() : s.lattice_directions();
  std::vector<IntVec> prim = primitive_set(dirs);
  return Cone::from_generators(s.n, prim);
}

}  // namespace

Cone tau(const SupportSpec& s) {
  s.validate();
  return intersect(Cone::orthant(s.n), dual(direction_cone(s, false)));
}

Cone tau_tilde(const SupportSpec& s) {
  s.validate();
  return intersect(Cone::orthant(s.n), dual(direction_cone(s, true)));
}

TauResult tau_result(const SupportSpec& s) {
  s.validate();
  TauResult r;
  r.tau = tau(s);
  r.tau_dual = dual(r.tau);
  r.tau_tilde = tau_tilde(s);
  std::vector<IntVec> strict = primitive_set(s.lattice_directions());
  std::set<IntVec> strict_set(strict.begin(), strict.end());
  std::vector<TauCondition> conds;
  for (const IntVec& v : strict) conds.push_back({v, true});
  for (int i = 0; i < s.n; ++i) {
    IntVec e(static_cast<size_t>(s.n), 0);
    e[static_cast<size_t>(i)] = 1;
    if (!strict_set.count(e)) conds.push_back({e, false});
  }
  std::sort(conds.begin(), conds.end(), [](const TauCondition& a, const TauCondition& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.strict < b.strict;
  });
  r.tau0 = std::move(conds);
  r.tau0_empty = s.has_ptails();
  for (const IntVec& v : strict) r.tau1.push_back({v, true});
  return r;
}

std::pair<std::vector<TauCondition>, std::vector<TauCondition>> tau_prime(const SupportSpec& s) {
  TauResult r = tau_result(s);
  return {r.tau0, r.tau1};
}

bool tau0_region_contains(const TauResult& r, const RatVec& w) {
  if (r.tau0_empty) return false;
  bool nonzero = false;
  for (const Rat& c : w)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) return false;
  for (const TauCondition& c : r.tau0) {
    Rat d = dot(c.normal, w);
    if (d.sign() < 0 || (c.strict && d.sign() == 0)) return false;
  }
  return true;
}

namespace {

struct FamilyLevels {
  // Threshold cap: the supremum of levels below which only finitely many
  // family points live; +infinity is encoded as absent.
  std::optional<Rat> cap;
  Rat inf_achieved;  // infimum of achieved values
};

FamilyLevels analyze_points(const std::vector<RatVec>& pts, const IntVec& u) {
  FamilyLevels f;
  f.inf_achieved = dot(u, pts[0]);
  for (const RatVec& p : pts) f.inf_achieved = min(f.inf_achieved, dot(u, p));
  return f;
}

FamilyLevels analyze_ray(const RayFamily& r, const IntVec& u) {
  FamilyLevels f;
  Rat base = dot(u, r.base), step = dot(u, r.step);
  if (step.sign() < 0) throw std::invalid_argument("direction not in tau of the support");
  f.inf_achieved = base;
  if (step.sign() == 0) f.cap = base;
  return f;
}

FamilyLevels analyze_semigroup(const SemigroupFamily& s, const IntVec& u) {
  FamilyLevels f;
  Rat base = dot(u, s.base);
  bool has_zero = false;
  for (const RatVec& g : s.gens) {
    Rat v = dot(u, g);
    if (v.sign() < 0) throw std::invalid_argument("direction not in tau of the support");
    if (v.sign() == 0) has_zero = true;
  }
  f.inf_achieved = base;
  if (has_zero) f.cap = base;
  return f;
}

FamilyLevels analyze_ptail(const PTailFamily& t, const IntVec& u) {
  FamilyLevels f;
  Rat base = dot(u, t.base), dir = dot(u, t.dir);
  if (dir.sign() == 0) {
    f.cap = base;
    f.inf_achieved = base;
    return f;
  }
  Rat limit = base + dir;
  f.cap = limit;
  if (dir.sign() > 0) {
    f.inf_achieved = base + dir * Rat(t.p - 1, t.p);  // first point, k = 1
  } else {
    f.inf_achieved = limit;  // values decrease toward the limit, never attained
  }
  return f;
}

std::vector<FamilyLevels> analyze_all(const SupportSpec& s, const IntVec& u) {
  std::vector<FamilyLevels> out;
  if (!s.points.empty()) out.push_back(analyze_points(s.points, u));
  for (const auto& r : s.rays) out.push_back(analyze_ray(r, u));
  for (const auto& g : s.semigroups) out.push_back(analyze_semigroup(g, u));
  for (const auto& t : s.ptails) out.push_back(analyze_ptail(t, u));
  return out;
}

// Whether target is a N-combination of the given nonnegative rational values
// (zero values are ignored; they never change reachability).
bool reachable_value(const Rat& target, const std::vector<Rat>& vals) {
  if (target.sign() < 0) return false;
  if (target.is_zero()) return true;
  Int den = target.den();
  std::vector<Rat> pos;
  for (const Rat& v : vals)
    if (v.sign() > 0) {
      pos.push_back(v);
      den = checked_mul(den / gcd_ll(den, v.den()), v.den());
    }
  if (pos.empty()) return false;
  Int t = (target * Rat(den)).num();
  if (t > 2'000'000) throw std::runtime_error("level reachability target too large");
  std::vector<char> dp(static_cast<size_t>(t) + 1, 0);
  dp[0] = 1;
  for (Int i = 1; i <= t; ++i)
    for (const Rat& v : pos) {
      Int c = (v * Rat(den)).num();
      if (c <= i && dp[static_cast<size_t>(i - c)]) { dp[static_cast<size_t>(i)] = 1; break; }
    }
  return dp[static_cast<size_t>(t)] != 0;
}

bool family_attains(const SupportSpec& s, const IntVec& u, const Rat& t) {
  for (const RatVec& p : s.points)
    if (dot(u, p) == t) return true;
  for (const auto& r : s.rays) {
    Rat base = dot(u, r.base), step = dot(u, r.step);
    if (step.sign() == 0) {
      if (base == t) return true;
    } else if (t >= base) {
      Rat k = (t - base) / step;
      if (k.is_integer()) return true;
    }
  }
  for (const auto& g : s.semigroups) {
    std::vector<Rat> vals;
    for (const RatVec& v : g.gens) vals.push_back(dot(u, v));
    if (reachable_value(t - dot(u, g.base), vals)) return true;
  }
  for (const auto& tf : s.ptails) {
    Rat base = dot(u, tf.base), dir = dot(u, tf.dir);
    if (dir.sign() == 0) {
      if (base == t) return true;
      continue;
    }
    Rat frac = Rat(1) - (t - base) / dir;  // must be p^{-k}, k >= 1
    if (frac.sign() <= 0 || frac.num() != 1) continue;
    Int d = frac.den();
    while (d % tf.p == 0) d /= tf.p;
    if (d == 1 && frac.den() >= tf.p) return true;
  }
  return false;
}

bool level_is_infinite(const SupportSpec& s, const IntVec& u, const Rat& t) {
  for (const auto& r : s.rays) {
    if (dot(u, r.step).sign() == 0 && dot(u, r.base) == t) return true;
  }
  for (const auto& g : s.semigroups) {
    bool has_zero = false;
    std::vector<Rat> vals;
    for (const RatVec& v : g.gens) {
      Rat d = dot(u, v);
      if (d.sign() == 0) has_zero = true;
      vals.push_back(d);
    }
    if (has_zero && reachable_value(t - dot(u, g.base), vals)) return true;
  }
  for (const auto& tf : s.ptails) {
    if (dot(u, tf.dir).sign() == 0 && dot(u, tf.base) == t) return true;
  }
  return false;
}

}  // namespace

ThresholdInfo t_sigma(const SupportSpec& s, const IntVec& normal) {
  s.validate();
  if (s.empty()) throw std::invalid_argument("empty support has no threshold");
  if (!tau(s).contains(normal))
    throw std::invalid_argument("direction not in tau of the support");
  std::vector<FamilyLevels> fams = analyze_all(s, normal);
  std::optional<Rat> cap;
  for (const FamilyLevels& f : fams)
    if (f.cap && (!cap || *f.cap < *cap)) cap = f.cap;
  Rat t;
  if (cap) {
    t = *cap;
  } else {
    bool first = true;
    for (const FamilyLevels& f : fams) {
      if (first || f.inf_achieved < t) { t = f.inf_achieved; first = false; }
    }
  }
  ThresholdInfo info;
  info.t = t;
  info.attained = family_attains(s, normal, t);
  info.level_infinite = level_is_infinite(s, normal, t);
  return info;
}

HalfspaceCensus halfspace_census(const SupportSpec& s, const IntVec& normal, const Rat& level) {
  s.validate();
  HalfspaceCensus c;
  std::set<std::vector<std::pair<Int, Int>>> below, on;
  auto key = [](const RatVec& p) {
    std::vector<std::pair<Int, Int>> k;
    for (const Rat& r : p) k.emplace_back(r.num(), r.den());
    return k;
  };
  auto add_point = [&](const RatVec& p) {
    Rat v = dot(normal, p);
    if (v < level) below.insert(key(p));
    else if (v == level) on.insert(key(p));
  };
  for (const RatVec& p : s.points) add_point(p);
  for (const auto& r : s.rays) {
    Rat step = dot(normal, r.step);
    if (step.sign() == 0) {
      Rat base = dot(normal, r.base);
      if (base < level) c.below_infinite = true;
      else if (base == level) c.on_infinite = true;
    } else if (step.sign() > 0) {
      for (Int k = 0;; ++k) {
        RatVec p = add(r.base, scaled(r.step, Rat(k)));
        if (dot(normal, p) > level) break;
        add_point(p);
      }
    } else {
      c.below_infinite = true;  // eventually unbounded below
      // finitely many on the level at most
      Rat base = dot(normal, r.base);
      Rat k = (level - base) / step;
      if (k.is_integer() && k.sign() >= 0) add_point(add(r.base, scaled(r.step, k)));
    }
  }
  for (const auto& g : s.semigroups) {
    bool any_zero = false, any_neg = false;
    for (const RatVec& v : g.gens) {
      int sg = dot(normal, v).sign();
      any_zero |= sg == 0;
      any_neg |= sg < 0;
    }
    Rat base = dot(normal, g.base);
    if (any_neg) throw std::runtime_error("census undecided for mixed-sign semigroup");
    if (any_zero) {
      // a whole translated subsemigroup sits on each reachable level
      if (base < level) c.below_infinite = true;
      std::vector<Rat> vals;
      for (const RatVec& v : g.gens) vals.push_back(dot(normal, v));
      if (level >= base && reachable_value(level - base, vals)) c.on_infinite = true;
      continue;
    }
    // all generator values positive: finitely many points below any level;
    // enumerate coefficient vectors within the value budget
    std::vector<Rat> vals;
    for (const RatVec& v : g.gens) vals.push_back(dot(normal, v));
    int k = static_cast<int>(g.gens.size());
    std::vector<Int> alpha(static_cast<size_t>(k), 0);
    // depth-first over coefficients with pruning by value
    std::vector<std::pair<std::vector<Int>, Rat>> stack = {{alpha, base}};
    std::set<std::vector<Int>> seen;
    while (!stack.empty()) {
      auto [a, val] = stack.back();
      stack.pop_back();
      if (!seen.insert(a).second) continue;
      if (val <= level) {
        RatVec p = g.base;
        for (int i = 0; i < k; ++i)
          p = add(p, scaled(g.gens[static_cast<size_t>(i)], Rat(a[static_cast<size_t>(i)])));
        add_point(p);
        for (int i = 0; i < k; ++i) {
          auto b = a;
          ++b[static_cast<size_t>(i)];
          stack.push_back({b, val + vals[static_cast<size_t>(i)]});
        }
      }
    }
  }
  for (const auto& t : s.ptails) {
    Rat base = dot(normal, t.base), dir = dot(normal, t.dir);
    if (dir.sign() == 0) {
      if (base < level) c.below_infinite = true;
      else if (base == level) c.on_infinite = true;
      continue;
    }
    // the tail point exactly on the level, if the solution is a p power
    auto exact_hit = [&]() -> std::optional<Rat> {
      Rat frac = Rat(1) - (level - base) / dir;  // must equal p^{-k}, k >= 1
      if (frac.sign() <= 0 || frac.num() != 1 || frac.den() < t.p) return std::nullopt;
      Int d = frac.den();
      while (d % t.p == 0) d /= t.p;
      if (d != 1) return std::nullopt;
      return Rat(1) - frac;
    };
    Rat limit = base + dir;
    if (dir.sign() > 0) {
      // values climb toward the limit
      if (limit <= level) {
        c.below_infinite = true;
      } else {
        Rat pk(t.p);
        for (Int k = 1; k <= 60; ++k) {
          Rat v = base + dir * (Rat(1) - Rat(1) / pk);
          if (v > level) break;
          add_point(add(t.base, scaled(t.dir, Rat(1) - Rat(1) / pk)));
          if (k == 60) throw std::runtime_error("census cut too close to the tail limit");
          pk = pk * Rat(t.p);
        }
      }
    } else {
      // values descend toward the limit, never reaching it
      if (limit < level) {
        c.below_infinite = true;
        if (auto s_hit = exact_hit()) add_point(add(t.base, scaled(t.dir, *s_hit)));
      }
      // limit >= level: every value is strictly above the level
    }
  }
  c.below_count = c.below_infinite ? -1 : static_cast<Int>(below.size());
  c.on_count = c.on_infinite ? -1 : static_cast<Int>(on.size());
  return c;
}

DiagnosticReport non_polyhedral_diagnostic(const std::vector<std::vector<RatVec>>& truncations) {
  if (truncations.size() < 2) throw std::invalid_argument("need at least two truncations");
  DiagnosticReport rep;
  for (const auto& pts : truncations) {
    if (pts.empty()) throw std::invalid_argument("empty truncation");
    if (pts[0].size() != 2) throw std::invalid_argument("diagnostic is two dimensional");
    // deterministic apex: lexicographic minimum
    RatVec apex = pts[0];
    for (const RatVec& p : pts)
      if (lex_less(p, apex)) apex = p;
    std::vector<RatVec> dirs;
    for (const RatVec& p : pts) {
      RatVec d = sub(p, apex);
      if (!d[0].is_zero() || !d[1].is_zero()) dirs.push_back(d);
    }
    Cone hull = Cone::from_generators_rat(2, dirs);
    rep.levels.push_back({pts.size(), hull.generators()});
  }
  // stabilized when the hull rays stop moving and stay put
  size_t count = rep.levels.size();
  size_t stable_from = count - 1;
  while (stable_from > 0 && rep.levels[stable_from - 1].rays == rep.levels[stable_from].rays)
    --stable_from;
  if (stable_from < count - 1) {
    rep.verdict = StabilizationVerdict::Stabilized;
    rep.stabilized_at = static_cast<int>(stable_from) + 2;  // visible at the next level
    return rep;
  }
  // every consecutive pair swaps exactly one extremal ray, rotating in one
  // consistent direction, across at least five levels
  bool monotone = count >= 5;
  int direction = 0;
  for (size_t i = 1; i < count && monotone; ++i) {
    std::vector<IntVec> out, in;
    for (const IntVec& r : rep.levels[i - 1].rays)
      if (std::find(rep.levels[i].rays.begin(), rep.levels[i].rays.end(), r) ==
          rep.levels[i].rays.end())
        out.push_back(r);
    for (const IntVec& r : rep.levels[i].rays)
      if (std::find(rep.levels[i - 1].rays.begin(), rep.levels[i - 1].rays.end(), r) ==
          rep.levels[i - 1].rays.end())
        in.push_back(r);
    if (out.size() != 1 || in.size() != 1) { monotone = false; break; }
    Int cross = checked_sub(checked_mul(in[0][1], out[0][0]), checked_mul(out[0][1], in[0][0]));
    int s = cross > 0 ? 1 : (cross < 0 ? -1 : 0);
    if (s == 0) monotone = false;
    else if (direction == 0) direction = s;
    else if (s != direction) monotone = false;
  }
  rep.verdict = monotone ? StabilizationVerdict::NonStabilizing : StabilizationVerdict::Inconclusive;
  return rep;
}

}  // namespace seriescone
