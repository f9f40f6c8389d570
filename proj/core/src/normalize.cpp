#include <algorithm>
#include <set>
#include <stdexcept>

#include "seriescone/dickson.hpp"
#include "seriescone/polyhedron.hpp"
#include "seriescone/support.hpp"

namespace seriescone {

namespace {

struct FaceFunctional {
  IntVec u;
  int face_dim;
};

// Integer relative-interior vector of the dual face tau n span(F)^perp, one
// per proper nonzero face F of tau_dual. On the line there are none, and the
// facet normal of tau_dual (the single generator of tau) serves instead.
std::vector<FaceFunctional> face_functionals(const Cone& tau_cone, const Cone& tau_dual) {
  int n = tau_cone.ambient_dim();
  std::vector<FaceFunctional> out;
  std::set<IntVec> seen;
  for (int d = 1; d < n; ++d) {
    for (const Cone& f : faces(tau_dual, d)) {
      std::vector<IntVec> ineqs = tau_cone.facets();
      for (const IntVec& g : f.generators()) {
        ineqs.push_back(g);
        ineqs.push_back(negated(g));
      }
      Cone dual_face = Cone::from_inequalities(n, ineqs);
      IntVec u = primitive(dual_face.rel_interior_point());
      if (is_zero(u)) throw std::runtime_error("degenerate dual face");
      if (seen.insert(u).second) out.push_back({u, d});
    }
  }
  if (out.empty()) {
    for (const IntVec& u : tau_cone.generators())
      if (seen.insert(u).second) out.push_back({u, 0});
  }
  return out;
}

Rat value(const IntVec& u, const RatVec& x) { return dot(u, x); }

// Points of a positive-direction semigroup family with value below the
// threshold, and the re-presentation of the rest as shifted families.
void semigroup_surgery(const SemigroupFamily& fam, const IntVec& u, const Rat& t,
                       std::vector<RatVec>& removed, std::vector<SemigroupFamily>& out) {
  Rat base = value(u, fam.base);
  std::vector<Rat> vals;
  Rat maxval(0);
  for (const RatVec& g : fam.gens) {
    Rat v = value(u, g);
    vals.push_back(v);
    maxval = max(maxval, v);
  }
  // enumerate family points with value < t + maxval; collect removals and
  // minimal survivors
  std::set<std::vector<std::pair<Int, Int>>> seen;
  std::vector<RatVec> low, minimal;
  auto key = [](const RatVec& p) {
    std::vector<std::pair<Int, Int>> k;
    for (const Rat& r : p) k.emplace_back(r.num(), r.den());
    return k;
  };
  struct Node {
    RatVec pt;
    Rat val;
  };
  std::vector<Node> stack = {{fam.base, base}};
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    if (!seen.insert(key(nd.pt)).second) continue;
    if (nd.val < t) {
      low.push_back(nd.pt);
    } else if (nd.val < t + maxval) {
      minimal.push_back(nd.pt);
    }
    if (nd.val < t + maxval) {
      for (size_t i = 0; i < fam.gens.size(); ++i)
        stack.push_back({add(nd.pt, fam.gens[i]), nd.val + vals[i]});
    }
  }
  // a survivor is a new base iff no generator-step back stays a survivor
  std::set<std::vector<std::pair<Int, Int>>> family_pts;
  for (const RatVec& p : low) family_pts.insert(key(p));
  for (const RatVec& p : minimal) family_pts.insert(key(p));
  std::vector<RatVec> bases;
  for (const RatVec& m : minimal) {
    bool min_in_superlevel = true;
    for (const RatVec& g : fam.gens) {
      RatVec back = sub(m, g);
      if (family_pts.count(key(back)) && value(u, back) >= t) { min_in_superlevel = false; break; }
    }
    if (min_in_superlevel) bases.push_back(m);
  }
  for (const RatVec& p : low) removed.push_back(p);
  for (const RatVec& b : bases) out.push_back({b, fam.gens});
}

}  // namespace

NormalizationResult normalize(const SupportSpec& s) {
  s.validate();
  if (s.empty()) throw std::invalid_argument("empty support");
  int n = s.n;
  NormalizationResult res;
  TauResult tr = tau_result(s);
  res.tau = tr.tau;
  res.tau_dual = tr.tau_dual;
  if (!res.tau_dual.full_dimensional() || !res.tau_dual.strongly_convex())
    throw std::invalid_argument("tau dual must be pointed and full dimensional");

  std::vector<FaceFunctional> funcs = face_functionals(res.tau, res.tau_dual);

  // Thresholds per face functional, with the witness classification. Faces
  // whose level is pinned by an infinite level or an accumulation keep that
  // threshold; the remaining faces take the smallest achieved value of the
  // residual after the capped removals, so stripped points cannot drag the
  // half-space stack down.
  std::vector<Rat> thresholds(funcs.size());
  std::vector<bool> capped(funcs.size(), false);
  for (size_t fi = 0; fi < funcs.size(); ++fi) {
    const FaceFunctional& f = funcs[fi];
    ThresholdInfo info = t_sigma(s, f.u);
    Rat level = info.t;
    // A tail accumulating from below its limit leaves infinitely many points
    // under that level; the containment threshold retreats to the first
    // value of any such family.
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& tf : s.ptails) {
        Rat dv = dot(f.u, tf.dir);
        if (dv.sign() <= 0) continue;
        Rat limit = dot(f.u, tf.base) + dv;
        Rat first = dot(f.u, tf.base) + dv * Rat(tf.p - 1, tf.p);
        if (limit <= level && first < level) {
          level = first;
          moved = true;
        }
      }
    }
    thresholds[fi] = level;
    FacetWitness w;
    w.u = f.u;
    w.level = level;
    if (info.level_infinite) {
      capped[fi] = true;
      w.kind = FacetWitness::Kind::InfiniteLevel;
    } else {
      bool accumulates = false;
      for (const auto& tf : s.ptails) {
        Rat dv = dot(f.u, tf.dir);
        if (!dv.is_zero() && dot(f.u, tf.base) + dv == info.t) accumulates = true;
      }
      if (accumulates) {
        capped[fi] = true;
        w.kind = FacetWitness::Kind::Accumulation;
      } else if (tau0_region_contains(tr, to_rat(f.u))) {
        // The plain decomposition leaves this face finite; a correction
        // series supported on the face makes it infinite.
        Cone face_dirs = Cone::from_inequalities(
            n, [&] {
              std::vector<IntVec> iq;
              for (int i = 0; i < n; ++i) {
                IntVec e(static_cast<size_t>(n), 0);
                e[static_cast<size_t>(i)] = 1;
                iq.push_back(e);
              }
              iq.push_back(f.u);
              iq.push_back(negated(f.u));
              return iq;
            }());
        if (face_dirs.dim() >= 1) {
          RatVec w0 = to_rat(face_dirs.generators().front());
          res.orthant_adjust.rays.push_back({w0, w0});
          w.kind = FacetWitness::Kind::Adjustment;
        } else {
          w.kind = FacetWitness::Kind::None;
        }
      } else {
        w.kind = FacetWitness::Kind::None;
      }
    }
    res.facet_witnesses.push_back(std::move(w));
  }
  res.orthant_adjust.n = n;
  res.orthant_adjust.lattice_scale = s.lattice_scale;

  // Remove the finitely many points below each capped threshold; families
  // are re-based so the residual stays in the symbolic class.
  SupportSpec residual = s;
  std::vector<RatVec> removed;
  for (size_t fi = 0; fi < funcs.size(); ++fi) {
    if (!capped[fi]) continue;
    const IntVec& u = funcs[fi].u;
    const Rat& t = thresholds[fi];
    SupportSpec next = residual;
    next.points.clear();
    for (const RatVec& p : residual.points) {
      if (value(u, p) < t) removed.push_back(p);
      else next.points.push_back(p);
    }
    next.rays.clear();
    for (const RayFamily& r : residual.rays) {
      Rat base = value(u, r.base), step = value(u, r.step);
      if (step.sign() <= 0 || base >= t) {
        next.rays.push_back(r);
        continue;
      }
      Int k = ((t - base) / step).ceil();  // points at the threshold are kept
      for (Int i = 0; i < k; ++i) removed.push_back(add(r.base, scaled(r.step, Rat(i))));
      next.rays.push_back({add(r.base, scaled(r.step, Rat(k))), r.step});
    }
    next.semigroups.clear();
    for (const SemigroupFamily& g : residual.semigroups) {
      bool below_possible = value(u, g.base) < t;
      bool all_positive = true;
      for (const RatVec& v : g.gens)
        if (value(u, v).sign() <= 0) all_positive = false;
      if (!below_possible || !all_positive) {
        next.semigroups.push_back(g);
        continue;
      }
      semigroup_surgery(g, u, t, removed, next.semigroups);
    }
    next.ptails.clear();
    for (const PTailFamily& tf : residual.ptails) {
      Rat base = value(u, tf.base), dir = value(u, tf.dir);
      if (dir.sign() <= 0) {
        next.ptails.push_back(tf);
        continue;
      }
      // count the leading points below the threshold
      Int k = 0;
      Rat pk(tf.p);
      while (k < 64) {
        Rat v = base + dir * (Rat(1) - Rat(1) / pk);
        if (v >= t) break;
        removed.push_back(add(tf.base, scaled(tf.dir, Rat(1) - Rat(1) / pk)));
        pk = pk * Rat(tf.p);
        ++k;
      }
      if (k == 0) {
        next.ptails.push_back(tf);
      } else {
        // base' = base + (1 - p^{-k}) dir, dir' = p^{-k} dir
        Rat pinv = Rat(1);
        for (Int i = 0; i < k; ++i) pinv = pinv / Rat(tf.p);
        next.ptails.push_back({add(tf.base, scaled(tf.dir, Rat(1) - pinv)), scaled(tf.dir, pinv), tf.p});
      }
    }
    residual = std::move(next);
  }
  {
    std::sort(removed.begin(), removed.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  }
  res.removed_points = removed;
  res.residual = residual;

  // Containment thresholds of the uncapped faces, on the residual.
  auto min_achieved = [&](const IntVec& u) {
    bool first = true;
    Rat m;
    auto feed = [&](const Rat& v) {
      if (first || v < m) { m = v; first = false; }
    };
    for (const RatVec& p : residual.points) feed(value(u, p));
    for (const auto& r : residual.rays) feed(value(u, r.base));
    for (const auto& g : residual.semigroups) feed(value(u, g.base));
    for (const auto& t : residual.ptails) {
      Rat dv = value(u, t.dir);
      if (dv.sign() > 0) feed(value(u, t.base) + dv * Rat(t.p - 1, t.p));
      else feed(value(u, t.base) + dv);
    }
    if (first) throw std::runtime_error("empty residual has no threshold");
    return m;
  };
  for (size_t fi = 0; fi < funcs.size(); ++fi) {
    if (capped[fi]) continue;
    thresholds[fi] = min_achieved(funcs[fi].u);
    res.facet_witnesses[fi].level = thresholds[fi];
  }

  // Scale to integers and run the Dickson decomposition over the half-space
  // stack of all face functionals.
  Int kappa = s.lattice_scale;
  for (const Rat& t : thresholds) kappa = checked_mul(kappa / gcd_ll(kappa, t.den()), t.den());
  std::vector<DicksonShift> shifts;
  for (size_t fi = 0; fi < funcs.size(); ++fi) {
    const IntVec& u = funcs[fi].u;
    Rat tscaled = thresholds[fi] * Rat(kappa);
    if (!tscaled.is_integer()) throw std::runtime_error("threshold escaped the scaled lattice");
    // gamma with gamma . u = t, via an integer vector of dot 1
    IntVec unit;
    {
      // extended gcd over the coordinates of u
      IntVec x(static_cast<size_t>(n), 0);
      Int g = 0;
      for (int i = 0; i < n; ++i) {
        Int c = u[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (g == 0) {
          g = c < 0 ? -c : c;
          x[static_cast<size_t>(i)] = c < 0 ? -1 : 1;
          continue;
        }
        Int a = g, b = c, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
        while (b != 0) {
          Int q = a / b, tmp = a - q * b;
          a = b; b = tmp;
          tmp = x0 - q * x1; x0 = x1; x1 = tmp;
          tmp = y0 - q * y1; y0 = y1; y1 = tmp;
        }
        if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
        for (int j = 0; j < i; ++j) x[static_cast<size_t>(j)] = checked_mul(x[static_cast<size_t>(j)], x0);
        x[static_cast<size_t>(i)] = y0;
        g = a;
      }
      if (g != 1) throw std::runtime_error("face functional not primitive");
      unit = x;
    }
    shifts.push_back({scaled(unit, tscaled.num()), Cone::from_inequalities(n, {u})});
  }
  DicksonResult dr = dickson_decompose(n, shifts);
  if (!(dr.sigma == res.tau_dual)) throw std::runtime_error("half-space stack does not cut tau dual");
  res.dickson_certified = dr.certified;
  for (const IntVec& c : dr.C) {
    RatVec down(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) down[static_cast<size_t>(i)] = Rat(c[static_cast<size_t>(i)], kappa);
    res.C.push_back(std::move(down));
  }

  // Residual containment: every family of the residual sits in C + tau_dual.
  auto in_c_plus_dual = [&](const RatVec& x) {
    for (const RatVec& c : res.C)
      if (res.tau_dual.contains(sub(x, c))) return true;
    return false;
  };
  bool contained = true;
  for (const RatVec& p : residual.points) contained = contained && in_c_plus_dual(p);
  for (const auto& r : residual.rays)
    contained = contained && in_c_plus_dual(r.base) && res.tau_dual.contains(r.step);
  for (const auto& g : residual.semigroups) {
    contained = contained && in_c_plus_dual(g.base);
    for (const RatVec& v : g.gens) contained = contained && res.tau_dual.contains(v);
  }
  for (const auto& t : residual.ptails)
    contained = contained && in_c_plus_dual(t.base) && res.tau_dual.contains(t.dir);
  res.residual_contained = contained;

  // Witnesses on the one-dimensional faces of tau_dual.
  IntVec w0(static_cast<size_t>(n), 0);
  for (const IntVec& g : res.tau.generators()) w0 = add(w0, g);
  std::vector<Cone> ray_faces = faces(res.tau_dual, 1);
  for (const Cone& rf : ray_faces) {
    IntVec r = rf.generators().front();
    RayFaceWitness wit;
    wit.ray = r;
    auto on_ray_from = [&](const RatVec& base, const RatVec& gamma) {
      RatVec d = sub(base, gamma);
      bool zero = true;
      for (const Rat& c : d)
        if (!c.is_zero()) zero = false;
      if (zero) return true;
      IntVec pd = primitive_direction(d);
      if (pd != r) return false;
      return true;  // positive multiple since primitive directions match
    };
    // candidate apexes in C, best first
    std::vector<RatVec> order = res.C;
    std::sort(order.begin(), order.end(), [&](const RatVec& a, const RatVec& b) {
      Rat ga = dot(w0, a), gb = dot(w0, b);
      if (!(ga == gb)) return ga < gb;
      return lex_less(a, b);
    });
    for (const RatVec& gamma : order) {
      // gamma + r must be a face of Conv(C) + tau_dual
      std::vector<IntVec> weak = {r, negated(r)};
      std::vector<IntVec> strict;
      for (const Cone& other : ray_faces) {
        IntVec o = other.generators().front();
        if (!(o == r)) strict.push_back(o);
      }
      bool face_ok = true;
      for (const RatVec& gp : res.C) {
        if (gp == gamma) continue;
        strict.push_back(primitive_direction(sub(gp, gamma)));
      }
      face_ok = strictly_feasible(weak, strict, n);
      if (!face_ok) continue;
      bool found = false;
      for (const auto& fam : residual.rays)
        if (primitive_direction(fam.step) == r && on_ray_from(fam.base, gamma)) found = true;
      for (const auto& fam : residual.semigroups)
        for (const RatVec& g : fam.gens)
          if (primitive_direction(g) == r && on_ray_from(fam.base, gamma)) found = true;
      for (const auto& fam : residual.ptails)
        if (primitive_direction(fam.dir) == r && on_ray_from(fam.base, gamma)) found = true;
      if (found) {
        wit.kind = RayFaceWitness::Kind::Family;
        wit.gamma = gamma;
        break;
      }
    }
    if (wit.kind == RayFaceWitness::Kind::None) {
      for (const auto& fam : res.orthant_adjust.rays)
        if (primitive_direction(fam.step) == r) wit.kind = RayFaceWitness::Kind::Adjustment;
    }
    res.ray_witnesses.push_back(std::move(wit));
  }
  return res;
}

std::vector<PolyhedronEdge> unbounded_edges(const std::vector<RatVec>& C, const Cone& recession) {
  int n = recession.ambient_dim();
  std::vector<PolyhedronEdge> out;
  std::vector<Cone> ray_faces = faces(recession, 1);
  for (const RatVec& gamma : C) {
    for (const Cone& rf : ray_faces) {
      IntVec r = rf.generators().front();
      std::vector<IntVec> weak = {r, negated(r)};
      std::vector<IntVec> strict;
      for (const Cone& other : ray_faces) {
        IntVec o = other.generators().front();
        if (!(o == r)) strict.push_back(o);
      }
      bool skip = false;
      for (const RatVec& gp : C) {
        if (gp == gamma) continue;
        RatVec d = sub(gp, gamma);
        bool zero = true;
        for (const Rat& c : d)
          if (!c.is_zero()) zero = false;
        if (zero) { skip = true; break; }
        strict.push_back(primitive_direction(d));
      }
      if (skip) continue;
      if (strictly_feasible(weak, strict, n)) out.push_back({gamma, r});
    }
  }
  return out;
}

}  // namespace seriescone
