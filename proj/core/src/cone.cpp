#include "seriescone/cone.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "seriescone/polyhedron.hpp"

namespace seriescone {

std::vector<IntVec> canonical_vector_set(std::vector<IntVec> vs) {
  std::erase_if(vs, [](const IntVec& v) { return is_zero(v); });
  std::sort(vs.begin(), vs.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

namespace {

// Extended gcd over a list: returns g >= 0 and coefficients with sum c_i v_i = g.
Int egcd_list(const std::vector<Int>& vals, std::vector<Int>& coef) {
  coef.assign(vals.size(), 0);
  Int g = 0;
  for (size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == 0) continue;
    if (g == 0) {
      g = vals[i] < 0 ? -vals[i] : vals[i];
      coef[i] = vals[i] < 0 ? -1 : 1;
      continue;
    }
    // egcd(g, vals[i])
    Int a = g, b = vals[i], x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Int q = a / b;
      Int t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
      t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    for (size_t j = 0; j < i; ++j) coef[j] = checked_mul(coef[j], x0);
    coef[i] = y0;
    g = a;
  }
  return g;
}

std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> c(static_cast<size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace

RayRep ray_rep(std::vector<IntVec> ineqs, int n) {
  for (IntVec& h : ineqs) h = primitive(h);
  ineqs = canonical_vector_set(std::move(ineqs));
  RayRep rep;
  rep.lineality = int_kernel(ineqs, n);
  int r = n - static_cast<int>(rep.lineality.size());
  if (r == 0) return rep;

  // Functionals vanishing on the lineality lattice, used to pick a canonical
  // generator of each edge modulo lineality.
  std::vector<IntVec> perp = int_kernel(rep.lineality, n);

  std::set<IntVec> rays;
  int m = static_cast<int>(ineqs.size());
  for (const auto& comb : combinations(m, r - 1)) {
    std::vector<IntVec> sub;
    sub.reserve(comb.size());
    for (int i : comb) sub.push_back(ineqs[static_cast<size_t>(i)]);
    if (rank_of(sub) != r - 1) continue;
    std::vector<IntVec> edge_lattice = int_kernel(sub, n);
    if (static_cast<int>(edge_lattice.size()) != static_cast<int>(rep.lineality.size()) + 1)
      continue;
    // Quotient-primitive generator: y is a functional with ker(y|edge) = lineality.
    const IntVec* y = nullptr;
    for (const IntVec& cand : perp) {
      for (const IntVec& b : edge_lattice) {
        if (dot(cand, b) != 0) { y = &cand; break; }
      }
      if (y) break;
    }
    if (!y) continue;  // edge lattice inside lineality span; cannot happen
    std::vector<Int> vals;
    vals.reserve(edge_lattice.size());
    for (const IntVec& b : edge_lattice) vals.push_back(dot(*y, b));
    std::vector<Int> coef;
    egcd_list(vals, coef);
    IntVec z(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < edge_lattice.size(); ++i)
      if (coef[i] != 0) z = add(z, scaled(edge_lattice[i], coef[i]));
    bool nonneg = true, nonpos = true;
    for (const IntVec& h : ineqs) {
      Int d = dot(h, z);
      if (d < 0) nonneg = false;
      if (d > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) continue;
    if (!nonneg) z = negated(z);
    rays.insert(reduce_mod(std::move(z), rep.lineality));
  }
  rep.rays.assign(rays.begin(), rays.end());
  return rep;
}

namespace {

std::vector<IntVec> rep_to_generators(const RayRep& rep) {
  std::vector<IntVec> gens = rep.rays;
  for (const IntVec& l : rep.lineality) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  return canonical_vector_set(std::move(gens));
}

}  // namespace

Cone Cone::from_generators(int n, const std::vector<IntVec>& gens) {
  Cone c;
  c.n_ = n;
  std::vector<IntVec> prim;
  prim.reserve(gens.size());
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("generator dimension mismatch");
    prim.push_back(primitive(g));
  }
  prim = canonical_vector_set(std::move(prim));
  RayRep dual_rep = ray_rep(prim, n);
  c.facets_ = rep_to_generators(dual_rep);
  RayRep self_rep = ray_rep(c.facets_, n);
  c.generators_ = rep_to_generators(self_rep);
  c.dim_ = rank_of(c.generators_);
  c.strongly_convex_ = self_rep.lineality.empty();
  return c;
}

Cone Cone::from_generators_rat(int n, const std::vector<RatVec>& gens) {
  std::vector<IntVec> prim;
  prim.reserve(gens.size());
  for (const RatVec& g : gens) prim.push_back(primitive_direction(g));
  return from_generators(n, prim);
}

Cone Cone::from_inequalities(int n, const std::vector<IntVec>& ineqs) {
  Cone c;
  c.n_ = n;
  std::vector<IntVec> prim;
  prim.reserve(ineqs.size());
  for (const IntVec& h : ineqs) prim.push_back(primitive(h));
  RayRep self_rep = ray_rep(prim, n);
  c.generators_ = rep_to_generators(self_rep);
  RayRep dual_rep = ray_rep(c.generators_, n);
  c.facets_ = rep_to_generators(dual_rep);
  c.dim_ = rank_of(c.generators_);
  c.strongly_convex_ = self_rep.lineality.empty();
  return c;
}

Cone Cone::orthant(int n) {
  std::vector<IntVec> gens;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(n, gens);
}

Cone Cone::zero(int n) { return from_generators(n, {}); }

bool Cone::contains(const IntVec& x) const {
  for (const IntVec& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::contains(const RatVec& x) const {
  for (const IntVec& f : facets_)
    if (dot(f, x).sign() < 0) return false;
  return true;
}

bool Cone::rel_interior_contains(const RatVec& x) const {
  std::set<IntVec> facet_set(facets_.begin(), facets_.end());
  for (const IntVec& f : facets_) {
    Rat d = dot(f, x);
    if (d.sign() < 0) return false;
    // A facet whose negation is also present is an equality of the span.
    if (facet_set.count(negated(f))) {
      if (d.sign() != 0) return false;
    } else if (d.sign() == 0) {
      return false;
    }
  }
  return true;
}

bool Cone::interior_contains(const RatVec& x) const {
  return full_dimensional() && rel_interior_contains(x);
}

IntVec Cone::rel_interior_point() const {
  IntVec p(static_cast<size_t>(n_), 0);
  for (const IntVec& g : generators_) p = add(p, g);
  return p;
}

std::string Cone::str() const {
  std::ostringstream os;
  os << "cone{";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (size_t j = 0; j < generators_[i].size(); ++j) {
      if (j) os << ",";
      os << generators_[i][j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

Cone dual(const Cone& c) {
  return Cone::from_inequalities(c.ambient_dim(), c.generators());
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<IntVec> ineqs = a.facets();
  ineqs.insert(ineqs.end(), b.facets().begin(), b.facets().end());
  return Cone::from_inequalities(a.ambient_dim(), ineqs);
}

Cone minkowski_sum(const Cone& a, const Cone& b) {
  std::vector<IntVec> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Cone::from_generators(a.ambient_dim(), gens);
}

std::vector<Cone> faces(const Cone& c, int d) {
  if (d < 0 || d > c.dim()) throw std::invalid_argument("face dimension out of range");
  std::set<Cone> out;
  int m = static_cast<int>(c.facets().size());
  for (int k = 0; k <= m; ++k) {
    for (const auto& comb : combinations(m, k)) {
      std::vector<IntVec> ineqs = c.facets();
      for (int i : comb) ineqs.push_back(negated(c.facets()[static_cast<size_t>(i)]));
      Cone f = Cone::from_inequalities(c.ambient_dim(), ineqs);
      if (f.dim() == d) out.insert(std::move(f));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<IntVec> hilbert_basis(const Cone& c) {
  if (!c.strongly_convex()) throw std::invalid_argument("hilbert basis needs a pointed cone");
  int n = c.ambient_dim();
  if (c.dim() == 0) return {};
  // Gordan: every irreducible lattice point lies in the zonotope spanned by
  // the extreme rays. Enumerate candidates in its bounding box.
  std::vector<LinCondition> conds;
  for (const IntVec& f : c.facets()) conds.push_back({f, Rat(0)});
  for (int j = 0; j < n; ++j) {
    Int lo = 0, hi = 0;
    for (const IntVec& r : c.generators()) {
      if (r[static_cast<size_t>(j)] < 0) lo = checked_add(lo, r[static_cast<size_t>(j)]);
      else hi = checked_add(hi, r[static_cast<size_t>(j)]);
    }
    IntVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(j)] = 1;
    conds.push_back({e, Rat(lo)});
    conds.push_back({negated(e), Rat(-hi)});
  }
  std::vector<IntVec> cands = lattice_points(conds, n);
  std::erase_if(cands, [](const IntVec& v) { return is_zero(v); });

  auto height = [&](const IntVec& v) {
    Int h = 0;
    for (const IntVec& f : c.facets()) h = checked_add(h, dot(f, v));
    return h;
  };
  std::sort(cands.begin(), cands.end(), [&](const IntVec& a, const IntVec& b) {
    Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });

  std::vector<IntVec> basis;
  for (const IntVec& x : cands) {
    // x is reducible iff c n (x - c) holds a lattice point besides 0 and x.
    std::vector<LinCondition> region;
    for (const IntVec& f : c.facets()) {
      region.push_back({f, Rat(0)});
      region.push_back({negated(f), Rat(-dot(f, x))});
    }
    bool reducible = false;
    for (const IntVec& y : lattice_points(region, n)) {
      if (is_zero(y) || y == x) continue;
      reducible = true;
      break;
    }
    if (!reducible) basis.push_back(x);
  }
  return canonical_vector_set(std::move(basis));
}

IntVec shift_into_intersection(const RatVec& g1, const Cone& c1, const RatVec& g2,
                               const Cone& c2) {
  int n = c1.ambient_dim();
  Cone sigma = intersect(c1, c2);
  if (!sigma.full_dimensional())
    throw std::invalid_argument("intersection cone not full dimensional");

  std::vector<LinCondition> pconds;
  for (const IntVec& f : c1.facets()) pconds.push_back({f, dot(f, g1)});
  for (const IntVec& f : c2.facets()) pconds.push_back({f, dot(f, g2)});
  std::vector<RatVec> basics = basic_points(pconds, n);
  if (basics.empty()) throw std::runtime_error("shifted intersection has no basic point");

  IntVec g0 = sigma.rel_interior_point();
  // Start from the ceiling of one basic point and push along -g0 until every
  // facet minimum clears.
  IntVec z(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) z[static_cast<size_t>(j)] = basics[0][static_cast<size_t>(j)].ceil();
  Int shift = 0;
  for (const IntVec& h : sigma.facets()) {
    Rat m;
    bool first = true;
    for (const RatVec& v : basics) {
      Rat d = dot(h, v);
      if (first || d < m) { m = d; first = false; }
    }
    Rat gap = Rat(dot(h, z)) - m;           // how far z overshoots the minimum
    Int hg = dot(h, g0);
    if (hg <= 0) throw std::runtime_error("interior point failed facet positivity");
    if (gap.sign() > 0) {
      Int need = (gap / Rat(hg)).ceil();
      shift = std::max(shift, need);
    }
  }
  IntVec gamma = sub(z, scaled(g0, shift));
  for (const RatVec& v : basics) {
    RatVec d = sub(v, to_rat(gamma));
    if (!sigma.contains(d)) throw std::runtime_error("shift certificate failed");
  }
  return gamma;
}

namespace {

// Refines `cells` (closed full-dimensional cones given by inequality lists)
// along each hyperplane; keeps the full-dimensional pieces.
std::vector<std::vector<IntVec>> split_cells(std::vector<std::vector<IntVec>> cells,
                                             const std::vector<IntVec>& hyperplanes, int n) {
  auto full_dim = [&](const std::vector<IntVec>& ineqs) {
    return Cone::from_inequalities(n, ineqs).dim() == n;
  };
  for (const IntVec& h : hyperplanes) {
    std::vector<std::vector<IntVec>> next;
    for (auto& cell : cells) {
      std::vector<IntVec> plus = cell, minus = cell;
      plus.push_back(h);
      minus.push_back(negated(h));
      bool p = full_dim(plus), m = full_dim(minus);
      if (p && m) {
        next.push_back(std::move(plus));
        next.push_back(std::move(minus));
      } else {
        next.push_back(std::move(cell));  // hyperplane does not cut this cell
      }
    }
    cells = std::move(next);
  }
  return cells;
}

bool cells_covered(const std::vector<std::vector<IntVec>>& cells,
                   const std::vector<Cone>& covers, int n) {
  for (const auto& cell : cells) {
    Cone cc = Cone::from_inequalities(n, cell);
    bool covered = false;
    for (const Cone& k : covers) {
      bool inside = true;
      for (const IntVec& g : cc.generators()) {
        if (!k.contains(g)) { inside = false; break; }
      }
      if (inside) { covered = true; break; }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

bool in_interior_of_union(const RatVec& w, const std::vector<Cone>& duals) {
  bool wzero = std::all_of(w.begin(), w.end(), [](const Rat& c) { return c.is_zero(); });
  if (wzero) throw std::invalid_argument("direction must be nonzero");
  if (duals.empty()) return false;
  int n = duals[0].ambient_dim();
  // w is interior iff the tangent cones at w of the members containing w
  // cover every direction.
  std::vector<Cone> tangents;
  std::vector<IntVec> hyperplanes;
  for (const Cone& c : duals) {
    if (!c.contains(w)) continue;
    std::vector<IntVec> tight;
    for (const IntVec& f : c.facets())
      if (dot(f, w).is_zero()) tight.push_back(f);
    Cone t = Cone::from_inequalities(n, tight);
    for (const IntVec& f : t.facets()) hyperplanes.push_back(primitive(f));
    tangents.push_back(std::move(t));
  }
  if (tangents.empty()) return false;
  hyperplanes = canonical_vector_set(std::move(hyperplanes));
  std::vector<std::vector<IntVec>> cells = {{}};  // whole space
  cells = split_cells(std::move(cells), hyperplanes, n);
  return cells_covered(cells, tangents, n);
}

bool union_covers_orthant(int n, const std::vector<Cone>& duals) {
  std::vector<IntVec> orthant_ineqs;
  for (int i = 0; i < n; ++i) {
    IntVec e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = 1;
    orthant_ineqs.push_back(std::move(e));
  }
  std::vector<IntVec> hyperplanes;
  for (const Cone& c : duals)
    for (const IntVec& f : c.facets()) hyperplanes.push_back(primitive(f));
  hyperplanes = canonical_vector_set(std::move(hyperplanes));
  std::vector<std::vector<IntVec>> cells = {orthant_ineqs};
  cells = split_cells(std::move(cells), hyperplanes, n);
  return cells_covered(cells, duals, n);
}

bool strictly_feasible(const std::vector<IntVec>& weak, const std::vector<IntVec>& strict,
                       int n) {
  std::vector<IntVec> ineqs = weak;
  ineqs.insert(ineqs.end(), strict.begin(), strict.end());
  Cone closure = Cone::from_inequalities(n, ineqs);
  IntVec p = closure.rel_interior_point();
  for (const IntVec& s : strict)
    if (dot(s, p) <= 0) return false;
  return true;
}

}  // namespace seriescone
