#include "seriescone/binomial.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "seriescone/polyhedron.hpp"

namespace seriescone {

bool divides(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVec lcm_exp(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

MonomialIdeal MonomialIdeal::of(std::vector<IntVec> gens) {
  std::sort(gens.begin(), gens.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<IntVec> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      if (divides(gens[j], gens[i])) { redundant = true; break; }
    }
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal{std::move(minimal)};
}

bool MonomialIdeal::member(const IntVec& m) const {
  for (const IntVec& g : gens)
    if (divides(g, m)) return true;
  return false;
}

bool TermOrder::less(const IntVec& a, const IntVec& b) const {
  assert(static_cast<int>(a.size()) == vars_ && static_cast<int>(b.size()) == vars_);
  auto right_lex_on = [&](int lo, int hi) {  // [lo, hi)
    for (int i = hi - 1; i >= lo; --i) {
      Int d = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
      if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
  };
  auto degree_on = [&](const IntVec& v, int lo, int hi) {
    Int deg = 0;
    for (int i = lo; i < hi; ++i) deg = checked_add(deg, v[static_cast<size_t>(i)]);
    return deg;
  };
  switch (kind_) {
    case Kind::RightLex:
      return right_lex_on(0, vars_) < 0;
    case Kind::Lex:
      for (int i = 0; i < vars_; ++i) {
        Int d = a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)];
        if (d != 0) return d < 0;
      }
      return false;
    case Kind::GradedElim: {
      Int da = degree_on(a, split_, vars_), db = degree_on(b, split_, vars_);
      if (da != db) return da < db;
      int c = right_lex_on(split_, vars_);
      if (c != 0) return c < 0;
      Int ha = degree_on(a, 0, split_), hb = degree_on(b, 0, split_);
      if (ha != hb) return ha < hb;
      return right_lex_on(0, split_) < 0;
    }
  }
  return false;
}

BinPoly BinPoly::monomial(IntVec m) {
  BinPoly p;
  p.kind = Kind::Monomial;
  p.a = std::move(m);
  return p;
}

BinPoly BinPoly::binomial(IntVec x, IntVec y, const TermOrder& o) {
  if (x == y) return zero();
  BinPoly p;
  p.kind = Kind::Binomial;
  if (o.less(x, y)) std::swap(x, y);
  p.a = std::move(x);
  p.b = std::move(y);
  return p;
}

namespace {

IntVec rewrite(const IntVec& t, const IntVec& lead, const IntVec& tail) {
  IntVec r(t.size());
  for (size_t i = 0; i < t.size(); ++i) r[i] = t[i] - lead[i] + tail[i];
  return r;
}

enum class Step { None, Deleted, Rewritten };

// One reduction step of a single exponent: monomial generators delete the
// term, binomial generators rewrite it.
Step reduce_term(IntVec& t, const BinMonBasis& basis) {
  if (basis.monomials.member(t)) return Step::Deleted;
  for (const Binomial& g : basis.binomials) {
    if (divides(g.lhs, t)) {
      t = rewrite(t, g.lhs, g.rhs);
      return Step::Rewritten;
    }
  }
  return Step::None;
}

}  // namespace

BinPoly reduce(BinPoly p, const BinMonBasis& basis, const TermOrder& o) {
  while (true) {
    if (p.kind == BinPoly::Kind::Zero) return p;
    if (p.kind == BinPoly::Kind::Monomial) {
      Step s = reduce_term(p.a, basis);
      if (s == Step::Deleted) return BinPoly::zero();
      if (s == Step::None) return p;
      continue;
    }
    Step s = reduce_term(p.a, basis);
    if (s == Step::Deleted) {
      p = BinPoly::monomial(std::move(p.b));
      continue;
    }
    if (s == Step::Rewritten) {
      p = BinPoly::binomial(std::move(p.a), std::move(p.b), o);
      continue;
    }
    Step t = reduce_term(p.b, basis);
    if (t == Step::Deleted) {
      p = BinPoly::monomial(std::move(p.a));
      continue;
    }
    if (t == Step::Rewritten) {
      p = BinPoly::binomial(std::move(p.a), std::move(p.b), o);
      continue;
    }
    return p;
  }
}

BinPoly s_poly(const BinPoly& f, const BinPoly& g, const TermOrder& o) {
  if (f.kind == BinPoly::Kind::Zero || g.kind == BinPoly::Kind::Zero) return BinPoly::zero();
  bool fb = f.kind == BinPoly::Kind::Binomial;
  bool gb = g.kind == BinPoly::Kind::Binomial;
  if (!fb && !gb) return BinPoly::zero();
  IntVec l = lcm_exp(f.a, g.a);
  if (fb && gb) return BinPoly::binomial(rewrite(l, g.a, g.b), rewrite(l, f.a, f.b), o);
  if (fb) return BinPoly::monomial(rewrite(l, f.a, f.b));
  return BinPoly::monomial(rewrite(l, g.a, g.b));
}

namespace {

BinMonBasis basis_of(const std::vector<BinPoly>& ps) {
  BinMonBasis b;
  std::vector<IntVec> monos;
  for (const BinPoly& p : ps) {
    if (p.kind == BinPoly::Kind::Binomial) b.binomials.push_back({p.a, p.b});
    else if (p.kind == BinPoly::Kind::Monomial) monos.push_back(p.a);
  }
  b.monomials = MonomialIdeal::of(std::move(monos));
  return b;
}

// Reduce every element against the others until stable; elements that reduce
// to zero are dropped. This keeps the generated ideal intact, so it is safe
// between completion rounds, and on a completed basis it yields the reduced
// Groebner basis.
std::vector<BinPoly> interreduce(std::vector<BinPoly> gens, const TermOrder& o) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      std::vector<BinPoly> others;
      for (size_t j = 0; j < gens.size(); ++j)
        if (j != i) others.push_back(gens[j]);
      BinMonBasis rest = basis_of(others);
      BinPoly r = reduce(gens[i], rest, o);
      if (r.kind == BinPoly::Kind::Zero) {
        gens.erase(gens.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      bool same = r.kind == gens[i].kind && r.a == gens[i].a &&
                  (r.kind != BinPoly::Kind::Binomial || r.b == gens[i].b);
      if (!same) {
        gens[i] = std::move(r);
        changed = true;
      }
    }
  }
  return gens;
}

}  // namespace

BinMonBasis buchberger_bm(const std::vector<Binomial>& binomials,
                          const MonomialIdeal& monomials, const TermOrder& o) {
  std::vector<BinPoly> work;
  for (const Binomial& b : binomials) {
    BinPoly p = BinPoly::binomial(b.lhs, b.rhs, o);
    if (p.kind != BinPoly::Kind::Zero) work.push_back(std::move(p));
  }
  for (const IntVec& m : monomials.gens) work.push_back(BinPoly::monomial(m));

  // Complete in rounds, inter-reducing between rounds so the pair set stays
  // proportional to the reduced basis.
  size_t processed_pairs = 0;
  while (true) {
    work = interreduce(std::move(work), o);
    BinMonBasis cur = basis_of(work);
    std::vector<BinPoly> found;
    for (size_t i = 0; i < work.size(); ++i) {
      for (size_t j = i + 1; j < work.size(); ++j) {
        if (++processed_pairs > 2'000'000)
          throw std::runtime_error("buchberger pair budget exceeded");
        const BinPoly& f = work[i];
        const BinPoly& g = work[j];
        if (f.kind == BinPoly::Kind::Monomial && g.kind == BinPoly::Kind::Monomial) continue;
        if (f.kind == BinPoly::Kind::Binomial && g.kind == BinPoly::Kind::Binomial) {
          bool coprime = true;
          for (size_t k = 0; k < f.a.size(); ++k)
            if (f.a[k] > 0 && g.a[k] > 0) { coprime = false; break; }
          if (coprime) continue;  // S-polynomial reduces to zero
        }
        BinPoly s = reduce(s_poly(f, g, o), cur, o);
        if (s.kind != BinPoly::Kind::Zero) found.push_back(std::move(s));
      }
    }
    if (found.empty()) break;
    // dedupe new elements before the next round
    std::sort(found.begin(), found.end(), [](const BinPoly& x, const BinPoly& y) {
      if (x.kind != y.kind) return x.kind < y.kind;
      if (x.a != y.a) return lex_less(x.a, y.a);
      return lex_less(x.b, y.b);
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const BinPoly& x, const BinPoly& y) {
                              return x.kind == y.kind && x.a == y.a && x.b == y.b;
                            }),
                found.end());
    for (BinPoly& p : found) work.push_back(std::move(p));
  }
  BinMonBasis out = basis_of(work);
  std::sort(out.binomials.begin(), out.binomials.end());
  return out;
}

BinMonBasis eliminate_tail(const BinMonBasis& gb, const TermOrder& o, int keep) {
  if (!o.eliminates_tail(keep))
    throw std::invalid_argument("term order does not eliminate the tail block");
  auto tail_free = [&](const IntVec& e) {
    for (size_t i = static_cast<size_t>(keep); i < e.size(); ++i)
      if (e[i] != 0) return false;
    return true;
  };
  auto head = [&](const IntVec& e) { return IntVec(e.begin(), e.begin() + keep); };
  BinMonBasis out;
  for (const Binomial& b : gb.binomials)
    if (tail_free(b.lhs) && tail_free(b.rhs)) out.binomials.push_back({head(b.lhs), head(b.rhs)});
  std::vector<IntVec> monos;
  for (const IntVec& m : gb.monomials.gens)
    if (tail_free(m)) monos.push_back(head(m));
  out.monomials = MonomialIdeal::of(std::move(monos));
  std::sort(out.binomials.begin(), out.binomials.end());
  return out;
}

std::vector<Binomial> toric_ideal(const std::vector<IntVec>& basis) {
  if (basis.empty()) return {};
  int n = static_cast<int>(basis[0].size());
  int s = static_cast<int>(basis.size());
  int m = s + n + 1;  // U block, Laurent x block, inverter t
  std::vector<Binomial> gens;
  for (int i = 0; i < s; ++i) {
    if (static_cast<int>(basis[static_cast<size_t>(i)].size()) != n)
      throw std::invalid_argument("toric basis dimension mismatch");
    IntVec lhs(static_cast<size_t>(m), 0);
    IntVec rhs(static_cast<size_t>(m), 0);
    lhs[static_cast<size_t>(i)] = 1;
    for (int j = 0; j < n; ++j) {
      Int u = basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (u >= 0) rhs[static_cast<size_t>(s + j)] = u;
      else lhs[static_cast<size_t>(s + j)] = -u;
    }
    gens.push_back({std::move(lhs), std::move(rhs)});
  }
  {
    IntVec lhs(static_cast<size_t>(m), 0);
    for (int j = 0; j < n; ++j) lhs[static_cast<size_t>(s + j)] = 1;
    lhs[static_cast<size_t>(m - 1)] = 1;
    gens.push_back({std::move(lhs), IntVec(static_cast<size_t>(m), 0)});
  }
  TermOrder o = TermOrder::graded_elim(m, s);
  BinMonBasis gb = buchberger_bm(gens, MonomialIdeal{}, o);
  BinMonBasis contracted = eliminate_tail(gb, o, s);
  if (!contracted.monomials.empty())
    throw std::runtime_error("toric contraction produced a monomial");
  for (const Binomial& b : contracted.binomials) {
    IntVec rel(static_cast<size_t>(n), 0);
    for (int i = 0; i < s; ++i) {
      Int c = b.lhs[static_cast<size_t>(i)] - b.rhs[static_cast<size_t>(i)];
      if (c != 0) rel = add(rel, scaled(basis[static_cast<size_t>(i)], c));
    }
    if (!is_zero(rel)) throw std::runtime_error("toric output is not a relation");
  }
  return contracted.binomials;
}

std::vector<IntVec> semigroup_generators(const Cone& c) {
  if (c.strongly_convex()) return hilbert_basis(c);
  int n = c.ambient_dim();
  // Lattice points of the zonotope over {rays, +-lineality basis} generate
  // (Gordan with units); keep an irredundant subset.
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
  std::vector<IntVec> cand = lattice_points(conds, n);
  std::erase_if(cand, [](const IntVec& v) { return is_zero(v); });
  cand = canonical_vector_set(std::move(cand));

  auto l1 = [](const IntVec& v) {
    Int s = 0;
    for (Int c : v) s += c < 0 ? -c : c;
    return s;
  };
  // Quick pass: drop sums of two strictly shorter members. Induction on the
  // L1 norm keeps generation intact under these removals.
  {
    std::set<IntVec> cset(cand.begin(), cand.end());
    std::vector<IntVec> kept;
    for (const IntVec& w : cand) {
      bool decomposed = false;
      for (const IntVec& x : cand) {
        if (l1(x) >= l1(w)) continue;
        IntVec y = sub(w, x);
        if (l1(y) < l1(w) && cset.count(y)) { decomposed = true; break; }
      }
      if (!decomposed) kept.push_back(w);
    }
    cand = std::move(kept);
  }

  // Drop members that the remaining set provably regenerates; removals are
  // re-verified one at a time so units cannot cascade away. Reachability is
  // a bounded walk over sums; a miss only keeps an extra generator.
  auto generated_by = [&](const IntVec& target, const std::vector<IntVec>& gens) {
    Int bound = 2;
    for (Int c : target) bound = std::max(bound, c < 0 ? -c : c);
    for (const IntVec& g : gens)
      for (Int c : g) bound = std::max(bound, (c < 0 ? -c : c));
    bound = checked_mul(bound, 3);
    std::set<IntVec> seen;
    std::vector<IntVec> stack = {IntVec(static_cast<size_t>(n), 0)};
    seen.insert(stack[0]);
    while (!stack.empty()) {
      IntVec cur = stack.back();
      stack.pop_back();
      if (cur == target) return true;
      if (seen.size() > 50000) return false;
      for (const IntVec& g : gens) {
        IntVec nxt = add(cur, g);
        bool inside = true;
        for (Int c : nxt)
          if (c > bound || c < -bound) { inside = false; break; }
        if (inside && seen.insert(nxt).second) stack.push_back(nxt);
      }
    }
    return false;
  };
  std::vector<IntVec> gens = cand;
  std::vector<IntVec> order = cand;
  std::sort(order.begin(), order.end(), [](const IntVec& a, const IntVec& b) {
    Int na = 0, nb = 0;
    for (Int c : a) na += c < 0 ? -c : c;
    for (Int c : b) nb += c < 0 ? -c : c;
    if (na != nb) return na > nb;  // try to drop the long vectors first
    return lex_less(b, a);
  });
  for (const IntVec& w : order) {
    std::vector<IntVec> rest;
    for (const IntVec& g : gens)
      if (!(g == w)) rest.push_back(g);
    if (rest.size() < gens.size() && generated_by(w, rest)) gens = std::move(rest);
  }
  return canonical_vector_set(std::move(gens));
}

SemigroupEncoding SemigroupEncoding::of(const Cone& c) {
  SemigroupEncoding enc;
  enc.cone = c;
  enc.basis = semigroup_generators(c);
  enc.ideal = toric_ideal(enc.basis);
  return enc;
}

}  // namespace seriescone
