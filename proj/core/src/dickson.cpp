#include "seriescone/dickson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "seriescone/polyhedron.hpp"

namespace seriescone {

namespace {

// gamma as an N-combination of the semigroup generators: breadth-first walk
// over partial sums inside a growing coordinate box, with parent links to
// read the coefficient vector back off.
IntVec express_in_semigroup(const IntVec& gamma, const std::vector<IntVec>& gens, int n) {
  int k = static_cast<int>(gens.size());
  Int extent = 1;
  for (Int c : gamma) extent = std::max(extent, c < 0 ? -c : c);
  for (const IntVec& g : gens)
    for (Int c : g) extent = std::max(extent, c < 0 ? -c : c);
  for (Int pad = 2 * extent; pad <= 64 * extent; pad *= 2) {
    std::map<IntVec, std::pair<IntVec, int>> parent;  // point -> (previous, gen index)
    std::vector<IntVec> queue = {IntVec(static_cast<size_t>(n), 0)};
    parent.emplace(queue[0], std::make_pair(IntVec{}, -1));
    size_t head = 0;
    bool found = is_zero(gamma);
    while (head < queue.size() && !found) {
      IntVec cur = queue[head++];
      for (int i = 0; i < k && !found; ++i) {
        IntVec nxt = add(cur, gens[static_cast<size_t>(i)]);
        bool inside = true;
        for (int j = 0; j < n; ++j) {
          Int lo = std::min<Int>(0, gamma[static_cast<size_t>(j)]) - pad;
          Int hi = std::max<Int>(0, gamma[static_cast<size_t>(j)]) + pad;
          if (nxt[static_cast<size_t>(j)] < lo || nxt[static_cast<size_t>(j)] > hi) {
            inside = false;
            break;
          }
        }
        if (!inside || parent.count(nxt)) continue;
        parent.emplace(nxt, std::make_pair(cur, i));
        if (nxt == gamma) { found = true; break; }
        if (parent.size() > 200000) break;
        queue.push_back(std::move(nxt));
      }
      if (parent.size() > 200000) break;
    }
    if (found) {
      IntVec alpha(static_cast<size_t>(k), 0);
      IntVec cur = gamma;
      while (!is_zero(cur)) {
        auto it = parent.find(cur);
        ++alpha[static_cast<size_t>(it->second.second)];
        cur = it->second.first;
      }
      return alpha;
    }
  }
  throw std::runtime_error("shift not expressible in the semigroup");
}

IntVec point_of_monomial(const IntVec& expo, const std::vector<IntVec>& basis, int n) {
  IntVec p(static_cast<size_t>(n), 0);
  for (size_t i = 0; i < basis.size(); ++i)
    if (expo[i] != 0) p = add(p, scaled(basis[i], expo[i]));
  return p;
}

}  // namespace

DicksonResult dickson_decompose(int n, const std::vector<DicksonShift>& shifts) {
  if (shifts.empty()) throw std::invalid_argument("no shifted cones given");
  Cone sigma = shifts[0].cone;
  for (size_t j = 1; j < shifts.size(); ++j) sigma = intersect(sigma, shifts[j].cone);
  if (!sigma.full_dimensional())
    throw std::invalid_argument("intersection cone not full dimensional");

  // Translate every shift into sigma.
  IntVec g0 = sigma.rel_interior_point();
  Int big = 0;
  for (const DicksonShift& s : shifts) {
    for (const IntVec& f : sigma.facets()) {
      Int num = dot(f, s.gamma);
      Int den = dot(f, g0);
      if (den <= 0) throw std::runtime_error("interior point not strictly interior");
      if (num < 0) big = std::max(big, (-num + den - 1) / den);
    }
  }
  IntVec shift_correction = scaled(g0, big);
  std::vector<IntVec> gammas;
  for (const DicksonShift& s : shifts) {
    IntVec g = add(s.gamma, shift_correction);
    if (!sigma.contains(g)) throw std::runtime_error("translated shift escaped the cone");
    gammas.push_back(std::move(g));
  }

  std::vector<IntVec> lin = int_kernel(sigma.facets(), n);
  std::vector<IntVec> sigma_gens = semigroup_generators(sigma);
  int s = static_cast<int>(sigma_gens.size());
  std::vector<Binomial> sigma_ideal = toric_ideal(sigma_gens);
  TermOrder order_u = TermOrder::right_lex(s);
  BinMonBasis gb_sigma = buchberger_bm(sigma_ideal, MonomialIdeal{}, order_u);

  // Per shifted cone: eliminate its extra semigroup variables to contract the
  // principal monomial ideal down to the sigma variables.
  std::vector<std::vector<IntVec>> ideal_points;  // per j: shifted-cone corners in Z^n
  for (size_t j = 0; j < shifts.size(); ++j) {
    std::vector<IntVec> w = semigroup_generators(shifts[j].cone);
    std::vector<IntVec> combined = sigma_gens;
    combined.insert(combined.end(), w.begin(), w.end());
    int total = static_cast<int>(combined.size());
    std::vector<Binomial> ij = toric_ideal(combined);
    IntVec mono = express_in_semigroup(gammas[j], combined, n);
    TermOrder order_uv = TermOrder::graded_elim(total, s);
    BinMonBasis gb = buchberger_bm(ij, MonomialIdeal::of({mono}), order_uv);
    BinMonBasis contracted = eliminate_tail(gb, order_uv, s);
    // Structure re-verification: the binomial part of the contraction must
    // land back inside the sigma toric ideal.
    for (const Binomial& b : contracted.binomials) {
      BinPoly r = reduce(BinPoly::binomial(b.lhs, b.rhs, order_u), gb_sigma, order_u);
      if (r.kind != BinPoly::Kind::Zero)
        throw std::runtime_error("contraction left the sigma toric ideal");
    }
    if (contracted.monomials.empty())
      throw std::runtime_error("contraction produced no monomial part");
    std::vector<IntVec> pts;
    for (const IntVec& m : contracted.monomials.gens)
      pts.push_back(point_of_monomial(m, sigma_gens, n));
    std::sort(pts.begin(), pts.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    ideal_points.push_back(std::move(pts));
  }

  auto in_all_shifted = [&](const IntVec& x) {
    for (size_t j = 0; j < shifts.size(); ++j)
      if (!shifts[j].cone.contains(sub(x, gammas[j]))) return false;
    return true;
  };

  // Minimal elements of the intersection of the per-cone monomial ideals:
  // expand the intersection of unions of translated sigma copies.
  std::set<IntVec> cand;
  std::vector<size_t> choice(ideal_points.size(), 0);
  while (true) {
    std::vector<LinCondition> conds;
    for (size_t j = 0; j < ideal_points.size(); ++j) {
      const IntVec& delta = ideal_points[j][choice[j]];
      for (const IntVec& f : sigma.facets()) conds.push_back({f, Rat(dot(f, delta))});
    }
    std::vector<RatVec> hull = basic_points(conds, n);
    if (!hull.empty()) {
      std::vector<IntVec> pad_vectors = sigma_gens;
      pad_vectors.insert(pad_vectors.end(), lin.begin(), lin.end());
      std::vector<LinCondition> box = conds;
      for (int c = 0; c < n; ++c) {
        Rat lo = hull[0][static_cast<size_t>(c)], hi = lo;
        for (const RatVec& v : hull) {
          lo = min(lo, v[static_cast<size_t>(c)]);
          hi = max(hi, v[static_cast<size_t>(c)]);
        }
        // pad by the semigroup zonotope and a lineality fundamental domain
        Int pad = 1;
        for (const IntVec& g : pad_vectors) {
          Int a = g[static_cast<size_t>(c)];
          pad = checked_add(pad, a < 0 ? -a : a);
        }
        IntVec e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(c)] = 1;
        box.push_back({e, lo - Rat(pad)});
        box.push_back({negated(e), -(hi + Rat(pad))});
      }
      for (IntVec& p : lattice_points(box, n)) {
        bool in_region = true;
        for (const LinCondition& c : conds)
          if (Rat(dot(c.normal, p)) < c.rhs) { in_region = false; break; }
        if (in_region) cand.insert(reduce_mod(std::move(p), lin));
      }
    }
    size_t k = 0;
    while (k < choice.size() && ++choice[k] == ideal_points[k].size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }

  // Keep the candidates that are minimal in the full intersection.
  std::vector<IntVec> minimal;
  for (const IntVec& x : cand) {
    if (!in_all_shifted(x)) continue;
    bool is_min = true;
    for (const IntVec& w : sigma_gens) {
      if (!lin.empty() && in_span(w, lin)) continue;  // unit step
      if (in_all_shifted(sub(x, w))) { is_min = false; break; }
    }
    if (is_min) minimal.push_back(x);
  }
  std::sort(minimal.begin(), minimal.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());

  DicksonResult res;
  res.sigma = sigma;
  for (const IntVec& c : minimal) res.C.push_back(sub(c, shift_correction));
  std::sort(res.C.begin(), res.C.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });

  // Certificate, inclusion one: C + semigroup steps stay inside every shift.
  bool ok = true;
  for (const IntVec& c : res.C) {
    for (size_t j = 0; j < shifts.size() && ok; ++j)
      if (!shifts[j].cone.contains(sub(c, shifts[j].gamma))) ok = false;
    for (const IntVec& h : sigma_gens) {
      IntVec step = add(c, h);
      for (size_t j = 0; j < shifts.size() && ok; ++j)
        if (!shifts[j].cone.contains(sub(step, shifts[j].gamma))) ok = false;
    }
  }
  // Certificate, inclusion two: every intersection lattice point of a
  // bounding region around C decomposes as C + sigma.
  if (ok && !res.C.empty()) {
    std::vector<LinCondition> region;
    for (size_t j = 0; j < shifts.size(); ++j)
      for (const IntVec& f : shifts[j].cone.facets())
        region.push_back({f, Rat(dot(f, shifts[j].gamma))});
    for (int c = 0; c < n; ++c) {
      Int lo = res.C[0][static_cast<size_t>(c)], hi = lo;
      for (const IntVec& v : res.C) {
        lo = std::min(lo, v[static_cast<size_t>(c)]);
        hi = std::max(hi, v[static_cast<size_t>(c)]);
      }
      Int pad = 2;
      for (const IntVec& g : sigma_gens) {
        Int a = g[static_cast<size_t>(c)];
        pad = checked_add(pad, 2 * (a < 0 ? -a : a));
      }
      for (const IntVec& g : lin) {
        Int a = g[static_cast<size_t>(c)];
        pad = checked_add(pad, a < 0 ? -a : a);
      }
      IntVec e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(c)] = 1;
      region.push_back({e, Rat(lo - pad)});
      region.push_back({negated(e), Rat(-(hi + pad))});
    }
    for (const IntVec& p : lattice_points(region, n)) {
      bool in_m = true;
      for (size_t j = 0; j < shifts.size(); ++j)
        if (!shifts[j].cone.contains(sub(p, shifts[j].gamma))) { in_m = false; break; }
      if (!in_m) continue;
      bool decomposes = false;
      for (const IntVec& c : res.C)
        if (sigma.contains(sub(p, c))) { decomposes = true; break; }
      if (!decomposes) { ok = false; break; }
    }
  }
  res.certified = ok && !res.C.empty();
  return res;
}

}  // namespace seriescone
