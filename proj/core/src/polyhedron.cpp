#include "seriescone/polyhedron.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace seriescone {

namespace {

struct Row {
  RatVec coef;  // over the first k variables
  Rat rhs;
};

Row normalize_row(Row r) {
  // Scale to primitive integer coefficients for cheap deduplication.
  Int lcm = 1;
  for (const Rat& c : r.coef) lcm = checked_mul(lcm / gcd_ll(lcm, c.den()), c.den());
  lcm = checked_mul(lcm / gcd_ll(lcm, r.rhs.den()), r.rhs.den());
  Int g = 0;
  for (const Rat& c : r.coef) {
    Int v = (c * Rat(lcm)).num();
    g = gcd_ll(g, v < 0 ? -v : v);
  }
  if (g > 1) {
    for (Rat& c : r.coef) c = c * Rat(lcm, g);
    r.rhs = r.rhs * Rat(lcm, g);
  } else {
    for (Rat& c : r.coef) c = c * Rat(lcm);
    r.rhs = r.rhs * Rat(lcm);
  }
  return r;
}

bool row_less(const Row& a, const Row& b) {
  if (lex_less(a.coef, b.coef)) return true;
  if (lex_less(b.coef, a.coef)) return false;
  return a.rhs < b.rhs;
}

// Fixes x_0..x_{k-1} in `point` and scans x_k using the level-k shadow.
void enumerate(const std::vector<std::vector<Row>>& levels, int k, RatVec& point,
               std::vector<IntVec>& out, size_t max_points) {
  const std::vector<Row>& rows = levels[static_cast<size_t>(k)];
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  for (const Row& r : rows) {
    Rat a = r.coef[static_cast<size_t>(k)];
    Rat rest = r.rhs;
    for (int j = 0; j < k; ++j) rest -= r.coef[static_cast<size_t>(j)] * point[static_cast<size_t>(j)];
    if (a.is_zero()) {
      if (rest.sign() > 0) return;  // infeasible prefix
      continue;
    }
    Rat bound = rest / a;
    if (a.sign() > 0) {
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    } else {
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    }
  }
  if (!has_lo || !has_hi) throw std::runtime_error("unbounded lattice enumeration");
  int last = static_cast<int>(point.size()) - 1;
  for (Int v = lo.ceil(); v <= hi.floor(); ++v) {
    point[static_cast<size_t>(k)] = Rat(v);
    if (k == last) {
      if (out.size() >= max_points) throw std::runtime_error("lattice enumeration too large");
      IntVec p(point.size());
      for (size_t i = 0; i < point.size(); ++i) p[i] = point[i].num();
      out.push_back(std::move(p));
    } else {
      enumerate(levels, k + 1, point, out, max_points);
    }
  }
}

}  // namespace

std::vector<IntVec> lattice_points(const std::vector<LinCondition>& conds, int n,
                                   size_t max_points) {
  if (n == 0) return {{}};
  // levels[k] = system over variables x_0..x_k; levels[k-1] is its shadow
  // with x_k eliminated.
  std::vector<std::vector<Row>> levels(static_cast<size_t>(n));
  {
    std::vector<Row> top;
    for (const LinCondition& c : conds) {
      Row r;
      r.coef = to_rat(c.normal);
      r.rhs = c.rhs;
      top.push_back(normalize_row(std::move(r)));
    }
    std::sort(top.begin(), top.end(), row_less);
    top.erase(std::unique(top.begin(), top.end(),
                          [](const Row& a, const Row& b) {
                            return !row_less(a, b) && !row_less(b, a);
                          }),
              top.end());
    levels[static_cast<size_t>(n - 1)] = std::move(top);
  }
  for (int k = n - 1; k > 0; --k) {
    const std::vector<Row>& cur = levels[static_cast<size_t>(k)];
    std::vector<Row> next;
    std::vector<const Row*> pos, neg;
    for (const Row& r : cur) {
      int s = r.coef[static_cast<size_t>(k)].sign();
      if (s == 0) {
        Row z = r;
        z.coef.resize(static_cast<size_t>(k));
        next.push_back(normalize_row(std::move(z)));
      } else if (s > 0) {
        pos.push_back(&r);
      } else {
        neg.push_back(&r);
      }
    }
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        Rat a = p->coef[static_cast<size_t>(k)];
        Rat b = q->coef[static_cast<size_t>(k)];
        Row c;
        c.coef.resize(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j)
          c.coef[static_cast<size_t>(j)] =
              p->coef[static_cast<size_t>(j)] * (-b) + q->coef[static_cast<size_t>(j)] * a;
        c.rhs = p->rhs * (-b) + q->rhs * a;
        next.push_back(normalize_row(std::move(c)));
      }
    }
    std::sort(next.begin(), next.end(), row_less);
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Row& a, const Row& b) {
                             return !row_less(a, b) && !row_less(b, a);
                           }),
               next.end());
    levels[static_cast<size_t>(k - 1)] = std::move(next);
  }
  std::vector<IntVec> out;
  RatVec point(static_cast<size_t>(n));
  enumerate(levels, 0, point, out, max_points);
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

std::vector<RatVec> basic_points(const std::vector<LinCondition>& conds, int n) {
  std::vector<LinCondition> all = conds;
  // Pin the lineality space so every minimal face yields a square system.
  std::vector<IntVec> normals;
  for (const LinCondition& c : conds) normals.push_back(c.normal);
  for (const IntVec& l : int_kernel(normals, n)) {
    all.push_back({l, Rat(0)});
    all.push_back({negated(l), Rat(0)});
  }
  size_t m = all.size();
  std::vector<RatVec> out;
  std::set<std::vector<std::pair<Int, Int>>> seen;
  std::vector<size_t> idx(static_cast<size_t>(n));
  // All n-subsets of rows.
  std::vector<int> comb(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) comb[static_cast<size_t>(i)] = i;
  if (m < static_cast<size_t>(n)) return out;
  while (true) {
    std::vector<RatVec> a;
    RatVec b;
    for (int i = 0; i < n; ++i) {
      const LinCondition& c = all[static_cast<size_t>(comb[static_cast<size_t>(i)])];
      a.push_back(to_rat(c.normal));
      b.push_back(c.rhs);
    }
    if (auto x = solve_square(std::move(a), std::move(b))) {
      bool feasible = true;
      for (const LinCondition& c : all) {
        if (dot(c.normal, *x) < c.rhs) { feasible = false; break; }
      }
      if (feasible) {
        std::vector<std::pair<Int, Int>> key;
        for (const Rat& v : *x) key.emplace_back(v.num(), v.den());
        if (seen.insert(key).second) out.push_back(*x);
      }
    }
    int i = n - 1;
    while (i >= 0 && comb[static_cast<size_t>(i)] == static_cast<int>(m) - n + i) --i;
    if (i < 0) break;
    ++comb[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace seriescone
