#include "seriescone/order.hpp"

#include <stdexcept>

namespace seriescone {

void SupportSpec::validate() const {
  auto check_dim = [&](const RatVec& v) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("support point dimension mismatch");
  };
  auto nonzero = [](const RatVec& v) {
    for (const Rat& c : v)
      if (!c.is_zero()) return true;
    return false;
  };
  if (lattice_scale < 1) throw std::invalid_argument("lattice scale must be positive");
  for (const auto& p : points) check_dim(p);
  for (const auto& r : rays) {
    check_dim(r.base);
    check_dim(r.step);
    if (!nonzero(r.step)) throw std::invalid_argument("ray family with zero step");
  }
  for (const auto& s : semigroups) {
    check_dim(s.base);
    if (s.gens.empty()) throw std::invalid_argument("semigroup family without generators");
    for (const auto& g : s.gens) {
      check_dim(g);
      if (!nonzero(g)) throw std::invalid_argument("semigroup family with zero generator");
    }
  }
  for (const auto& t : ptails) {
    check_dim(t.base);
    check_dim(t.dir);
    if (!nonzero(t.dir)) throw std::invalid_argument("ptail family with zero direction");
    if (t.p < 2) throw std::invalid_argument("ptail prime must be at least 2");
  }
}

WeightOrder::WeightOrder(std::vector<QuadVec> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight order needs at least one weight");
  n_ = static_cast<int>(weights_[0].size());
  Int d = 0;
  for (const QuadVec& w : weights_) {
    if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("weight dimension mismatch");
    for (const Quad& q : w) {
      if (q.D != 0) {
        if (d != 0 && d != q.D) throw std::invalid_argument("mixed quadratic radicands in order");
        d = q.D;
      }
    }
  }
  // Totality on rational points: the rational and sqrt parts together must
  // have trivial kernel.
  std::vector<RatVec> rows;
  for (const QuadVec& w : weights_) {
    RatVec a(w.size()), b(w.size());
    bool has_b = false;
    for (size_t i = 0; i < w.size(); ++i) {
      a[i] = w[i].a;
      b[i] = w[i].b;
      if (!w[i].b.is_zero()) has_b = true;
    }
    rows.push_back(a);
    if (has_b) rows.push_back(b);
  }
  total_ = rank_of_rat(rows) == n_;
}

WeightOrder WeightOrder::rational(std::vector<RatVec> weights) {
  std::vector<QuadVec> qs;
  qs.reserve(weights.size());
  for (RatVec& w : weights) {
    QuadVec q(w.size());
    for (size_t i = 0; i < w.size(); ++i) q[i] = Quad(w[i]);
    qs.push_back(std::move(q));
  }
  return WeightOrder(std::move(qs));
}

bool WeightOrder::all_rational() const {
  for (const QuadVec& w : weights_)
    for (const Quad& q : w)
      if (!q.is_rational()) return false;
  return true;
}

Cmp WeightOrder::compare(const RatVec& a, const RatVec& b) const {
  RatVec d = sub(a, b);
  for (const QuadVec& w : weights_) {
    int s = dot(w, d).sign();
    if (s < 0) return Cmp::Less;
    if (s > 0) return Cmp::Greater;
  }
  return Cmp::Equal;
}

int WeightOrder::sign(const RatVec& v) const {
  for (const QuadVec& w : weights_) {
    int s = dot(w, v).sign();
    if (s != 0) return s;
  }
  return 0;
}

bool is_positive(const WeightOrder& o, const Cone& c) {
  for (const IntVec& g : c.generators())
    if (o.sign(to_rat(g)) < 0) return false;
  return true;
}

WeightOrder refine_weight(const QuadVec& w) {
  int n = static_cast<int>(w.size());
  bool zero = true;
  for (const Quad& q : w) {
    if (q.sign() < 0) throw std::invalid_argument("refine_weight needs a nonnegative weight");
    if (q.sign() != 0) zero = false;
  }
  if (zero) throw std::invalid_argument("refine_weight needs a nonzero weight");

  std::vector<QuadVec> weights = {w};
  std::vector<RatVec> rows;
  {
    RatVec a(w.size()), b(w.size());
    for (size_t i = 0; i < w.size(); ++i) { a[i] = w[i].a; b[i] = w[i].b; }
    rows.push_back(a);
    rows.push_back(b);
  }
  int rank = rank_of_rat(rows);
  for (int i = 0; i < n && rank < n; ++i) {
    RatVec e(static_cast<size_t>(n), Rat(0));
    e[static_cast<size_t>(i)] = Rat(1);
    rows.push_back(e);
    int r = rank_of_rat(rows);
    if (r > rank) {
      rank = r;
      QuadVec qe(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) qe[static_cast<size_t>(j)] = Quad(e[static_cast<size_t>(j)]);
      weights.push_back(std::move(qe));
    } else {
      rows.pop_back();
    }
  }
  return WeightOrder(std::move(weights));
}

namespace {

std::vector<IntVec> rational_weight_rows(const WeightOrder& o) {
  std::vector<IntVec> rows;
  for (const QuadVec& w : o.weights()) {
    RatVec r(w.size());
    for (size_t i = 0; i < w.size(); ++i) r[i] = w[i].a;
    rows.push_back(primitive_direction(r));
  }
  return rows;
}

}  // namespace

bool refines(const WeightOrder& fine, const WeightOrder& coarse) {
  if (!fine.all_rational() || !coarse.all_rational())
    throw std::invalid_argument("refines is decided for rational weight sequences");
  if (fine.ambient_dim() != coarse.ambient_dim())
    throw std::invalid_argument("dimension mismatch");
  int n = fine.ambient_dim();
  std::vector<IntVec> f = rational_weight_rows(fine);
  std::vector<IntVec> c = rational_weight_rows(coarse);
  // fine refines coarse iff no z has z >= 0 for fine and z < 0 for coarse;
  // split on the deciding positions of both lex tuples (p == |f| is the case
  // of a fine tie).
  for (size_t p = 0; p <= f.size(); ++p) {
    for (size_t q = 0; q < c.size(); ++q) {
      std::vector<IntVec> weak;
      for (size_t i = 0; i < p; ++i) {
        weak.push_back(f[i]);
        weak.push_back(negated(f[i]));
      }
      for (size_t j = 0; j < q; ++j) {
        weak.push_back(c[j]);
        weak.push_back(negated(c[j]));
      }
      std::vector<IntVec> strict = {negated(c[q])};
      if (p < f.size()) strict.push_back(f[p]);
      if (strictly_feasible(weak, strict, n)) return false;
    }
  }
  return true;
}

bool is_well_ordered(const WeightOrder& o, const SupportSpec& s) {
  s.validate();
  if (!o.total_on_lattice())
    throw std::invalid_argument("order is not total on the support lattice");
  for (const auto& r : s.rays)
    if (o.sign(r.step) <= 0) return false;
  for (const auto& sg : s.semigroups)
    for (const auto& g : sg.gens)
      if (o.sign(g) <= 0) return false;
  for (const auto& t : s.ptails)
    if (o.sign(t.dir) <= 0) return false;
  return true;
}

}  // namespace seriescone
