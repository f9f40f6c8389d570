#pragma once

#include <vector>

#include "seriescone/cone.hpp"
#include "seriescone/linalg.hpp"
#include "seriescone/support_spec.hpp"

namespace seriescone {

enum class Cmp { Less, Equal, Greater };

// Continuous preorder on Q^n in weight normal form: lexicographic comparison
// of dot products against the weight sequence. Entries may live in a single
// real quadratic field Q(sqrt(D)); that is only ever needed for n = 2.
class WeightOrder {
 public:
  explicit WeightOrder(std::vector<QuadVec> weights);
  static WeightOrder rational(std::vector<RatVec> weights);

  int ambient_dim() const { return n_; }
  const std::vector<QuadVec>& weights() const { return weights_; }
  bool all_rational() const;

  Cmp compare(const RatVec& a, const RatVec& b) const;
  int sign(const RatVec& v) const;  // sign of v against 0 in this order

  // Total on every lattice (1/k)Z^n, i.e. the weights have trivial rational
  // kernel. Cached at construction.
  bool total_on_lattice() const { return total_; }

 private:
  int n_;
  std::vector<QuadVec> weights_;
  bool total_;
};

// The class of all orders refining <=_w.
struct OrderClass {
  QuadVec base_weight;
};

// Every generator of c is >= 0 for the order.
bool is_positive(const WeightOrder& o, const Cone& c);

// Total order refining <=_w that is positive on the first orthant: weights
// (w, e_1, ..., e_n) with redundant tail entries dropped. w must be nonzero
// and nonnegative.
WeightOrder refine_weight(const QuadVec& w);

// Whether `fine` refines `coarse` (every strict coarse comparison is
// preserved). Rational weights only.
bool refines(const WeightOrder& fine, const WeightOrder& coarse);

// Family-by-family decision of well-orderedness of the support under o.
// Requires o total on the support's lattice scales.
bool is_well_ordered(const WeightOrder& o, const SupportSpec& s);

}  // namespace seriescone
