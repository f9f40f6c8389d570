#pragma once

#include <string>
#include <vector>

#include "seriescone/fq.hpp"
#include "seriescone/laurent.hpp"
#include "seriescone/order.hpp"

namespace seriescone {

using FqPoly = LaurentPoly<Fq>;

struct AsSplit {
  FqPoly plus;   // exponents >= 0 in the order
  FqPoly minus;  // exponents < 0
};

// Splits a along the order into the nonnegative-exponent and
// negative-exponent parts. The order must be total on a's exponents.
AsSplit as_split(const FqPoly& a, const WeightOrder& o);

struct AsRoot {
  FqPoly root;
  FqPoly residual;     // root^p - root - a, exact
  Int root_set_size;   // p: the full root set is root + F_p
};

// Depth-truncated root of T^p - T = a_minus when every exponent of a_minus
// is negative under the ambient order: per source term c x^q the truncation
// keeps sum_{i<=depth} c^{1/p^i} x^{q/p^i}. The residual is exactly the sum
// of the depth-(p^depth) tail monomials, one per source term.
AsRoot as_negative_root(const FqPoly& a_minus, const WeightOrder& o, int depth);

// Depth-truncated root -sum_{k<=depth} a_plus^{p^k} of T^p - T = a_plus for
// strictly positive exponents; residual is exactly -(a_plus)^{p^{depth+1}}.
// A constant term is accepted only when it lies in the image of the
// Artin-Schreier map of the coefficient field (decided by exhaustion).
AsRoot as_positive_root(const FqPoly& a_plus, const WeightOrder& o, int depth);

struct FieldFamilyReport {
  bool well_ordered_each = false;      // every family well-ordered under o
  bool lattice_generation = false;     // family data spans the ambient space
  bool union_closed = false;           // pairwise unions re-presented in class
  bool subsets_closed = false;         // sampled sub-specs stay in class
  bool translations_closed = false;    // sampled lattice translates stay in class
  bool semigroup_closed = false;       // generated semigroup well-ordered again
  std::vector<std::string> notes;
  bool all() const {
    return well_ordered_each && lattice_generation && union_closed && subsets_closed &&
           translations_closed && semigroup_closed;
  }
};

FieldFamilyReport field_family_check(const std::vector<SupportSpec>& families,
                                     const WeightOrder& o, int samples);

}  // namespace seriescone
