#pragma once

#include <vector>

#include "seriescone/binomial.hpp"
#include "seriescone/cone.hpp"

namespace seriescone {

struct DicksonShift {
  IntVec gamma;
  Cone cone;
};

struct DicksonResult {
  std::vector<IntVec> C;
  Cone sigma;
  bool certified = false;
};

// Finite C with  intersection_j (gamma_j + sigma_j) n Z^n  =  C + sigma n Z^n,
// sigma the intersection cone (must be full dimensional). Each shifted cone
// is contracted to a monomial ideal over the sigma semigroup by a Groebner
// elimination; C is read off as the minimal elements of the intersected
// monomial ideals. Both inclusions are certified on a bounding region.
DicksonResult dickson_decompose(int n, const std::vector<DicksonShift>& shifts);

}  // namespace seriescone
