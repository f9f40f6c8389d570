#pragma once

#include <vector>

#include "seriescone/linalg.hpp"

namespace seriescone {

// One closed linear condition: normal . x >= rhs.
struct LinCondition {
  IntVec normal;
  Rat rhs;
};

// All integer points of {x : normal_i . x >= rhs_i}, by exact
// Fourier-Motzkin elimination. Throws if the region is unbounded or the
// enumeration exceeds `max_points`.
std::vector<IntVec> lattice_points(const std::vector<LinCondition>& conds, int n,
                                   size_t max_points = 4'000'000);

// Rational basic points of {x : A x >= b}: one representative per minimal
// face (the vertices, when the polyhedron is pointed).
std::vector<RatVec> basic_points(const std::vector<LinCondition>& conds, int n);

}  // namespace seriescone
