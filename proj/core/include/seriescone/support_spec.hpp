#pragma once

#include <vector>

#include "seriescone/linalg.hpp"

namespace seriescone {

// Symbolic, finitely presented supports. A spec denotes the union of its
// families as a subset of (1/k)Z^n; p-adic tails additionally range over
// denominators k p^l.

struct RayFamily {
  RatVec base;
  RatVec step;  // nonzero; points base + k step, k in N
};

struct SemigroupFamily {
  RatVec base;
  std::vector<RatVec> gens;  // nonzero; points base + N<gens>
};

struct PTailFamily {
  RatVec base;
  RatVec dir;  // nonzero
  Int p = 2;   // prime; points base + (1 - p^{-k}) dir, k >= 1
};

struct SupportSpec {
  int n = 0;
  std::vector<RatVec> points;
  std::vector<RayFamily> rays;
  std::vector<SemigroupFamily> semigroups;
  std::vector<PTailFamily> ptails;
  Int lattice_scale = 1;

  bool has_ptails() const { return !ptails.empty(); }
  bool empty() const {
    return points.empty() && rays.empty() && semigroups.empty() && ptails.empty();
  }
  // Directions of the infinite families (ray steps and semigroup generators).
  std::vector<RatVec> lattice_directions() const {
    std::vector<RatVec> d;
    for (const auto& r : rays) d.push_back(r.step);
    for (const auto& s : semigroups)
      for (const auto& g : s.gens) d.push_back(g);
    return d;
  }
  std::vector<RatVec> all_directions() const {
    std::vector<RatVec> d = lattice_directions();
    for (const auto& t : ptails) d.push_back(t.dir);
    return d;
  }
  void validate() const;
};

}  // namespace seriescone
