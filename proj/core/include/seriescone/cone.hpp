#pragma once

#include <string>
#include <vector>

#include "seriescone/linalg.hpp"

namespace seriescone {

// Extreme rays plus lineality of a polyhedral cone, in canonical form:
// lineality rows in HNF, each ray reduced modulo the lineality lattice.
struct RayRep {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

// V-representation of {x : h . x >= 0 for all h in ineqs}.
RayRep ray_rep(std::vector<IntVec> ineqs, int n);

// Rational polyhedral cone with both representations, kept canonical so
// equality of cones is equality of the stored vectors. The facet list is the
// canonical generator list of the dual cone, which makes dualization exact
// and involutive by construction.
class Cone {
 public:
  Cone() = default;  // empty placeholder; assign before use
  static Cone from_generators(int n, const std::vector<IntVec>& gens);
  static Cone from_generators_rat(int n, const std::vector<RatVec>& gens);
  static Cone from_inequalities(int n, const std::vector<IntVec>& ineqs);
  static Cone orthant(int n);
  static Cone zero(int n);

  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  bool strongly_convex() const { return strongly_convex_; }
  bool is_zero_cone() const { return dim_ == 0; }
  bool full_dimensional() const { return dim_ == n_; }

  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& facets() const { return facets_; }

  bool contains(const IntVec& x) const;
  bool contains(const RatVec& x) const;
  bool rel_interior_contains(const RatVec& x) const;
  bool interior_contains(const RatVec& x) const;

  // Integer point in the relative interior (sum of the extreme rays; the
  // zero vector for the zero cone and for pure subspaces).
  IntVec rel_interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.n_ == b.n_ && a.generators_ == b.generators_ && a.facets_ == b.facets_;
  }
  friend bool operator<(const Cone& a, const Cone& b) {
    if (a.generators_ != b.generators_) return a.generators_ < b.generators_;
    return a.facets_ < b.facets_;
  }

  std::string str() const;

 private:
  int n_ = 0;
  int dim_ = 0;
  bool strongly_convex_ = true;
  std::vector<IntVec> generators_;
  std::vector<IntVec> facets_;
};

Cone dual(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone minkowski_sum(const Cone& a, const Cone& b);

// All d-dimensional faces.
std::vector<Cone> faces(const Cone& c, int d);

// Minimal generating set of the semigroup c intersected with Z^n; the cone
// must be strongly convex.
std::vector<IntVec> hilbert_basis(const Cone& c);

// A lattice shift gamma with (g1 + c1) n (g2 + c2) contained in gamma + c1 n c2,
// certified on the basic points of the intersection. Requires c1 n c2 full
// dimensional.
IntVec shift_into_intersection(const RatVec& g1, const Cone& c1, const RatVec& g2,
                               const Cone& c2);

// Exact decision of w in Int(union of the given cones).
bool in_interior_of_union(const RatVec& w, const std::vector<Cone>& duals);

// Exact decision of R_{>=0}^n subset of the union of the given cones.
bool union_covers_orthant(int n, const std::vector<Cone>& duals);

// Strict feasibility of {x : weak . x >= 0, strict . x > 0}.
bool strictly_feasible(const std::vector<IntVec>& weak, const std::vector<IntVec>& strict,
                       int n);

std::vector<IntVec> canonical_vector_set(std::vector<IntVec> vs);

}  // namespace seriescone
