#include "doctest.h"

#include "seriescone/linalg.hpp"
#include "seriescone/polyhedron.hpp"

using namespace seriescone;

TEST_CASE("primitive vectors") {
  CHECK(primitive(IntVec{2, 4, -6}) == IntVec{1, 2, -3});
  CHECK(primitive(IntVec{0, 0}) == IntVec{0, 0});
  CHECK(primitive_direction(RatVec{Rat(1, 2), Rat(-1, 3)}) == IntVec{3, -2});
}

TEST_CASE("rank") {
  CHECK(rank_of({{1, 0}, {0, 1}}) == 2);
  CHECK(rank_of({{1, 1}, {2, 2}}) == 1);
  CHECK(rank_of({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}}) == 2);
  CHECK(rank_of({}) == 0);
}

TEST_CASE("hnf basis is canonical") {
  auto h1 = hnf_basis({{2, 1, 0}, {0, 0, 1}});
  auto h2 = hnf_basis({{2, 1, 1}, {0, 0, 1}, {2, 1, 2}});
  CHECK(h1 == h2);
  // pivots positive, reduced above
  auto h3 = hnf_basis({{0, -2}, {3, 1}});
  REQUIRE(h3.size() == 2);
  CHECK(h3[0][0] == 3);
  CHECK(h3[1] == IntVec{0, 2});
  CHECK(h3[0][1] >= 0);
  CHECK(h3[0][1] < 2);
}

TEST_CASE("integer kernel is the saturated lattice") {
  // kernel of (1,1,1) and (0,1,2): spanned by (1,-2,1)
  auto k = int_kernel({{1, 1, 1}, {0, 1, 2}}, 3);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == IntVec{1, -2, 1});
  // kernel of (2,2): (1,-1), saturated despite the factor 2
  auto k2 = int_kernel({{2, 2}}, 2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == IntVec{1, -1});
  // empty system: whole lattice
  auto k3 = int_kernel({}, 2);
  CHECK(k3.size() == 2);
}

TEST_CASE("solve square") {
  auto x = solve_square({{Rat(2), Rat(0)}, {Rat(1), Rat(1)}}, {Rat(4), Rat(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(2));
  CHECK((*x)[1] == Rat(3));
  CHECK_FALSE(solve_square({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(0), Rat(0)}).has_value());
}

TEST_CASE("lattice point enumeration") {
  // triangle x >= 0, y >= 0, x + y <= 2
  std::vector<LinCondition> conds = {
      {{1, 0}, Rat(0)}, {{0, 1}, Rat(0)}, {{-1, -1}, Rat(-2)}};
  auto pts = lattice_points(conds, 2);
  CHECK(pts.size() == 6);
  // shifted segment with rational bounds: 1/2 <= x <= 5/2
  std::vector<LinCondition> seg = {{{1}, Rat(1, 2)}, {{-1}, Rat(-5, 2)}};
  auto p1 = lattice_points(seg, 1);
  CHECK(p1 == std::vector<IntVec>{{1}, {2}});
  // unbounded region throws
  CHECK_THROWS(lattice_points({{{1, 0}, Rat(0)}, {{0, 1}, Rat(0)}}, 2));
}

TEST_CASE("basic points of a polyhedron") {
  // {x : (1,2).x >= 1, (2,1).x >= 1} has the single vertex (1/3, 1/3)
  std::vector<LinCondition> conds = {{{1, 2}, Rat(1)}, {{2, 1}, Rat(1)}};
  auto v = basic_points(conds, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == RatVec{Rat(1, 3), Rat(1, 3)});
  // a halfplane in R^2 has one minimal face handled through lineality pinning
  std::vector<LinCondition> half = {{{1, 0}, Rat(2)}};
  auto w = basic_points(half, 2);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == RatVec{Rat(2), Rat(0)});
}
