#include "doctest.h"

#include "seriescone/order.hpp"

using namespace seriescone;

namespace {
WeightOrder wo(std::vector<RatVec> ws) { return WeightOrder::rational(std::move(ws)); }
RatVec rv(std::initializer_list<Int> xs) {
  RatVec v;
  for (Int x : xs) v.push_back(Rat(x));
  return v;
}
}  // namespace

TEST_CASE("lexicographic comparison of dot tuples") {
  WeightOrder lex = wo({rv({1, 0}), rv({0, 1})});
  CHECK(lex.compare(rv({0, 1}), rv({1, 0})) == Cmp::Less);
  WeightOrder o = wo({rv({1, 1}), rv({1, 0})});
  CHECK(o.compare(rv({0, 1}), rv({1, 0})) == Cmp::Less);
  CHECK(o.compare(rv({1, 0}), rv({1, 0})) == Cmp::Equal);
  // weight (1, sqrt(2)): e1 < e2 because 1 < sqrt(2), decided exactly
  QuadVec w = {Quad(Rat(1)), Quad(Rat(0), Rat(1), 2)};
  WeightOrder irr({w});
  CHECK(irr.compare(rv({1, 0}), rv({0, 1})) == Cmp::Less);
  CHECK(irr.total_on_lattice());
  CHECK_FALSE(wo({rv({1, 1})}).total_on_lattice());
  CHECK(wo({rv({1, 1}), rv({1, 0})}).total_on_lattice());
}

TEST_CASE("translation invariance") {
  WeightOrder o = wo({rv({2, 1}), rv({0, 1})});
  RatVec a = rv({3, -1}), b = rv({1, 4}), t = rv({-7, 5});
  CHECK(o.compare(a, b) == o.compare(add(a, t), add(b, t)));
}

TEST_CASE("positivity on cones") {
  CHECK(is_positive(wo({rv({1, 0}), rv({0, 1})}), Cone::orthant(2)));
  CHECK(is_positive(wo({rv({1, 1})}), Cone::from_generators(2, {{1, -1}})));
  CHECK(is_positive(wo({rv({1, 1}), rv({1, 0})}),
                    Cone::from_generators(2, {{1, -1}, {0, 1}})));
  CHECK_FALSE(is_positive(wo({rv({1, 1}), rv({0, 1})}),
                          Cone::from_generators(2, {{1, -1}, {0, 1}})));
}

TEST_CASE("refine_weight") {
  WeightOrder a = refine_weight({Quad(Rat(1)), Quad(Rat(1))});
  REQUIRE(a.weights().size() == 2);
  CHECK(a.weights()[1][0].a == Rat(1));
  CHECK(a.weights()[1][1].a == Rat(0));
  CHECK(a.total_on_lattice());
  WeightOrder b = refine_weight({Quad(Rat(1)), Quad(Rat(0))});
  REQUIRE(b.weights().size() == 2);
  CHECK(b.weights()[1][1].a == Rat(1));
  WeightOrder c = refine_weight({Quad(Rat(2)), Quad(Rat(1)), Quad(Rat(1))});
  REQUIRE(c.weights().size() == 3);
  CHECK(c.total_on_lattice());
  CHECK_THROWS(refine_weight({Quad(Rat(0)), Quad(Rat(0))}));
}

TEST_CASE("refinement of weight sequences") {
  CHECK(refines(wo({rv({1, 1}), rv({1, 0})}), wo({rv({1, 1})})));
  CHECK_FALSE(refines(wo({rv({1, 0}), rv({0, 1})}), wo({rv({1, 1})})));
  CHECK(refines(wo({rv({1, 1}), rv({2, 2}), rv({1, 0})}), wo({rv({1, 1})})));
  CHECK(refines(wo({rv({1, 1})}), wo({rv({1, 1})})));
  CHECK(refines(wo({rv({1, 1}), rv({1, 0})}), wo({rv({2, 2})})));
  CHECK_FALSE(refines(wo({rv({1, 1})}), wo({rv({1, 1}), rv({1, 0})})));
}

TEST_CASE("well ordered supports, family by family") {
  SupportSpec s;
  s.n = 2;
  s.rays.push_back({rv({0, 0}), rv({1, 0})});
  CHECK(is_well_ordered(wo({rv({1, 0}), rv({0, 1})}), s));

  SupportSpec neg;
  neg.n = 2;
  neg.rays.push_back({rv({0, 0}), rv({1, -1})});
  CHECK(is_well_ordered(wo({rv({1, 1}), rv({1, 0})}), neg));
  CHECK_FALSE(is_well_ordered(wo({rv({1, 1}), rv({0, 1})}), neg));
  CHECK_THROWS(is_well_ordered(wo({rv({1, 1})}), neg));

  SupportSpec tail;
  tail.n = 2;
  tail.ptails.push_back({rv({0, 0}), rv({1, -1}), 2});
  WeightOrder o = refine_weight({Quad(Rat(1)), Quad(Rat(1))});
  CHECK(is_well_ordered(o, tail));

  SupportSpec sg;
  sg.n = 2;
  sg.semigroups.push_back({rv({3, 4}), {rv({1, 0}), rv({0, 1})}});
  CHECK(is_well_ordered(wo({rv({1, 0}), rv({0, 1})}), sg));
  sg.semigroups[0].gens.push_back(rv({-1, 0}));
  CHECK_FALSE(is_well_ordered(wo({rv({1, 0}), rv({0, 1})}), sg));
}

TEST_CASE("interior weights are positive after refinement") {
  // w in Int(dual(c)) makes c positive for the refined total order
  struct Rng {
    unsigned long long s = 0xabcdefULL;
    Int range(Int lo, Int hi) {
      s ^= s << 13; s ^= s >> 7; s ^= s << 17;
      return lo + static_cast<Int>(s % static_cast<unsigned long long>(hi - lo + 1));
    }
  } rng;
  int tested = 0;
  while (tested < 60) {
    std::vector<IntVec> gens;
    for (int i = 0; i < 3; ++i) {
      IntVec g = {rng.range(-2, 2), rng.range(-2, 2)};
      if (!is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Cone c = Cone::from_generators(2, gens);
    if (!c.strongly_convex()) continue;
    Cone d = dual(c);
    RatVec w = {Rat(rng.range(0, 5)), Rat(rng.range(0, 5))};
    if (!d.interior_contains(w)) continue;
    QuadVec qw = {Quad(w[0]), Quad(w[1])};
    CHECK(is_positive(refine_weight(qw), c));
    ++tested;
  }
}

TEST_CASE("antisymmetry holds exactly on total orders") {
  struct Rng {
    unsigned long long s = 0x1234567ULL;
    Int range(Int lo, Int hi) {
      s ^= s << 13; s ^= s >> 7; s ^= s << 17;
      return lo + static_cast<Int>(s % static_cast<unsigned long long>(hi - lo + 1));
    }
  } rng;
  WeightOrder total = wo({rv({1, 1}), rv({1, 0})});
  WeightOrder pre = wo({rv({1, 1})});
  for (int k = 0; k < 50; ++k) {
    RatVec a = rv({rng.range(-5, 5), rng.range(-5, 5)});
    RatVec b = rv({rng.range(-5, 5), rng.range(-5, 5)});
    if (total.compare(a, b) == Cmp::Equal) CHECK(a == b);
    RatVec t = rv({rng.range(-5, 5), rng.range(-5, 5)});
    CHECK(total.compare(a, b) == total.compare(add(a, t), add(b, t)));
    CHECK(pre.compare(a, b) == pre.compare(add(a, t), add(b, t)));
  }
  // a preorder ties distinct points
  CHECK(pre.compare(rv({1, 0}), rv({0, 1})) == Cmp::Equal);
}

TEST_CASE("well-ordering respects refinement family by family") {
  // a step positive under the coarse prefix stays positive under any
  // refinement extending that prefix
  SupportSpec s;
  s.n = 2;
  s.rays.push_back({rv({0, 0}), rv({2, 1})});
  WeightOrder coarse_refined = refine_weight({Quad(Rat(1)), Quad(Rat(1))});
  CHECK(is_well_ordered(coarse_refined, s));
  WeightOrder another = wo({rv({1, 1}), rv({0, 1})});
  CHECK(is_well_ordered(another, s));
  // the semigroup generated by a positive family is well-ordered again
  SupportSpec semi;
  semi.n = 2;
  semi.semigroups.push_back({rv({0, 0}), {rv({2, 1}), rv({1, 3})}});
  CHECK(is_well_ordered(coarse_refined, semi));
}
