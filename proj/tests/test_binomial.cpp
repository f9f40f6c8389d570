#include "doctest.h"

#include <map>
#include <set>
#include <cstdlib>

#include "seriescone/binomial.hpp"

using namespace seriescone;

namespace {
IntVec e(std::initializer_list<Int> xs) { return IntVec(xs); }
}  // namespace

TEST_CASE("term orders") {
  TermOrder rl = TermOrder::right_lex(3);
  // rightmost difference decides: U1*U3 beats U2^2
  CHECK(rl.less(e({0, 2, 0}), e({1, 0, 1})));
  CHECK_FALSE(rl.less(e({1, 0, 1}), e({0, 2, 0})));
  // monomials with trailing-block content dominate: elimination order
  CHECK(rl.eliminates_tail(2));
  TermOrder lex(TermOrder::Kind::Lex, 2);
  CHECK(lex.less(e({0, 5}), e({1, 0})));
  CHECK_FALSE(lex.eliminates_tail(1));
}

TEST_CASE("monomial ideals are antichains") {
  MonomialIdeal m = MonomialIdeal::of({e({2, 0}), e({1, 0}), e({0, 3}), e({1, 1})});
  CHECK(m.gens == std::vector<IntVec>{{0, 3}, {1, 0}});
  CHECK(m.member(e({5, 5})));
  CHECK_FALSE(m.member(e({0, 2})));
}

TEST_CASE("buchberger on binomials and monomials") {
  TermOrder o = TermOrder::right_lex(3);
  // U1U3 - U2^2 with monomial U2: reduced basis is {U1U3, U2}
  BinMonBasis gb = buchberger_bm({{e({1, 0, 1}), e({0, 2, 0})}},
                                 MonomialIdeal::of({e({0, 1, 0})}), o);
  CHECK(gb.binomials.empty());
  CHECK(gb.monomials.gens == std::vector<IntVec>{{0, 1, 0}, {1, 0, 1}});

  // S-pair of U1 - U2 and U1 puts U2 into the ideal
  TermOrder o2 = TermOrder::right_lex(2);
  BinMonBasis gb2 = buchberger_bm({{e({1, 0}), e({0, 1})}}, MonomialIdeal::of({e({1, 0})}), o2);
  CHECK(gb2.binomials.empty());
  CHECK(gb2.monomials.gens == std::vector<IntVec>{{0, 1}, {1, 0}});

  // no monomials: basis unchanged
  BinMonBasis gb3 = buchberger_bm({}, MonomialIdeal::of({e({1, 0})}), o2);
  CHECK(gb3.binomials.empty());
  CHECK(gb3.monomials.gens == std::vector<IntVec>{{1, 0}});
}

TEST_CASE("groebner property: s-polynomials of the output reduce to zero") {
  TermOrder o = TermOrder::right_lex(4);
  std::vector<Binomial> bins = {{e({2, 0, 1, 0}), e({0, 1, 0, 1})},
                                {e({1, 1, 0, 0}), e({0, 0, 2, 0})}};
  MonomialIdeal mono = MonomialIdeal::of({e({0, 3, 0, 0})});
  BinMonBasis gb = buchberger_bm(bins, mono, o);
  std::vector<BinPoly> elems;
  for (const Binomial& b : gb.binomials) elems.push_back(BinPoly::binomial(b.lhs, b.rhs, o));
  for (const IntVec& m : gb.monomials.gens) elems.push_back(BinPoly::monomial(m));
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      BinPoly s = reduce(s_poly(elems[i], elems[j], o), gb, o);
      CHECK(s.kind == BinPoly::Kind::Zero);
    }
  // inputs reduce to zero against the basis
  for (const Binomial& b : bins)
    CHECK(reduce(BinPoly::binomial(b.lhs, b.rhs, o), gb, o).kind == BinPoly::Kind::Zero);
  for (const IntVec& m : mono.gens)
    CHECK(reduce(BinPoly::monomial(m), gb, o).kind == BinPoly::Kind::Zero);
}

TEST_CASE("elimination of the trailing block") {
  // I = {U1 V - U2}, J = {V} over (U1, U2, V): contraction is J' = {U2}
  TermOrder o = TermOrder::right_lex(3);
  BinMonBasis gb = buchberger_bm({{e({1, 0, 1}), e({0, 1, 0})}},
                                 MonomialIdeal::of({e({0, 0, 1})}), o);
  BinMonBasis c = eliminate_tail(gb, o, 2);
  CHECK(c.binomials.empty());
  CHECK(c.monomials.gens == std::vector<IntVec>{{0, 1}});

  // I = {}, J = {U1 V}: no pure-U monomial survives
  BinMonBasis gb2 = buchberger_bm({}, MonomialIdeal::of({e({1, 0, 1})}), o);
  BinMonBasis c2 = eliminate_tail(gb2, o, 2);
  CHECK(c2.binomials.empty());
  CHECK(c2.monomials.empty());

  // keep everything: contraction is the input
  TermOrder o2 = TermOrder::right_lex(2);
  BinMonBasis gb3 = buchberger_bm({{e({1, 0}), e({0, 1})}}, MonomialIdeal{}, o2);
  BinMonBasis c3 = eliminate_tail(gb3, o2, 2);
  CHECK(c3.binomials == gb3.binomials);
  CHECK_THROWS(eliminate_tail(gb3, TermOrder(TermOrder::Kind::Lex, 2), 1));
}

TEST_CASE("toric ideals of lattice vectors") {
  CHECK(toric_ideal({e({1, 0}), e({0, 1})}).empty());
  auto t1 = toric_ideal({e({1, 0}), e({1, 1}), e({1, 2})});
  REQUIRE(t1.size() == 1);
  CHECK(t1[0].lhs == e({1, 0, 1}));
  CHECK(t1[0].rhs == e({0, 2, 0}));
  auto t2 = toric_ideal({e({0, 1}), e({1, -1}), e({1, 0})});
  REQUIRE(t2.size() == 1);
  // oriented with the order-leading term first: degree puts U1 U2 ahead
  CHECK(t2[0].lhs == e({1, 1, 0}));
  CHECK(t2[0].rhs == e({0, 0, 1}));
}

TEST_CASE("toric ideal certified against relation enumeration") {
  // all relations with |lambda| <= 3 among {(1,0),(1,1),(1,2)} reduce to zero
  std::vector<IntVec> basis = {e({1, 0}), e({1, 1}), e({1, 2})};
  auto ideal = toric_ideal(basis);
  TermOrder o = TermOrder::right_lex(3);
  BinMonBasis gb = buchberger_bm(ideal, MonomialIdeal{}, o);
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      for (Int c = -3; c <= 3; ++c) {
        IntVec rel = add(add(scaled(basis[0], a), scaled(basis[1], b)), scaled(basis[2], c));
        if (!is_zero(rel)) continue;
        IntVec lhs(3, 0), rhs(3, 0);
        IntVec lam = {a, b, c};
        for (size_t i = 0; i < 3; ++i) {
          if (lam[i] >= 0) lhs[i] = lam[i];
          else rhs[i] = -lam[i];
        }
        BinPoly p = BinPoly::binomial(lhs, rhs, o);
        if (p.kind == BinPoly::Kind::Zero) continue;
        CHECK(reduce(p, gb, o).kind == BinPoly::Kind::Zero);
      }
}

TEST_CASE("hilbert function of the quotient counts semigroup points") {
  // standard monomials modulo in(I) biject with semigroup elements: for each
  // point of degree <= 6 there is exactly one standard representative
  std::vector<IntVec> basis = {e({1, 0}), e({1, 1}), e({1, 2})};
  auto ideal = toric_ideal(basis);
  TermOrder o = TermOrder::right_lex(3);
  BinMonBasis gb = buchberger_bm(ideal, MonomialIdeal{}, o);
  auto standard = [&](const IntVec& expo) {
    for (const Binomial& b : gb.binomials)
      if (divides(b.lhs, expo)) return false;
    return true;
  };
  std::map<IntVec, int> standard_per_point;
  for (Int a = 0; a <= 6; ++a)
    for (Int b = 0; b <= 6 - a; ++b)
      for (Int c = 0; c <= 6 - a - b; ++c) {
        IntVec expo = {a, b, c};
        IntVec pt = add(add(scaled(basis[0], a), scaled(basis[1], b)), scaled(basis[2], c));
        if (standard(expo)) standard_per_point[pt]++;
      }
  for (const auto& [pt, count] : standard_per_point) CHECK(count == 1);
  // and every semigroup point with a degree-<=6 representative is hit
  CHECK(standard_per_point.size() > 20);
}

TEST_CASE("semigroup generators of non-pointed cones") {
  Cone half = Cone::from_inequalities(2, {{1, 1}});
  auto gens = semigroup_generators(half);
  // generate a few sample points of the halfplane semigroup
  auto generated = [&](IntVec target) {
    std::vector<IntVec> stack = {IntVec{0, 0}};
    std::set<IntVec> seen;
    // bounded BFS over sums
    while (!stack.empty()) {
      IntVec cur = stack.back();
      stack.pop_back();
      if (cur == target) return true;
      for (const IntVec& g : gens) {
        IntVec nxt = add(cur, g);
        bool close = true;
        for (size_t i = 0; i < nxt.size(); ++i)
          if (std::abs(nxt[i] - target[i]) > 6 || std::abs(nxt[i]) > 12) { close = false; break; }
        if (close && seen.insert(nxt).second) stack.push_back(nxt);
      }
    }
    return false;
  };
  CHECK(generated({3, -3}));
  CHECK(generated({-2, 2}));
  CHECK(generated({0, 4}));
  CHECK(generated({5, -1}));
}

TEST_CASE("semigroup encodings carry true relations") {
  Cone c = Cone::from_generators(2, {{1, 0}, {1, 2}});
  SemigroupEncoding enc = SemigroupEncoding::of(c);
  CHECK(enc.basis == std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}});
  REQUIRE(enc.ideal.size() == 1);
  // each binomial is a Z-relation of the basis
  for (const Binomial& b : enc.ideal) {
    IntVec rel(2, 0);
    for (size_t i = 0; i < enc.basis.size(); ++i) {
      Int co = b.lhs[i] - b.rhs[i];
      if (co != 0) rel = add(rel, scaled(enc.basis[i], co));
    }
    CHECK(is_zero(rel));
  }
  // a halfplane encoding still closes
  SemigroupEncoding half = SemigroupEncoding::of(Cone::from_inequalities(2, {{1, 0}}));
  CHECK(half.basis.size() >= 3);
  CHECK_FALSE(half.ideal.empty());  // the unit pair multiplies to one
}
