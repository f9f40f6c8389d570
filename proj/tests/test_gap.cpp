#include "doctest.h"

#include "seriescone/fixtures.hpp"
#include "seriescone/gap.hpp"

using namespace seriescone;

namespace {
using QPoly = LaurentPoly<Rat>;
QPoly qmono(std::initializer_list<Rat> e, Rat c) {
  RatVec ev(e);
  return QPoly::monomial(static_cast<int>(ev.size()), ev, c);
}
}  // namespace

TEST_CASE("monomial valuation") {
  QPoly g = qmono({Rat(1), Rat(0)}, Rat(1)) + qmono({Rat(0), Rat(2)}, Rat(1));
  CHECK(nu_omega(g, {Rat(1), Rat(1)}) == Rat(1));
  QPoly h = qmono({Rat(1), Rat(-1)}, Rat(1));
  CHECK(nu_omega(h, {Rat(2), Rat(1)}) == Rat(1));
  QPoly k = qmono({Rat(2), Rat(-1)}, Rat(1)) + qmono({Rat(3), Rat(0)}, Rat(1));
  CHECK(nu_omega(k, {Rat(1), Rat(2)}) == Rat(0));
  CHECK_THROWS(nu_omega(QPoly(2), {Rat(1), Rat(1)}));
}

TEST_CASE("initial forms") {
  QPoly g = qmono({Rat(1), Rat(0)}, Rat(1)) + qmono({Rat(0), Rat(1)}, Rat(1)) +
            qmono({Rat(2), Rat(0)}, Rat(1));
  QPoly expect = qmono({Rat(1), Rat(0)}, Rat(1)) + qmono({Rat(0), Rat(1)}, Rat(1));
  CHECK(in_omega(g, {Rat(1), Rat(1)}) == expect);
  QPoly m = qmono({Rat(1), Rat(0)}, Rat(3));
  CHECK(in_omega(m, {Rat(5), Rat(7)}) == m);
}

TEST_CASE("valuation and initial form are multiplicative") {
  QPoly a = qmono({Rat(1), Rat(0)}, Rat(2)) + qmono({Rat(0), Rat(1)}, Rat(1)) +
            qmono({Rat(3), Rat(1)}, Rat(-1));
  QPoly b = qmono({Rat(1), Rat(-1)}, Rat(1)) + qmono({Rat(2), Rat(2)}, Rat(5));
  RatVec w = {Rat(3), Rat(2)};
  CHECK(nu_omega(a * b, w) == nu_omega(a, w) + nu_omega(b, w));
  CHECK(in_omega(a * b, w) == in_omega(a, w) * in_omega(b, w));
}

TEST_CASE("graded expansion groups by level and reassembles") {
  QPoly f(2);
  for (Int i = 0; i <= 4; ++i) {
    Int e = 1 << i;
    f.add_term({Rat(e), Rat(-e)}, Rat(1));
  }
  GradedExpansion<Rat> ge = graded_expand(f, {Rat(2), Rat(1)});
  REQUIRE(ge.pieces.size() == 5);
  QPoly sum(2);
  Rat prev;
  for (size_t i = 0; i < ge.pieces.size(); ++i) {
    if (i) CHECK(ge.pieces[i].first > prev);
    prev = ge.pieces[i].first;
    CHECK(ge.pieces[i].first == Rat(1LL << i));
    for (const auto& [e, c] : ge.pieces[i].second.terms())
      CHECK(dot(RatVec{Rat(2), Rat(1)}, e) == ge.pieces[i].first);
    sum = sum + ge.pieces[i].second;
  }
  CHECK(sum == f);
  // boundary weight rejected when the companion spec says so
  SupportSpec comp = fixture_spec_ex_min(0);
  CHECK_THROWS(graded_expand(f, {Rat(1), Rat(1)}, &comp));
  CHECK_NOTHROW(graded_expand(f, {Rat(2), Rat(1)}, &comp));
}

TEST_CASE("gap bound on the char-p fixture") {
  for (Int p : {Int(2), Int(3), Int(5)}) {
    FqPoly xi(2);
    Int pk = 1;
    for (int i = 0; i <= 6; ++i) {
      xi.add_term({Rat(pk), Rat(-pk)}, Fq::scalar(p, 1, 1));
      pk *= p;
    }
    std::vector<FqPoly> coeffs(static_cast<size_t>(p) + 1, FqPoly(2));
    coeffs[0] = FqPoly::monomial(2, {Rat(1), Rat(-1)}, Fq::scalar(p, 1, 1));
    coeffs[1] = FqPoly::monomial(2, {Rat(0), Rat(0)}, Fq::scalar(p, 1, -1));
    coeffs[static_cast<size_t>(p)] = FqPoly::monomial(2, {Rat(0), Rat(0)}, Fq::scalar(p, 1, 1));
    GapReport rep = gap_verify(xi, coeffs, {Rat(2), Rat(1)}, Rat(pk));
    CHECK(rep.degree == p);
    CHECK(rep.nu == Rat(1));
    CHECK(rep.bound == Rat(p + 1));
    CHECK(rep.verdict);
    for (const Rat& r : rep.ratios) CHECK(r == Rat(p));
    CHECK_FALSE(rep.residual_zero);
    CHECK(rep.residual_valuation == Rat(pk));
  }
}

TEST_CASE("verdict flips on a fabricated violation") {
  // levels {1, 10} against K = nu + d = 2 + 2; the relation is only claimed
  // up to level 1
  QPoly xi = qmono({Rat(1), Rat(0)}, Rat(1)) + qmono({Rat(10), Rat(0)}, Rat(1));
  std::vector<QPoly> coeffs = {qmono({Rat(2), Rat(0)}, Rat(-1)),
                               qmono({Rat(0), Rat(0)}, Rat(-1)),
                               qmono({Rat(0), Rat(0)}, Rat(1))};
  GapReport rep = gap_verify(xi, coeffs, {Rat(1), Rat(1)}, Rat(1));
  CHECK(rep.bound == Rat(4));
  CHECK_FALSE(rep.verdict);
  REQUIRE(rep.first_violation.has_value());
  CHECK(*rep.first_violation == 0);
}

TEST_CASE("monomial rescaling shifts levels and keeps late ratios") {
  QPoly xi(1);
  for (Int e : {Int(1), Int(2), Int(4), Int(8)}) xi.add_term({Rat(e)}, Rat(1));
  GradedExpansion<Rat> base = graded_expand(xi, {Rat(1)});
  QPoly shifted = xi.scaled_by_monomial({Rat(3)}, Rat(1));
  GradedExpansion<Rat> moved = graded_expand(shifted, {Rat(1)});
  REQUIRE(base.pieces.size() == moved.pieces.size());
  for (size_t i = 0; i < base.pieces.size(); ++i)
    CHECK(moved.pieces[i].first == base.pieces[i].first + Rat(3));
  // ratios converge to the unshifted ones for late levels
  Rat last_base = base.pieces.back().first / base.pieces[base.pieces.size() - 2].first;
  Rat last_moved = moved.pieces.back().first / moved.pieces[moved.pieces.size() - 2].first;
  CHECK(abs(last_moved - last_base) < Rat(1, 2));
}

TEST_CASE("inconsistent coefficients are rejected") {
  QPoly xi = qmono({Rat(1)}, Rat(1));
  std::vector<QPoly> coeffs = {qmono({Rat(0)}, Rat(1)), qmono({Rat(0)}, Rat(1))};
  CHECK_THROWS(gap_verify(xi, coeffs, {Rat(1)}, Rat(50)));
  CHECK_THROWS(gap_verify(QPoly(1), coeffs, {Rat(1)}, Rat(1)));
}

TEST_CASE("monomial series are vacuously within the bound") {
  QPoly xi = qmono({Rat(2)}, Rat(1));
  // T^2 - x^2 T has the root x: a0 = 0 handled as an absent coefficient
  std::vector<QPoly> coeffs = {QPoly(1), qmono({Rat(2)}, Rat(-1)), qmono({Rat(0)}, Rat(1))};
  GapReport rep = gap_verify(xi, coeffs, {Rat(1)}, Rat(10));
  CHECK(rep.levels.size() == 1);
  CHECK(rep.ratios.empty());
  CHECK(rep.verdict);
  CHECK(rep.residual_zero);
}
