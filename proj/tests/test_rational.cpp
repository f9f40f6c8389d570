#include "doctest.h"

#include "seriescone/quad.hpp"
#include "seriescone/rational.hpp"

using namespace seriescone;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7, 3) - Rat(1, 3) == Rat(2));
  CHECK(Rat(1) / Rat(1, 7) == Rat(7));
  CHECK(Rat(5, 3) > Rat(3, 2));
  CHECK(Rat(-5, 3).floor() == -2);
  CHECK(Rat(-5, 3).ceil() == -1);
  CHECK(Rat(5, 3).floor() == 1);
  CHECK(Rat(5, 3).ceil() == 2);
  CHECK(Rat(4, 2).str() == "2");
  CHECK(Rat(-3, 9).str() == "-1/3");
  CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational overflow detection") {
  Rat big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, overflow_error);
}

TEST_CASE("quadratic value signs are exact") {
  // 1 - sqrt(2) < 0 decided by 1 < 2.
  Quad q(Rat(1), Rat(-1), 2);
  CHECK(q.sign() == -1);
  // -1 + 3 sqrt(2) > 0.
  CHECK(Quad(Rat(-1), Rat(3), 2).sign() == 1);
  // -1 + (1/2) sqrt(2): 1 vs 2/4 -> negative.
  CHECK(Quad(Rat(-1), Rat(1, 2), 2).sign() == -1);
  // sqrt(4) is not admitted as input here, but a zero combination is exact:
  // (2 - sqrt(4)) cannot be formed; instead check 2 - 2 = 0 rationally.
  CHECK(Quad(Rat(0)).sign() == 0);
  CHECK((Quad(Rat(1), Rat(1), 2) - Quad(Rat(1), Rat(1), 2)).sign() == 0);
  // a > 0, b < 0 with a^2 == b^2 D exactly: 2 - sqrt(2)*sqrt(2): encode as
  // a = 2, b = -1, D = 4 is disallowed only morally; the sign rule still
  // decides a^2 = 4 vs b^2 D = 4 as zero.
  CHECK(Quad(Rat(2), Rat(-1), 4).sign() == 0);
}
