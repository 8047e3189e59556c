#include "doctest.h"

#include "gridhfk/error.hpp"
#include "gridhfk/poly.hpp"

using namespace gridhfk;

TEST_CASE("Laurent polynomials over F2") {
  const auto t = LaurentF2::monomial(1);
  const auto p = t + LaurentF2::one() + LaurentF2::monomial(-1);
  CHECK(p.to_string() == "T + 1 + T^-1");
  CHECK(LaurentF2{}.to_string() == "0");
  CHECK((p * p).to_string() == "T^2 + 1 + T^-2");
  CHECK((p + p).is_zero());
  CHECK(p.is_symmetric());
  CHECK_FALSE(t.is_symmetric());
  CHECK(LaurentF2::one_plus_inverse_power(2).to_string() == "1 + T^-2");
}

TEST_CASE("exact division by (1 + T^-1)^k") {
  const auto p = LaurentF2::monomial(1) + LaurentF2::one() + LaurentF2::monomial(-1);
  for (int k = 0; k < 6; ++k) {
    const auto q = (p * LaurentF2::one_plus_inverse_power(k)).divide_by_one_plus_inverse(k);
    REQUIRE(q);
    CHECK(*q == p);
  }
  CHECK_FALSE(LaurentF2::one().divide_by_one_plus_inverse(1));
}

TEST_CASE("Poincare formatting, ordered by A then M") {
  RankTable t{{{-1, -1}, 1}, {{0, 0}, 1}};
  CHECK(format_poincare(t) == "q^-1t^-1 + 1");
  CHECK(format_poincare({{{1, 0}, 2}, {{2, 1}, 1}, {{0, -1}, 1}}) == "t^-1 + 2q + q^2t");
  CHECK(format_poincare({}) == "0");
}

TEST_CASE("V multiplication and division are inverse; inexact division throws") {
  const RankTable hat{{{0, -1}, 1}, {{1, 0}, 1}, {{2, 1}, 1}};
  for (int k = 0; k < 5; ++k) CHECK(divide_by_v(multiply_by_v(hat, k), k) == hat);
  CHECK(total_rank(multiply_by_v(hat, 4)) == 3 * 16);
  try {
    divide_by_v(hat, 1);
    FAIL("no throw");
  } catch (const GridError& e) {
    CHECK(e.kind() == ErrorKind::DivisionInexact);
  }
}

TEST_CASE("tensor, Euler characteristic, symmetry flip") {
  const RankTable a{{{0, -1}, 1}, {{1, 0}, 1}, {{2, 1}, 1}};
  const auto sq = tensor(a, a);
  CHECK(total_rank(sq) == 9);
  CHECK(sq.at({2, 0}) == 3);
  CHECK(euler_mod2(a).to_string() == "T + 1 + T^-1");
  // (M, A) -> (M - 2A, -A) fixes this table.
  CHECK(alexander_flip(a) == a);
}
