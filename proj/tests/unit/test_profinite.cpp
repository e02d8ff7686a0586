#include <doctest.h>

#include "kneser/errors.hpp"
#include "kneser/profinite.hpp"
#include "kneser/rational.hpp"

using namespace kneser;

TEST_CASE("truncations of the 7-adic example") {
  struct Row {
    Rational inner, outer, lower, upper, ii;
  };
  const Row rows[] = {
      {Rational(2, 7), Rational(3, 7), Rational(4, 7), Rational(5, 7), Rational(3, 7)},
      {Rational(16, 49), Rational(17, 49), Rational(32, 49), Rational(33, 49), Rational(31, 49)},
      {Rational(114, 343), Rational(115, 343), Rational(228, 343), Rational(229, 343), Rational(227, 343)},
      {Rational(800, 2401), Rational(801, 2401), Rational(1600, 2401), Rational(1601, 2401), Rational(1599, 2401)},
  };
  auto c = seven_adic_example();
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const Row& row = rows[n - 1];
    auto t = truncate(c, n);
    CHECK(t.inner_measure == row.inner);
    CHECK(t.outer_measure == row.outer);
    CHECK(t.group.finite_order() == checked_power(7, n));
    auto s = sum_truncations(c, c, n);
    CHECK(s.lower == row.lower);
    CHECK(s.upper == row.upper);
    CHECK(s.inner_sum_measure == row.ii);
    CHECK(s.stabilizer_order == 1);
    CHECK_FALSE(s.sur_critical_outer);
  }
}

TEST_CASE("recursive set validation") {
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  RecursiveSetDef bad{6, {{0, 1}}, 2};
  CHECK_THROWS_AS(bad.validate(), Error);
  RecursiveSetDef unreduced{5, {{7, 1}}, 1};
  CHECK_THROWS_AS(unreduced.validate(), Error);
  RecursiveSetDef other{5, {{0, 1}}, 1};
  try {
    sum_truncations(seven_adic_example(), other, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrimeMismatch);
  }
  CHECK_THROWS_AS(checked_power(7, 40), Error);
}

TEST_CASE("fixed point with a level-two base") {
  // S = {1 mod 9} u 3S. Mod 81 the undecided part is 27S, and 27S mod 81 is {0, 27}
  // because every element of S is 0 or 1 mod 3.
  RecursiveSetDef s{3, {{1, 2}}, 0};
  auto t = truncate(s, 4);
  CHECK(t.outer_measure - t.inner_measure == Rational(2, 81));
  CHECK(t.inner_measure == Rational(1, 9) + Rational(1, 27) + Rational(1, 81));
}
