#include <doctest.h>

#include "qgrass/laurent.hpp"

using namespace qgr;

TEST_CASE("laurent arithmetic and normal form") {
  Laurent t = Laurent::term(1, 1);
  Laurent one(1);

  CHECK((one + t) * (one - t) == one - t * t);
  CHECK(Laurent(0).is_zero());
  CHECK((t - t).is_zero());
  CHECK(one.is_one());
  CHECK(!t.is_one());

  // cancellation removes the exponent entirely
  Laurent a = Laurent::term(2, 3) + Laurent::term(-2, 3);
  CHECK(a.is_zero());
  CHECK(a.terms().empty());

  CHECK(-(t - one) == one - t);
}

TEST_CASE("q and p are powers of t") {
  CHECK(q_power(1, 3) == Laurent::term(1, 3));
  CHECK(q_power(-2, 2) == Laurent::term(1, -4));
  CHECK(p_power(1) == Laurent::term(1, 2));
  // p^m = q^2 at every m
  for (int m = 1; m <= 4; ++m) CHECK(p_power(m) == q_power(2, m));
}

TEST_CASE("pow handles negative exponents of monomial units only") {
  Laurent t2 = Laurent::term(1, 2);
  CHECK(pow(t2 + Laurent(1), 2) ==
        Laurent::term(1, 4) + Laurent::term(2, 2) + Laurent(1));
  CHECK(pow(Laurent::term(-1, 3), -2) == Laurent::term(1, -6));
  CHECK(pow(t2, 0).is_one());
  CHECK_THROWS_AS(pow(t2 + Laurent(1), -1), Error);
  CHECK_THROWS_AS(pow(Laurent::term(2, 1), -1), Error);
  CHECK_THROWS_AS(pow(Laurent(0), -1), Error);
}

TEST_CASE("monomial_ratio finds lambda with a = lambda * b") {
  Laurent b = Laurent::term(1, 1) + Laurent::term(1, 3);
  Laurent lam = Laurent::term(2, 2);
  auto r = monomial_ratio(lam * b, b);
  REQUIRE(r.has_value());
  CHECK(*r == lam);

  CHECK(!monomial_ratio(b + Laurent(1), b).has_value());
  CHECK(!monomial_ratio(Laurent(0), b).has_value());
  CHECK_THROWS_AS(monomial_ratio(b, Laurent(0)), Error);
}

TEST_CASE("div_exact divides when remainder vanishes") {
  Laurent t = Laurent::term(1, 1);
  Laurent one(1);
  auto q1 = div_exact(t * t - one, t - one);
  REQUIRE(q1.has_value());
  CHECK(*q1 == t + one);
  CHECK(!div_exact(t * t + one, t - one).has_value());
  // Laurent division: negative exponents are fine
  auto q2 = div_exact(one - Laurent::term(1, -2), one - Laurent::term(1, -1));
  REQUIRE(q2.has_value());
  CHECK(*q2 == one + Laurent::term(1, -1));
}

TEST_CASE("rescale_q_exponents transports q = t^m1 to q = t^m2") {
  Laurent c = q_power(1, 2) - q_power(-1, 2);  // t^2 - t^-2
  CHECK(rescale_q_exponents(c, 2, 3) == q_power(1, 3) - q_power(-1, 3));
  CHECK(rescale_q_exponents(Laurent(5), 2, 7) == Laurent(5));
  // t^1 is not a power of q when q = t^2
  CHECK_THROWS_AS(rescale_q_exponents(Laurent::term(1, 1), 2, 3), Error);
}

TEST_CASE("int_content is the integer gcd of the coefficients") {
  CHECK(int_content(Laurent::term(6, 1) + Laurent::term(-4, 3)) == Int(2));
  CHECK(int_content(Laurent(0)) == Int(0));
  CHECK(int_content(Laurent::term(-3, -5)) == Int(3));
}

TEST_CASE("to_string is stable") {
  Laurent v = Laurent::term(-1, -2) + Laurent(3) + Laurent::term(1, 4);
  CHECK(to_string(v) == "-1*t^-2 + 3*t^0 + 1*t^4");
  CHECK(to_string(Laurent(0)) == "0");
}
