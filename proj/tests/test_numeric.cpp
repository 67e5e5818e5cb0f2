#include "kingman/linalg.hpp"
#include "kingman/rational.hpp"

#include <doctest.h>

using namespace kingman;

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/2") == make_rational(1, 2));
  CHECK(parse_rational("-3/6") == make_rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.25") == make_rational(1, 4));
  CHECK(parse_rational("-1e-3") == make_rational(-1, 1000));
  CHECK(parse_rational("2.5E1") == 25);
  CHECK(parse_rational("0.3333333333", 10) == make_rational(1, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(to_string(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("limit_denominator") {
  CHECK(limit_denominator(make_rational(314159, 100000), 7) == make_rational(22, 7));
  CHECK(limit_denominator(make_rational(314159, 100000), 1000) == make_rational(355, 113));
  CHECK(limit_denominator(make_rational(-314159, 100000), 7) == make_rational(-22, 7));
  CHECK(limit_denominator(make_rational(1, 3), 5) == make_rational(1, 3));
}

TEST_CASE("rational matrices") {
  RationalMatrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  CHECK((a * RationalMatrix::identity(2)) == a);
  CHECK(a.trace() == 5);
  CHECK_FALSE(a.is_symmetric());
  CHECK((a + a.transpose()).is_symmetric());
  CHECK((a - a).is_zero());
  CHECK(a.shifted(1)(0, 0) == 0);
  CHECK(a.shifted(1)(0, 1) == 2);
  CHECK((a * std::vector<Rational>{1, 1}) == std::vector<Rational>{3, 7});
  CHECK(a.left_multiply({1, 1}) == std::vector<Rational>{4, 6});
  CHECK(rank(a) == 2);

  auto x = solve(a, RationalMatrix::identity(2));
  REQUIRE(x.has_value());
  CHECK((a * *x) == RationalMatrix::identity(2));
  CHECK((*x)(0, 0) == -2);
  CHECK((*x)(1, 0) == make_rational(3, 2));

  RationalMatrix s(3, 2);
  s(0, 0) = 1;
  s(1, 0) = 2;
  s(1, 1) = 1;
  s(2, 0) = 3;
  s(2, 1) = 1;
  CHECK(rank(s) == 2);
  CHECK(independent_rows(s) == std::vector<std::size_t>{0, 1});
  RationalMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK_FALSE(solve(singular, RationalMatrix::identity(2)).has_value());
  CHECK(rank(singular) == 1);
}
