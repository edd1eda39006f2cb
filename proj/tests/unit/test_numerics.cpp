#include <doctest.h>

#include <cmath>
#include <random>

#include "vpt/errors.hpp"
#include "vpt/numerics.hpp"

using namespace vpt;

TEST_SUITE("numerics") {
  TEST_CASE("binomial_half small cases") {
    CHECK(binomial_half(0, 0) == 1);
    CHECK(binomial_half(0, 1) == ExactRational(1, 2));
    CHECK(binomial_half(0, 2) == ExactRational(-1, 8));
    CHECK(binomial_half(1, 3) == -1);
    for (long k = 0; k < 12; ++k) CHECK(binomial_half(1, k) == (k % 2 == 0 ? 1 : -1));
  }

  TEST_CASE("binomial_half obeys the Pascal-type recurrence") {
    for (long j = 0; j <= 12; ++j) {
      const ExactRational a = make_rational(1 - 3 * j, 2);
      ExactRational expected = 1;
      for (long k = 1; k <= 300; ++k) {
        expected = expected * (a - k + 1) / k;
        REQUIRE(binomial_half(j, k) == expected);
      }
    }
  }

  TEST_CASE("falling and plain factorials") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(falling_factorial(30, 30) == factorial(30));
  }

  TEST_CASE("rationals are canonical and exact") {
    const ExactRational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(parse_rational("-30885/128") == ExactRational(-30885, 128));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x/3"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);

    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
    std::uniform_int_distribution<long> den(1, 1000000000L);
    for (int i = 0; i < 500; ++i) {
      const ExactRational a = make_rational(num(rng), den(rng));
      const ExactRational c = make_rational(num(rng), den(rng));
      REQUIRE((a + c) - c == a);
      REQUIRE(parse_rational(to_string(a)) == a);
    }
  }

  TEST_CASE("precision context guard digits") {
    CHECK_NOTHROW(PrecisionContext{}.validate());
    CHECK_NOTHROW(PrecisionContext{45, 25}.validate());
    CHECK_THROWS_AS((PrecisionContext{44, 25}.validate()), DomainError);
    CHECK_THROWS_AS((PrecisionContext{300, 0}.validate()), DomainError);
    CHECK(digits_to_bits(300) >= 997);
  }

  TEST_CASE("pow_rational_exponent") {
    CHECK(pow_rational_exponent(Real(8L, 50), 1, 3) == 2);
    CHECK(pow_rational_exponent(Real(1L, 50), -2, 3) == 1);
    const Real x(6L, 100);
    const Real got = pow_rational_exponent(x, -2, 3);
    const Real wide = exp(log(x.with_digits(200)) * Real(-2L, 200) / 3);
    CHECK(matching_digits(got, wide, 100) >= 95);
    CHECK(to_fixed(got, 6) == "0.302853");
    CHECK_THROWS_AS(pow_rational_exponent(Real(-1L, 50), 1, 3), DomainError);
    CHECK_THROWS_AS(pow_rational_exponent(Real(0L, 50), 1, 3), DomainError);
    CHECK_THROWS_AS(pow_rational_exponent(x, 1, 0), DomainError);
  }

  TEST_CASE("pow_rational_exponent is stable under precision doubling") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-6.0, 6.0);
    std::uniform_int_distribution<long> p(-9, 9);
    std::uniform_int_distribution<long> q(1, 7);
    for (int i = 0; i < 200; ++i) {
      const std::string text = to_scientific(Real::parse(std::to_string(std::pow(10.0, exponent(rng))), 60), 40);
      const long pp = p(rng);
      const long qq = q(rng);
      const Real a = pow_rational_exponent(Real::parse(text, 300), pp, qq);
      const Real b = pow_rational_exponent(Real::parse(text, 600), pp, qq);
      REQUIRE(to_fixed(a, kDefaultOutputDigits) == to_fixed(b.with_digits(300), kDefaultOutputDigits));
    }
  }

  TEST_CASE("mixed precision arithmetic widens") {
    const Real a(1L, 30);
    const Real b(3L, 200);
    const Real c = a / b;
    CHECK(c.precision_digits() == 200);
    CHECK(matching_digits(c * 3, Real(1L, 200), 250) >= 195);
  }

  TEST_CASE("conversion from rationals is correctly rounded") {
    const Real third(ExactRational(1, 3), 40);
    CHECK(to_fixed(third, 30) == "0.333333333333333333333333333333");
    const Real big(ExactRational(BigInt("123456789012345678901234567890"), 7), 80);
    CHECK(to_fixed(big * 7, 30) == "123456789012345678901234567890");
  }

  TEST_CASE("decimal rendering") {
    CHECK(to_fixed(Real(0L, 50), 10) == "0");
    CHECK(to_fixed(Real::parse("0.00012345", 50), 3) == "0.000123");
    CHECK(to_fixed(Real::parse("-2.5", 50), 1) == "-2");
    CHECK(to_fixed(Real::parse("3.5", 50), 1) == "4");
    CHECK(to_fixed(Real::parse("12345.678", 50), 3) == "12300");
    CHECK(to_scientific(Real::parse("0.00012345", 50), 3) == "1.23e-04");
    CHECK(group_digits("0.667986259155") == "0.667 986 259 155");
    CHECK(group_digits("-0.0086275") == "-0.008 627 5");
    CHECK(group_digits("12") == "12");
    CHECK_THROWS_AS(Real::parse("abc", 50), DomainError);
    CHECK_THROWS_AS(Real::parse("1.5x", 50), DomainError);
  }

  TEST_CASE("render then parse round trips") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> ex(-30, 30);
    for (int i = 0; i < 300; ++i) {
      const Real x = Real::parse(std::to_string(mant(rng)), 80) * pow(Real(10L, 80), ex(rng));
      const std::string s = to_fixed(x, 40);
      REQUIRE(to_fixed(Real::parse(s, 80), 40) == s);
      REQUIRE(matching_digits(Real::parse(to_scientific(x, 40), 80), x, 100) >= 39);
    }
  }

  TEST_CASE("matching_digits") {
    const Real a = Real::parse("1.2345678", 50);
    CHECK(matching_digits(a, a, 17) == 17);
    CHECK(matching_digits(Real::parse("1.2345679", 50), a, 30) == 7);
    CHECK(matching_digits(Real::parse("5", 50), a, 30) == 0);
  }

  TEST_CASE("compensated summation recovers cancelled terms") {
    CompensatedSum<Real> sum(Real(0L, 20));
    const Real big = pow(Real(10L, 20), 30);
    sum.add(big);
    sum.add(Real(1L, 20));
    sum.add(-big);
    CHECK(sum.value() == 1);
  }
}
