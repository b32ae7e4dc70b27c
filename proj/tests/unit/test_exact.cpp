#include <doctest.h>

#include <random>

#include <stirlingkit/exact.hpp>

#include "random_rationals.hpp"

using namespace stirlingkit;

namespace
{
Rational q(long p, long d)
{
    return Rational(Integer(p), Integer(d));
}
} // namespace

TEST_CASE("rational arithmetic on small fractions")
{
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(7, 3) + Rational(0) == q(7, 3));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 9) == q(3, 2));
    CHECK(-q(1, 2) == q(-1, 2));
}

TEST_CASE("canonical form")
{
    const Rational half = Rational::parse("2/4");
    CHECK(half == q(1, 2));
    CHECK(half.numerator() == 1);
    CHECK(half.denominator() == 2);

    const Rational neg = q(3, -6);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 2);

    const Rational zero = q(0, -5);
    CHECK(zero.is_zero());
    CHECK(zero.denominator() == 1);
    CHECK(zero.sign() == 0);
    CHECK(zero.to_string() == "0");
}

TEST_CASE("division by zero is an error")
{
    CHECK_THROWS_AS(q(1, 2) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_AS(Rational::parse("3/0"), DomainError);
}

TEST_CASE("parse and to_string round trip")
{
    CHECK(Rational::parse("-7/21").to_string() == "-1/3");
    CHECK(Rational::parse("42").to_string() == "42");
    CHECK(Rational::parse("-0").to_string() == "0");
    CHECK(Rational::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1 /2"));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r = testing::random_rational(rng, 1000000, 1000000);
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("exact double conversion")
{
    CHECK(Rational::from_double(0.5) == q(1, 2));
    CHECK(Rational::from_double(-0.375) == q(-3, 8));
    CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("ordering")
{
    CHECK(q(1, 3) < q(1, 2));
    CHECK(q(-1, 2) < q(-1, 3));
    CHECK(q(2, 4) == q(1, 2));
}

TEST_CASE("integer conversions")
{
    CHECK(Rational(12).to_integer() == 12);
    CHECK(Rational(-5).to_long() == -5);
    CHECK_THROWS_AS(q(1, 2).to_integer(), DomainError);
    CHECK_THROWS_AS(q(1, 2).to_long(), DomainError);
}

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("binomial")
{
    CHECK(binomial(4, 2) == 6);
    for (long n = 0; n <= 30; ++n) {
        CHECK(binomial(n, 0) == 1);
    }
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    // falling-factorial definition for negative n
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-2, 2) == 3);

    for (long n = 2; n <= 30; ++n) {
        for (long k = 1; k < n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("generalized binomial agrees with the integer one")
{
    for (long n = -6; n <= 10; ++n) {
        for (long k = 0; k <= 8; ++k) {
            CHECK(binomial(Rational(n), k) == Rational(binomial(n, k)));
        }
    }
    CHECK(binomial(q(1, 2), 2) == q(-1, 8));
    CHECK(binomial(q(1, 2), -1) == Rational(0));
}

TEST_CASE("powers")
{
    CHECK(int_pow(Rational(0), 0) == Rational(1));
    CHECK(int_pow(Rational(2), 10) == Rational(1024));
    CHECK(int_pow(q(-1, 2), 3) == q(-1, 8));
    CHECK(int_pow(Rational(0), 3) == Rational(0));
    CHECK_THROWS_AS(int_pow(Rational(2), -1), DomainError);
    CHECK(alternating_sign(0) == 1);
    CHECK(alternating_sign(3) == -1);
    CHECK(alternating_sign(-3) == -1);
}

TEST_CASE("field axioms on random small rationals")
{
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Rational a = testing::random_rational(rng);
        const Rational b = testing::random_rational(rng);
        const Rational c = testing::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        for (const Rational &r : {a + b, a - b, a * b, -c}) {
            CHECK(r.is_canonical());
        }
    }
}
