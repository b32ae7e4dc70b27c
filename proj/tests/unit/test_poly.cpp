#include <doctest.h>

#include <stirlingkit/poly.hpp>
#include <stirlingkit/seq.hpp>

using namespace stirlingkit;

namespace
{
Rational q(long p, long d)
{
    return Rational(Integer(p), Integer(d));
}

Poly P(std::vector<Rational> c)
{
    return Poly(std::move(c));
}
} // namespace

TEST_CASE("arithmetic, evaluation, derivative")
{
    const Poly a = P({0, -1, 1}); // x^2 - x
    CHECK(a.derivative() == P({-1, 2}));
    CHECK(a.eval(q(1, 2)) == q(-1, 4));
    CHECK((a - a).is_zero());
    CHECK((a - a).coefficients().empty());
    CHECK((a - a).degree() == kZeroDegree);
    CHECK(a + P({1}) == P({1, -1, 1}));
    CHECK(a * P({1, 1}) == P({0, -1, 0, 1}));
    CHECK(a * q(1, 2) == P({0, q(-1, 2), q(1, 2)}));
    CHECK(P({0, 0, 0}).is_zero());
    CHECK(a.integral() == P({0, 0, q(-1, 2), q(1, 3)}));
    CHECK(a.integral().derivative() == a);
    CHECK(a.divide_by_x() == P({-1, 1}));
    CHECK_THROWS_AS(P({1, 1}).divide_by_x(), DomainError);
}

TEST_CASE("text rendering")
{
    CHECK(Poly().to_string() == "0");
    CHECK(P({q(1, 6), -1, 1}).to_string() == "1/6 - x + x^2");
    CHECK(P({0, q(-1, 2), 3}).to_string() == "-1/2*x + 3*x^2");
}

TEST_CASE("exponential polynomials")
{
    SeqContext ctx;
    CHECK(exp_poly(0) == P({1}));
    CHECK(exp_poly(2) == P({0, 1, 1}));
    CHECK(exp_poly(3) == P({0, 1, 3, 1}));
    for (long n = 0; n <= 30; ++n) {
        CHECK(exp_poly(n) == exp_poly_from_triangle(ctx, n));
        CHECK(exp_poly(n).eval(1) == Rational(ctx.bell(n)));
    }
}

TEST_CASE("geometric polynomials")
{
    SeqContext ctx;
    CHECK(geom_poly(ctx, 0) == P({1}));
    CHECK(geom_poly(ctx, 2) == P({0, 1, 2}));
    CHECK(geom_poly(ctx, 3).eval(1) == Rational(13));
    for (long n = 0; n <= 30; ++n) {
        CHECK(geom_poly(ctx, n).eval(1) == Rational(ctx.fubini(n)));
    }
}

TEST_CASE("bernoulli and euler polynomials")
{
    SeqContext ctx;
    CHECK(bernoulli_poly(ctx, 2) == P({q(1, 6), -1, 1}));
    CHECK(euler_poly(1) == P({q(-1, 2), 1}));
    CHECK(euler_poly(2) == P({0, -1, 1}));
    const auto by_series = bernoulli_polys_by_series(20);
    for (long n = 0; n <= 20; ++n) {
        CHECK(bernoulli_poly(ctx, n).eval(0) == ctx.bernoulli(n));
        CHECK(bernoulli_poly(ctx, n) == by_series[n]);
        // B_n(x+1) - B_n(x) = n x^(n-1), checked at a few points
        for (const Rational &x : {q(1, 3), Rational(2), q(-5, 7)}) {
            const Rational diff = bernoulli_poly(ctx, n).eval(x + 1) - bernoulli_poly(ctx, n).eval(x);
            CHECK(diff == (n == 0 ? Rational(0) : Rational(n) * int_pow(x, n - 1)));
        }
        // E_n(x+1) + E_n(x) = 2 x^n
        for (const Rational &x : {q(1, 3), Rational(2)}) {
            CHECK(euler_poly(n).eval(x + 1) + euler_poly(n).eval(x) == 2 * int_pow(x, n));
        }
    }
}

TEST_CASE("binomial polynomials")
{
    CHECK(binom_poly(0) == P({1}));
    CHECK(binom_poly(2) == P({0, q(-1, 2), q(1, 2)}));
    // C(1/2, j) against the central-binomial closed form
    for (long j = 0; j <= 20; ++j) {
        const Rational closed = Rational(binomial(2 * j, j)) * alternating_sign(j + 1) /
                                (int_pow(2, 2 * j) * Rational(2 * j - 1));
        CHECK(binom_poly(j).eval(q(1, 2)) == closed);
    }
    for (long k = 0; k <= 10; ++k) {
        for (long n = -5; n <= 12; ++n) {
            CHECK(binom_poly(k).eval(n) == Rational(binomial(n, k)));
        }
    }
}

TEST_CASE("the xD operator")
{
    for (std::size_t k = 0; k <= 6; ++k) {
        CHECK(xd_apply(Poly::monomial(1, k), 1) == Poly::monomial(Rational(static_cast<long>(k)), k));
    }
    const Poly phi2 = exp_poly(2);
    CHECK(xd_apply(phi2, 0) == phi2);
    CHECK(xd_apply(phi2, 1) == P({0, 1, 2}));
    CHECK(xd_apply(phi2, 1) == exp_poly(3) - Poly::x() * phi2);
    const Poly a = P({q(1, 2), 3, -1, q(2, 7)});
    for (long p = 0; p <= 4; ++p) {
        Poly iterated = a;
        for (long i = 0; i < p; ++i) {
            iterated = Poly::x() * iterated.derivative();
        }
        CHECK(xd_apply(a, p) == iterated);
    }
}
