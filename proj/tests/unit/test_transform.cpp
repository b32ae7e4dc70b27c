#include <doctest.h>

#include <random>

#include <stirlingkit/egf.hpp>
#include <stirlingkit/seq.hpp>
#include <stirlingkit/transform.hpp>

#include "random_rationals.hpp"

using namespace stirlingkit;

namespace
{
Sequence ones(std::size_t n)
{
    return Sequence(std::vector<Rational>(n, Rational(1)));
}

Sequence bells(const SeqContext &ctx, long n)
{
    std::vector<Rational> v;
    for (long i = 0; i <= n; ++i) {
        v.emplace_back(ctx.bell(i));
    }
    return Sequence(v);
}
} // namespace

TEST_CASE("empty sequences are rejected")
{
    CHECK_THROWS_AS(Sequence({}), DomainError);
}

TEST_CASE("stirling transform examples")
{
    SeqContext ctx;
    CHECK(stirling_transform(ctx, ones(5)) == bells(ctx, 4));
    CHECK(stirling_inverse(ctx, bells(ctx, 10)) == ones(11));

    // indicator of j picks out the column S(n, j)
    const long j = 3;
    std::vector<Rational> e(12, Rational(0));
    e[j] = 1;
    const Sequence col = stirling_transform(ctx, Sequence(e));
    for (long n = 0; n < 12; ++n) {
        CHECK(col[n] == Rational(ctx.stirling2(n, j)));
    }

    // a_k = (-1)^k k! H_k goes to (-1)^n n
    std::vector<Rational> a;
    for (long k = 0; k <= 20; ++k) {
        a.push_back(Rational(alternating_sign(k) * ctx.factorial(k)) * ctx.harmonic(k));
    }
    const Sequence b = stirling_transform(ctx, Sequence(a));
    for (long n = 0; n <= 20; ++n) {
        CHECK(b[n] == Rational(alternating_sign(n) * n));
    }

    // b_k = (-1)^k k back to (-1)^n n! H_n
    std::vector<Rational> c;
    for (long k = 0; k <= 20; ++k) {
        c.emplace_back(alternating_sign(k) * k);
    }
    const Sequence h = stirling_inverse(ctx, Sequence(c));
    for (long n = 0; n <= 20; ++n) {
        CHECK(h[n] == Rational(alternating_sign(n) * ctx.factorial(n)) * ctx.harmonic(n));
    }
}

TEST_CASE("binomial transforms")
{
    SeqContext ctx;
    const Sequence alt = binomial_transform(bells(ctx, 6), BinomialSign::alternating);
    CHECK(alt[2] == Rational(1));

    std::vector<Rational> e0(8, Rational(0));
    e0[0] = 1;
    CHECK(binomial_transform(Sequence(e0), BinomialSign::plain) == ones(8));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Sequence a(testing::random_sequence(rng, 1 + trial % 20));
        CHECK(binomial_transform(binomial_transform(a, BinomialSign::alternating), BinomialSign::alternating) == a);
    }
}

TEST_CASE("round trips and linearity")
{
    SeqContext ctx;
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t len = 1 + trial % 25;
        const Sequence a(testing::random_sequence(rng, len));
        const Sequence b(testing::random_sequence(rng, len));
        CHECK(stirling_inverse(ctx, stirling_transform(ctx, a)) == a);
        CHECK(stirling_transform(ctx, stirling_inverse(ctx, a)) == a);

        const Rational alpha = testing::random_rational(rng);
        const Rational beta = testing::random_rational(rng);
        std::vector<Rational> mix;
        for (std::size_t i = 0; i < len; ++i) {
            mix.push_back(alpha * a[i] + beta * b[i]);
        }
        const Sequence ta = stirling_transform(ctx, a);
        const Sequence tb = stirling_transform(ctx, b);
        const Sequence tmix = stirling_transform(ctx, Sequence(mix));
        for (std::size_t i = 0; i < len; ++i) {
            CHECK(tmix[i] == alpha * ta[i] + beta * tb[i]);
        }
    }
}

TEST_CASE("weighted transforms")
{
    SeqContext ctx;
    std::mt19937_64 rng(8);
    const Sequence a(testing::random_sequence(rng, 15));
    CHECK(weighted_stirling_transform(ctx, a, 1, 1, StirlingKind::second) == stirling_transform(ctx, a));
    CHECK(weighted_stirling_transform(ctx, a, 1, 1, StirlingKind::first) == stirling_inverse(ctx, a));

    // agrees with the composition route of the series module
    const Egf f(a.values());
    CHECK(stirling_transform(ctx, a).values() == stirling_substitution(ctx, f, 1, 1));

    // lambda = mu = -1, first kind, on B_k: (-1)^n sum_k s(n,k) B_k
    std::vector<Rational> bern;
    for (long k = 0; k <= 15; ++k) {
        bern.push_back(ctx.bernoulli(k));
    }
    const Sequence wb = weighted_stirling_transform(ctx, Sequence(bern), -1, -1, StirlingKind::first);
    for (long n = 0; n <= 15; ++n) {
        Rational direct = 0;
        for (long k = 0; k <= n; ++k) {
            direct += Rational(ctx.stirling1(n, k)) * bern[k];
        }
        CHECK(wb[n] == Rational(alternating_sign(n)) * direct);
    }

    // lambda = 1, mu = -1, second kind, on derangements
    std::vector<Rational> der;
    for (long k = 0; k <= 15; ++k) {
        der.emplace_back(ctx.derangement(k));
    }
    const Sequence wd = weighted_stirling_transform(ctx, Sequence(der), 1, -1, StirlingKind::second);
    const Sequence alt = binomial_transform(bells(ctx, 15), BinomialSign::alternating);
    for (long n = 0; n <= 15; ++n) {
        CHECK(wd[n] == Rational(alternating_sign(n)) * alt[n]);
    }
}
