#include <doctest.h>

#include <future>
#include <vector>

#include <stirlingkit/seq.hpp>

using namespace stirlingkit;

namespace
{
Rational q(long p, long d)
{
    return Rational(Integer(p), Integer(d));
}

// Brute-force count of set partitions of {0..n-1} into k blocks via
// restricted growth strings.
long count_partitions(int n, int k)
{
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    std::vector<int> a(n, 0);
    long count = 0;
    for (;;) {
        int blocks = 0;
        for (int v : a) {
            blocks = std::max(blocks, v + 1);
        }
        if (blocks == k) {
            ++count;
        }
        int i = n - 1;
        for (; i > 0; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) {
                prefix_max = std::max(prefix_max, a[j]);
            }
            if (a[i] <= prefix_max) {
                ++a[i];
                for (int j = i + 1; j < n; ++j) {
                    a[j] = 0;
                }
                break;
            }
        }
        if (i == 0) {
            return count;
        }
    }
}
} // namespace

TEST_CASE("stirling2 small values")
{
    SeqContext ctx;
    CHECK(ctx.stirling2(0, 0) == 1);
    CHECK(ctx.stirling2(3, 2) == 3);
    CHECK(ctx.stirling2(4, 2) == 7);
    CHECK(ctx.stirling2(5, 3) == 25);
    CHECK(ctx.stirling2(4, 7) == 0);
    CHECK(ctx.stirling2(4, -1) == 0);
    for (long n = 0; n <= 40; ++n) {
        CHECK(ctx.stirling2(n, n) == 1);
    }
    CHECK_THROWS_AS(ctx.stirling2(-1, 0), DomainError);
}

TEST_CASE("stirling2 matches a brute-force partition count")
{
    SeqContext ctx;
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(ctx.stirling2(n, k) == count_partitions(n, k));
        }
    }
}

TEST_CASE("stirling1 small values")
{
    SeqContext ctx;
    CHECK(ctx.stirling1(3, 2) == -3);
    CHECK(ctx.stirling1(3, 1) == 2);
    CHECK(ctx.stirling1(4, 2) == 11);
    CHECK(ctx.stirling1(5, 2) == -50);
    for (long n = 0; n <= 40; ++n) {
        CHECK(ctx.stirling1(n, n) == 1);
    }
    CHECK_THROWS_AS(ctx.stirling1(-2, 0), DomainError);
}

TEST_CASE("stirling1 row is the falling factorial")
{
    SeqContext ctx;
    // expand x(x-1)...(x-n+1) by repeated multiplication
    std::vector<Integer> poly{1};
    for (long n = 0; n <= 20; ++n) {
        const auto &row = ctx.stirling1_row(n);
        REQUIRE(row.size() == poly.size());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            CHECK(row[k] == poly[k]);
        }
        std::vector<Integer> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= Integer(n) * poly[k];
        }
        poly = next;
    }
}

TEST_CASE("row references stay valid while the table grows")
{
    SeqContext ctx;
    const auto &row5 = ctx.stirling2_row(5);
    ctx.stirling2_row(150);
    CHECK(row5.size() == 6);
    CHECK(row5[2] == 15);
}

TEST_CASE("large indices are bignum-backed")
{
    SeqContext ctx;
    CHECK(ctx.bell(200) > Integer("1000000000000000000000000000000"));
    CHECK(ctx.stirling2(200, 100) > 0);
    CHECK(ctx.factorial(200) == factorial(200));
}

TEST_CASE("bell, fubini, derangement")
{
    SeqContext ctx;
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147};
    const long fubini[] = {1, 1, 3, 13, 75, 541, 4683, 47293};
    const long der[] = {1, 0, 1, 2, 9, 44, 265, 1854, 14833};
    for (long n = 0; n < 10; ++n) {
        CHECK(ctx.bell(n) == bell[n]);
    }
    for (long n = 0; n < 8; ++n) {
        CHECK(ctx.fubini(n) == fubini[n]);
    }
    for (long n = 0; n < 9; ++n) {
        CHECK(ctx.derangement(n) == der[n]);
    }
    for (long n = 1; n <= 60; ++n) {
        CHECK(ctx.derangement(n) == Integer(n) * ctx.derangement(n - 1) + alternating_sign(n));
    }
}

TEST_CASE("harmonic and hyperharmonic")
{
    SeqContext ctx;
    CHECK(ctx.harmonic(0) == Rational(0));
    CHECK(ctx.harmonic(1) == Rational(1));
    CHECK(ctx.harmonic(3) == q(11, 6));
    CHECK(ctx.hyperharmonic(1, 3) == q(11, 6));
    CHECK(ctx.hyperharmonic(2, 2) == q(5, 2));
    for (long p = 0; p <= 8; ++p) {
        CHECK(ctx.hyperharmonic(p, 0) == Rational(0));
    }
    for (long n = 1; n <= 10; ++n) {
        CHECK(ctx.hyperharmonic(0, n) == q(1, n));
    }
    // partial-sum definition against the compact form
    for (long p = 1; p <= 6; ++p) {
        Rational partial = 0;
        for (long n = 1; n <= 30; ++n) {
            partial += ctx.hyperharmonic(p, n);
            CHECK(ctx.hyperharmonic(p + 1, n) == partial);
        }
    }
}

TEST_CASE("bernoulli numbers")
{
    SeqContext ctx;
    CHECK(ctx.bernoulli(0) == Rational(1));
    CHECK(ctx.bernoulli(1) == q(-1, 2));
    CHECK(ctx.bernoulli(2) == q(1, 6));
    CHECK(ctx.bernoulli(3) == Rational(0));
    CHECK(ctx.bernoulli(4) == q(-1, 30));
    CHECK(ctx.bernoulli(12) == q(-691, 2730));
    for (long n = 3; n <= 41; n += 2) {
        CHECK(ctx.bernoulli(n).is_zero());
    }
    CHECK(ctx.bernoulli_plus(0) == Rational(1));
    CHECK(ctx.bernoulli_plus(1) == q(1, 2));
    CHECK(ctx.bernoulli_plus(2) == q(1, 6));
    for (long n = 2; n <= 20; ++n) {
        CHECK(ctx.bernoulli_plus(n) == ctx.bernoulli(n));
    }
}

TEST_CASE("euler numbers in the E_n(1/2) convention")
{
    SeqContext ctx;
    CHECK(ctx.euler_number(0) == Rational(1));
    CHECK(ctx.euler_number(1) == Rational(0));
    CHECK(ctx.euler_number(2) == q(-1, 4));
    // 2^n E_n(1/2) are the classical integers 1, 0, -1, 0, 5, 0, -61
    const long classical[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385};
    for (long n = 0; n <= 8; ++n) {
        CHECK(ctx.euler_number(n) * int_pow(Rational(2), n) == Rational(classical[n]));
    }
}

TEST_CASE("power sums and faulhaber")
{
    SeqContext ctx;
    CHECK(ctx.power_sum(2, 0) == 0);
    CHECK(ctx.power_sum(2, 3) == 14);
    CHECK(ctx.power_sum(3, 4) == 100);
    CHECK(ctx.faulhaber(3, 4) == Rational(100));
    for (long p = 0; p <= 12; ++p) {
        for (long n = 0; n <= 30; ++n) {
            const Rational f = ctx.faulhaber(p, n);
            CHECK(f.is_integer());
            CHECK(f == Rational(ctx.power_sum(p, n)));
        }
    }
}

TEST_CASE("moments")
{
    SeqContext ctx;
    CHECK(ctx.moment(3, 1) == 10);
    CHECK(ctx.moment(1, 5) == 1);
    for (long n = 0; n <= 20; ++n) {
        CHECK(ctx.moment(n, 0) == ctx.bell(n));
        for (long p = 0; p <= 8; ++p) {
            CHECK(ctx.moment(n, p) == ctx.moment_direct(n, p));
        }
    }
    for (long n = 0; n <= 20; ++n) {
        auto b = [&](long m) { return ctx.bell(m); };
        CHECK(ctx.moment(n, 1) == b(n + 1) - b(n));
        CHECK(ctx.moment(n, 5) == b(n + 5) - 5 * b(n + 4) + 10 * b(n + 2) + 5 * b(n + 1) - 2 * b(n));
    }
}

TEST_CASE("negative indices are domain errors")
{
    SeqContext ctx;
    CHECK_THROWS_AS(ctx.bell(-1), DomainError);
    CHECK_THROWS_AS(ctx.harmonic(-1), DomainError);
    CHECK_THROWS_AS(ctx.bernoulli(-1), DomainError);
    CHECK_THROWS_AS(ctx.hyperharmonic(-1, 2), DomainError);
    CHECK_THROWS_AS(ctx.power_sum(-1, 2), DomainError);
}

TEST_CASE("memoized values equal fresh ones under concurrent growth")
{
    SeqContext shared;
    std::vector<std::future<Integer>> futures;
    for (long n = 60; n < 68; ++n) {
        futures.push_back(std::async(std::launch::async, [&shared, n] { return Integer(shared.bell(n) + shared.fubini(n)); }));
    }
    for (long n = 60; n < 68; ++n) {
        SeqContext fresh;
        CHECK(futures[n - 60].get() == fresh.bell(n) + fresh.fubini(n));
    }
}
