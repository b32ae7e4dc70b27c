#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include <stirlingkit/identities.hpp>
#include <stirlingkit/poly.hpp>
#include <stirlingkit/seq.hpp>

using namespace stirlingkit;

namespace
{
Rational q(long p, long d)
{
    return Rational(Integer(p), Integer(d));
}

// s(3,2) = -3 flipped to +3.
class FlippedContext : public SeqContext
{
public:
    Integer stirling1(long n, long k) const override
    {
        const Integer v = SeqContext::stirling1(n, k);
        return (n == 3 && k == 2) ? Integer(-v) : v;
    }
};

CheckOptions up_to(long n)
{
    CheckOptions o;
    o.max_n = n;
    return o;
}
} // namespace

TEST_CASE("registry shape")
{
    const auto &all = list_identities();
    CHECK(all.size() >= 28);
    const std::vector<std::string> required{"T1",  "T1b", "C2",  "T3a", "T3b", "E9",  "T5a", "T5b", "T5c", "T6a",
                                            "T6b", "T6c", "T6d", "T7",  "L8",  "E15", "P9",  "C10", "E21", "E22",
                                            "P11", "C12", "C13", "E30", "C14", "T15", "L16", "ORTH", "GF6", "DIL",
                                            "L4",  "E18", "CBH"};
    std::set<std::string> ids;
    for (const auto &spec : all) {
        CHECK(ids.insert(spec.id).second);
        CHECK_FALSE(spec.anchor.empty());
        CHECK_FALSE(spec.description.empty());
        CHECK(spec.domain.n_limit >= spec.domain.n_min);
    }
    for (const auto &id : required) {
        CHECK_MESSAGE(ids.count(id) == 1, id);
    }
}

TEST_CASE("every identity declares two distinct routes")
{
    for (const auto &spec : list_identities()) {
        CHECK_FALSE(spec.lhs_route.empty());
        CHECK_FALSE(spec.rhs_route.empty());
        CHECK_MESSAGE(spec.lhs_route != spec.rhs_route, spec.id);
    }
}

TEST_CASE("check modes")
{
    for (const char *id : {"T3a", "T3b", "T5a", "T5b", "P11", "C12", "L8", "E15", "C10", "E21", "E22", "L16"}) {
        CHECK_MESSAGE(find_identity(id).mode == CheckMode::polynomial_equality, id);
    }
    for (const char *id : {"GF6", "DIL", "L4", "P9"}) {
        CHECK_MESSAGE(find_identity(id).mode == CheckMode::series_equality, id);
    }
    std::size_t toleranced = 0;
    for (const auto &spec : list_identities()) {
        toleranced += spec.mode == CheckMode::numeric_tolerance;
    }
    CHECK(toleranced == 1);
    CHECK(find_identity("E30").mode == CheckMode::numeric_tolerance);
    CHECK(to_string(CheckMode::series_equality) == "series-equality");
}

TEST_CASE("unknown ids")
{
    CHECK_THROWS_AS(find_identity("T99"), UnknownIdentity);
    CHECK_THROWS_AS(check_identity("nope"), UnknownIdentity);
}

TEST_CASE("single identities")
{
    const auto t1b = check_identity("T1b", up_to(40));
    CHECK(t1b.passed());
    CHECK(t1b.checked == 41);

    const auto t6a = check_identity("T6a", up_to(40));
    CHECK(t6a.passed());
    CHECK(t6a.checked == 40);

    const auto t15 = check_identity("T15", up_to(30));
    CHECK(t15.passed());
    CHECK(t15.checked == 31);

    const auto t1 = check_identity("T1", up_to(40));
    CHECK(t1.passed());
    CHECK_FALSE(t1.notes.empty());
}

TEST_CASE("hand-computed instances")
{
    SeqContext ctx;
    // T1b at n = 3
    Rational t1b = 0;
    for (long k = 0; k <= 3; ++k) {
        t1b += Rational(ctx.stirling2(3, k) * alternating_sign(k) * ctx.factorial(k)) * ctx.harmonic(k);
    }
    CHECK(t1b == Rational(-3));

    // T6a at n = 2
    CHECK(Rational(ctx.stirling1(2, 1)) * ctx.bernoulli(0) + Rational(ctx.stirling1(2, 2)) * ctx.bernoulli(1) ==
          q(-3, 2));
    CHECK(-ctx.harmonic(2) == q(-3, 2));

    // T15 at n = 2
    Rational t15 = 0;
    for (long k = 0; k <= 2; ++k) {
        t15 += Rational(ctx.stirling2(2, k) * alternating_sign(k) * ctx.derangement(k));
    }
    CHECK(t15 == Rational(1));

    // C13 at n = 3
    Integer c13 = 0;
    for (long k = 1; k <= 3; ++k) {
        c13 += ctx.stirling2(3, k) * ctx.factorial(k - 1);
    }
    CHECK(c13 == 6);
    CHECK(2 * ctx.fubini(2) == 6);

    // C14 at n = 3
    Integer c14 = 0;
    for (long k = 2; k <= 3; ++k) {
        c14 += ctx.stirling2(3, k) * ctx.factorial(k - 2) * alternating_sign(k);
    }
    CHECK(c14 == 2);

    // C10 at n = 2 (x = 1)
    const Rational c10 = Rational(ctx.stirling2(2, 1)) + Rational(ctx.stirling2(2, 2)) / 2;
    CHECK(c10 == q(3, 2));
    CHECK(Rational(ctx.bell(1)) +
              q(1, 2) * (2 * ctx.bernoulli(1) * Rational(ctx.bell(1)) + ctx.bernoulli(0) * Rational(ctx.bell(2))) ==
          q(3, 2));

    // E22 at n = 2 (x = 1)
    CHECK(Rational(ctx.stirling2(2, 1)) + Rational(ctx.stirling2(2, 2)) / 4 == q(5, 4));

    // T3b at n = 2 as a polynomial
    Poly t3b;
    for (long k = 1; k <= 2; ++k) {
        Poly inner;
        for (long j = 0; j <= k; ++j) {
            inner += binom_poly(j) * int_pow(q(-1, 2), k - j);
        }
        t3b += inner * Rational(ctx.stirling2(2, k) * ctx.factorial(k));
    }
    CHECK(t3b == Poly({0, -1, 1}));
    CHECK(t3b == euler_poly(2));

    // E9 at n = 2
    CHECK(ctx.euler_number(2) == q(-1, 4));
}

TEST_CASE("suite-level instances pass")
{
    for (const char *id : {"C13", "C14", "C10", "E22", "T3b", "E9"}) {
        CHECK_MESSAGE(check_identity(id).passed(), id);
    }
}

TEST_CASE("run_all")
{
    const auto start = std::chrono::steady_clock::now();
    SuiteOptions quick;
    quick.max_n = 5;
    const auto reports = run_all(quick);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(seconds < 1.0);
    REQUIRE(reports.size() == list_identities().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].id == list_identities()[i].id);
        CHECK_MESSAGE(reports[i].passed(), reports[i].id);
        CHECK(reports[i].checked > 0);
    }

    SuiteOptions too_small;
    too_small.max_n = 4;
    CHECK_THROWS_AS(run_all(too_small), DomainError);
}

TEST_CASE("run_all is deterministic across worker counts")
{
    SuiteOptions serial;
    serial.max_n = 12;
    SuiteOptions parallel = serial;
    parallel.jobs = 4;
    const auto a = run_all(serial);
    const auto b = run_all(parallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].checked == b[i].checked);
        CHECK(a[i].failures.size() == b[i].failures.size());
        CHECK(a[i].notes == b[i].notes);
    }
}

TEST_CASE("a corrupted triangle is caught with counterexamples")
{
    FlippedContext bad;
    const auto orth = check_identity(bad, "ORTH", up_to(10));
    CHECK_FALSE(orth.passed());
    REQUIRE_FALSE(orth.failures.empty());
    const auto &f = orth.failures.front();
    CHECK_FALSE(f.params.empty());
    CHECK(f.lhs != f.rhs);

    const auto t6a = check_identity(bad, "T6a", up_to(10));
    CHECK_FALSE(t6a.passed());
    REQUIRE_FALSE(t6a.failures.empty());
    const auto &g = t6a.failures.front();
    CHECK(g.params.front().first == "n");
    CHECK(g.params.front().second == "3");
    // full exact values, not differences
    Rational lhs = Rational::parse(g.lhs);
    Rational rhs = Rational::parse(g.rhs);
    CHECK(rhs == Rational(2) * q(11, 6));
    CHECK(lhs != rhs);
}

TEST_CASE("override validation")
{
    CheckOptions bad_order;
    bad_order.order = kMaxOrder + 1;
    CHECK_THROWS_AS(check_identity("GF6", bad_order), DomainError);
    CheckOptions negative;
    negative.max_n = -1;
    CHECK_THROWS_AS(check_identity("T1b", negative), DomainError);
}
