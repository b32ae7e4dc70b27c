#include <doctest.h>

#include <fstream>
#include <random>
#include <string>

#include <stirlingkit/expr.hpp>
#include <stirlingkit/seq.hpp>

#include "corpus.hpp"

using namespace stirlingkit;

namespace
{
Rational q(long p, long d)
{
    return Rational(Integer(p), Integer(d));
}
} // namespace

TEST_CASE("parse shapes")
{
    const Ast call = parse("S(3,2)");
    CHECK(call.root().kind == NodeKind::call);
    CHECK(call.root().name == "S");
    CHECK(call.root().children.size() == 2);

    const Ast sum = parse("sum(k=0..n, S(n,k)*(-1)^k*fact(k)*H(k))");
    CHECK(sum.root().kind == NodeKind::sum);
    CHECK(sum.root().name == "k");
    CHECK(sum.free_variables() == std::set<std::string>{"n"});

    // ^ is right-associative and binds tighter than unary minus
    CHECK(parse("2^3^2").to_string() == "2^3^2");
    CHECK(parse("(2^3)^2").to_string() == "(2^3)^2");
    CHECK(parse("-2^2").root().kind == NodeKind::negate);
    CHECK(parse("1 - (2 - 3)").to_string() == "1 - (2 - 3)");
    CHECK(parse("(1 - 2) - 3").to_string() == "1 - 2 - 3");
    CHECK(parse("a/(b*c)").to_string() == "a/(b*c)");
}

TEST_CASE("syntax errors carry position and expectations")
{
    try {
        parse("1 + * 2");
        FAIL("no error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
        CHECK(e.found() == "'*'");
        const auto &exp = e.expected();
        CHECK(std::find(exp.begin(), exp.end(), "integer") != exp.end());
        CHECK(std::find(exp.begin(), exp.end(), "'('") != exp.end());
    }
    try {
        parse("S(1,\n  2");
        FAIL("no error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 4);
        CHECK(e.found() == "end of input");
    }
}

TEST_CASE("golden corpus")
{
    const auto corpus = testing::load_corpus();
    CHECK(corpus.size() == 50);
    for (const auto &entry : corpus) {
        if (entry.accept) {
            CHECK_NOTHROW_MESSAGE(parse(entry.source), entry.source);
        } else {
            CHECK_THROWS_AS_MESSAGE(parse(entry.source), ParseError, entry.source);
        }
    }
}

TEST_CASE("printing is a fixpoint")
{
    for (const auto &entry : testing::load_corpus()) {
        if (!entry.accept) {
            continue;
        }
        const Ast once = parse(entry.source);
        const std::string printed = once.to_string();
        const Ast twice = parse(printed);
        CHECK(twice == once);
        CHECK(twice.to_string() == printed);
    }
}

TEST_CASE("evaluation")
{
    CHECK(eval("sum(k=0..3, S(3,k)*(-1)^k*fact(k)*H(k))") == Rational(-3));
    CHECK(eval("H(3)") == q(11, 6));
    CHECK(eval("C(7,2) - 21") == Rational(0));
    CHECK(eval("sum(k=1..4, S(4,k)*fact(k-1))") == Rational(26));
    CHECK(eval("2*fubini(3)") == Rational(26));
    CHECK(eval("1/3 + 1/6") == q(1, 2));
    CHECK(eval("010 + 09") == Rational(19));
    CHECK(eval("2^3^2") == Rational(512));
    CHECK(eval("-2^2") == Rational(-4));
    CHECK(eval("0^0") == Rational(1));
    CHECK(eval("(1/2)^3") == q(1, 8));
    CHECK(eval("sum(k=5..4, k)") == Rational(0));
    CHECK(eval("C(1/2, 2)") == q(-1, 8));
    CHECK(eval("E(2)") == q(-1, 4));
    CHECK(eval("M(1,5)") == Rational(1));
    CHECK(eval("powsum(3,4)") == Rational(100));
    CHECK(eval("h(2,2)") == q(5, 2));
    CHECK(eval("Bplus(1) - B(1)") == Rational(1));
    CHECK(eval("D(4) + bell(3)") == Rational(14));
    // the index shadows an outer binding only inside the body
    Env env;
    env.vars["k"] = 100;
    CHECK(eval("sum(k=1..3, k) + k", env) == Rational(106));
}

TEST_CASE("evaluation errors")
{
    CHECK_THROWS_AS(eval("n + 1"), EvalError);
    CHECK_THROWS_AS(eval("S(3)"), EvalError);
    CHECK_THROWS_AS(eval("foo(1)"), EvalError);
    CHECK_THROWS_AS(eval("2^(1/2)"), EvalError);
    CHECK_THROWS_AS(eval("2^(0-1)"), EvalError);
    CHECK_THROWS_AS(eval("sum(k=0..1/2, k)"), EvalError);
    CHECK_THROWS_AS(eval("sum(k=1..2000000, k)"), EvalError);
    CHECK_THROWS_AS(eval("S(3/2, 1)"), EvalError);
    CHECK_THROWS_AS(eval("fact(0-1)"), DomainError);
    CHECK_THROWS_AS(eval("1/0"), DomainError);
    CHECK_NOTHROW(eval("sum(k=1..1000000, 0)"));
}

TEST_CASE("built-ins agree with direct calls on random arguments")
{
    SeqContext ctx;
    Env env;
    env.ctx = &ctx;
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> small(0, 25);
    for (int trial = 0; trial < 40; ++trial) {
        const long n = small(rng);
        const long k = small(rng);
        env.vars["n"] = n;
        env.vars["k"] = k;
        CHECK(eval("S(n,k)", env) == Rational(ctx.stirling2(n, k)));
        CHECK(eval("s(n,k)", env) == Rational(ctx.stirling1(n, k)));
        CHECK(eval("C(n,k)", env) == Rational(binomial(n, k)));
        CHECK(eval("fact(n)", env) == Rational(ctx.factorial(n)));
        CHECK(eval("H(n)", env) == ctx.harmonic(n));
        CHECK(eval("h(k,n)", env) == ctx.hyperharmonic(k, n));
        CHECK(eval("B(n)", env) == ctx.bernoulli(n));
        CHECK(eval("Bplus(n)", env) == ctx.bernoulli_plus(n));
        CHECK(eval("E(n)", env) == ctx.euler_number(n));
        CHECK(eval("D(n)", env) == Rational(ctx.derangement(n)));
        CHECK(eval("bell(n)", env) == Rational(ctx.bell(n)));
        CHECK(eval("fubini(n)", env) == Rational(ctx.fubini(n)));
        CHECK(eval("M(n,k)", env) == Rational(ctx.moment(n, k)));
        CHECK(eval("powsum(k,n)", env) == Rational(ctx.power_sum(k, n)));
    }
    CHECK(builtin_functions().size() == 14);
}
