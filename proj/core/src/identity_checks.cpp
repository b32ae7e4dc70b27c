#include "identity_checks.hpp"

#include <algorithm>
#include <sstream>

#include <stirlingkit/egf.hpp>
#include <stirlingkit/transform.hpp>

namespace stirlingkit::detail
{

// ---------------------------------------------------------------------------
// Recorder

void Recorder::scalar(Params params, const Rational &lhs, const Rational &rhs)
{
    outcome(std::move(params), lhs == rhs, lhs.to_string(), rhs.to_string());
}

void Recorder::poly(Params params, const Poly &lhs, const Poly &rhs)
{
    outcome(std::move(params), lhs == rhs, lhs.to_string(), rhs.to_string());
}

void Recorder::series(Params params, const std::vector<Rational> &lhs, const std::vector<Rational> &rhs)
{
    outcome(std::move(params), lhs == rhs, series_to_string(lhs), series_to_string(rhs));
}

void Recorder::outcome(Params params, bool ok, std::string lhs, std::string rhs)
{
    ++report_.checked;
    if (!ok) {
        report_.failures.push_back(Failure{std::move(params), std::move(lhs), std::move(rhs)});
    }
}

void Recorder::note(std::string text)
{
    report_.notes.push_back(std::move(text));
}

std::string series_to_string(const std::vector<Rational> &values)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? ", " : "") << values[i];
    }
    os << ']';
    return os.str();
}

namespace
{

std::pair<std::string, std::string> kv(std::string key, long value)
{
    return {std::move(key), std::to_string(value)};
}

std::pair<std::string, std::string> kv(std::string key, std::string value)
{
    return {std::move(key), std::move(value)};
}

Rational frac(long p, long q)
{
    return Rational(Integer(p), Integer(q));
}

Rational sgn(long n)
{
    return Rational(alternating_sign(n));
}

Rational fact(long n)
{
    return Rational(factorial(n));
}

Rational S(const SeqContext &ctx, long n, long k)
{
    return Rational(ctx.stirling2(n, k));
}

Rational s(const SeqContext &ctx, long n, long k)
{
    return Rational(ctx.stirling1(n, k));
}

Rational C(long n, long k)
{
    return Rational(binomial(n, k));
}

// Builds sum_k S(n,k) w(k) x^k coefficientwise from the triangle.
template <typename Weight>
Poly weighted_row_poly(const SeqContext &ctx, long n, Weight w)
{
    std::vector<Rational> coeffs(n + 1);
    for (long k = 0; k <= n; ++k) {
        const Rational sk = S(ctx, n, k);
        if (!sk.is_zero()) {
            coeffs[k] = sk * w(k);
        }
    }
    return Poly(std::move(coeffs));
}

// phi_0 .. phi_n from the recurrence, independent of the triangle.
std::vector<Poly> phis(long n)
{
    return exp_polys(std::max(n, 0L));
}

std::vector<Poly> binom_polys(long n)
{
    std::vector<Poly> out;
    for (long k = 0; k <= n; ++k) {
        out.push_back(binom_poly(k));
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Inversion

void check_orth(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        for (long j = 0; j <= n; ++j) {
            Rational second_first = 0;
            Rational first_second = 0;
            for (long k = j; k <= n; ++k) {
                second_first += S(ctx, n, k) * s(ctx, k, j);
                first_second += s(ctx, n, k) * S(ctx, k, j);
            }
            const Rational delta = n == j ? 1 : 0;
            rec.scalar({kv("n", n), kv("j", j), kv("sum", "S(n,k)s(k,j)")}, second_first, delta);
            rec.scalar({kv("n", n), kv("j", j), kv("sum", "s(n,k)S(k,j)")}, first_second, delta);
        }
    }
}

// ---------------------------------------------------------------------------
// Hyperharmonic numbers

void check_t1(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long p = r.p_min; p <= r.p_hi; ++p) {
        for (long n = std::max(r.n_min, 1L); n <= r.n_hi; ++n) {
            Rational lhs = 0;
            for (long k = 1; k <= n; ++k) {
                lhs += S(ctx, n, k) * sgn(k) * fact(k) * ctx.hyperharmonic(p, k);
            }
            const Rational rhs = sgn(n) * Rational(n) * int_pow(Rational(p), n - 1);
            rec.scalar({kv("p", p), kv("n", n)}, lhs, rhs);
        }
    }
    if (r.p_min == 0 && r.p_hi >= 0) {
        rec.note("p = 0 instances depend on the conventions h_n^(0) = 1/n and 0^0 = 1");
    }
}

void check_t1b(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        Rational lhs = 0;
        for (long k = 0; k <= n; ++k) {
            lhs += S(ctx, n, k) * sgn(k) * fact(k) * ctx.harmonic(k);
        }
        rec.scalar({kv("n", n)}, lhs, sgn(n) * Rational(n));
    }
}

void check_c2(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long p = r.p_min; p <= r.p_hi; ++p) {
        // b_k = (-1)^k k p^{k-1}; the k = 0 term carries the factor k = 0.
        std::vector<Rational> b(r.n_hi + 1);
        for (long k = 1; k <= r.n_hi; ++k) {
            b[k] = sgn(k) * Rational(k) * int_pow(Rational(p), k - 1);
        }
        const Sequence inverse = stirling_inverse(ctx, Sequence(std::move(b)));
        for (long n = r.n_min; n <= r.n_hi; ++n) {
            const Rational rhs = sgn(n) * fact(n) * ctx.hyperharmonic(p, n);
            rec.scalar({kv("p", p), kv("n", n)}, inverse[n], rhs);
        }
    }
    if (r.p_min == 0 && r.p_hi >= 0) {
        rec.note("p = 0 instances depend on the conventions h_n^(0) = 1/n and 0^0 = 1");
    }
}

// ---------------------------------------------------------------------------
// Euler polynomials

namespace
{

// sum_{j<=k} C(x,j) w(k-j)
template <typename Weight>
Poly binomial_tail(const std::vector<Poly> &binoms, long k, Weight w)
{
    Poly acc;
    for (long j = 0; j <= k; ++j) {
        acc += binoms[j] * w(k - j);
    }
    return acc;
}

} // namespace

void check_t3a(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto euler = euler_polys(r.poly_n_hi);
    const auto binoms = binom_polys(r.poly_n_hi);
    const Rational minus_half = frac(-1, 2);
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        Poly lhs;
        for (long k = 0; k <= n; ++k) {
            lhs += euler[k] * s(ctx, n, k);
        }
        const Poly rhs = binomial_tail(binoms, n, [&](long e) { return int_pow(minus_half, e); }) * fact(n);
        rec.poly({kv("n", n)}, lhs, rhs);
    }
}

void check_t3b(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto euler = euler_polys(r.poly_n_hi);
    const auto binoms = binom_polys(r.poly_n_hi);
    const Rational minus_half = frac(-1, 2);
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        Poly rhs;
        for (long k = 0; k <= n; ++k) {
            const Rational sk = S(ctx, n, k);
            if (sk.is_zero()) {
                continue;
            }
            rhs += binomial_tail(binoms, k, [&](long e) { return int_pow(minus_half, e); }) * (sk * fact(k));
        }
        rec.poly({kv("n", n)}, euler[n], rhs);
    }
}

void check_e9(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        Rational rhs = 0;
        for (long k = 0; k <= n; ++k) {
            const Rational sk = S(ctx, n, k);
            if (sk.is_zero()) {
                continue;
            }
            Rational inner = 0;
            for (long j = 0; j <= k; ++j) {
                inner += C(2 * j, j) / (int_pow(Rational(2), k + j) * Rational(1 - 2 * j));
            }
            rhs += sk * fact(k) * sgn(k) * inner;
        }
        rec.scalar({kv("n", n)}, ctx.euler_number(n), rhs);
    }
    rec.note("Euler numbers are taken as E_n(1/2), so E_2 = -1/4 rather than the integer -1");
}

void check_cbh(const SeqContext &, const Range &r, Recorder &rec)
{
    const Rational half = frac(1, 2);
    for (long j = r.n_min; j <= r.n_hi; ++j) {
        const Rational lhs = binom_poly(j).eval(half);
        const Rational rhs =
            C(2 * j, j) * sgn(j + 1) / (int_pow(Rational(2), 2 * j) * Rational(2 * j - 1));
        rec.scalar({kv("j", j)}, lhs, rhs);
    }
}

// ---------------------------------------------------------------------------
// Bernoulli polynomials and numbers

void check_t5a(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto binoms = binom_polys(r.poly_n_hi);
    std::vector<Poly> bern;
    for (long k = 0; k <= r.poly_n_hi; ++k) {
        bern.push_back(bernoulli_poly(ctx, k));
    }
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        Poly lhs;
        for (long k = 0; k <= n; ++k) {
            lhs += bern[k] * s(ctx, n, k);
        }
        const Poly rhs =
            binomial_tail(binoms, n, [](long e) { return sgn(e) / Rational(e + 1); }) * fact(n);
        rec.poly({kv("n", n)}, lhs, rhs);
    }
}

void check_t5b(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto binoms = binom_polys(r.poly_n_hi);
    const auto bern = bernoulli_polys_by_series(r.poly_n_hi);
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        Poly rhs;
        for (long k = 0; k <= n; ++k) {
            const Rational sk = S(ctx, n, k);
            if (sk.is_zero()) {
                continue;
            }
            rhs += binomial_tail(binoms, k, [](long e) { return sgn(e) / Rational(e + 1); }) * (sk * fact(k));
        }
        rec.poly({kv("n", n)}, bern[n], rhs);
    }
}

void check_t5c(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        Rational rhs = 0;
        for (long k = 0; k <= n; ++k) {
            rhs += S(ctx, n, k) * fact(k) * sgn(k) / Rational(k + 1);
        }
        rec.scalar({kv("n", n)}, ctx.bernoulli(n), rhs);
    }
}

void check_t6a(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = std::max(r.n_min, 1L); n <= r.n_hi; ++n) {
        Rational lhs = 0;
        for (long k = 1; k <= n; ++k) {
            lhs += s(ctx, n, k) * ctx.bernoulli(k - 1);
        }
        rec.scalar({kv("n", n)}, lhs, sgn(n - 1) * fact(n - 1) * ctx.harmonic(n));
    }
}

void check_t6b(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = std::max(r.n_min, 1L); n <= r.n_hi; ++n) {
        Rational rhs = 0;
        for (long k = 1; k <= n; ++k) {
            rhs += S(ctx, n, k) * sgn(k - 1) * fact(k - 1) * ctx.harmonic(k);
        }
        rec.scalar({kv("n", n)}, ctx.bernoulli(n - 1), rhs);
    }
}

void check_t6c(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = std::max(r.n_min, 1L); n <= r.n_hi; ++n) {
        Rational lhs = 0;
        for (long k = 1; k <= n; ++k) {
            lhs += s(ctx, n, k) * ctx.bernoulli(k - 1) * sgn(k);
        }
        rec.scalar({kv("n", n)}, lhs, sgn(n) * fact(n) / Rational(n * n));
    }
}

void check_t6d(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = std::max(r.n_min, 1L); n <= r.n_hi; ++n) {
        Rational sum = 0;
        for (long k = 1; k <= n; ++k) {
            sum += S(ctx, n, k) * fact(k) / Rational(k * k) * sgn(k);
        }
        rec.scalar({kv("n", n)}, ctx.bernoulli(n - 1), sgn(n) * sum);
    }
}

// ---------------------------------------------------------------------------
// Stirling transforms of powers

void check_t7(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    auto b = [&](long i) { return Rational(ctx.bell(i)); };
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        for (long p = r.p_min; p <= r.p_hi; ++p) {
            // The recurrence-driven evaluator against the direct sum.
            rec.scalar({kv("n", n), kv("p", p), kv("form", "recurrence")}, Rational(ctx.moment(n, p)),
                       Rational(ctx.moment_direct(n, p)));
            // The recurrence itself, with every term taken from direct sums.
            Rational rhs = Rational(ctx.moment_direct(n + 1, p));
            for (long j = 0; j <= p; ++j) {
                rhs -= C(p, j) * Rational(ctx.moment_direct(n, j));
            }
            rec.scalar({kv("n", n), kv("p", p), kv("form", "step")}, Rational(ctx.moment_direct(n, p + 1)), rhs);
        }
        // Closed forms in Bell numbers for p = 0..5.
        const Rational closed[] = {
            b(n),
            b(n + 1) - b(n),
            b(n + 2) - Rational(2) * b(n + 1),
            b(n + 3) - Rational(3) * b(n + 2) + b(n),
            b(n + 4) - Rational(4) * b(n + 3) + Rational(4) * b(n + 1) + b(n),
            b(n + 5) - Rational(5) * b(n + 4) + Rational(10) * b(n + 2) + Rational(5) * b(n + 1)
                - Rational(2) * b(n),
        };
        for (long p = 0; p <= 5; ++p) {
            rec.scalar({kv("n", n), kv("p", p), kv("form", "bell")}, Rational(ctx.moment_direct(n, p)),
                       closed[p]);
        }
    }
}

void check_l8(const SeqContext &, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto phi = phis(r.poly_n_hi + 1);
    const Poly x = Poly::x();
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        for (long p = r.p_min; p <= r.p_hi; ++p) {
            const Poly lhs = xd_apply(phi[n], p + 1);
            Poly sum;
            for (long j = 0; j <= p; ++j) {
                sum += xd_apply(phi[n], j) * C(p, j);
            }
            rec.poly({kv("n", n), kv("p", p)}, lhs, xd_apply(phi[n + 1], p) - x * sum);
        }
    }
}

void check_e15(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto phi = phis(r.poly_n_hi + 2);
    const Poly x = Poly::x();
    const Poly x2_minus_x = Poly(std::vector<Rational>{0, -1, 1});
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        const Poly first = weighted_row_poly(ctx, n, [](long k) { return Rational(k); });
        rec.poly({kv("n", n), kv("line", 1)}, first, phi[n + 1] - x * phi[n]);

        const Poly second = weighted_row_poly(ctx, n, [](long k) { return Rational(k * k); });
        const Poly rhs = phi[n + 2] - Rational(2) * (x * phi[n + 1]) + x2_minus_x * phi[n];
        rec.poly({kv("n", n), kv("line", 2)}, second, rhs);

        // The coefficient of phi_{n+1} printed without its x factor still
        // agrees at x = 1.
        const Rational one = 1;
        const Rational printed = phi[n + 2].eval(one) - Rational(2) * phi[n + 1].eval(one);
        rec.scalar({kv("n", n), kv("line", "2 at x=1")}, second.eval(one), printed);
    }
    rec.note("second line is checked as phi_{n+2} - 2x phi_{n+1} + (x^2 - x) phi_n; "
             "the form without the x on phi_{n+1} only holds at x = 1");
}

// ---------------------------------------------------------------------------
// Reciprocals and power sums

void check_p9(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const auto phi = phis(r.p_hi + 1);
    const Egf exp_minus = egf_scale_argument(egf_elementary(ElementaryKind::exp, order), Rational(-1));
    for (long p = r.p_min; p <= r.p_hi; ++p) {
        const Poly lhs = weighted_row_poly(ctx, p + 1, [](long k) { return k == 0 ? Rational(0) : frac(1, k); });
        std::vector<Rational> lhs_egf(order + 1);
        for (long n = 0; n <= order; ++n) {
            lhs_egf[n] = lhs.coefficient(n) * fact(n);
        }
        std::vector<Rational> sums(order + 1);
        for (long n = 0; n <= order; ++n) {
            sums[n] = Rational(ctx.power_sum(p, n));
        }
        const Egf rhs = egf_mul(exp_minus, Egf(std::move(sums)));
        rec.series({kv("p", p), kv("form", "series")}, lhs_egf, rhs.coefficients());

        // Differentiating and multiplying by x gives phi_{p+1}.
        rec.poly({kv("p", p), kv("form", "x d/dx")}, Poly::x() * lhs.derivative(), phi[p + 1]);
    }
}

namespace
{

Rational row_reciprocal_sum(const SeqContext &ctx, long n, long power)
{
    Rational acc = 0;
    for (long k = 1; k <= n; ++k) {
        acc += S(ctx, n, k) / int_pow(Rational(k), power);
    }
    return acc;
}

} // namespace

void check_c10(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long lo = std::max(r.n_min, 2L);
    for (long n = lo; n <= r.n_hi; ++n) {
        Rational rhs = 0;
        for (long k = 1; k <= n; ++k) {
            rhs += C(n, k) * ctx.bernoulli(n - k) * Rational(ctx.bell(k));
        }
        rhs = Rational(ctx.bell(n - 1)) + rhs / Rational(n);
        rec.scalar({kv("n", n), kv("x", "1")}, row_reciprocal_sum(ctx, n, 1), rhs);
    }
    if (r.poly_n_hi < lo) {
        return;
    }
    const auto phi = phis(r.poly_n_hi);
    for (long n = lo; n <= r.poly_n_hi; ++n) {
        const Poly lhs = weighted_row_poly(ctx, n, [](long k) { return k == 0 ? Rational(0) : frac(1, k); });
        Poly sum;
        for (long k = 1; k <= n; ++k) {
            sum += phi[k] * (C(n, k) * ctx.bernoulli(n - k));
        }
        rec.poly({kv("n", n), kv("x", "symbolic")}, lhs, phi[n - 1] + sum * frac(1, n));
    }
}

void check_e21(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long lo = std::max(r.n_min, 1L);
    for (long n = lo; n <= r.n_hi; ++n) {
        Rational rhs = 0;
        for (long k = 1; k <= n; ++k) {
            rhs += C(n, k) * ctx.bernoulli_plus(n - k) * Rational(ctx.bell(k));
        }
        rec.scalar({kv("n", n), kv("x", "1")}, row_reciprocal_sum(ctx, n, 1), rhs / Rational(n));
    }
    if (r.poly_n_hi < lo) {
        return;
    }
    const auto phi = phis(r.poly_n_hi);
    for (long n = lo; n <= r.poly_n_hi; ++n) {
        const Poly lhs = weighted_row_poly(ctx, n, [](long k) { return k == 0 ? Rational(0) : frac(1, k); });
        Poly sum;
        for (long k = 1; k <= n; ++k) {
            sum += phi[k] * (C(n, k) * ctx.bernoulli_plus(n - k));
        }
        rec.poly({kv("n", n), kv("x", "symbolic")}, lhs, sum * frac(1, n));
    }
}

void check_e22(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long lo = std::max(r.n_min, 1L);
    // Nested B+ double sum with the inner values supplied by `inner(m)`.
    auto nested = [&](long n, auto inner) {
        using T = decltype(inner(1L));
        T outer{};
        for (long k = 1; k <= n; ++k) {
            T acc{};
            for (long m = 1; m <= k; ++m) {
                acc += inner(m) * (C(k, m) * ctx.bernoulli_plus(k - m));
            }
            outer += acc * (C(n, k) * ctx.bernoulli_plus(n - k) / Rational(k));
        }
        return outer * frac(1, n);
    };
    for (long n = lo; n <= r.n_hi; ++n) {
        const Rational rhs = nested(n, [&](long m) { return Rational(ctx.bell(m)); });
        rec.scalar({kv("n", n), kv("x", "1")}, row_reciprocal_sum(ctx, n, 2), rhs);
    }
    if (r.poly_n_hi < lo) {
        return;
    }
    const auto phi = phis(r.poly_n_hi);
    auto over_k = [](long k) { return k == 0 ? Rational(0) : frac(1, k); };
    for (long n = lo; n <= r.poly_n_hi; ++n) {
        const Poly lhs =
            weighted_row_poly(ctx, n, [](long k) { return k == 0 ? Rational(0) : frac(1, k * k); });

        Poly integrated;
        Poly stirling_form;
        for (long k = 1; k <= n; ++k) {
            const Rational w = C(n, k) * ctx.bernoulli_plus(n - k);
            integrated += phi[k].divide_by_x().integral() * w;
            stirling_form += weighted_row_poly(ctx, k, over_k) * w;
        }
        rec.poly({kv("n", n), kv("form", "integral")}, lhs, integrated * frac(1, n));
        rec.poly({kv("n", n), kv("form", "inner Stirling sum")}, lhs, stirling_form * frac(1, n));
        rec.poly({kv("n", n), kv("form", "nested")}, lhs, nested(n, [&](long m) { return phi[m]; }));
    }
}

// ---------------------------------------------------------------------------
// Geometric polynomials and factorials

void check_p11(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long lo = std::max(r.n_min, 1L);
    const Poly x_plus_1 = Poly(std::vector<Rational>{1, 1});
    for (long n = lo; n <= r.poly_n_hi; ++n) {
        const Poly lhs = weighted_row_poly(ctx, n, [](long k) { return k == 0 ? Rational(0) : fact(k - 1); });
        const Poly rhs = n == 1 ? Poly::x() : x_plus_1 * geom_poly(ctx, n - 1);
        rec.poly({kv("n", n), kv("form", "(x+1) omega_{n-1}")}, lhs, rhs);
        rec.poly({kv("n", n), kv("form", "integral")}, lhs, geom_poly(ctx, n).divide_by_x().integral());
    }
}

void check_c12(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long lo = std::max(r.n_min, 1L);
    const Poly x = Poly::x();
    const Poly x_plus_x2 = Poly(std::vector<Rational>{0, 1, 1});
    for (long n = lo; n <= r.poly_n_hi; ++n) {
        const Poly prev = geom_poly(ctx, n - 1);
        rec.poly({kv("n", n)}, geom_poly(ctx, n), x * prev + x_plus_x2 * prev.derivative());
    }
}

void check_c13(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = std::max(r.n_min, 1L); n <= r.n_hi; ++n) {
        Rational plain = 0;
        Rational alternating = 0;
        for (long k = 1; k <= n; ++k) {
            const Rational term = S(ctx, n, k) * fact(k - 1);
            plain += term;
            alternating += term * sgn(k);
        }
        const Rational plain_rhs = n == 1 ? Rational(1) : Rational(2) * Rational(ctx.fubini(n - 1));
        const Rational alternating_rhs = n == 1 ? Rational(-1) : Rational(0);
        rec.scalar({kv("n", n), kv("sign", "plain")}, plain, plain_rhs);
        rec.scalar({kv("n", n), kv("sign", "alternating")}, alternating, alternating_rhs);
    }
}

void check_e30(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const Rational two = 2;
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        // Smallest K with (1 + 1/K)^n < 2 and K^n / 2^K * C < eps, where
        // C = 1 / (1 - (1 + 1/K)^n / 2) bounds the geometric tail.
        long K = 1;
        Rational bound;
        for (;; ++K) {
            const Rational ratio = int_pow(Rational(K + 1) / Rational(K), n) / two;
            if (ratio >= Rational(1)) {
                continue;
            }
            bound = int_pow(Rational(K), n) / int_pow(two, K) / (Rational(1) - ratio);
            if (bound < r.eps) {
                break;
            }
        }
        Rational partial = 0;
        for (long k = 0; k <= K; ++k) {
            partial += int_pow(Rational(k), n) / int_pow(two, k + 1);
        }
        const Rational target = Rational(ctx.fubini(n));
        const Rational gap = target - partial;
        // The omitted tail is positive and below the bound, hence below eps.
        const bool ok = gap.sign() >= 0 && gap <= bound && abs(gap) < r.eps;
        rec.outcome({kv("n", n), kv("K", K)}, ok, partial.to_string(), target.to_string());
    }
    rec.note("partial sums are exact; only the truncation at K is approximate");
}

void check_c14(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long n = std::max(r.n_min, 2L); n <= r.n_hi; ++n) {
        Rational lhs = 0;
        for (long k = 2; k <= n; ++k) {
            lhs += S(ctx, n, k) * fact(k - 2) * sgn(k);
        }
        rec.scalar({kv("n", n), kv("form", "sum")}, lhs, Rational(n - 1));
    }
    // The same values as coefficients of f(e^t - 1) with
    // f(t) = sum_{n>=2} (n-2)! (-1)^n t^n / n!.
    std::vector<Rational> f(r.order + 1);
    for (long n = 2; n <= r.order; ++n) {
        f[n] = fact(n - 2) * sgn(n);
    }
    const auto composed = stirling_substitution_by_composition(Egf(std::move(f)), 1, 1);
    std::vector<Rational> expected(r.order + 1);
    for (long n = 2; n <= r.order; ++n) {
        expected[n] = Rational(n - 1);
    }
    rec.series({kv("order", r.order), kv("form", "composition")}, composed, expected);
}

// ---------------------------------------------------------------------------
// Derangements

void check_t15(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    std::vector<Rational> bells(r.n_hi + 1);
    for (long k = 0; k <= r.n_hi; ++k) {
        bells[k] = Rational(ctx.bell(k));
    }
    const Sequence alt = binomial_transform(Sequence(bells), BinomialSign::alternating);
    for (long n = r.n_min; n <= r.n_hi; ++n) {
        Rational stirling_side = 0;
        for (long k = 0; k <= n; ++k) {
            stirling_side += S(ctx, n, k) * sgn(k) * Rational(ctx.derangement(k));
        }
        stirling_side *= sgn(n);
        Rational partial_side = 1;
        for (long j = 0; j < n; ++j) {
            partial_side += sgn(j + 1) * bells[j];
        }
        if (stirling_side != alt[n]) {
            rec.outcome({kv("n", n), kv("pair", "stirling vs binomial")}, false, stirling_side.to_string(),
                        alt[n].to_string());
        } else {
            rec.outcome({kv("n", n), kv("pair", "stirling vs partial sum")}, stirling_side == partial_side,
                        stirling_side.to_string(), partial_side.to_string());
        }
    }
}

void check_l16(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    if (r.poly_n_hi < r.n_min) {
        return;
    }
    const auto phi = phis(r.poly_n_hi + 1);
    const Poly x = Poly::x();
    for (long n = r.n_min; n <= r.poly_n_hi; ++n) {
        Poly lhs;
        Poly shifted;
        for (long k = 0; k <= n; ++k) {
            lhs += exp_poly_from_triangle(ctx, k) * (C(n, k) * sgn(k));
            shifted += exp_poly_from_triangle(ctx, k + 1) * (C(n, k) * sgn(k));
        }
        Poly tail;
        for (long j = 0; j < n; ++j) {
            tail += phi[j] * sgn(j + 1);
        }
        rec.poly({kv("n", n), kv("form", "alternating")}, lhs, Poly::constant(1) + x * tail);
        rec.poly({kv("n", n), kv("form", "shifted")}, shifted, x * phi[n] * sgn(n));
    }
}

// ---------------------------------------------------------------------------
// Generating functions

void check_gf6(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const Egf minus_log = -egf_elementary(ElementaryKind::log1p, order);
    const Egf expm1 = egf_elementary(ElementaryKind::expm1, order);
    for (long p = r.p_min; p <= r.p_hi; ++p) {
        const Egf f = egf_mul(minus_log, egf_elementary(Elementary{ElementaryKind::pow1p, Rational(-p)}, order));
        std::vector<Rational> expected(order + 1);
        for (long n = 0; n <= order; ++n) {
            expected[n] = sgn(n) * fact(n) * ctx.hyperharmonic(p, n);
        }
        rec.series({kv("p", p), kv("form", "coefficients")}, f.coefficients(), expected);

        // f(e^t - 1) = -t e^{-pt}
        std::vector<Rational> closed(order + 1);
        for (long n = 1; n <= order; ++n) {
            closed[n] = -Rational(n) * int_pow(Rational(-p), n - 1);
        }
        rec.series({kv("p", p), kv("form", "composed")}, egf_compose(f, expm1).coefficients(), closed);
    }
}

void check_dil(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const Egf dilog = egf_elementary(ElementaryKind::dilog, order);

    // -t/(1-t) has EGF coefficients -n! for n >= 1.
    std::vector<Rational> g(order + 1);
    for (long n = 1; n <= order; ++n) {
        g[n] = -fact(n);
    }
    std::vector<Rational> harmonic_side(order + 1);
    for (long n = 1; n <= order; ++n) {
        harmonic_side[n] = -fact(n - 1) * ctx.harmonic(n);
    }
    rec.series({kv("form", "Li2(-t/(1-t))")}, egf_compose(dilog, Egf(std::move(g))).coefficients(),
               harmonic_side);

    // 1 - e^{-t} has EGF coefficients (-1)^{n+1} for n >= 1.
    std::vector<Rational> h(order + 1);
    for (long n = 1; n <= order; ++n) {
        h[n] = sgn(n + 1);
    }
    const Egf li2_bern = egf_compose(dilog, Egf(std::move(h)));
    std::vector<Rational> shifted_bernoulli(order + 1);
    for (long n = 1; n <= order; ++n) {
        shifted_bernoulli[n] = ctx.bernoulli(n - 1);
    }
    rec.series({kv("form", "Li2(1-e^-t)")}, li2_bern.coefficients(), shifted_bernoulli);

    // Integrating the Bernoulli generating function lands on the same series.
    std::vector<Rational> ones_over(order + 1);
    for (long n = 0; n <= order; ++n) {
        ones_over[n] = frac(1, n + 1);
    }
    const Egf bernoulli_egf = egf_reciprocal(Egf(std::move(ones_over)));
    rec.series({kv("form", "integrated Bernoulli")},
               egf_integrate(bernoulli_egf.truncated(order - 1)).coefficients(), shifted_bernoulli);

    rec.series({kv("form", "ln(1-t) substitution")}, log_substitution_by_composition(li2_bern, -1, -1),
               harmonic_side);

    std::vector<Rational> li2_minus_t(order + 1);
    for (long n = 1; n <= order; ++n) {
        li2_minus_t[n] = sgn(n) * fact(n) / Rational(n * n);
    }
    rec.series({kv("form", "-ln(1+t) substitution")}, log_substitution_by_composition(li2_bern, 1, -1),
               li2_minus_t);
}

namespace
{

// Deterministic small rationals for the ordinary-series checks.
std::vector<Rational> probe_sequence(long order, long salt)
{
    std::vector<Rational> a(order + 1);
    for (long k = 0; k <= order; ++k) {
        a[k] = Rational(Integer(k * k - 3 * k + salt), Integer(k + 2));
    }
    return a;
}

} // namespace

void check_l4(const SeqContext &, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const Rational lambdas[] = {1, 2, frac(-1, 2), frac(3, 5)};
    for (long salt : {1L, 4L}) {
        const PowerSeries g(probe_sequence(order, salt));
        for (const auto &lambda : lambdas) {
            for (int sign : {1, -1}) {
                // 1 -/+ lambda t
                std::vector<Rational> lin(order + 1);
                lin[0] = 1;
                if (order >= 1) {
                    lin[1] = -Rational(sign) * lambda;
                }
                const auto lhs = (g * PowerSeries(std::move(lin)).reciprocal()).coefficients();
                std::vector<Rational> rhs(order + 1);
                for (long n = 0; n <= order; ++n) {
                    for (long k = 0; k <= n; ++k) {
                        rhs[n] += g[k] * int_pow(Rational(sign) * lambda, n - k);
                    }
                }
                rec.series({kv("salt", salt), kv("lambda", lambda.to_string()),
                            kv("form", sign > 0 ? "1/(1-lambda t)" : "1/(1+lambda t)")},
                           lhs, rhs);
            }
        }
        // ln(1+t)/t from the log1p series shifted down one place.
        const auto log_coeffs = egf_elementary(ElementaryKind::log1p, order + 1).to_ordinary().coefficients();
        const PowerSeries log_over_t(std::vector<Rational>(log_coeffs.begin() + 1, log_coeffs.end()));
        const auto lhs = (log_over_t * g).coefficients();
        std::vector<Rational> rhs(order + 1);
        for (long n = 0; n <= order; ++n) {
            for (long k = 0; k <= n; ++k) {
                rhs[n] += g[k] * sgn(n - k) / Rational(n - k + 1);
            }
        }
        rec.series({kv("salt", salt), kv("form", "ln(1+t)/t")}, lhs, rhs);
    }
}

void check_e18(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    for (long p = r.p_min; p <= r.p_hi; ++p) {
        for (long n = r.n_min; n <= r.n_hi; ++n) {
            rec.scalar({kv("p", p), kv("n", n)}, Rational(ctx.power_sum(p, n)), ctx.faulhaber(p, n));
        }
    }
    if (r.p_min == 0) {
        rec.note("p = 0 drops the 0^0 term that the closed form otherwise counts");
    }
}

void check_bell_egf(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const Egf composed =
        egf_compose(egf_elementary(ElementaryKind::exp, order), egf_elementary(ElementaryKind::expm1, order));
    std::vector<Rational> bells(order + 1);
    for (long n = 0; n <= order; ++n) {
        bells[n] = Rational(ctx.bell(n));
    }
    rec.series({kv("form", "exp(e^t-1)")}, composed.coefficients(), bells);
    const Sequence ones(std::vector<Rational>(order + 1, Rational(1)));
    rec.series({kv("form", "Stirling transform of ones")}, stirling_transform(ctx, ones).values(), bells);
}

void check_derangement_egf(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const Egf product = egf_mul(egf_scale_argument(egf_elementary(ElementaryKind::exp, order), Rational(-1)),
                                egf_elementary(ElementaryKind::geom, order));
    std::vector<Rational> d(order + 1);
    for (long n = 0; n <= order; ++n) {
        d[n] = Rational(ctx.derangement(n));
    }
    rec.series({kv("form", "e^-t/(1-t)")}, product.coefficients(), d);

    // D(-(e^t - 1)) = e^{-t} e^{e^t - 1}
    const auto lhs = stirling_substitution_by_composition(Egf(d), 1, -1);
    std::vector<Rational> bells(order + 1);
    for (long n = 0; n <= order; ++n) {
        bells[n] = Rational(ctx.bell(n));
    }
    const Egf rhs = egf_mul(egf_scale_argument(egf_elementary(ElementaryKind::exp, order), Rational(-1)),
                            Egf(std::move(bells)));
    rec.series({kv("form", "D(1-e^t)")}, lhs, rhs.coefficients());
}

void check_exp_poly_egf(const SeqContext &, const Range &r, Recorder &rec)
{
    const long order = r.order;
    const auto phi = phis(order);
    const Rational xs[] = {1, 2, frac(-1, 2), frac(3, 7)};
    for (const auto &x : xs) {
        const Egf composed = egf_compose(egf_elementary(ElementaryKind::exp, order),
                                         x * egf_elementary(ElementaryKind::expm1, order));
        std::vector<Rational> values(order + 1);
        for (long n = 0; n <= order; ++n) {
            values[n] = phi[n].eval(x);
        }
        rec.series({kv("x", x.to_string())}, composed.coefficients(), values);
    }
}

void check_routes(const SeqContext &ctx, const Range &r, Recorder &rec)
{
    const long order = r.order;
    std::vector<std::pair<std::string, Egf>> functions;

    functions.emplace_back("-ln(1+t)/(1+t)^2",
                           egf_mul(-egf_elementary(ElementaryKind::log1p, order),
                                   egf_elementary(Elementary{ElementaryKind::pow1p, Rational(-2)}, order)));
    {
        const auto euler = euler_polys(order);
        std::vector<Rational> a(order + 1);
        for (long n = 0; n <= order; ++n) {
            a[n] = euler[n].eval(frac(1, 3));
        }
        functions.emplace_back("2e^{xt}/(e^t+1) at x=1/3", Egf(std::move(a)));
    }
    {
        std::vector<Rational> a(order + 1);
        for (long n = 0; n <= order; ++n) {
            a[n] = ctx.bernoulli(n);
        }
        functions.emplace_back("t/(e^t-1)", Egf(std::move(a)));
    }
    {
        std::vector<Rational> a(order + 1);
        for (long n = 0; n <= order; ++n) {
            a[n] = Rational(ctx.derangement(n));
        }
        functions.emplace_back("e^-t/(1-t)", Egf(std::move(a)));
    }
    functions.emplace_back("Li2(t)", egf_elementary(ElementaryKind::dilog, order));
    functions.emplace_back("probe", Egf(probe_sequence(order, 2)));

    const Rational params[] = {-2, -1, 1, 2, frac(1, 2)};
    for (const auto &[name, f] : functions) {
        for (const auto &lambda : params) {
            for (const auto &mu : params) {
                const Sequence a(f.coefficients());
                rec.series({kv("f", name), kv("lambda", lambda.to_string()), kv("mu", mu.to_string()),
                            kv("kind", "second")},
                           stirling_substitution_by_composition(f, lambda, mu),
                           weighted_stirling_transform(ctx, a, lambda, mu, StirlingKind::second).values());
                rec.series({kv("f", name), kv("lambda", lambda.to_string()), kv("mu", mu.to_string()),
                            kv("kind", "first")},
                           log_substitution_by_composition(f, lambda, mu),
                           weighted_stirling_transform(ctx, a, lambda, mu, StirlingKind::first).values());
            }
        }
    }
}

} // namespace stirlingkit::detail
