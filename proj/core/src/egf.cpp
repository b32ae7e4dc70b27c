#include <stirlingkit/egf.hpp>

#include <algorithm>
#include <string>

#include <stirlingkit/seq.hpp>
#include <stirlingkit/transform.hpp>

namespace stirlingkit
{

namespace
{

void require_nonempty(const std::vector<Rational> &coeffs, const char *what)
{
    if (coeffs.empty()) {
        throw DomainError(std::string(what) + ": empty coefficient list");
    }
}

void require_same_order(long a, long b, const char *what)
{
    if (a != b) {
        throw OrderMismatch(std::string(what) + ": order " + std::to_string(a) + " vs "
                            + std::to_string(b));
    }
}

// n! for n = 0..order.
std::vector<Integer> factorials(long order)
{
    std::vector<Integer> out(order + 1);
    out[0] = 1;
    for (long n = 1; n <= order; ++n) {
        out[n] = out[n - 1] * n;
    }
    return out;
}

} // namespace

PowerSeries::PowerSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    require_nonempty(coeffs_, "PowerSeries");
}

PowerSeries PowerSeries::truncated(long order) const
{
    if (order < 0 || order > this->order()) {
        throw DomainError("PowerSeries::truncated: order out of range");
    }
    return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
{
    const long order = std::min(a.order(), b.order());
    std::vector<Rational> out(order + 1);
    for (long i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (long j = 0; i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
{
    const long order = std::min(a.order(), b.order());
    std::vector<Rational> out(order + 1);
    for (long i = 0; i <= order; ++i) {
        out[i] = a[i] + b[i];
    }
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::reciprocal() const
{
    if (coeffs_[0].is_zero()) {
        throw DomainError("reciprocal of a series with zero constant term");
    }
    const Rational inv0 = Rational(1) / coeffs_[0];
    std::vector<Rational> out(coeffs_.size());
    out[0] = inv0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (!coeffs_[k].is_zero()) {
                acc += coeffs_[k] * out[n - k];
            }
        }
        out[n] = -acc * inv0;
    }
    return PowerSeries(std::move(out));
}

Egf PowerSeries::to_egf() const
{
    const auto fact = factorials(order());
    std::vector<Rational> out(coeffs_.size());
    for (long n = 0; n <= order(); ++n) {
        out[n] = coeffs_[n] * Rational(fact[n]);
    }
    return Egf(std::move(out));
}

Egf::Egf(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    require_nonempty(coeffs_, "Egf");
}

Egf Egf::zero(long order)
{
    if (order < 0) {
        throw DomainError("Egf::zero: negative order");
    }
    return Egf(std::vector<Rational>(order + 1));
}

Egf Egf::one(long order)
{
    auto out = zero(order);
    out.coeffs_[0] = 1;
    return out;
}

Egf Egf::truncated(long order) const
{
    if (order < 0 || order > this->order()) {
        throw DomainError("Egf::truncated: order out of range");
    }
    return Egf(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries Egf::to_ordinary() const
{
    const auto fact = factorials(order());
    std::vector<Rational> out(coeffs_.size());
    for (long n = 0; n <= order(); ++n) {
        out[n] = coeffs_[n] / Rational(fact[n]);
    }
    return PowerSeries(std::move(out));
}

Egf Egf::from_ordinary(const PowerSeries &series)
{
    return series.to_egf();
}

Egf Egf::operator-() const
{
    Egf out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Egf operator+(const Egf &a, const Egf &b)
{
    require_same_order(a.order(), b.order(), "Egf addition");
    Egf out = a;
    for (long n = 0; n <= a.order(); ++n) {
        out.coeffs_[n] += b[n];
    }
    return out;
}

Egf operator-(const Egf &a, const Egf &b)
{
    return a + (-b);
}

Egf operator*(const Rational &c, const Egf &f)
{
    Egf out = f;
    for (auto &v : out.coeffs_) {
        v *= c;
    }
    return out;
}

Egf egf_mul(const Egf &f, const Egf &g)
{
    require_same_order(f.order(), g.order(), "egf_mul");
    const long order = f.order();
    std::vector<Rational> out(order + 1);
    for (long n = 0; n <= order; ++n) {
        Rational acc = 0;
        for (long k = 0; k <= n; ++k) {
            if (!f[k].is_zero() && !g[n - k].is_zero()) {
                acc += Rational(binomial(n, k)) * f[k] * g[n - k];
            }
        }
        out[n] = acc;
    }
    return Egf(std::move(out));
}

Egf egf_compose(const Egf &outer, const Egf &inner)
{
    if (!inner[0].is_zero()) {
        throw DomainError("egf_compose: inner series has a nonzero constant term");
    }
    const long order = std::min(outer.order(), inner.order());
    const PowerSeries f = outer.to_ordinary().truncated(order);
    const PowerSeries g = inner.to_ordinary().truncated(order);
    // Horner: f_0 + g (f_1 + g (f_2 + ...)). Since g has no constant term,
    // terms past the order never contribute.
    PowerSeries acc(std::vector<Rational>(order + 1));
    for (long n = order; n >= 0; --n) {
        acc = acc * g;
        std::vector<Rational> c = acc.coefficients();
        c[0] += f[n];
        acc = PowerSeries(std::move(c));
    }
    return acc.to_egf();
}

Egf egf_reciprocal(const Egf &f)
{
    if (f[0].is_zero()) {
        throw DomainError("egf_reciprocal: zero constant term");
    }
    return f.to_ordinary().reciprocal().to_egf();
}

Egf egf_derivative(const Egf &f)
{
    if (f.order() == 0) {
        throw DomainError("egf_derivative: order-0 series has no known derivative terms");
    }
    return Egf(std::vector<Rational>(f.coefficients().begin() + 1, f.coefficients().end()));
}

Egf egf_integrate(const Egf &f)
{
    std::vector<Rational> out;
    out.reserve(f.coefficients().size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), f.coefficients().begin(), f.coefficients().end());
    return Egf(std::move(out));
}

Egf egf_scale_argument(const Egf &f, const Rational &c)
{
    std::vector<Rational> out(f.coefficients().size());
    Rational power = 1;
    for (long n = 0; n <= f.order(); ++n) {
        out[n] = f[n] * power;
        power *= c;
    }
    return Egf(std::move(out));
}

Egf egf_elementary(const Elementary &spec, long order)
{
    if (order < 0) {
        throw DomainError("egf_elementary: negative order");
    }
    std::vector<Rational> a(order + 1);
    switch (spec.kind) {
    case ElementaryKind::exp:
        std::fill(a.begin(), a.end(), Rational(1));
        break;
    case ElementaryKind::expm1:
        std::fill(a.begin() + 1, a.end(), Rational(1));
        break;
    case ElementaryKind::log1p: {
        // ln(1+t) = sum (-1)^{n-1} t^n / n, so a_n = (-1)^{n-1} (n-1)!
        Integer fact = 1;
        for (long n = 1; n <= order; ++n) {
            if (n > 1) {
                fact *= n - 1;
            }
            a[n] = Rational(fact) * Rational(alternating_sign(n - 1));
        }
        break;
    }
    case ElementaryKind::geom: {
        const auto fact = factorials(order);
        for (long n = 0; n <= order; ++n) {
            a[n] = Rational(fact[n]);
        }
        break;
    }
    case ElementaryKind::pow1p: {
        // n! C(x, n) = x(x-1)...(x-n+1)
        Rational falling = 1;
        for (long n = 0; n <= order; ++n) {
            a[n] = falling;
            falling *= spec.param - Rational(n);
        }
        break;
    }
    case ElementaryKind::dilog: {
        // a_n = n!/n^2 = (n-1)!/n
        Integer fact = 1;
        for (long n = 1; n <= order; ++n) {
            if (n > 1) {
                fact *= n - 1;
            }
            a[n] = Rational(fact, Integer(n));
        }
        break;
    }
    case ElementaryKind::monomial:
        if (spec.degree < 0) {
            throw DomainError("egf_elementary: negative monomial degree");
        }
        if (spec.degree <= order) {
            a[spec.degree] = spec.param;
        }
        break;
    }
    return Egf(std::move(a));
}

Egf egf_elementary(std::string_view kind, long order, const Rational &param, long degree)
{
    static constexpr std::pair<std::string_view, ElementaryKind> names[] = {
        {"exp", ElementaryKind::exp},     {"expm1", ElementaryKind::expm1}, {"log1p", ElementaryKind::log1p},
        {"geom", ElementaryKind::geom},   {"pow1p", ElementaryKind::pow1p}, {"dilog", ElementaryKind::dilog},
        {"monomial", ElementaryKind::monomial},
    };
    for (const auto &[name, k] : names) {
        if (name == kind) {
            return egf_elementary(Elementary{k, param, degree}, order);
        }
    }
    throw DomainError("unknown elementary series '" + std::string(kind) + "'");
}

namespace
{

void require_lambda(const Rational &lambda)
{
    if (lambda.is_zero()) {
        throw DomainError("series substitution requires lambda != 0");
    }
}

} // namespace

std::vector<Rational> stirling_substitution_by_composition(const Egf &f, const Rational &lambda,
                                                          const Rational &mu)
{
    require_lambda(lambda);
    // (mu/lambda)(e^{lambda t} - 1) has EGF coefficients mu lambda^{n-1}, n >= 1.
    std::vector<Rational> g(f.order() + 1);
    Rational power = 1;
    for (long n = 1; n <= f.order(); ++n) {
        g[n] = mu * power;
        power *= lambda;
    }
    return egf_compose(f, Egf(std::move(g))).coefficients();
}

std::vector<Rational> log_substitution_by_composition(const Egf &f, const Rational &lambda, const Rational &mu)
{
    require_lambda(lambda);
    // (mu/lambda) ln(1 + lambda t) has EGF coefficients
    // mu lambda^{n-1} (-1)^{n-1} (n-1)!, n >= 1.
    std::vector<Rational> g(f.order() + 1);
    Rational power = 1;
    Integer fact = 1;
    for (long n = 1; n <= f.order(); ++n) {
        if (n > 1) {
            fact *= n - 1;
        }
        g[n] = mu * power * Rational(fact) * Rational(alternating_sign(n - 1));
        power *= lambda;
    }
    return egf_compose(f, Egf(std::move(g))).coefficients();
}

namespace
{

std::vector<Rational> both_routes(const SeqContext &ctx, const Egf &f, const Rational &lambda, const Rational &mu,
                                  StirlingKind kind)
{
    require_lambda(lambda);
    const auto composed = kind == StirlingKind::second ? stirling_substitution_by_composition(f, lambda, mu)
                                                       : log_substitution_by_composition(f, lambda, mu);
    const auto weighted =
        weighted_stirling_transform(ctx, Sequence(f.coefficients()), lambda, mu, kind).values();
    if (composed != weighted) {
        throw std::logic_error("series substitution: composition and weighted-sum routes disagree");
    }
    return composed;
}

} // namespace

std::vector<Rational> stirling_substitution(const SeqContext &ctx, const Egf &f, const Rational &lambda,
                                            const Rational &mu)
{
    return both_routes(ctx, f, lambda, mu, StirlingKind::second);
}

std::vector<Rational> log_substitution(const SeqContext &ctx, const Egf &f, const Rational &lambda,
                                       const Rational &mu)
{
    return both_routes(ctx, f, lambda, mu, StirlingKind::first);
}

} // namespace stirlingkit
