#include <stirlingkit/transform.hpp>

#include <stirlingkit/seq.hpp>

namespace stirlingkit
{

Sequence::Sequence(std::vector<Rational> values) : values_(std::move(values))
{
    if (values_.empty()) {
        throw DomainError("Sequence must be nonempty");
    }
}

Sequence stirling_transform(const SeqContext &ctx, const Sequence &a)
{
    std::vector<Rational> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        const long ln = static_cast<long>(n);
        Rational acc = 0;
        for (long k = 0; k <= ln; ++k) {
            if (!a[k].is_zero()) {
                acc += Rational(ctx.stirling2(ln, k)) * a[k];
            }
        }
        out[n] = acc;
    }
    return Sequence(std::move(out));
}

Sequence stirling_inverse(const SeqContext &ctx, const Sequence &b)
{
    std::vector<Rational> out(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        const long ln = static_cast<long>(n);
        Rational acc = 0;
        for (long k = 0; k <= ln; ++k) {
            if (!b[k].is_zero()) {
                acc += Rational(ctx.stirling1(ln, k)) * b[k];
            }
        }
        out[n] = acc;
    }
    return Sequence(std::move(out));
}

Sequence binomial_transform(const Sequence &a, BinomialSign sign)
{
    std::vector<Rational> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        const long ln = static_cast<long>(n);
        Rational acc = 0;
        for (long k = 0; k <= ln; ++k) {
            Rational term = Rational(binomial(ln, k)) * a[k];
            if (sign == BinomialSign::alternating && alternating_sign(k) < 0) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out[n] = acc;
    }
    return Sequence(std::move(out));
}

Sequence weighted_stirling_transform(const SeqContext &ctx, const Sequence &a, const Rational &lambda,
                                     const Rational &mu, StirlingKind kind)
{
    const long len = static_cast<long>(a.size());
    std::vector<Rational> lambda_pow(len);
    std::vector<Rational> mu_pow(len);
    for (long i = 0; i < len; ++i) {
        lambda_pow[i] = int_pow(lambda, i);
        mu_pow[i] = int_pow(mu, i);
    }
    std::vector<Rational> out(len);
    for (long n = 0; n < len; ++n) {
        Rational acc = 0;
        for (long k = 0; k <= n; ++k) {
            if (a[k].is_zero()) {
                continue;
            }
            const Integer c = kind == StirlingKind::second ? ctx.stirling2(n, k) : ctx.stirling1(n, k);
            acc += Rational(c) * lambda_pow[n - k] * mu_pow[k] * a[k];
        }
        out[n] = acc;
    }
    return Sequence(std::move(out));
}

} // namespace stirlingkit
