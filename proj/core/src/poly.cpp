#include <stirlingkit/poly.hpp>

#include <algorithm>
#include <sstream>

#include <stirlingkit/egf.hpp>
#include <stirlingkit/seq.hpp>

namespace stirlingkit
{

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Poly Poly::constant(const Rational &c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational &c, std::size_t degree)
{
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return Poly(std::move(coeffs));
}

Rational Poly::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::eval(const Rational &x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return Poly(std::move(out));
}

Poly Poly::integral() const
{
    if (coeffs_.empty()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    }
    return Poly(std::move(out));
}

Poly Poly::divide_by_x() const
{
    if (coeffs_.empty()) {
        return {};
    }
    if (!coeffs_.front().is_zero()) {
        throw DomainError("divide_by_x: nonzero constant term");
    }
    return Poly(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Poly &Poly::operator+=(const Poly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly &Poly::operator*=(const Poly &rhs)
{
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly &Poly::operator*=(const Rational &rhs)
{
    for (auto &c : coeffs_) {
        c *= rhs;
    }
    trim();
    return *this;
}

std::string Poly::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto &c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) {
            os << mag << '*';
        }
        os << 'x';
        if (i > 1) {
            os << '^' << i;
        }
    }
    return os.str();
}

std::vector<Poly> exp_polys(long n)
{
    if (n < 0) {
        throw DomainError("exp_poly: negative index");
    }
    std::vector<Poly> out;
    out.reserve(n + 1);
    out.push_back(Poly::constant(1));
    const Poly x = Poly::x();
    for (long m = 0; m < n; ++m) {
        const Poly &phi = out.back();
        out.push_back(x * (phi.derivative() + phi));
    }
    return out;
}

Poly exp_poly(long n)
{
    return exp_polys(n).back();
}

Poly exp_poly_from_triangle(const SeqContext &ctx, long n)
{
    const auto &row = ctx.stirling2_row(n);
    return Poly(std::vector<Rational>(row.begin(), row.end()));
}

Poly geom_poly(const SeqContext &ctx, long n)
{
    const auto &row = ctx.stirling2_row(n);
    std::vector<Rational> coeffs;
    coeffs.reserve(row.size());
    Integer fact = 1;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) {
            fact *= static_cast<unsigned long>(k);
        }
        coeffs.emplace_back(Integer(row[k] * fact));
    }
    return Poly(std::move(coeffs));
}

Poly bernoulli_poly(const SeqContext &ctx, long n)
{
    if (n < 0) {
        throw DomainError("bernoulli_poly: negative index");
    }
    std::vector<Rational> coeffs(n + 1);
    for (long p = 0; p <= n; ++p) {
        coeffs[n - p] = Rational(binomial(n, p)) * ctx.bernoulli(p);
    }
    return Poly(std::move(coeffs));
}

namespace
{

// Given the EGF coefficients r_k of some r(t), the coefficients of
// e^{xt} r(t) are P_n(x) = sum_k C(n,k) r_{n-k} x^k.
std::vector<Poly> times_exp_xt(const Egf &r)
{
    std::vector<Poly> out;
    out.reserve(r.order() + 1);
    for (long n = 0; n <= r.order(); ++n) {
        std::vector<Rational> coeffs(n + 1);
        for (long k = 0; k <= n; ++k) {
            coeffs[k] = Rational(binomial(n, k)) * r[n - k];
        }
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

} // namespace

std::vector<Poly> bernoulli_polys_by_series(long n)
{
    if (n < 0) {
        throw DomainError("bernoulli_poly: negative index");
    }
    // (e^t - 1)/t = sum t^n/(n+1)!, so its EGF coefficients are 1/(n+1).
    std::vector<Rational> a(n + 1);
    for (long k = 0; k <= n; ++k) {
        a[k] = Rational(Integer(1), Integer(k + 1));
    }
    return times_exp_xt(egf_reciprocal(Egf(std::move(a))));
}

std::vector<Poly> euler_polys(long n)
{
    if (n < 0) {
        throw DomainError("euler_poly: negative index");
    }
    // (e^t + 1)/2 has EGF coefficients 1, 1/2, 1/2, ...
    std::vector<Rational> a(n + 1, Rational(Integer(1), Integer(2)));
    a[0] = 1;
    return times_exp_xt(egf_reciprocal(Egf(std::move(a))));
}

Poly euler_poly(long n)
{
    return euler_polys(n).back();
}

Poly binom_poly(long k)
{
    if (k < 0) {
        throw DomainError("binom_poly: negative index");
    }
    Poly out = Poly::constant(1);
    for (long i = 0; i < k; ++i) {
        out *= Poly(std::vector<Rational>{Rational(-i), Rational(1)});
    }
    return out * Rational(Integer(1), factorial(k));
}

Poly xd_apply(const Poly &a, long times)
{
    if (times < 0) {
        throw DomainError("xd_apply: negative power");
    }
    // x d/dx is diagonal on monomials: x^i -> i x^i.
    std::vector<Rational> coeffs = a.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] *= int_pow(Rational(static_cast<long>(i)), times);
    }
    return Poly(std::move(coeffs));
}

} // namespace stirlingkit
