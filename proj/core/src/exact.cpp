#include <stirlingkit/exact.hpp>

#include <cassert>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>

namespace stirlingkit
{

std::string to_string(const Integer &value)
{
    return value.get_str();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    assert(is_canonical());
}

Rational::Rational(const Integer &numerator, const Integer &denominator)
{
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace
{

bool parse_integer_token(std::string_view token, Integer &out)
{
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        return false;
    }
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return out.set_str(std::string(token), 10) == 0;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer_token(text, num)) {
            throw DomainError("malformed rational literal '" + std::string(text) + "'");
        }
    } else {
        const auto den_text = text.substr(slash + 1);
        if (!parse_integer_token(text.substr(0, slash), num) || den_text.starts_with('-')
            || !parse_integer_token(den_text, den)) {
            throw DomainError("malformed rational literal '" + std::string(text) + "'");
        }
    }
    return Rational(num, den);
}

Rational Rational::from_double(double value)
{
    if (!std::isfinite(value)) {
        throw DomainError("cannot convert a non-finite double to a rational");
    }
    return Rational(mpq_class(value));
}

Integer Rational::to_integer() const
{
    if (!is_integer()) {
        throw DomainError("expected an integer, got " + to_string());
    }
    return value_.get_num();
}

long Rational::to_long() const
{
    const Integer n = to_integer();
    if (!n.fits_slong_p()) {
        throw DomainError("integer " + n.get_str() + " is out of range");
    }
    return n.get_si();
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

Rational &Rational::operator+=(const Rational &rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

bool Rational::is_canonical() const
{
    const auto &den = value_.get_den();
    if (sgn(den) <= 0) {
        return false;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), value_.get_num().get_mpz_t(), den.get_mpz_t());
    return g == 1;
}

std::ostream &operator<<(std::ostream &os, const Rational &value)
{
    return os << value.to_string();
}

Rational abs(const Rational &value)
{
    return value.sign() < 0 ? -value : value;
}

Integer factorial(long n)
{
    if (n < 0) {
        throw DomainError("factorial of a negative integer");
    }
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    if (n >= 0) {
        if (k > n) {
            return 0;
        }
        Integer out;
        mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return out;
    }
    // C(n, k) = (-1)^k C(k - n - 1, k) for negative n.
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return alternating_sign(k) < 0 ? Integer(-out) : out;
}

Rational binomial(const Rational &x, long k)
{
    if (k < 0) {
        return 0;
    }
    Rational out = 1;
    for (long i = 0; i < k; ++i) {
        out *= x - Rational(i);
        out /= Rational(i + 1);
    }
    return out;
}

Rational int_pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        throw DomainError("negative exponent in int_pow");
    }
    Integer num;
    Integer den;
    const auto e = static_cast<unsigned long>(exponent);
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), e);
    // Powers of coprime values stay coprime; 0^0 = 1 falls out of mpz_pow_ui.
    return Rational(num, den);
}

} // namespace stirlingkit
