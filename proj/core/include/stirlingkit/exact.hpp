#ifndef STIRLINGKIT_EXACT_HPP
#define STIRLINGKIT_EXACT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stirlingkit
{

// Raised when an operation is evaluated outside its mathematical domain
// (division by zero, negative factorial, malformed exact literal, ...).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Unbounded signed integer. GMP keeps zero unsigned, so the canonical-zero
// invariant holds for free.
using Integer = mpz_class;

std::string to_string(const Integer &value);

// Exact rational number, always stored in lowest terms with a positive
// denominator. Every constructor and arithmetic result is canonical, so
// equality is structural.
class Rational
{
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) : value_(static_cast<long>(value))
    {
    }

    Rational(const Integer &value) : value_(value) {}

    // Unevaluated Integer arithmetic such as a * b.
    template <class Op>
    Rational(const __gmp_expr<mpz_t, Op> &expr) : value_(Integer(expr))
    {
    }

    // Throws DomainError when the denominator is zero.
    Rational(const Integer &numerator, const Integer &denominator);

    // Accepts "p" or "p/q" (optional leading '-', decimal digits only) and
    // reduces the result, so "2/4" parses to 1/2.
    static Rational parse(std::string_view text);

    // Exact conversion of a finite double (every double is a dyadic rational).
    static Rational from_double(double value);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Throws DomainError unless the value is an integer.
    Integer to_integer() const;

    // Convenience for loop bounds and exponents; throws DomainError unless
    // the value is an integer that fits in a long.
    long to_long() const;

    double to_double() const { return value_.get_d(); }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    Rational operator-() const;

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // Hook for the canonical-form invariant; used by assertions and tests.
    bool is_canonical() const;

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &value);

Rational abs(const Rational &value);

// n! for n >= 0; DomainError for negative n.
Integer factorial(long n);

// C(n, k) for any integer n. Zero when k < 0 or when 0 <= n < k; negative n
// uses the falling-factorial definition n(n-1)...(n-k+1)/k!.
Integer binomial(long n, long k);

// Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k! for a
// rational upper argument; zero when k < 0.
Rational binomial(const Rational &x, long k);

// Exact power with 0^0 = 1; DomainError for a negative exponent.
Rational int_pow(const Rational &base, long exponent);

// (-1)^n for any integer n.
constexpr int alternating_sign(long n) noexcept
{
    return (n % 2 == 0) ? 1 : -1;
}

} // namespace stirlingkit

#endif
