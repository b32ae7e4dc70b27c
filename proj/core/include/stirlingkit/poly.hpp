#ifndef STIRLINGKIT_POLY_HPP
#define STIRLINGKIT_POLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit
{

class SeqContext;

// Degree reported for the zero polynomial.
inline constexpr long kZeroDegree = -1;

// Dense univariate polynomial over Rational, coefficients indexed by
// degree. Trailing zeros are never stored, so the zero polynomial has an
// empty coefficient list and equality is coefficientwise.
class Poly
{
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);

    static Poly constant(const Rational &c);
    static Poly monomial(const Rational &c, std::size_t degree);
    static Poly x() { return monomial(1, 1); }

    const std::vector<Rational> &coefficients() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Zero beyond the degree.
    Rational coefficient(std::size_t i) const;

    // Horner evaluation.
    Rational eval(const Rational &x) const;
    Poly derivative() const;
    // Antiderivative vanishing at 0.
    Poly integral() const;
    // p(x)/x; DomainError unless the constant term is zero.
    Poly divide_by_x() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &rhs);
    Poly &operator-=(const Poly &rhs);
    Poly &operator*=(const Poly &rhs);
    Poly &operator*=(const Rational &rhs);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly &b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
    friend Poly operator*(const Rational &c, Poly a) { return a *= c; }
    friend bool operator==(const Poly &, const Poly &) = default;

    // "c0 + c1*x + c2*x^2 ..." with zero terms omitted; "0" for zero.
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// phi_n(x) = sum_k S(n,k) x^k built by phi_{n+1} = x phi_n' + x phi_n.
Poly exp_poly(long n);
// phi_0 .. phi_n in one pass.
std::vector<Poly> exp_polys(long n);
// phi_n read directly off the Stirling triangle.
Poly exp_poly_from_triangle(const SeqContext &ctx, long n);

// omega_n(x) = sum_k S(n,k) k! x^k.
Poly geom_poly(const SeqContext &ctx, long n);

// B_n(x) = sum_p C(n,p) B_p x^{n-p}.
Poly bernoulli_poly(const SeqContext &ctx, long n);
// B_0(x) .. B_n(x) from the series t e^{xt} / (e^t - 1); independent of
// the Bernoulli-number recurrence.
std::vector<Poly> bernoulli_polys_by_series(long n);

// E_0(x) .. E_n(x) from the series 2 e^{xt} / (e^t + 1).
std::vector<Poly> euler_polys(long n);
Poly euler_poly(long n);

// C(x, k) = x(x-1)...(x-k+1)/k!.
Poly binom_poly(long k);

// (x d/dx)^times applied to a.
Poly xd_apply(const Poly &a, long times);

} // namespace stirlingkit

#endif
