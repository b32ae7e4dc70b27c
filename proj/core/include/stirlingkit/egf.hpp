#ifndef STIRLINGKIT_EGF_HPP
#define STIRLINGKIT_EGF_HPP

#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit
{

class SeqContext;
class Egf;

// Raised when two truncated series of different orders are combined by an
// operation that requires equal orders.
class OrderMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Truncated ordinary power series sum_{n<=N} c_n t^n.
class PowerSeries
{
public:
    // DomainError on an empty coefficient list.
    explicit PowerSeries(std::vector<Rational> coefficients);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    const Rational &operator[](long n) const { return coeffs_[n]; }

    PowerSeries truncated(long order) const;

    // Result order is the smaller of the two.
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);

    // DomainError when the constant term is zero.
    PowerSeries reciprocal() const;

    // c_n -> a_n = n! c_n
    Egf to_egf() const;

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    std::vector<Rational> coeffs_;
};

// Truncated exponential generating function sum_{n<=N} a_n t^n / n!.
// The order N is fixed by the coefficient count and no operation extends
// it silently.
class Egf
{
public:
    // DomainError on an empty coefficient list.
    explicit Egf(std::vector<Rational> coefficients);

    static Egf from_sequence(std::vector<Rational> a) { return Egf(std::move(a)); }
    static Egf zero(long order);
    static Egf one(long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational> &coefficients() const { return coeffs_; }
    const Rational &operator[](long n) const { return coeffs_[n]; }

    Egf truncated(long order) const;

    // a_n -> c_n = a_n / n!
    PowerSeries to_ordinary() const;
    static Egf from_ordinary(const PowerSeries &series);

    Egf operator-() const;
    // Coefficientwise; OrderMismatch on unequal orders.
    friend Egf operator+(const Egf &a, const Egf &b);
    friend Egf operator-(const Egf &a, const Egf &b);
    friend Egf operator*(const Rational &c, const Egf &f);

    friend bool operator==(const Egf &, const Egf &) = default;

private:
    std::vector<Rational> coeffs_;
};

// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}; OrderMismatch on
// unequal orders.
Egf egf_mul(const Egf &f, const Egf &g);

// f(g(t)) truncated at min(order f, order g). DomainError unless g has a
// zero constant term.
Egf egf_compose(const Egf &outer, const Egf &inner);

// 1/f; DomainError when a_0 = 0.
Egf egf_reciprocal(const Egf &f);
// f'; the order drops by one. DomainError for an order-0 series.
Egf egf_derivative(const Egf &f);
// integral_0^t f; the order rises by one, since every new coefficient is known.
Egf egf_integrate(const Egf &f);
// f(c t)
Egf egf_scale_argument(const Egf &f, const Rational &c);

enum class ElementaryKind {
    exp,      // e^t
    expm1,    // e^t - 1
    log1p,    // ln(1 + t)
    geom,     // 1 / (1 - t)
    pow1p,    // (1 + t)^x
    dilog,    // Li_2(t) = sum t^n / n^2
    monomial, // c t^m / m!
};

struct Elementary {
    ElementaryKind kind = ElementaryKind::exp;
    Rational param = 0; // x for pow1p, c for monomial
    long degree = 0;    // m for monomial
};

Egf egf_elementary(const Elementary &spec, long order);
inline Egf egf_elementary(ElementaryKind kind, long order, const Rational &param = 0, long degree = 0)
{
    return egf_elementary(Elementary{kind, param, degree}, order);
}
// Same, selecting the kind by name ("exp", "expm1", "log1p", "geom",
// "pow1p", "dilog", "monomial"); DomainError for an unknown name.
Egf egf_elementary(std::string_view kind, long order, const Rational &param = 0, long degree = 0);

// Coefficients of f((mu/lambda)(e^{lambda t} - 1)), i.e. the sequence
// sum_k S(n,k) lambda^{n-k} mu^k a_k, obtained by actually composing.
std::vector<Rational> stirling_substitution_by_composition(const Egf &f, const Rational &lambda,
                                                          const Rational &mu);
// Coefficients of f((mu/lambda) ln(1 + lambda t)), i.e.
// sum_k s(n,k) lambda^{n-k} mu^k a_k, obtained by actually composing.
std::vector<Rational> log_substitution_by_composition(const Egf &f, const Rational &lambda,
                                                     const Rational &mu);

// Both substitutions computed by composition and by the weighted Stirling
// sums; throws std::logic_error if the two routes ever disagree.
// DomainError when lambda = 0.
std::vector<Rational> stirling_substitution(const SeqContext &ctx, const Egf &f, const Rational &lambda,
                                            const Rational &mu);
std::vector<Rational> log_substitution(const SeqContext &ctx, const Egf &f, const Rational &lambda,
                                       const Rational &mu);

} // namespace stirlingkit

#endif
