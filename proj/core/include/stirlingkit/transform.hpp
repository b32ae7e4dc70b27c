#ifndef STIRLINGKIT_TRANSFORM_HPP
#define STIRLINGKIT_TRANSFORM_HPP

#include <cstddef>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit
{

class SeqContext;

// Finite, nonempty sequence a_0..a_n. All transforms here are
// length-preserving: b_n only depends on a_0..a_n, so no padding is needed.
class Sequence
{
public:
    // DomainError on an empty list.
    explicit Sequence(std::vector<Rational> values);

    const std::vector<Rational> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    const Rational &operator[](std::size_t n) const { return values_[n]; }

    friend bool operator==(const Sequence &, const Sequence &) = default;

private:
    std::vector<Rational> values_;
};

enum class StirlingKind { first, second };
enum class BinomialSign { plain, alternating };

// b_n = sum_k S(n,k) a_k
Sequence stirling_transform(const SeqContext &ctx, const Sequence &a);
// a_n = sum_k s(n,k) b_k
Sequence stirling_inverse(const SeqContext &ctx, const Sequence &b);
// sum_k C(n,k) a_k, or sum_k C(n,k) (-1)^k a_k
Sequence binomial_transform(const Sequence &a, BinomialSign sign);
// sum_k S(n,k) lambda^{n-k} mu^k a_k (second kind) or the same with s(n,k)
// (first kind).
Sequence weighted_stirling_transform(const SeqContext &ctx, const Sequence &a, const Rational &lambda,
                                     const Rational &mu, StirlingKind kind);

} // namespace stirlingkit

#endif
