#ifndef STIRLINGKIT_SEQ_HPP
#define STIRLINGKIT_SEQ_HPP

#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit
{

// One row of a tabulated sequence or triangle.
struct IndexedValue {
    long n = 0;
    std::optional<long> k;
    Rational value;
};

// Memoized generators for the number triangles and sequences.
//
// Tables grow on demand and are only ever appended to. All accessors are
// safe to call concurrently: growth happens under an internal mutex and a
// row becomes visible only once it is fully computed. Negative primary
// indices raise DomainError; out-of-range secondary indices give 0.
//
// stirling1/stirling2 are virtual so that tests can substitute a faulty
// context and watch the identity checks catch it.
class SeqContext
{
public:
    SeqContext() = default;
    SeqContext(const SeqContext &) = delete;
    SeqContext &operator=(const SeqContext &) = delete;
    virtual ~SeqContext() = default;

    // S(n, k): set partitions of an n-set into k blocks.
    virtual Integer stirling2(long n, long k) const;
    // Signed s(n, k): coefficients of the falling factorial x(x-1)...(x-n+1).
    virtual Integer stirling1(long n, long k) const;

    // Rows 0..n of the triangles; the reference stays valid for the
    // lifetime of the context.
    const std::vector<Integer> &stirling2_row(long n) const;
    const std::vector<Integer> &stirling1_row(long n) const;

    Integer factorial(long n) const;
    Integer bell(long n) const;
    // Ordered Bell numbers sum_k S(n,k) k!.
    Integer fubini(long n) const;
    Integer derangement(long n) const;

    Rational harmonic(long n) const;
    // h_n^(p); h_n^(0) = 1/n for n >= 1 and h_0^(p) = 0.
    Rational hyperharmonic(long p, long n) const;

    // B_n with B_1 = -1/2.
    Rational bernoulli(long n) const;
    // Same as bernoulli() except B_1^+ = +1/2.
    Rational bernoulli_plus(long n) const;
    // E_n(1/2), the rational-valued convention (E_2 = -1/4), not the
    // classical integer Euler numbers 2^n E_n(1/2).
    Rational euler_number(long n) const;

    // 1^p + ... + n^p by direct summation.
    Integer power_sum(long p, long n) const;
    // Bernoulli's closed form for the same sum.
    Rational faulhaber(long p, long n) const;

    // M(n, p) = sum_k S(n,k) k^p via the Bell-seeded recurrence
    // M(n, p+1) = M(n+1, p) - sum_j C(p,j) M(n, j).
    Integer moment(long n, long p) const;
    // The same quantity by direct summation over the Stirling row.
    Integer moment_direct(long n, long p) const;

private:
    void grow_stirling2(long n) const;
    void grow_stirling1(long n) const;
    void grow_harmonic(long n) const;
    void grow_bernoulli(long n) const;
    Integer bell_locked(long n) const;
    Integer moment_locked(long n, long p) const;

    mutable std::mutex mutex_;
    mutable std::deque<std::vector<Integer>> stirling2_rows_;
    mutable std::deque<std::vector<Integer>> stirling1_rows_;
    mutable std::vector<Integer> bell_;
    mutable std::vector<Integer> fubini_;
    mutable std::vector<Integer> derangement_;
    mutable std::vector<Rational> harmonic_;
    mutable std::vector<Rational> bernoulli_;
    mutable std::vector<Rational> euler_;
    mutable std::map<std::pair<long, long>, Integer> moments_;
};

} // namespace stirlingkit

#endif
