#include <stirlingkit/seq.hpp>

#include <stirlingkit/poly.hpp>

namespace stirlingkit
{

namespace
{

void require_index(long n, const char *what)
{
    if (n < 0) {
        throw DomainError(std::string(what) + ": negative index " + std::to_string(n));
    }
}

} // namespace

void SeqContext::grow_stirling2(long n) const
{
    if (stirling2_rows_.empty()) {
        stirling2_rows_.push_back({Integer(1)});
    }
    while (static_cast<long>(stirling2_rows_.size()) <= n) {
        const auto &prev = stirling2_rows_.back();
        const long m = static_cast<long>(prev.size()); // new row index
        std::vector<Integer> row(m + 1);
        for (long k = 1; k <= m; ++k) {
            // S(m, k) = k S(m-1, k) + S(m-1, k-1)
            Integer v = prev[k - 1];
            if (k < m) {
                v += k * prev[k];
            }
            row[k] = v;
        }
        stirling2_rows_.push_back(std::move(row));
    }
}

void SeqContext::grow_stirling1(long n) const
{
    if (stirling1_rows_.empty()) {
        stirling1_rows_.push_back({Integer(1)});
    }
    while (static_cast<long>(stirling1_rows_.size()) <= n) {
        const auto &prev = stirling1_rows_.back();
        const long m = static_cast<long>(prev.size());
        std::vector<Integer> row(m + 1);
        for (long k = 1; k <= m; ++k) {
            // s(m, k) = s(m-1, k-1) - (m-1) s(m-1, k)
            Integer v = prev[k - 1];
            if (k < m) {
                v -= (m - 1) * prev[k];
            }
            row[k] = v;
        }
        stirling1_rows_.push_back(std::move(row));
    }
}

const std::vector<Integer> &SeqContext::stirling2_row(long n) const
{
    require_index(n, "stirling2");
    std::lock_guard lock(mutex_);
    grow_stirling2(n);
    return stirling2_rows_[n];
}

const std::vector<Integer> &SeqContext::stirling1_row(long n) const
{
    require_index(n, "stirling1");
    std::lock_guard lock(mutex_);
    grow_stirling1(n);
    return stirling1_rows_[n];
}

Integer SeqContext::stirling2(long n, long k) const
{
    const auto &row = stirling2_row(n);
    return (k < 0 || k > n) ? Integer(0) : row[k];
}

Integer SeqContext::stirling1(long n, long k) const
{
    const auto &row = stirling1_row(n);
    return (k < 0 || k > n) ? Integer(0) : row[k];
}

Integer SeqContext::factorial(long n) const
{
    return stirlingkit::factorial(n);
}

Integer SeqContext::bell_locked(long n) const
{
    grow_stirling2(n);
    while (static_cast<long>(bell_.size()) <= n) {
        const auto &row = stirling2_rows_[bell_.size()];
        Integer sum = 0;
        for (const auto &v : row) {
            sum += v;
        }
        bell_.push_back(sum);
    }
    return bell_[n];
}

Integer SeqContext::bell(long n) const
{
    require_index(n, "bell");
    std::lock_guard lock(mutex_);
    return bell_locked(n);
}

Integer SeqContext::fubini(long n) const
{
    require_index(n, "fubini");
    std::lock_guard lock(mutex_);
    grow_stirling2(n);
    while (static_cast<long>(fubini_.size()) <= n) {
        const auto &row = stirling2_rows_[fubini_.size()];
        Integer sum = 0;
        Integer fact = 1;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k > 0) {
                fact *= static_cast<unsigned long>(k);
            }
            sum += row[k] * fact;
        }
        fubini_.push_back(sum);
    }
    return fubini_[n];
}

Integer SeqContext::derangement(long n) const
{
    require_index(n, "derangement");
    std::lock_guard lock(mutex_);
    while (static_cast<long>(derangement_.size()) <= n) {
        const long m = static_cast<long>(derangement_.size());
        // D_m = sum_j (-1)^j m!/j!; the ratio m!/j! is built from the top down.
        Integer sum = 0;
        Integer ratio = 1; // m!/m!
        for (long j = m; j >= 0; --j) {
            if (alternating_sign(j) > 0) {
                sum += ratio;
            } else {
                sum -= ratio;
            }
            ratio *= j;
        }
        derangement_.push_back(sum);
    }
    return derangement_[n];
}

void SeqContext::grow_harmonic(long n) const
{
    if (harmonic_.empty()) {
        harmonic_.push_back(0);
    }
    while (static_cast<long>(harmonic_.size()) <= n) {
        const long m = static_cast<long>(harmonic_.size());
        harmonic_.push_back(harmonic_.back() + Rational(Integer(1), Integer(m)));
    }
}

Rational SeqContext::harmonic(long n) const
{
    require_index(n, "harmonic");
    std::lock_guard lock(mutex_);
    grow_harmonic(n);
    return harmonic_[n];
}

Rational SeqContext::hyperharmonic(long p, long n) const
{
    require_index(p, "hyperharmonic order");
    require_index(n, "hyperharmonic");
    if (n == 0) {
        return 0;
    }
    if (p == 0) {
        return Rational(Integer(1), Integer(n));
    }
    std::lock_guard lock(mutex_);
    grow_harmonic(n + p - 1);
    // h_n^(p) = C(n+p-1, n) (H_{n+p-1} - H_{p-1})
    return Rational(binomial(n + p - 1, n)) * (harmonic_[n + p - 1] - harmonic_[p - 1]);
}

void SeqContext::grow_bernoulli(long n) const
{
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    if (bernoulli_.empty()) {
        bernoulli_.push_back(1);
    }
    while (static_cast<long>(bernoulli_.size()) <= n) {
        const long m = static_cast<long>(bernoulli_.size());
        if (m >= 3 && m % 2 == 1) {
            bernoulli_.push_back(0);
            continue;
        }
        Rational sum = 0;
        for (long k = 0; k < m; ++k) {
            if (!bernoulli_[k].is_zero()) {
                sum += Rational(binomial(m + 1, k)) * bernoulli_[k];
            }
        }
        bernoulli_.push_back(-sum / Rational(m + 1));
    }
}

Rational SeqContext::bernoulli(long n) const
{
    require_index(n, "bernoulli");
    std::lock_guard lock(mutex_);
    grow_bernoulli(n);
    return bernoulli_[n];
}

Rational SeqContext::bernoulli_plus(long n) const
{
    return n == 1 ? Rational(Integer(1), Integer(2)) : bernoulli(n);
}

Rational SeqContext::euler_number(long n) const
{
    require_index(n, "euler_number");
    std::lock_guard lock(mutex_);
    if (static_cast<long>(euler_.size()) <= n) {
        // One series expansion yields every E_k(x) up to n.
        const auto polys = euler_polys(n);
        const Rational half(Integer(1), Integer(2));
        for (auto k = euler_.size(); k < polys.size(); ++k) {
            euler_.push_back(polys[k].eval(half));
        }
    }
    return euler_[n];
}

Integer SeqContext::power_sum(long p, long n) const
{
    require_index(p, "power_sum exponent");
    require_index(n, "power_sum");
    Integer sum = 0;
    Integer term;
    for (long k = 1; k <= n; ++k) {
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(p));
        sum += term;
    }
    return sum;
}

Rational SeqContext::faulhaber(long p, long n) const
{
    require_index(p, "faulhaber exponent");
    require_index(n, "faulhaber");
    // n^p + 1/(p+1) sum_{k=1}^{p+1} C(p+1,k) B_{p+1-k} n^k counts the k = 0
    // term 0^p as well; subtract it so p = 0 gives n rather than n + 1.
    const Rational x(n);
    Rational sum = 0;
    for (long k = 1; k <= p + 1; ++k) {
        sum += Rational(binomial(p + 1, k)) * bernoulli(p + 1 - k) * int_pow(x, k);
    }
    return int_pow(x, p) - int_pow(Rational(0), p) + sum / Rational(p + 1);
}

Integer SeqContext::moment_locked(long n, long p) const
{
    if (p == 0) {
        return bell_locked(n);
    }
    const auto key = std::make_pair(n, p);
    if (auto it = moments_.find(key); it != moments_.end()) {
        return it->second;
    }
    // M(n, p) = M(n+1, p-1) - sum_{j=0}^{p-1} C(p-1, j) M(n, j)
    Integer value = moment_locked(n + 1, p - 1);
    for (long j = 0; j < p; ++j) {
        value -= binomial(p - 1, j) * moment_locked(n, j);
    }
    moments_.emplace(key, value);
    return value;
}

Integer SeqContext::moment(long n, long p) const
{
    require_index(n, "moment");
    require_index(p, "moment exponent");
    std::lock_guard lock(mutex_);
    return moment_locked(n, p);
}

Integer SeqContext::moment_direct(long n, long p) const
{
    require_index(p, "moment exponent");
    const auto &row = stirling2_row(n);
    Integer sum = 0;
    Integer power;
    for (long k = 0; k <= n; ++k) {
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(p));
        sum += row[k] * power;
    }
    return sum;
}

} // namespace stirlingkit
