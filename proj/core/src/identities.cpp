#include <stirlingkit/identities.hpp>

#include <algorithm>
#include <future>
#include <mutex>

#include "identity_checks.hpp"

namespace stirlingkit
{

std::string_view to_string(CheckMode mode)
{
    switch (mode) {
    case CheckMode::scalar_equality:
        return "scalar-equality";
    case CheckMode::polynomial_equality:
        return "polynomial-equality";
    case CheckMode::series_equality:
        return "series-equality";
    case CheckMode::numeric_tolerance:
        return "numeric-tolerance";
    }
    return "unknown";
}

namespace
{

using detail::Checker;

struct Entry {
    IdentitySpec spec;
    Checker checker;
};

Domain scalar(long n_min = 0)
{
    Domain d;
    d.n_min = n_min;
    return d;
}

Domain scalar_p(long n_min, long p_max)
{
    Domain d = scalar(n_min);
    d.p_max = p_max;
    return d;
}

Domain polynomial(long n_min, long poly_limit = 15)
{
    Domain d = scalar(n_min);
    d.n_limit = poly_limit;
    d.poly_n_limit = poly_limit;
    return d;
}

Domain series(long p_max = -1)
{
    Domain d;
    d.p_max = p_max;
    d.has_series_order = true;
    return d;
}

std::vector<Entry> build_registry()
{
    using M = CheckMode;
    std::vector<Entry> r;
    auto add = [&](std::string id, std::string description, std::string anchor, Domain domain, M mode,
                   std::string lhs, std::string rhs, Checker checker) {
        r.push_back(Entry{IdentitySpec{std::move(id), std::move(description), std::move(anchor), domain, mode,
                                       std::move(lhs), std::move(rhs)},
                          checker});
    };

    add("ORTH", "Orthogonality of the two Stirling triangles",
        "sum_k S(n,k) s(k,j) = sum_k s(n,k) S(k,j) = [n = j]", scalar(), M::scalar_equality,
        "seq: triangle products", "Kronecker delta", detail::check_orth);
    add("T1", "Stirling transform of signed factorial-weighted hyperharmonic numbers",
        "sum_k S(n,k) (-1)^k k! h_k^(p) = (-1)^n n p^(n-1)", scalar_p(1, 8), M::scalar_equality,
        "seq: Stirling sum over hyperharmonic compact form", "closed form (-1)^n n p^(n-1)", detail::check_t1);
    add("T1b", "Harmonic-number case of T1", "sum_k S(n,k) (-1)^k k! H_k = (-1)^n n", scalar(),
        M::scalar_equality, "seq: Stirling sum over harmonic numbers", "closed form (-1)^n n", detail::check_t1b);
    add("C2", "Hyperharmonic numbers recovered by the inverse Stirling transform",
        "sum_k s(n,k) (-1)^k k p^(k-1) = (-1)^n n! h_n^(p)", scalar_p(0, 8), M::scalar_equality,
        "transform: stirling_inverse", "seq: hyperharmonic compact form", detail::check_c2);
    add("T3a", "First-kind Stirling transform of Euler polynomials",
        "sum_k s(n,k) E_k(x) = n! sum_k C(x,k) (-1/2)^(n-k)", polynomial(0), M::polynomial_equality,
        "poly: Euler series extraction", "poly: binomial polynomials", detail::check_t3a);
    add("T3b", "Euler polynomials as a Stirling transform",
        "E_n(x) = sum_k S(n,k) k! sum_j C(x,j) (-1/2)^(k-j)", polynomial(0), M::polynomial_equality,
        "poly: Euler series extraction", "poly: Stirling-weighted binomial polynomials", detail::check_t3b);
    add("E9", "Euler numbers through central binomial coefficients",
        "E_n(1/2) = sum_k S(n,k) k! (-1)^k sum_j C(2j,j) / (2^(k+j) (1-2j))", scalar(), M::scalar_equality,
        "poly: Euler polynomial at 1/2", "seq: nested central-binomial sum", detail::check_e9);
    add("CBH", "Binomial coefficient at one half", "C(1/2,j) = C(2j,j) (-1)^(j+1) / (2^(2j) (2j-1))", scalar(),
        M::scalar_equality, "poly: binomial polynomial evaluated at 1/2", "exact: central binomial closed form",
        detail::check_cbh);
    add("T5a", "First-kind Stirling transform of Bernoulli polynomials",
        "sum_k s(n,k) B_k(x) = n! sum_k C(x,k) (-1)^(n-k) / (n-k+1)", polynomial(0), M::polynomial_equality,
        "poly: Bernoulli binomial formula", "poly: binomial polynomials", detail::check_t5a);
    add("T5b", "Bernoulli polynomials as a Stirling transform",
        "B_n(x) = sum_k S(n,k) k! sum_j C(x,j) (-1)^(k-j) / (k-j+1)", polynomial(0), M::polynomial_equality,
        "poly: Bernoulli series extraction", "poly: Stirling-weighted binomial polynomials", detail::check_t5b);
    add("T5c", "Bernoulli numbers as a Stirling transform", "B_n = sum_k S(n,k) k! (-1)^k / (k+1)", scalar(),
        M::scalar_equality, "seq: Bernoulli recurrence", "seq: Stirling sum", detail::check_t5c);
    add("T6a", "Stirling, Bernoulli and harmonic numbers",
        "sum_{k=1}^n s(n,k) B_{k-1} = (-1)^(n-1) (n-1)! H_n", scalar(1), M::scalar_equality,
        "seq: first-kind sum over Bernoulli numbers", "seq: harmonic numbers", detail::check_t6a);
    add("T6b", "Inverse of T6a", "B_{n-1} = sum_{k=1}^n S(n,k) (-1)^(k-1) (k-1)! H_k", scalar(1),
        M::scalar_equality, "seq: Bernoulli recurrence", "seq: second-kind sum over harmonic numbers",
        detail::check_t6b);
    add("T6c", "Alternating first-kind sum over Bernoulli numbers",
        "sum_{k=1}^n s(n,k) B_{k-1} (-1)^k = (-1)^n n! / n^2", scalar(1), M::scalar_equality,
        "seq: first-kind sum over Bernoulli numbers", "closed form (-1)^n n!/n^2", detail::check_t6c);
    add("T6d", "Inverse of T6c", "B_{n-1} = (-1)^n sum_{k=1}^n S(n,k) k!/k^2 (-1)^k", scalar(1),
        M::scalar_equality, "seq: Bernoulli recurrence", "seq: second-kind sum", detail::check_t6d);
    add("T7", "Recurrence and Bell-number closed forms for M(n,p) = sum_k S(n,k) k^p",
        "M(n,p+1) = M(n+1,p) - sum_j C(p,j) M(n,j); M(n,1..5) in Bell numbers", scalar_p(0, 8),
        M::scalar_equality, "seq: direct moment sums", "seq: recurrence and Bell closed forms", detail::check_t7);
    add("L8", "Leibniz step for (xD)^p applied to exponential polynomials",
        "(xD)^(p+1) phi_n = (xD)^p phi_(n+1) - x sum_j C(p,j) (xD)^j phi_n",
        [] {
            Domain d = polynomial(0);
            d.p_max = 6;
            return d;
        }(),
        M::polynomial_equality, "poly: (xD)^(p+1) phi_n", "poly: Leibniz expansion", detail::check_l8);
    add("E15", "Weighted rows of the second-kind triangle via exponential polynomials",
        "sum_k S(n,k) k x^k = phi_(n+1) - x phi_n; "
        "sum_k S(n,k) k^2 x^k = phi_(n+2) - 2x phi_(n+1) + (x^2 - x) phi_n",
        polynomial(0), M::polynomial_equality, "seq: triangle row", "poly: exponential polynomial recurrence",
        detail::check_e15);
    add("P9", "Reciprocal-weighted Stirling row against power sums",
        "sum_{k=1}^(p+1) S(p+1,k) x^k / k = e^(-x) sum_n (1^p + ... + n^p) x^n / n!", series(8),
        M::series_equality, "seq: triangle row as a polynomial", "egf: e^(-x) times power-sum series",
        detail::check_p9);
    add("C10", "Reciprocal-weighted Stirling row through Bernoulli numbers",
        "sum_{k=1}^n S(n,k) x^k / k = phi_(n-1)(x) + (1/n) sum_k C(n,k) B_(n-k) phi_k(x)",
        [] {
            Domain d = scalar(2);
            d.poly_n_limit = 12;
            return d;
        }(),
        M::polynomial_equality, "seq: triangle row", "poly/seq: Bernoulli-weighted exponential polynomials",
        detail::check_c10);
    add("E21", "Reciprocal-weighted Stirling row with B+",
        "sum_{k=1}^n S(n,k) x^k / k = (1/n) sum_k C(n,k) B+_(n-k) phi_k(x)",
        [] {
            Domain d = scalar(1);
            d.poly_n_limit = 12;
            return d;
        }(),
        M::polynomial_equality, "seq: triangle row", "poly/seq: B+-weighted exponential polynomials",
        detail::check_e21);
    add("E22", "Square-reciprocal-weighted Stirling row",
        "sum_{k=1}^n S(n,k) x^k / k^2 = (1/n) sum_k C(n,k) B+_(n-k) (1/k) sum_m C(k,m) B+_(k-m) phi_m(x)",
        [] {
            Domain d = scalar(1);
            d.poly_n_limit = 12;
            return d;
        }(),
        M::polynomial_equality, "seq: triangle row", "poly/seq: nested B+ sums, integral form",
        detail::check_e22);
    add("P11", "Factorial-weighted Stirling row through geometric polynomials",
        "sum_{k=1}^n S(n,k) (k-1)! x^k = (x+1) omega_(n-1)(x), n > 1; = x for n = 1", polynomial(1),
        M::polynomial_equality, "seq: triangle row", "poly: geometric polynomials", detail::check_p11);
    add("C12", "Recurrence of geometric polynomials",
        "omega_n(x) = x omega_(n-1)(x) + (x + x^2) omega'_(n-1)(x)", polynomial(1), M::polynomial_equality,
        "poly: geometric polynomial from the triangle", "poly: derivative recurrence", detail::check_c12);
    add("C13", "Factorial-weighted row sums and ordered Bell numbers",
        "sum_k S(n,k) (k-1)! = 2 omega_(n-1)(1) (n>1), 1 (n=1); sum_k S(n,k) (k-1)! (-1)^k = 0 (n>1), -1 (n=1)",
        scalar(1), M::scalar_equality, "seq: triangle row sums", "seq: ordered Bell numbers", detail::check_c13);
    add("E30", "Series for the ordered Bell numbers", "omega_n(1) = sum_{k>=0} k^n / 2^(k+1)",
        [] {
            Domain d = scalar(0);
            d.n_limit = 15;
            return d;
        }(),
        M::numeric_tolerance, "exact partial sums with geometric tail bound", "seq: ordered Bell numbers",
        detail::check_e30);
    add("C14", "Alternating (k-2)!-weighted row sums", "sum_{k=2}^n S(n,k) (k-2)! (-1)^k = n - 1", scalar(2),
        M::scalar_equality, "seq: triangle row sums; egf: composition", "closed form n - 1", detail::check_c14);
    add("T15", "Alternating Stirling transform of derangement numbers",
        "(-1)^n sum_k S(n,k) (-1)^k D_k = sum_k C(n,k) (-1)^k b_k = 1 + sum_{j<n} (-1)^(j+1) b_j", scalar(),
        M::scalar_equality, "seq: Stirling sum over derangements",
        "transform: alternating binomial transform of Bell numbers; partial sums", detail::check_t15);
    add("L16", "Alternating binomial transform of exponential polynomials",
        "sum_k C(n,k) (-1)^k phi_k(x) = 1 + x sum_{j<n} (-1)^(j+1) phi_j(x)", polynomial(0),
        M::polynomial_equality, "poly: exponential polynomials from the triangle",
        "poly: exponential polynomial recurrence", detail::check_l16);
    add("GF6", "Generating function of hyperharmonic numbers",
        "-ln(1+t) / (1+t)^p = sum_n (-1)^n n! h_n^(p) t^n / n!", series(5), M::series_equality,
        "egf: log1p times pow1p", "seq: hyperharmonic compact form", detail::check_gf6);
    add("DIL", "Dilogarithm and harmonic numbers",
        "Li2(-t/(1-t)) = -sum_n (n-1)! H_n t^n / n!; Li2(1-e^(-t)) = sum_n B_(n-1) t^n / n!", series(),
        M::series_equality, "egf: dilog compositions", "seq: harmonic and Bernoulli numbers", detail::check_dil);
    add("L4", "Division by a linear factor of an ordinary series",
        "g(t)/(1 -/+ lambda t) = sum_n t^n sum_k a_k (+/-lambda)^(n-k); "
        "(ln(1+t)/t) g(t) = sum_n t^n sum_k a_k (-1)^(n-k) / (n-k+1)",
        series(), M::series_equality, "egf: ordinary series reciprocal and product", "direct coefficient sums",
        detail::check_l4);
    add("E18", "Bernoulli's formula for power sums",
        "1^p + ... + n^p = n^p + (1/(p+1)) sum_{k=1}^(p+1) C(p+1,k) B_(p+1-k) n^k", scalar_p(0, 12),
        M::scalar_equality, "seq: direct power sums", "seq: Faulhaber closed form", detail::check_e18);
    add("GFBELL", "Generating function of Bell numbers", "e^(e^t - 1) = sum_n b_n t^n / n!", series(),
        M::series_equality, "egf: composition exp o expm1", "seq: Stirling row sums", detail::check_bell_egf);
    add("GFDER", "Generating function of derangement numbers",
        "e^(-t)/(1-t) = sum_n D_n t^n / n!; D(1 - e^t) = e^(-t) e^(e^t - 1)", series(), M::series_equality,
        "egf: products and composition", "seq: inclusion-exclusion derangements", detail::check_derangement_egf);
    add("GFEXP", "Generating function of exponential polynomials", "e^(x(e^t - 1)) = sum_n phi_n(x) t^n / n!",
        series(), M::series_equality, "egf: composition exp o (x expm1)", "poly: exponential polynomials",
        detail::check_exp_poly_egf);
    add("ROUTE", "Series substitutions by composition against weighted Stirling sums",
        "f((mu/lambda)(e^(lambda t) - 1)) and f((mu/lambda) ln(1 + lambda t)) coefficients "
        "= sum_k S(n,k) or s(n,k) lambda^(n-k) mu^k a_k",
        series(), M::series_equality, "egf: composition", "transform: weighted Stirling transform",
        detail::check_routes);
    return r;
}

const std::vector<Entry> &registry()
{
    static const std::vector<Entry> entries = build_registry();
    return entries;
}

const Entry &find_entry(std::string_view id)
{
    const auto &entries = registry();
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry &e) { return e.spec.id == id; });
    if (it == entries.end()) {
        throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
    }
    return *it;
}

detail::Range resolve(const Domain &domain, const CheckOptions &options)
{
    detail::Range r;
    const long requested = options.max_n.value_or(kDefaultMaxN);
    if (requested < 0) {
        throw DomainError("max_n must be nonnegative");
    }
    r.n_min = domain.n_min;
    r.n_hi = std::min(requested, domain.n_limit);
    r.poly_n_hi = std::min(r.n_hi, domain.poly_n_limit);
    r.p_min = domain.p_min;
    r.p_hi = domain.p_max < 0 ? -1 : options.max_p.value_or(domain.p_max);
    r.order = options.order.value_or(kDefaultOrder);
    if (r.order < 1 || r.order > kMaxOrder) {
        throw DomainError("series order must lie in [1, " + std::to_string(kMaxOrder) + "]");
    }
    r.eps = options.eps.value_or(SuiteOptions{}.eps);
    if (r.eps.sign() <= 0) {
        throw DomainError("eps must be positive");
    }
    return r;
}

} // namespace

const std::vector<IdentitySpec> &list_identities()
{
    static const std::vector<IdentitySpec> specs = [] {
        std::vector<IdentitySpec> out;
        for (const auto &e : registry()) {
            out.push_back(e.spec);
        }
        return out;
    }();
    return specs;
}

const IdentitySpec &find_identity(std::string_view id)
{
    return find_entry(id).spec;
}

IdentityReport check_identity(const SeqContext &ctx, std::string_view id, const CheckOptions &options)
{
    const Entry &entry = find_entry(id);
    IdentityReport report;
    report.id = entry.spec.id;
    detail::Recorder recorder(report);
    entry.checker(ctx, resolve(entry.spec.domain, options), recorder);
    return report;
}

IdentityReport check_identity(std::string_view id, const CheckOptions &options)
{
    SeqContext ctx;
    return check_identity(ctx, id, options);
}

std::vector<IdentityReport> run_all(const SeqContext &ctx, const SuiteOptions &options)
{
    if (options.max_n < 5) {
        throw DomainError("run_all requires max_n >= 5");
    }
    CheckOptions check;
    check.max_n = options.max_n;
    check.order = options.order;
    check.eps = options.eps;

    const auto &entries = registry();
    std::vector<IdentityReport> reports(entries.size());
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            reports[i] = check_identity(ctx, entries[i].spec.id, check);
        }
        return reports;
    }
    // Workers pull indices; each report lands in its registry slot so the
    // output order does not depend on scheduling.
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(next_mutex);
                if (next == entries.size()) {
                    return;
                }
                i = next++;
            }
            reports[i] = check_identity(ctx, entries[i].spec.id, check);
        }
    };
    std::vector<std::future<void>> futures;
    for (unsigned t = 0; t < jobs; ++t) {
        futures.push_back(std::async(std::launch::async, worker));
    }
    for (auto &f : futures) {
        f.get();
    }
    return reports;
}

std::vector<IdentityReport> run_all(const SuiteOptions &options)
{
    SeqContext ctx;
    return run_all(ctx, options);
}

} // namespace stirlingkit
