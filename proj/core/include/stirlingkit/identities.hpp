#ifndef STIRLINGKIT_IDENTITIES_HPP
#define STIRLINGKIT_IDENTITIES_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit
{

class SeqContext;

class UnknownIdentity : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

enum class CheckMode { scalar_equality, polynomial_equality, series_equality, numeric_tolerance };

std::string_view to_string(CheckMode mode);

// Parameter domain of one identity. The upper n bound actually used is
// min(requested max_n, n_limit); polynomial-valued instances are further
// capped by poly_n_limit.
struct Domain {
    long n_min = 0;
    long n_limit = 200;
    long poly_n_limit = 15;
    // p runs over [p_min, p_max]; p_max < 0 means the identity has no p.
    long p_min = 0;
    long p_max = -1;
    bool has_series_order = false;
};

struct IdentitySpec {
    std::string id;
    std::string description;
    // The statement being checked, written out as a formula.
    std::string anchor;
    Domain domain;
    CheckMode mode = CheckMode::scalar_equality;
    // Names of the two independent evaluation paths.
    std::string lhs_route;
    std::string rhs_route;
};

struct Failure {
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    long checked = 0;
    std::vector<Failure> failures;
    // Annotations such as convention-dependent instances.
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

// Per-call overrides; unset fields fall back to the suite defaults.
struct CheckOptions {
    std::optional<long> max_n;
    std::optional<long> max_p;
    std::optional<long> order;
    std::optional<Rational> eps;
};

struct SuiteOptions {
    long max_n = 40;
    long order = 12;
    Rational eps = Rational(Integer(1), Integer("1000000000000"));
    // Worker threads for run_all; 0 or 1 runs sequentially.
    unsigned jobs = 1;
};

inline constexpr long kDefaultMaxN = 40;
inline constexpr long kDefaultOrder = 12;
inline constexpr long kMaxOrder = 64;

// The full registry in a fixed order.
const std::vector<IdentitySpec> &list_identities();
// UnknownIdentity when the id is not registered.
const IdentitySpec &find_identity(std::string_view id);

IdentityReport check_identity(const SeqContext &ctx, std::string_view id, const CheckOptions &options = {});
IdentityReport check_identity(std::string_view id, const CheckOptions &options = {});

// Every registered identity over its domain intersected with max_n; reports
// come back in registry order regardless of jobs. Requires max_n >= 5.
std::vector<IdentityReport> run_all(const SuiteOptions &options = {});
// Same, sharing one context across all checks (and threads).
std::vector<IdentityReport> run_all(const SeqContext &ctx, const SuiteOptions &options);

} // namespace stirlingkit

#endif
