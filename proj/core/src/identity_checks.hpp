#ifndef STIRLINGKIT_SRC_IDENTITY_CHECKS_HPP
#define STIRLINGKIT_SRC_IDENTITY_CHECKS_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <stirlingkit/identities.hpp>
#include <stirlingkit/poly.hpp>
#include <stirlingkit/seq.hpp>

namespace stirlingkit::detail
{

// Resolved bounds for one check.
struct Range {
    long n_min = 0;
    long n_hi = 0;
    long poly_n_hi = 0;
    long p_min = 0;
    long p_hi = -1;
    long order = kDefaultOrder;
    Rational eps;
};

using Params = std::vector<std::pair<std::string, std::string>>;

class Recorder
{
public:
    explicit Recorder(IdentityReport &report) : report_(report) {}

    void scalar(Params params, const Rational &lhs, const Rational &rhs);
    void poly(Params params, const Poly &lhs, const Poly &rhs);
    void series(Params params, const std::vector<Rational> &lhs, const std::vector<Rational> &rhs);
    void outcome(Params params, bool ok, std::string lhs, std::string rhs);
    void note(std::string text);

private:
    IdentityReport &report_;
};

std::string series_to_string(const std::vector<Rational> &values);

using Checker = void (*)(const SeqContext &, const Range &, Recorder &);

void check_orth(const SeqContext &, const Range &, Recorder &);
void check_t1(const SeqContext &, const Range &, Recorder &);
void check_t1b(const SeqContext &, const Range &, Recorder &);
void check_c2(const SeqContext &, const Range &, Recorder &);
void check_t3a(const SeqContext &, const Range &, Recorder &);
void check_t3b(const SeqContext &, const Range &, Recorder &);
void check_e9(const SeqContext &, const Range &, Recorder &);
void check_cbh(const SeqContext &, const Range &, Recorder &);
void check_t5a(const SeqContext &, const Range &, Recorder &);
void check_t5b(const SeqContext &, const Range &, Recorder &);
void check_t5c(const SeqContext &, const Range &, Recorder &);
void check_t6a(const SeqContext &, const Range &, Recorder &);
void check_t6b(const SeqContext &, const Range &, Recorder &);
void check_t6c(const SeqContext &, const Range &, Recorder &);
void check_t6d(const SeqContext &, const Range &, Recorder &);
void check_t7(const SeqContext &, const Range &, Recorder &);
void check_l8(const SeqContext &, const Range &, Recorder &);
void check_e15(const SeqContext &, const Range &, Recorder &);
void check_p9(const SeqContext &, const Range &, Recorder &);
void check_c10(const SeqContext &, const Range &, Recorder &);
void check_e21(const SeqContext &, const Range &, Recorder &);
void check_e22(const SeqContext &, const Range &, Recorder &);
void check_p11(const SeqContext &, const Range &, Recorder &);
void check_c12(const SeqContext &, const Range &, Recorder &);
void check_c13(const SeqContext &, const Range &, Recorder &);
void check_e30(const SeqContext &, const Range &, Recorder &);
void check_c14(const SeqContext &, const Range &, Recorder &);
void check_t15(const SeqContext &, const Range &, Recorder &);
void check_l16(const SeqContext &, const Range &, Recorder &);
void check_gf6(const SeqContext &, const Range &, Recorder &);
void check_dil(const SeqContext &, const Range &, Recorder &);
void check_l4(const SeqContext &, const Range &, Recorder &);
void check_e18(const SeqContext &, const Range &, Recorder &);
void check_bell_egf(const SeqContext &, const Range &, Recorder &);
void check_derangement_egf(const SeqContext &, const Range &, Recorder &);
void check_exp_poly_egf(const SeqContext &, const Range &, Recorder &);
void check_routes(const SeqContext &, const Range &, Recorder &);

} // namespace stirlingkit::detail

#endif
