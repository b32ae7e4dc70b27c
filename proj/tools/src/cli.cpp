#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <stirlingkit/egf.hpp>
#include <stirlingkit/expr.hpp>
#include <stirlingkit/identities.hpp>
#include <stirlingkit/poly.hpp>
#include <stirlingkit/seq.hpp>
#include <stirlingkit/transform.hpp>

namespace stirlingkit::cli
{

using json = nlohmann::ordered_json;

namespace
{

// Raised for bad input discovered after CLI11 is done (malformed rationals,
// missing files, expression errors).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long kSeqMaxN = 5000;
constexpr long kTriangleMaxN = 500;
constexpr long kPolyMaxN = 200;

const std::vector<std::string> kFormats{"json", "csv", "text"};

json to_json(const std::vector<Rational> &values)
{
    json arr = json::array();
    for (const auto &v : values) {
        arr.push_back(v.to_string());
    }
    return arr;
}

// Right-aligned columns separated by two spaces.
void print_table(std::ostream &out, const std::vector<std::string> &header,
                 const std::vector<std::vector<std::string>> &rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto &r : rows) {
            width[c] = std::max(width[c], r[c].size());
        }
    }
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) {
                out << "  ";
            }
            out << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        out << '\n';
    };
    line(header);
    for (const auto &r : rows) {
        line(r);
    }
}

void print_csv(std::ostream &out, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows)
{
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            out << (c ? "," : "") << cells[c];
        }
        out << '\n';
    };
    line(header);
    for (const auto &r : rows) {
        line(r);
    }
}

void emit_indexed(std::ostream &out, const std::string &format, const std::vector<Rational> &values)
{
    if (format == "json") {
        out << to_json(values).dump() << '\n';
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < values.size(); ++n) {
        rows.push_back({std::to_string(n), values[n].to_string()});
    }
    if (format == "csv") {
        print_csv(out, {"n", "value"}, rows);
    } else {
        print_table(out, {"n", "value"}, rows);
    }
}

long env_max_n()
{
    const char *raw = std::getenv("STIRLINGKIT_MAX_N");
    if (!raw || !*raw) {
        return kDefaultMaxN;
    }
    long value = 0;
    try {
        std::size_t used = 0;
        value = std::stol(raw, &used);
        if (used != std::string_view(raw).size()) {
            throw std::invalid_argument(raw);
        }
    } catch (const std::exception &) {
        throw UsageError(std::string("STIRLINGKIT_MAX_N is not an integer: ") + raw);
    }
    // Only ever raises the default.
    return std::max(value, kDefaultMaxN);
}

Rational rational_flag(const std::string &name, const std::string &text)
{
    try {
        return parse_rational_arg(text);
    } catch (const std::exception &) {
        throw UsageError("--" + name + ": not a rational number: " + text);
    }
}

// ---- subcommands ----

struct SeqArgs {
    std::string name;
    long n = 10;
    long p = 1;
    std::string format = "json";
};

const std::vector<std::string> kSeqNames{"bell",     "fubini",         "derangement", "factorial", "harmonic",
                                         "hyperharmonic", "bernoulli", "bernoulli-plus", "euler",  "power-sum",
                                         "faulhaber", "moment"};

int run_seq(const SeqArgs &a, std::ostream &out)
{
    SeqContext ctx;
    std::vector<Rational> values;
    for (long n = 0; n <= a.n; ++n) {
        const std::string &s = a.name;
        if (s == "bell") {
            values.emplace_back(ctx.bell(n));
        } else if (s == "fubini") {
            values.emplace_back(ctx.fubini(n));
        } else if (s == "derangement") {
            values.emplace_back(ctx.derangement(n));
        } else if (s == "factorial") {
            values.emplace_back(ctx.factorial(n));
        } else if (s == "harmonic") {
            values.push_back(ctx.harmonic(n));
        } else if (s == "hyperharmonic") {
            values.push_back(ctx.hyperharmonic(a.p, n));
        } else if (s == "bernoulli") {
            values.push_back(ctx.bernoulli(n));
        } else if (s == "bernoulli-plus") {
            values.push_back(ctx.bernoulli_plus(n));
        } else if (s == "euler") {
            values.push_back(ctx.euler_number(n));
        } else if (s == "power-sum") {
            values.emplace_back(ctx.power_sum(a.p, n));
        } else if (s == "faulhaber") {
            values.push_back(ctx.faulhaber(a.p, n));
        } else {
            values.emplace_back(ctx.moment(n, a.p));
        }
    }
    emit_indexed(out, a.format, values);
    return kExitOk;
}

struct TriangleArgs {
    std::string kind;
    long n = 8;
    std::string format = "json";
};

int run_triangle(const TriangleArgs &a, std::ostream &out)
{
    SeqContext ctx;
    const bool second = a.kind == "stirling2" || a.kind == "S";
    std::vector<std::vector<std::string>> rows;
    json arr = json::array();
    for (long n = 0; n <= a.n; ++n) {
        const auto &row = second ? ctx.stirling2_row(n) : ctx.stirling1_row(n);
        for (long k = 0; k <= n; ++k) {
            const std::string v = to_string(row[k]);
            rows.push_back({std::to_string(n), std::to_string(k), v});
            arr.push_back(json{{"n", n}, {"k", k}, {"value", v}});
        }
    }
    if (a.format == "json") {
        out << arr.dump() << '\n';
    } else if (a.format == "csv") {
        print_csv(out, {"n", "k", "value"}, rows);
    } else {
        print_table(out, {"n", "k", "value"}, rows);
    }
    return kExitOk;
}

struct PolyArgs {
    std::string family;
    long n = 4;
    std::optional<std::string> x;
    long xd = 0;
    std::string format = "json";
};

int run_poly(const PolyArgs &a, std::ostream &out)
{
    std::optional<Rational> x;
    if (a.x) {
        x = rational_flag("x", *a.x);
    }
    SeqContext ctx;
    Poly p;
    if (a.family == "exp") {
        p = exp_poly(a.n);
    } else if (a.family == "geom") {
        p = geom_poly(ctx, a.n);
    } else if (a.family == "bernoulli") {
        p = bernoulli_poly(ctx, a.n);
    } else if (a.family == "euler") {
        p = euler_poly(a.n);
    } else {
        p = binom_poly(a.n);
    }
    p = xd_apply(p, a.xd);
    if (x) {
        const Rational v = p.eval(*x);
        if (a.format == "json") {
            out << json(v.to_string()).dump() << '\n';
        } else {
            out << v.to_string() << '\n';
        }
        return kExitOk;
    }
    std::vector<Rational> coeffs;
    for (long i = 0; i <= p.degree(); ++i) {
        coeffs.push_back(p.coefficient(i));
    }
    if (a.format == "json") {
        out << to_json(coeffs).dump() << '\n';
    } else if (a.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            rows.push_back({std::to_string(i), coeffs[i].to_string()});
        }
        print_csv(out, {"degree", "coefficient"}, rows);
    } else {
        out << p.to_string() << '\n';
    }
    return kExitOk;
}

struct SeriesArgs {
    std::string kind;
    long order = kDefaultOrder;
    std::string param = "0";
    long degree = 0;
    std::string substitute = "none";
    std::string lambda = "1";
    std::string mu = "1";
    std::string format = "json";
};

int run_series(const SeriesArgs &a, std::ostream &out)
{
    const Rational param = rational_flag("param", a.param);
    const Rational lambda = rational_flag("lambda", a.lambda);
    const Rational mu = rational_flag("mu", a.mu);
    if (a.substitute != "none" && lambda.is_zero()) {
        throw UsageError("--lambda must be nonzero");
    }
    SeqContext ctx;
    Egf f = egf_elementary(a.kind, a.order, param, a.degree);
    if (a.substitute == "stirling") {
        f = Egf(stirling_substitution(ctx, f, lambda, mu));
    } else if (a.substitute == "log") {
        f = Egf(log_substitution(ctx, f, lambda, mu));
    }
    const std::vector<Rational> &egf = f.coefficients();
    const std::vector<Rational> ordinary = f.to_ordinary().coefficients();
    if (a.format == "json") {
        json doc;
        doc["egf"] = to_json(egf);
        doc["ordinary"] = to_json(ordinary);
        out << doc.dump() << '\n';
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < egf.size(); ++n) {
        rows.push_back({std::to_string(n), egf[n].to_string(), ordinary[n].to_string()});
    }
    if (a.format == "csv") {
        print_csv(out, {"n", "egf", "ordinary"}, rows);
    } else {
        print_table(out, {"n", "egf", "ordinary"}, rows);
    }
    return kExitOk;
}

struct TransformArgs {
    std::string kind = "stirling";
    std::string lambda = "1";
    std::string mu = "1";
    std::string input = "-";
    std::string format = "json";
};

std::vector<Rational> read_sequence(std::istream &in, const std::string &where)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError(where + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw UsageError(where + ": expected a nonempty JSON array");
    }
    std::vector<Rational> values;
    for (const auto &item : doc) {
        try {
            if (item.is_string()) {
                values.push_back(Rational::parse(item.get<std::string>()));
            } else if (item.is_number_integer()) {
                values.emplace_back(item.get<long long>());
            } else {
                throw std::invalid_argument("bad element");
            }
        } catch (const std::exception &) {
            throw UsageError(where + ": element " + item.dump() + " is not a \"p/q\" rational");
        }
    }
    return values;
}

int run_transform(const TransformArgs &a, std::istream &in, std::ostream &out)
{
    const Rational lambda = rational_flag("lambda", a.lambda);
    const Rational mu = rational_flag("mu", a.mu);
    std::vector<Rational> input;
    if (a.input == "-") {
        input = read_sequence(in, "stdin");
    } else {
        std::ifstream file(a.input);
        if (!file) {
            throw UsageError("cannot open " + a.input);
        }
        input = read_sequence(file, a.input);
    }
    SeqContext ctx;
    const Sequence seq(std::move(input));
    Sequence result = seq;
    if (a.kind == "stirling") {
        result = stirling_transform(ctx, seq);
    } else if (a.kind == "inv-stirling") {
        result = stirling_inverse(ctx, seq);
    } else if (a.kind == "binomial") {
        result = binomial_transform(seq, BinomialSign::plain);
    } else if (a.kind == "alt-binomial") {
        result = binomial_transform(seq, BinomialSign::alternating);
    } else {
        result = weighted_stirling_transform(ctx, seq, lambda, mu, StirlingKind::second);
    }
    emit_indexed(out, a.format, result.values());
    return kExitOk;
}

struct VerifyArgs {
    bool all = false;
    std::string id;
    std::optional<long> max_n;
    long order = kDefaultOrder;
    std::string eps = "1e-12";
    unsigned jobs = 0;
    std::string format = "json";
};

json report_json(const IdentityReport &r)
{
    json failures = json::array();
    for (const auto &f : r.failures) {
        json params = json::object();
        for (const auto &[k, v] : f.params) {
            params[k] = v;
        }
        failures.push_back(json{{"params", params}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    return json{{"id", r.id}, {"checked", r.checked}, {"failures", failures}};
}

void report_text(std::ostream &out, const IdentityReport &r)
{
    out << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.checked << " instances, "
        << r.failures.size() << " failures\n";
    for (const auto &f : r.failures) {
        out << "  at";
        for (const auto &[k, v] : f.params) {
            out << ' ' << k << '=' << v;
        }
        out << "\n    lhs = " << f.lhs << "\n    rhs = " << f.rhs << '\n';
    }
    for (const auto &note : r.notes) {
        out << "  note: " << note << '\n';
    }
}

int run_verify(const VerifyArgs &a, std::ostream &out)
{
    const Rational eps = rational_flag("eps", a.eps);
    if (eps.sign() <= 0) {
        throw UsageError("--eps must be positive");
    }
    const long max_n = a.max_n.value_or(env_max_n());
    std::vector<IdentityReport> reports;
    if (a.all) {
        if (max_n < 5) {
            throw UsageError("--all needs --max-n >= 5");
        }
        SuiteOptions options;
        options.max_n = max_n;
        options.order = a.order;
        options.eps = eps;
        options.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
        reports = run_all(options);
    } else {
        try {
            find_identity(a.id);
        } catch (const UnknownIdentity &e) {
            throw UsageError(e.what());
        }
        CheckOptions options;
        options.max_n = max_n;
        options.order = a.order;
        options.eps = eps;
        reports.push_back(check_identity(a.id, options));
    }

    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
    if (a.format == "json") {
        if (a.all) {
            json arr = json::array();
            for (const auto &r : reports) {
                arr.push_back(report_json(r));
            }
            out << arr.dump(2) << '\n';
        } else {
            out << report_json(reports.front()).dump(2) << '\n';
        }
    } else {
        long checked = 0;
        std::size_t failing = 0;
        for (const auto &r : reports) {
            report_text(out, r);
            checked += r.checked;
            failing += r.passed() ? 0 : 1;
        }
        if (a.all) {
            out << reports.size() << " identities, " << checked << " instances, " << failing << " failing\n";
        }
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

struct EvalArgs {
    std::string source;
    std::vector<std::string> vars;
    std::string format = "json";
};

int run_eval(const EvalArgs &a, std::ostream &out)
{
    SeqContext ctx;
    Env env;
    env.ctx = &ctx;
    for (const auto &binding : a.vars) {
        const auto eq = binding.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("--var expects name=value, got " + binding);
        }
        env.vars[binding.substr(0, eq)] = rational_flag("var", binding.substr(eq + 1));
    }
    Rational value;
    try {
        value = eval(parse(a.source), env);
    } catch (const ParseError &e) {
        throw UsageError(e.what());
    } catch (const EvalError &e) {
        throw UsageError(e.what());
    } catch (const DomainError &e) {
        throw UsageError(e.what());
    }
    if (a.format == "json") {
        out << json(value.to_string()).dump() << '\n';
    } else {
        out << value.to_string() << '\n';
    }
    return kExitOk;
}

} // namespace

Rational parse_rational_arg(std::string_view text)
{
    if (text.find('/') != std::string_view::npos) {
        return Rational::parse(text);
    }
    static const std::regex decimal(R"(([+-]?)([0-9]*)(?:\.([0-9]*))?(?:[eE]([+-]?[0-9]+))?)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, decimal) || (m[2].length() == 0 && m[3].length() == 0)) {
        throw DomainError("not a number: " + std::string(text));
    }
    const std::string digits = m[2].str() + m[3].str();
    long exponent = -static_cast<long>(m[3].length());
    if (m[4].matched) {
        const long e = std::stol(m[4].str());
        if (e > 10000 || e < -10000) {
            throw DomainError("exponent out of range: " + std::string(text));
        }
        exponent += e;
    }
    Rational value(Integer(digits.empty() ? "0" : digits, 10));
    const Rational ten(10);
    value = exponent >= 0 ? value * int_pow(ten, exponent) : value / int_pow(ten, -exponent);
    return m[1].str() == "-" ? -value : value;
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact Stirling-number toolkit", "stirlingkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "stirlingkit 0.1.0");

    SeqArgs seq_args;
    auto *seq = app.add_subcommand("seq", "Tabulate a sequence for n = 0..N");
    seq->add_option("name", seq_args.name, "Sequence name")->required()->check(CLI::IsMember(kSeqNames));
    seq->add_option("--n", seq_args.n, "Largest index")->check(CLI::Range(0L, kSeqMaxN));
    seq->add_option("--p", seq_args.p, "Order for hyperharmonic, power-sum, faulhaber, moment")
        ->check(CLI::Range(0L, 1000L));
    seq->add_option("--format", seq_args.format)->check(CLI::IsMember(kFormats));

    TriangleArgs tri_args;
    auto *tri = app.add_subcommand("triangle", "Rows 0..N of a Stirling triangle");
    tri->add_option("kind", tri_args.kind, "stirling2 (S) or stirling1 (s)")
        ->required()
        ->check(CLI::IsMember({"stirling2", "stirling1", "S", "s"}));
    tri->add_option("--n", tri_args.n, "Last row")->check(CLI::Range(0L, kTriangleMaxN));
    tri->add_option("--format", tri_args.format)->check(CLI::IsMember(kFormats));

    PolyArgs poly_args;
    auto *poly = app.add_subcommand("poly", "Coefficients or values of a polynomial family");
    poly->add_option("family", poly_args.family, "exp, geom, bernoulli, euler or binom")
        ->required()
        ->check(CLI::IsMember({"exp", "geom", "bernoulli", "euler", "binom"}));
    poly->add_option("--n", poly_args.n, "Index")->check(CLI::Range(0L, kPolyMaxN));
    poly->add_option("--x", poly_args.x, "Evaluate at this rational");
    poly->add_option("--xd", poly_args.xd, "Apply (xD)^p first")->check(CLI::Range(0L, 64L));
    poly->add_option("--format", poly_args.format)->check(CLI::IsMember(kFormats));

    SeriesArgs series_args;
    auto *series = app.add_subcommand("series", "Coefficients of an elementary generating function");
    series->add_option("kind", series_args.kind, "exp, expm1, log1p, geom, pow1p, dilog or monomial")
        ->required()
        ->check(CLI::IsMember({"exp", "expm1", "log1p", "geom", "pow1p", "dilog", "monomial"}));
    series->add_option("--order", series_args.order, "Truncation order")->check(CLI::Range(0L, kMaxOrder));
    series->add_option("--param", series_args.param, "x for pow1p, c for monomial");
    series->add_option("--degree", series_args.degree, "m for monomial")->check(CLI::Range(0L, kMaxOrder));
    series->add_option("--substitute", series_args.substitute, "Substitute t -> (mu/lambda)(e^(lambda t) - 1) "
                                                               "(stirling) or (mu/lambda) ln(1 + lambda t) (log)")
        ->check(CLI::IsMember({"none", "stirling", "log"}));
    series->add_option("--lambda", series_args.lambda);
    series->add_option("--mu", series_args.mu);
    series->add_option("--format", series_args.format)->check(CLI::IsMember(kFormats));

    TransformArgs tr_args;
    auto *tr = app.add_subcommand("transform", "Transform a JSON array of \"p/q\" strings");
    tr->add_option("--kind", tr_args.kind)
        ->check(CLI::IsMember({"stirling", "inv-stirling", "binomial", "alt-binomial", "weighted"}));
    tr->add_option("--lambda", tr_args.lambda, "Weight lambda for --kind weighted");
    tr->add_option("--mu", tr_args.mu, "Weight mu for --kind weighted");
    tr->add_option("--input", tr_args.input, "File to read, - for stdin");
    tr->add_option("--format", tr_args.format)->check(CLI::IsMember(kFormats));

    VerifyArgs verify_args;
    auto *verify = app.add_subcommand("verify", "Check identities and report counterexamples");
    auto *all_flag = verify->add_flag("--all", verify_args.all, "Every registered identity");
    auto *id_opt = verify->add_option("--id", verify_args.id, "One identity id");
    all_flag->excludes(id_opt);
    verify->add_option("--max-n", verify_args.max_n, "Upper bound on n")->check(CLI::Range(0L, 200L));
    verify->add_option("--order", verify_args.order, "Series truncation order")->check(CLI::Range(1L, kMaxOrder));
    verify->add_option("--eps", verify_args.eps, "Tolerance for the numeric check");
    verify->add_option("--jobs", verify_args.jobs, "Worker threads (default: hardware concurrency)");
    verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "text"}));

    EvalArgs eval_args;
    auto *ev = app.add_subcommand("eval", "Evaluate an expression exactly");
    ev->add_option("expr", eval_args.source, "Expression")->required();
    ev->add_option("--var", eval_args.vars, "Bind name=value");
    ev->add_option("--format", eval_args.format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> argv_store{"stirlingkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : argv_store) {
        argv.push_back(s.data());
    }

    auto synopsis = [&]() -> const CLI::App & {
        for (const auto *sub : {seq, tri, poly, series, tr, verify, ev}) {
            if (sub->parsed()) {
                return *sub;
            }
        }
        return app;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (verify->parsed() && !verify_args.all && verify_args.id.empty()) {
            throw CLI::ValidationError("verify", "one of --all or --id is required");
        }
    } catch (const CLI::Success &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << synopsis().help();
        return kExitUsage;
    }

    try {
        if (seq->parsed()) {
            return run_seq(seq_args, out);
        }
        if (tri->parsed()) {
            return run_triangle(tri_args, out);
        }
        if (poly->parsed()) {
            return run_poly(poly_args, out);
        }
        if (series->parsed()) {
            return run_series(series_args, out);
        }
        if (tr->parsed()) {
            return run_transform(tr_args, in, out);
        }
        if (verify->parsed()) {
            return run_verify(verify_args, out);
        }
        return run_eval(eval_args, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n\n" << synopsis().help();
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace stirlingkit::cli
