#include <stirlingkit/expr.hpp>

#include <algorithm>
#include <cctype>
#include <functional>

#include <stirlingkit/seq.hpp>

namespace stirlingkit
{

namespace
{

std::string join(const std::vector<std::string> &items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? ", " : "") + items[i];
    }
    return out;
}

std::string parse_message(long line, long column, const std::vector<std::string> &expected,
                          const std::string &found)
{
    std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": syntax error";
    if (!expected.empty()) {
        msg += ", expected " + join(expected);
    }
    return msg + "; found " + found;
}

} // namespace

ParseError::ParseError(long line, long column, std::vector<std::string> expected, std::string found)
    : std::runtime_error(parse_message(line, column, expected, found)), line_(line), column_(column),
      expected_(std::move(expected)), found_(std::move(found))
{
}

bool operator==(const Node &a, const Node &b)
{
    if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.op != b.op ||
        a.children.size() != b.children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!(*a.children[i] == *b.children[i])) {
            return false;
        }
    }
    return true;
}

namespace
{

// ---- lexer ----

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, comma, equals, dotdot, end, bad };

struct Token {
    Tok kind;
    std::string text;
    long line;
    long column;
};

std::string describe(Tok kind)
{
    switch (kind) {
    case Tok::integer:
        return "integer";
    case Tok::ident:
        return "identifier";
    case Tok::plus:
        return "'+'";
    case Tok::minus:
        return "'-'";
    case Tok::star:
        return "'*'";
    case Tok::slash:
        return "'/'";
    case Tok::caret:
        return "'^'";
    case Tok::lparen:
        return "'('";
    case Tok::rparen:
        return "')'";
    case Tok::comma:
        return "','";
    case Tok::equals:
        return "'='";
    case Tok::dotdot:
        return "'..'";
    case Tok::end:
        return "end of input";
    case Tok::bad:
        break;
    }
    return "invalid character";
}

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    long line = 1;
    long column = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::size_t len) {
        out.push_back({kind, std::string(src.substr(i, len)), line, column});
        i += len;
        column += static_cast<long>(len);
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++column;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            push(Tok::integer, j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            push(Tok::ident, j - i);
            continue;
        }
        switch (c) {
        case '+':
            push(Tok::plus, 1);
            break;
        case '-':
            push(Tok::minus, 1);
            break;
        case '*':
            push(Tok::star, 1);
            break;
        case '/':
            push(Tok::slash, 1);
            break;
        case '^':
            push(Tok::caret, 1);
            break;
        case '(':
            push(Tok::lparen, 1);
            break;
        case ')':
            push(Tok::rparen, 1);
            break;
        case ',':
            push(Tok::comma, 1);
            break;
        case '=':
            push(Tok::equals, 1);
            break;
        case '.':
            if (i + 1 < src.size() && src[i + 1] == '.') {
                push(Tok::dotdot, 2);
            } else {
                push(Tok::bad, 1);
            }
            break;
        default:
            push(Tok::bad, 1);
            break;
        }
        // Nothing after a bad character is looked at.
        if (out.back().kind == Tok::bad) {
            return out;
        }
    }
    out.push_back({Tok::end, "", line, column});
    return out;
}

// ---- parser ----

NodePtr make(Node node)
{
    return std::make_shared<const Node>(std::move(node));
}

class Parser
{
public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    NodePtr parse_all()
    {
        NodePtr root = expr();
        expect(Tok::end);
        return root;
    }

private:
    const Token &peek() const { return tokens_[pos_]; }

    // Each failed probe at the current position widens the set reported on error.
    bool check(Tok kind)
    {
        if (peek().kind == kind) {
            return true;
        }
        expected_.insert(describe(kind));
        return false;
    }

    bool check_keyword(std::string_view word)
    {
        if (peek().kind == Tok::ident && peek().text == word) {
            return true;
        }
        expected_.insert("'" + std::string(word) + "'");
        return false;
    }

    Token advance()
    {
        expected_.clear();
        return tokens_[pos_++];
    }

    Token expect(Tok kind)
    {
        if (!check(kind)) {
            fail();
        }
        return advance();
    }

    [[noreturn]] void fail() const
    {
        const Token &t = peek();
        std::string found;
        switch (t.kind) {
        case Tok::end:
            found = "end of input";
            break;
        case Tok::bad:
            found = "invalid character '" + t.text + "'";
            break;
        default:
            found = "'" + t.text + "'";
            break;
        }
        throw ParseError(t.line, t.column, {expected_.begin(), expected_.end()}, found);
    }

    NodePtr binary(char op, NodePtr lhs, NodePtr rhs)
    {
        Node n;
        n.kind = NodeKind::binary;
        n.op = op;
        n.children = {std::move(lhs), std::move(rhs)};
        return make(std::move(n));
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        for (;;) {
            if (check(Tok::plus)) {
                advance();
                lhs = binary('+', lhs, term());
            } else if (check(Tok::minus)) {
                advance();
                lhs = binary('-', lhs, term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        for (;;) {
            if (check(Tok::star)) {
                advance();
                lhs = binary('*', lhs, unary());
            } else if (check(Tok::slash)) {
                advance();
                lhs = binary('/', lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr unary()
    {
        if (check(Tok::minus)) {
            advance();
            Node n;
            n.kind = NodeKind::negate;
            n.children = {unary()};
            return make(std::move(n));
        }
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (check(Tok::caret)) {
            advance();
            return binary('^', base, unary());
        }
        return base;
    }

    NodePtr atom()
    {
        if (check_keyword("sum")) {
            advance();
            expect(Tok::lparen);
            Node n;
            n.kind = NodeKind::sum;
            n.name = expect(Tok::ident).text;
            if (n.name == "sum") {
                --pos_;
                expected_ = {describe(Tok::ident)};
                fail();
            }
            expect(Tok::equals);
            NodePtr lo = expr();
            expect(Tok::dotdot);
            NodePtr hi = expr();
            expect(Tok::comma);
            NodePtr body = expr();
            expect(Tok::rparen);
            n.children = {lo, hi, body};
            return make(std::move(n));
        }
        if (check(Tok::integer)) {
            Node n;
            n.kind = NodeKind::integer;
            n.value = Integer(advance().text, 10);
            return make(std::move(n));
        }
        if (check(Tok::ident)) {
            Node n;
            n.name = advance().text;
            if (check(Tok::lparen)) {
                advance();
                n.kind = NodeKind::call;
                if (!check(Tok::rparen)) {
                    n.children.push_back(expr());
                    while (check(Tok::comma)) {
                        advance();
                        n.children.push_back(expr());
                    }
                }
                expect(Tok::rparen);
            } else {
                n.kind = NodeKind::variable;
            }
            return make(std::move(n));
        }
        if (check(Tok::lparen)) {
            advance();
            NodePtr inner = expr();
            expect(Tok::rparen);
            return inner;
        }
        check(Tok::minus);
        fail();
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string> expected_;
};

// ---- printer ----

// Binding strength of each node as the grammar sees it.
int level(const Node &n)
{
    switch (n.kind) {
    case NodeKind::negate:
        return 3;
    case NodeKind::binary:
        return n.op == '^' ? 4 : (n.op == '*' || n.op == '/') ? 2 : 1;
    default:
        return 5;
    }
}

void print(const Node &n, int min_level, std::string &out)
{
    const bool wrap = level(n) < min_level;
    if (wrap) {
        out += '(';
    }
    switch (n.kind) {
    case NodeKind::integer:
        out += n.value.get_str();
        break;
    case NodeKind::variable:
        out += n.name;
        break;
    case NodeKind::negate:
        out += '-';
        print(*n.children[0], 3, out);
        break;
    case NodeKind::binary:
        if (n.op == '^') {
            print(*n.children[0], 5, out);
            out += '^';
            print(*n.children[1], 3, out);
        } else if (n.op == '+' || n.op == '-') {
            print(*n.children[0], 1, out);
            out += n.op == '+' ? " + " : " - ";
            print(*n.children[1], 2, out);
        } else {
            print(*n.children[0], 2, out);
            out += n.op;
            print(*n.children[1], 3, out);
        }
        break;
    case NodeKind::call:
        out += n.name + "(";
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            if (i) {
                out += ", ";
            }
            print(*n.children[i], 1, out);
        }
        out += ')';
        break;
    case NodeKind::sum:
        out += "sum(" + n.name + " = ";
        print(*n.children[0], 1, out);
        out += "..";
        print(*n.children[1], 1, out);
        out += ", ";
        print(*n.children[2], 1, out);
        out += ')';
        break;
    }
    if (wrap) {
        out += ')';
    }
}

void collect_free(const Node &n, std::vector<std::string> &bound, std::set<std::string> &out)
{
    if (n.kind == NodeKind::variable) {
        if (std::find(bound.begin(), bound.end(), n.name) == bound.end()) {
            out.insert(n.name);
        }
        return;
    }
    if (n.kind == NodeKind::sum) {
        // Bounds are evaluated outside the index's scope.
        collect_free(*n.children[0], bound, out);
        collect_free(*n.children[1], bound, out);
        bound.push_back(n.name);
        collect_free(*n.children[2], bound, out);
        bound.pop_back();
        return;
    }
    for (const auto &c : n.children) {
        collect_free(*c, bound, out);
    }
}

// ---- evaluator ----

struct Scope {
    const Scope *parent;
    const std::string &name;
    const Rational &value;
};

long integer_arg(const Rational &v, std::string_view what)
{
    if (!v.is_integer()) {
        throw EvalError(std::string(what) + " must be an integer, got " + v.to_string());
    }
    const Integer i = v.to_integer();
    if (!i.fits_slong_p()) {
        throw EvalError(std::string(what) + " is out of range: " + v.to_string());
    }
    return i.get_si();
}

class Evaluator
{
public:
    Evaluator(const Env &env, const SeqContext &ctx) : env_(env), ctx_(ctx) {}

    Rational run(const Node &n, const Scope *scope) const
    {
        switch (n.kind) {
        case NodeKind::integer:
            return Rational(n.value);
        case NodeKind::variable:
            return lookup(n.name, scope);
        case NodeKind::negate:
            return -run(*n.children[0], scope);
        case NodeKind::binary:
            return binary(n, scope);
        case NodeKind::call:
            return call(n, scope);
        case NodeKind::sum:
            return sum(n, scope);
        }
        throw EvalError("corrupt expression tree");
    }

private:
    Rational lookup(const std::string &name, const Scope *scope) const
    {
        for (const Scope *s = scope; s; s = s->parent) {
            if (s->name == name) {
                return s->value;
            }
        }
        const auto it = env_.vars.find(name);
        if (it == env_.vars.end()) {
            throw EvalError("unbound variable '" + name + "'");
        }
        return it->second;
    }

    Rational binary(const Node &n, const Scope *scope) const
    {
        const Rational a = run(*n.children[0], scope);
        const Rational b = run(*n.children[1], scope);
        switch (n.op) {
        case '+':
            return a + b;
        case '-':
            return a - b;
        case '*':
            return a * b;
        case '/':
            if (b.is_zero()) {
                throw DomainError("division by zero");
            }
            return a / b;
        default:
            break;
        }
        const long e = integer_arg(b, "exponent");
        if (e < 0) {
            throw EvalError("exponent must be nonnegative, got " + b.to_string());
        }
        return int_pow(a, e);
    }

    Rational sum(const Node &n, const Scope *scope) const
    {
        const long lo = integer_arg(run(*n.children[0], scope), "lower summation bound");
        const long hi = integer_arg(run(*n.children[1], scope), "upper summation bound");
        Rational acc;
        if (lo > hi) {
            return acc;
        }
        if (Integer(hi) - Integer(lo) + 1 > kMaxSumTerms) {
            throw EvalError("summation over " + to_string(Integer(hi) - Integer(lo) + 1) + " terms exceeds the cap of " +
                            std::to_string(kMaxSumTerms));
        }
        for (long k = lo;; ++k) {
            const Rational index(k);
            const Scope inner{scope, n.name, index};
            acc += run(*n.children[2], &inner);
            if (k == hi) {
                break;
            }
        }
        return acc;
    }

    Rational call(const Node &n, const Scope *scope) const
    {
        const auto &table = builtin_functions();
        const auto it = table.find(n.name);
        if (it == table.end()) {
            throw EvalError("unknown function '" + n.name + "'");
        }
        const int arity = it->second;
        if (static_cast<int>(n.children.size()) != arity) {
            throw EvalError(n.name + " takes " + std::to_string(arity) + " argument" + (arity == 1 ? "" : "s") +
                            ", got " + std::to_string(n.children.size()));
        }
        std::vector<Rational> args;
        for (const auto &c : n.children) {
            args.push_back(run(*c, scope));
        }
        const std::string &f = n.name;
        auto i = [&](std::size_t idx) { return integer_arg(args[idx], f + " argument " + std::to_string(idx + 1)); };

        if (f == "C") {
            // Generalized binomial in the upper argument.
            return args[0].is_integer() ? Rational(stirlingkit::binomial(i(0), i(1)))
                                        : stirlingkit::binomial(args[0], i(1));
        }
        if (f == "S") {
            return Rational(ctx_.stirling2(i(0), i(1)));
        }
        if (f == "s") {
            return Rational(ctx_.stirling1(i(0), i(1)));
        }
        if (f == "fact") {
            return Rational(ctx_.factorial(i(0)));
        }
        if (f == "H") {
            return ctx_.harmonic(i(0));
        }
        if (f == "h") {
            return ctx_.hyperharmonic(i(0), i(1));
        }
        if (f == "B") {
            return ctx_.bernoulli(i(0));
        }
        if (f == "Bplus") {
            return ctx_.bernoulli_plus(i(0));
        }
        if (f == "E") {
            return ctx_.euler_number(i(0));
        }
        if (f == "D") {
            return Rational(ctx_.derangement(i(0)));
        }
        if (f == "bell") {
            return Rational(ctx_.bell(i(0)));
        }
        if (f == "fubini") {
            return Rational(ctx_.fubini(i(0)));
        }
        if (f == "M") {
            return Rational(ctx_.moment(i(0), i(1)));
        }
        return Rational(ctx_.power_sum(i(0), i(1)));
    }

    const Env &env_;
    const SeqContext &ctx_;
};

} // namespace

Ast::Ast(NodePtr root) : root_(std::move(root))
{
    if (!root_) {
        throw std::invalid_argument("Ast needs a root node");
    }
}

std::string Ast::to_string() const
{
    std::string out;
    print(*root_, 1, out);
    return out;
}

std::set<std::string> Ast::free_variables() const
{
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(*root_, bound, out);
    return out;
}

Ast parse(std::string_view source)
{
    return Ast(Parser(source).parse_all());
}

const std::map<std::string, int, std::less<>> &builtin_functions()
{
    static const std::map<std::string, int, std::less<>> table{
        {"S", 2},    {"s", 2},     {"C", 2}, {"fact", 1}, {"H", 1},      {"h", 2}, {"B", 1},
        {"Bplus", 1}, {"E", 1},    {"D", 1}, {"bell", 1}, {"fubini", 1}, {"M", 2}, {"powsum", 2},
    };
    return table;
}

Rational eval(const Ast &ast, const Env &env)
{
    if (env.ctx) {
        return Evaluator(env, *env.ctx).run(ast.root(), nullptr);
    }
    SeqContext ctx;
    return Evaluator(env, ctx).run(ast.root(), nullptr);
}

Rational eval(std::string_view source, const Env &env)
{
    return eval(parse(source), env);
}

} // namespace stirlingkit
