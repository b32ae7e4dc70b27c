#ifndef STIRLINGKIT_EXPR_HPP
#define STIRLINGKIT_EXPR_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <stirlingkit/exact.hpp>

namespace stirlingkit
{

class SeqContext;

class ParseError : public std::runtime_error
{
public:
    ParseError(long line, long column, std::vector<std::string> expected, std::string found);

    long line() const { return line_; }
    long column() const { return column_; }
    const std::vector<std::string> &expected() const { return expected_; }
    const std::string &found() const { return found_; }

private:
    long line_;
    long column_;
    std::vector<std::string> expected_;
    std::string found_;
};

// Unbound variables, unknown functions, arity mismatches, bad bounds or
// exponents. Domain errors from the sequence library pass through as
// DomainError.
class EvalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class NodeKind { integer, variable, negate, binary, call, sum };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::integer;
    Integer value;
    // variable name, function name, or summation index
    std::string name;
    // one of + - * / ^ for binary nodes
    char op = 0;
    // negate: operand; binary: lhs, rhs; call: arguments; sum: lo, hi, body
    std::vector<NodePtr> children;
};

bool operator==(const Node &a, const Node &b);

class Ast
{
public:
    explicit Ast(NodePtr root);

    const Node &root() const { return *root_; }
    // Canonical text with minimal parentheses; parse(to_string()) gives
    // back an equal tree.
    std::string to_string() const;
    // Variables not bound by an enclosing sum.
    std::set<std::string> free_variables() const;

    friend bool operator==(const Ast &a, const Ast &b) { return *a.root_ == *b.root_; }

private:
    NodePtr root_;
};

inline constexpr long kMaxSumTerms = 1000000;

Ast parse(std::string_view source);

struct Env {
    std::map<std::string, Rational, std::less<>> vars;
    const SeqContext *ctx = nullptr;
};

// Names and arities of the built-in functions.
const std::map<std::string, int, std::less<>> &builtin_functions();

Rational eval(const Ast &ast, const Env &env);
// Parses and evaluates with a private context when env.ctx is null.
Rational eval(std::string_view source, const Env &env = {});

} // namespace stirlingkit

#endif
