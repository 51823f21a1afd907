#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

#include "mqapprox/rational.hpp"

namespace mq {

/// Syntax error; offset is the byte position in the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Domain or overflow failure while evaluating an expression.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class BinaryOp { Add, Sub, Mul, Div };
enum class Func { Sin, Cos, Exp, Abs, Sqrt, Log };

const char* func_name(Func f);

/// Immutable expression tree over one variable x.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := atom ('^' integer)?
///   atom   := number | 'x' | name '(' expr ')' | '(' expr ')' | '-' atom
///
/// A number is a nonnegative integer, an adjacent integer/integer rational
/// ("3/4", no spaces), or a decimal ("0.5", "2.5e-3"). Negation binds at
/// the atom level, so -x^2 is (-x)^2. to_string() prints a form that
/// re-parses to a structurally identical tree.
class Expression {
public:
    struct Node;  // defined in the implementation

    static Expression number(double value);
    static Expression rational(const Rational& value);
    static Expression variable();
    static Expression negate(Expression operand);
    static Expression binary(BinaryOp op, Expression lhs, Expression rhs);
    static Expression power(Expression base, long exponent);
    static Expression call(Func f, Expression argument);

    double evaluate(double x) const;
    std::string to_string() const;

    friend bool operator==(const Expression& a, const Expression& b);
    friend bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }

private:
    explicit Expression(std::shared_ptr<const Node> root);
    std::shared_ptr<const Node> root_;
};

Expression parse_expression(const std::string& text);

}  // namespace mq
