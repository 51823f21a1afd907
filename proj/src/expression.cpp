#include "mqapprox/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <utility>
#include <variant>

namespace mq {

namespace {

struct FuncEntry {
    const char* name;
    Func f;
};

constexpr std::array<FuncEntry, 6> kFuncs = {{{"sin", Func::Sin},
                                              {"cos", Func::Cos},
                                              {"exp", Func::Exp},
                                              {"abs", Func::Abs},
                                              {"sqrt", Func::Sqrt},
                                              {"log", Func::Log}}};

std::optional<Func> func_from_name(const std::string& name) {
    for (const auto& entry : kFuncs) {
        if (name == entry.name) {
            return entry.f;
        }
    }
    return std::nullopt;
}

}  // namespace

const char* func_name(Func f) {
    for (const auto& entry : kFuncs) {
        if (entry.f == f) {
            return entry.name;
        }
    }
    return "?";
}

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

struct Expression::Node {
    struct Decimal {
        double value;
    };
    struct RationalLit {
        Rational value;
    };
    struct Variable {};
    struct Negate {
        std::shared_ptr<const Node> operand;
    };
    struct Binary {
        BinaryOp op;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };
    struct Power {
        std::shared_ptr<const Node> base;
        long exponent;
    };
    struct Call {
        Func f;
        std::shared_ptr<const Node> argument;
    };
    std::variant<Decimal, RationalLit, Variable, Negate, Binary, Power, Call> data;
};

Expression::Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

template <class T>
NodePtr make_node(T data) {
    return std::make_shared<const Node>(Node{std::move(data)});
}

}  // namespace

Expression Expression::number(double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument("decimal literals must be finite and nonnegative");
    }
    if (value == 0.0) {
        value = 0.0;  // normalize away -0.0
    }
    return Expression(make_node(Node::Decimal{value}));
}

Expression Expression::rational(const Rational& value) {
    if (value < 0) {
        throw std::invalid_argument("rational literals must be nonnegative");
    }
    return Expression(make_node(Node::RationalLit{value}));
}

Expression Expression::variable() { return Expression(make_node(Node::Variable{})); }

Expression Expression::negate(Expression operand) {
    return Expression(make_node(Node::Negate{std::move(operand.root_)}));
}

Expression Expression::binary(BinaryOp op, Expression lhs, Expression rhs) {
    return Expression(make_node(Node::Binary{op, std::move(lhs.root_), std::move(rhs.root_)}));
}

Expression Expression::power(Expression base, long exponent) {
    return Expression(make_node(Node::Power{std::move(base.root_), exponent}));
}

Expression Expression::call(Func f, Expression argument) {
    return Expression(make_node(Node::Call{f, std::move(argument.root_)}));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double eval_node(const Node& node, double x);

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw EvalError(std::string(what) + " produced a non-finite value");
    }
    return v;
}

double eval_call(Func f, double arg) {
    switch (f) {
        case Func::Sin:
            return std::sin(arg);
        case Func::Cos:
            return std::cos(arg);
        case Func::Exp:
            return finite_or_throw(std::exp(arg), "exp");
        case Func::Abs:
            return std::fabs(arg);
        case Func::Sqrt:
            if (arg < 0.0) {
                throw EvalError("sqrt of a negative value");
            }
            return std::sqrt(arg);
        case Func::Log:
            if (arg <= 0.0) {
                throw EvalError("log of a nonpositive value");
            }
            return std::log(arg);
    }
    throw EvalError("unknown function");
}

double eval_node(const Node& node, double x) {
    return std::visit(
        [&](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Node::Decimal>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, Node::RationalLit>) {
                return to_double(n.value);
            } else if constexpr (std::is_same_v<T, Node::Variable>) {
                return x;
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                return -eval_node(*n.operand, x);
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                const double a = eval_node(*n.lhs, x);
                const double b = eval_node(*n.rhs, x);
                switch (n.op) {
                    case BinaryOp::Add:
                        return finite_or_throw(a + b, "addition");
                    case BinaryOp::Sub:
                        return finite_or_throw(a - b, "subtraction");
                    case BinaryOp::Mul:
                        return finite_or_throw(a * b, "multiplication");
                    case BinaryOp::Div:
                        return finite_or_throw(a / b, "division");
                }
                throw EvalError("unknown operator");
            } else if constexpr (std::is_same_v<T, Node::Power>) {
                const double base = eval_node(*n.base, x);
                return finite_or_throw(std::pow(base, static_cast<double>(n.exponent)),
                                       "power");
            } else {
                return eval_call(n.f, eval_node(*n.argument, x));
            }
        },
        node.data);
}

}  // namespace

double Expression::evaluate(double x) const { return eval_node(*root_, x); }

// ---------------------------------------------------------------------------
// Printing. Levels mirror the grammar: 0 expr, 1 term, 2 factor, 3 atom.
// A child is parenthesized when its own level is below what its slot
// requires, which is exactly what makes the output re-parse identically.

namespace {

int node_level(const Node& node) {
    return std::visit(
        [](const auto& n) -> int {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Node::Binary>) {
                return (n.op == BinaryOp::Add || n.op == BinaryOp::Sub) ? 0 : 1;
            } else if constexpr (std::is_same_v<T, Node::Power>) {
                return 2;
            } else {
                return 3;  // literals, x, calls, and negation are atoms
            }
        },
        node.data);
}

std::string decimal_text(double value) {
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    std::string text(buf.data(), res.ptr);
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos) {
        text += ".0";  // keep the token a decimal, not an integer
    }
    return text;
}

void print_node(const Node& node, int required_level, std::string& out);

void print_child(const Node& node, int required_level, std::string& out) {
    if (node_level(node) < required_level) {
        out += '(';
        print_node(node, 0, out);
        out += ')';
    } else {
        print_node(node, 0, out);
    }
}

void print_node(const Node& node, int, std::string& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Node::Decimal>) {
                out += decimal_text(n.value);
            } else if constexpr (std::is_same_v<T, Node::RationalLit>) {
                out += rational_to_string(n.value);
            } else if constexpr (std::is_same_v<T, Node::Variable>) {
                out += 'x';
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                out += '-';
                print_child(*n.operand, 3, out);
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                const bool additive = n.op == BinaryOp::Add || n.op == BinaryOp::Sub;
                const int level = additive ? 0 : 1;
                const char* symbol = n.op == BinaryOp::Add   ? " + "
                                     : n.op == BinaryOp::Sub ? " - "
                                     : n.op == BinaryOp::Mul ? " * "
                                                             : " / ";
                print_child(*n.lhs, level, out);
                out += symbol;
                print_child(*n.rhs, level + 1, out);
            } else if constexpr (std::is_same_v<T, Node::Power>) {
                print_child(*n.base, 3, out);
                out += '^';
                out += std::to_string(n.exponent);
            } else {
                out += func_name(n.f);
                out += '(';
                print_node(*n.argument, 0, out);
                out += ')';
            }
        },
        node.data);
}

}  // namespace

std::string Expression::to_string() const {
    std::string out;
    print_node(*root_, 0, out);
    return out;
}

// ---------------------------------------------------------------------------
// Structural equality

namespace {

bool nodes_equal(const Node& a, const Node& b) {
    if (a.data.index() != b.data.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.data);
            if constexpr (std::is_same_v<T, Node::Decimal>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, Node::RationalLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, Node::Variable>) {
                return true;
            } else if constexpr (std::is_same_v<T, Node::Negate>) {
                return nodes_equal(*na.operand, *nb.operand);
            } else if constexpr (std::is_same_v<T, Node::Binary>) {
                return na.op == nb.op && nodes_equal(*na.lhs, *nb.lhs) &&
                       nodes_equal(*na.rhs, *nb.rhs);
            } else if constexpr (std::is_same_v<T, Node::Power>) {
                return na.exponent == nb.exponent && nodes_equal(*na.base, *nb.base);
            } else {
                return na.f == nb.f && nodes_equal(*na.argument, *nb.argument);
            }
        },
        a.data);
}

}  // namespace

bool operator==(const Expression& a, const Expression& b) {
    return nodes_equal(*a.root_, *b.root_);
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expression run() {
        Expression e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expression parse_expr() {
        Expression lhs = parse_term();
        for (;;) {
            if (consume('+')) {
                lhs = Expression::binary(BinaryOp::Add, std::move(lhs), parse_term());
            } else if (consume('-')) {
                lhs = Expression::binary(BinaryOp::Sub, std::move(lhs), parse_term());
            } else {
                return lhs;
            }
        }
    }

    Expression parse_term() {
        Expression lhs = parse_factor();
        for (;;) {
            if (consume('*')) {
                lhs = Expression::binary(BinaryOp::Mul, std::move(lhs), parse_factor());
            } else if (consume('/')) {
                lhs = Expression::binary(BinaryOp::Div, std::move(lhs), parse_factor());
            } else {
                return lhs;
            }
        }
    }

    Expression parse_factor() {
        Expression base = parse_atom();
        if (consume('^')) {
            return Expression::power(std::move(base), parse_exponent());
        }
        return base;
    }

    long parse_exponent() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
        }
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == digits) {
            throw ParseError("expected an integer exponent", pos_);
        }
        long value = 0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
            throw ParseError("exponent out of range", start);
        }
        return value;
    }

    Expression parse_atom() {
        if (at_end()) {
            throw ParseError("expected an expression", pos_);
        }
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expression inner = parse_expr();
            if (!consume(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return Expression::negate(parse_atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_name();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // number := digits ('.' digits)? ([eE] [+-]? digits)?   decimal
    //         | digits '/' digits                           adjacent rational
    //         | digits                                      integer
    Expression parse_number() {
        const std::size_t start = pos_;
        scan_digits("expected digits");
        bool decimal = false;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            scan_digits("expected digits after the decimal point");
            decimal = true;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                ++pos_;
            }
            scan_digits("expected digits in the exponent");
            decimal = true;
        }
        if (decimal) {
            const std::string token = text_.substr(start, pos_ - start);
            const double value = std::strtod(token.c_str(), nullptr);
            if (!std::isfinite(value)) {
                throw ParseError("decimal literal overflows", start);
            }
            return Expression::number(value);
        }
        // "p/q" with no intervening whitespace is a single rational token.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            const std::size_t slash = pos_;
            ++pos_;
            scan_digits("expected digits");
            // Explicit base 10: a leading zero must not switch GMP to octal.
            const Integer den(text_.substr(slash + 1, pos_ - slash - 1), 10);
            if (den == 0) {
                throw ParseError("rational literal has a zero denominator", slash + 1);
            }
            return Expression::rational(
                make_rational(Integer(text_.substr(start, slash - start), 10), den));
        }
        return Expression::rational(
            make_rational(Integer(text_.substr(start, pos_ - start), 10), Integer(1)));
    }

    void scan_digits(const char* message) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError(message, pos_);
        }
    }

    Expression parse_name() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "x") {
            return Expression::variable();
        }
        const auto f = func_from_name(name);
        if (!f) {
            throw ParseError("unknown function '" + name + "'", start);
        }
        if (!consume('(')) {
            throw ParseError("expected '(' after '" + name + "'", pos_);
        }
        Expression arg = parse_expr();
        if (!consume(')')) {
            throw ParseError("expected ')'", pos_);
        }
        return Expression::call(*f, std::move(arg));
    }
};

}  // namespace

Expression parse_expression(const std::string& text) { return Parser(text).run(); }

}  // namespace mq
