#pragma once

#include <cctype>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emsum/errors.hpp"
#include "emsum/jet.hpp"
#include "emsum/polynomial.hpp"
#include "emsum/rational.hpp"

namespace emsum {

// Parsed arithmetic expression over x1..xn with rational literals and the
// unary functions exp, log, sin, cos, sqrt.  Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := number | var | func '(' expr ')' | '(' expr ')'
// Numbers are decimal or contiguous 'p/q' rationals.
class Expression {
public:
    enum class Kind { Number, Var, Add, Sub, Mul, Div, Neg, Pow, Func };
    enum class Fn { Exp, Log, Sin, Cos, Sqrt };

    struct Node {
        Kind kind;
        Rational number;      // Kind::Number
        int var = -1;         // Kind::Var (0-based)
        long exponent = 0;    // Kind::Pow
        Fn fn = Fn::Exp;      // Kind::Func
        int lhs = -1, rhs = -1;
        std::size_t offset = 0;
    };

    int dims() const { return dims_; }
    const std::string& source() const { return src_; }

    double eval(std::span<const double> x) const { return eval_node<double>(root_, x); }
    Jet eval(std::span<const Jet> x) const { return eval_node<Jet>(root_, x); }

    // Exact conversion when the expression is polynomial (division only by
    // nonzero constants, no transcendental functions).
    std::optional<Polynomial> to_polynomial() const {
        try {
            return poly_node(root_);
        } catch (const NotPolynomialTag&) {
            return std::nullopt;
        }
    }

    static Expression parse(std::string_view src, int n);

private:
    struct NotPolynomialTag {};

    template <class T>
    T eval_node(int id, std::span<const T> x) const {
        const Node& nd = nodes_[static_cast<std::size_t>(id)];
        switch (nd.kind) {
            case Kind::Number:
                if constexpr (std::is_same_v<T, double>)
                    return nd.number.to_double();
                else
                    return x[0].like(nd.number.to_double());
            case Kind::Var:
                return x[static_cast<std::size_t>(nd.var)];
            case Kind::Add:
                return eval_node<T>(nd.lhs, x) + eval_node<T>(nd.rhs, x);
            case Kind::Sub:
                return eval_node<T>(nd.lhs, x) - eval_node<T>(nd.rhs, x);
            case Kind::Mul:
                return eval_node<T>(nd.lhs, x) * eval_node<T>(nd.rhs, x);
            case Kind::Div: {
                T num = eval_node<T>(nd.lhs, x);
                T den = eval_node<T>(nd.rhs, x);
                if constexpr (std::is_same_v<T, double>) {
                    if (den == 0.0) throw DomainError("division by zero during evaluation");
                }
                return num / den;
            }
            case Kind::Neg:
                return -eval_node<T>(nd.lhs, x);
            case Kind::Pow: {
                T base = eval_node<T>(nd.lhs, x);
                if constexpr (std::is_same_v<T, double>) {
                    if (base == 0.0 && nd.exponent < 0)
                        throw DomainError("zero to a negative power");
                    return std::pow(base, static_cast<double>(nd.exponent));
                } else {
                    return base.pow(nd.exponent);
                }
            }
            case Kind::Func: {
                T arg = eval_node<T>(nd.lhs, x);
                if constexpr (std::is_same_v<T, double>) {
                    switch (nd.fn) {
                        case Fn::Exp: return std::exp(arg);
                        case Fn::Log:
                            if (arg <= 0.0) throw DomainError("log of non-positive value");
                            return std::log(arg);
                        case Fn::Sin: return std::sin(arg);
                        case Fn::Cos: return std::cos(arg);
                        case Fn::Sqrt:
                            if (arg < 0.0) throw DomainError("sqrt of negative value");
                            return std::sqrt(arg);
                    }
                } else {
                    switch (nd.fn) {
                        case Fn::Exp: return exp(arg);
                        case Fn::Log: return log(arg);
                        case Fn::Sin: return sin(arg);
                        case Fn::Cos: return cos(arg);
                        case Fn::Sqrt: return sqrt(arg);
                    }
                }
                throw DomainError("unreachable");
            }
        }
        throw DomainError("unreachable");
    }

    Polynomial poly_node(int id) const {
        const Node& nd = nodes_[static_cast<std::size_t>(id)];
        switch (nd.kind) {
            case Kind::Number: return Polynomial::constant(dims_, nd.number);
            case Kind::Var: return Polynomial::variable(dims_, nd.var);
            case Kind::Add: return poly_node(nd.lhs) + poly_node(nd.rhs);
            case Kind::Sub: return poly_node(nd.lhs) - poly_node(nd.rhs);
            case Kind::Mul: return poly_node(nd.lhs) * poly_node(nd.rhs);
            case Kind::Neg: return -poly_node(nd.lhs);
            case Kind::Div: {
                Polynomial den = poly_node(nd.rhs);
                if (!den.is_constant() || den.constant_value().is_zero()) throw NotPolynomialTag{};
                return poly_node(nd.lhs) / den.constant_value();
            }
            case Kind::Pow: {
                Polynomial base = poly_node(nd.lhs);
                if (nd.exponent >= 0) return base.pow(nd.exponent);
                if (!base.is_constant() || base.constant_value().is_zero())
                    throw NotPolynomialTag{};
                return Polynomial::constant(dims_, base.constant_value().pow(nd.exponent));
            }
            case Kind::Func: throw NotPolynomialTag{};
        }
        throw NotPolynomialTag{};
    }

    int add_node(Node nd) {
        nodes_.push_back(std::move(nd));
        return static_cast<int>(nodes_.size()) - 1;
    }

    std::string src_;
    std::vector<Node> nodes_;
    int root_ = -1;
    int dims_ = 0;

    friend class ExpressionParser;
};

class ExpressionParser {
public:
    ExpressionParser(std::string_view src, int n) : src_(src), n_(n) {}

    Expression run() {
        Expression e;
        e.src_ = std::string(src_);
        e.dims_ = n_;
        out_ = &e;
        pos_ = 0;
        e.root_ = parse_expr();
        skip_ws();
        if (pos_ < src_.size())
            throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    using Kind = Expression::Kind;
    using Fn = Expression::Fn;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool consume_char(char c) {
        if (peek_char(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    int parse_expr() {
        skip_ws();
        int lhs;
        if (consume_char('-')) {
            std::size_t off = pos_ - 1;
            Expression::Node nd;
            nd.kind = Kind::Neg;
            nd.offset = off;
            nd.lhs = parse_term();
            lhs = out_->add_node(nd);
        } else {
            lhs = parse_term();
        }
        while (true) {
            skip_ws();
            if (consume_char('+')) {
                Expression::Node nd;
                nd.kind = Kind::Add;
                nd.offset = pos_ - 1;
                nd.lhs = lhs;
                nd.rhs = parse_term();
                lhs = out_->add_node(nd);
            } else if (consume_char('-')) {
                Expression::Node nd;
                nd.kind = Kind::Sub;
                nd.offset = pos_ - 1;
                nd.lhs = lhs;
                nd.rhs = parse_term();
                lhs = out_->add_node(nd);
            } else {
                return lhs;
            }
        }
    }

    int parse_term() {
        int lhs = parse_factor();
        while (true) {
            skip_ws();
            if (consume_char('*')) {
                Expression::Node nd;
                nd.kind = Kind::Mul;
                nd.offset = pos_ - 1;
                nd.lhs = lhs;
                nd.rhs = parse_factor();
                lhs = out_->add_node(nd);
            } else if (consume_char('/')) {
                Expression::Node nd;
                nd.kind = Kind::Div;
                nd.offset = pos_ - 1;
                nd.lhs = lhs;
                nd.rhs = parse_factor();
                lhs = out_->add_node(nd);
            } else {
                return lhs;
            }
        }
    }

    int parse_factor() {
        int base = parse_base();
        skip_ws();
        if (consume_char('^')) {
            std::size_t off = pos_ - 1;
            skip_ws();
            std::size_t start = pos_;
            if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ == dstart) throw SyntaxError("expected integer exponent after '^'", pos_);
            long e = std::stol(std::string(src_.substr(start, pos_ - start)));
            Expression::Node nd;
            nd.kind = Kind::Pow;
            nd.offset = off;
            nd.lhs = base;
            nd.exponent = e;
            return out_->add_node(nd);
        }
        return base;
    }

    int parse_base() {
        skip_ws();
        if (pos_ >= src_.size()) throw SyntaxError("expected operand", pos_);
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
        if (consume_char('(')) {
            int inner = parse_expr();
            skip_ws();
            if (peek_char(',')) throw ArityError("functions take a single argument", pos_);
            if (!consume_char(')')) throw SyntaxError("expected ')'", pos_);
            return inner;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    int parse_number() {
        std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        };
        digits();
        // Contiguous p/q is a rational literal; '/' with spaces is division.
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            ++pos_;
            digits();
        } else if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            std::size_t dstart = pos_;
            digits();
            if (pos_ == dstart) throw SyntaxError("expected digits after decimal point", pos_);
        }
        Expression::Node nd;
        nd.kind = Kind::Number;
        nd.offset = start;
        nd.number = Rational::parse(src_.substr(start, pos_ - start));
        return out_->add_node(nd);
    }

    int parse_identifier() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])))) ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            int idx = std::stoi(std::string(name.substr(1)));
            if (idx < 1 || idx > n_)
                throw UnknownIdentifier("variable " + std::string(name) + " out of range 1.." +
                                            std::to_string(n_),
                                        start);
            Expression::Node nd;
            nd.kind = Kind::Var;
            nd.offset = start;
            nd.var = idx - 1;
            return out_->add_node(nd);
        }
        Fn fn;
        if (name == "exp")
            fn = Fn::Exp;
        else if (name == "log")
            fn = Fn::Log;
        else if (name == "sin")
            fn = Fn::Sin;
        else if (name == "cos")
            fn = Fn::Cos;
        else if (name == "sqrt")
            fn = Fn::Sqrt;
        else
            throw UnknownIdentifier("unknown identifier '" + std::string(name) + "'", start);
        skip_ws();
        if (!consume_char('(')) throw SyntaxError("expected '(' after function name", pos_);
        if (peek_char(')')) throw ArityError("functions take a single argument", pos_);
        int arg = parse_expr();
        skip_ws();
        if (peek_char(',')) throw ArityError("functions take a single argument", pos_);
        if (!consume_char(')')) throw SyntaxError("expected ')'", pos_);
        Expression::Node nd;
        nd.kind = Kind::Func;
        nd.offset = start;
        nd.fn = fn;
        nd.lhs = arg;
        return out_->add_node(nd);
    }

    std::string_view src_;
    int n_;
    std::size_t pos_ = 0;
    Expression* out_ = nullptr;
};

inline Expression Expression::parse(std::string_view src, int n) {
    if (src.empty()) throw SyntaxError("empty expression", 0);
    return ExpressionParser(src, n).run();
}

inline Expression parse_expression(std::string_view src, int n) { return Expression::parse(src, n); }

}  // namespace emsum
