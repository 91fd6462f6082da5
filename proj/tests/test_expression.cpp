#include <gtest/gtest.h>

#include "emsum/expression.hpp"

using namespace emsum;

namespace {
double ev(const Expression& e, std::vector<double> x) { return e.eval(std::span<const double>(x)); }
}  // namespace

TEST(Parser, Basics) {
    auto e = parse_expression("x1", 2);
    EXPECT_DOUBLE_EQ(ev(e, {3.0, 4.0}), 3.0);

    auto f = parse_expression("1/(1+x1+x2)", 2);
    EXPECT_DOUBLE_EQ(ev(f, {0.0, 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(ev(f, {1.0, 2.0}), 0.25);

    auto g = parse_expression("x1^2 * x2 - 3*x1 + 2", 2);
    EXPECT_DOUBLE_EQ(ev(g, {2.0, 5.0}), 4.0 * 5.0 - 6.0 + 2.0);
}

TEST(Parser, Precedence) {
    EXPECT_DOUBLE_EQ(ev(parse_expression("2+3*4", 1), {0}), 14.0);
    EXPECT_DOUBLE_EQ(ev(parse_expression("(2+3)*4", 1), {0}), 20.0);
    EXPECT_DOUBLE_EQ(ev(parse_expression("2*x1^3", 1), {2}), 16.0);
    EXPECT_DOUBLE_EQ(ev(parse_expression("x1^-2", 1), {2}), 0.25);
    EXPECT_DOUBLE_EQ(ev(parse_expression("-x1 + 1", 1), {3}), -2.0);
}

TEST(Parser, RationalLiterals) {
    // Contiguous p/q is a literal; spaced '/' is division. Both exact here.
    EXPECT_DOUBLE_EQ(ev(parse_expression("3/4", 1), {0}), 0.75);
    EXPECT_DOUBLE_EQ(ev(parse_expression("3 / 4", 1), {0}), 0.75);
    EXPECT_DOUBLE_EQ(ev(parse_expression("0.125", 1), {0}), 0.125);
    // Literal binds before '^': 3/4^2 = (3/4)^2.
    EXPECT_DOUBLE_EQ(ev(parse_expression("3/4^2", 1), {0}), 0.5625);
}

TEST(Parser, Functions) {
    auto e = parse_expression("exp(x1) * sin(x2) + sqrt(x1+1) - log(x1+1) + cos(x2)", 2);
    double x1 = 0.3, x2 = 0.7;
    EXPECT_NEAR(ev(e, {x1, x2}),
                std::exp(x1) * std::sin(x2) + std::sqrt(x1 + 1) - std::log(x1 + 1) + std::cos(x2),
                1e-15);
}

TEST(Parser, ErrorsWithOffsets) {
    try {
        parse_expression("x1 +", 2);
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.offset, 4u);
    }
    try {
        parse_expression("x1 + y2", 2);
        FAIL() << "expected UnknownIdentifier";
    } catch (const UnknownIdentifier& e) {
        EXPECT_EQ(e.offset, 5u);
    }
    EXPECT_THROW(parse_expression("x3", 2), UnknownIdentifier);
    EXPECT_THROW(parse_expression("x0", 2), UnknownIdentifier);
    EXPECT_THROW(parse_expression("foo(x1)", 2), UnknownIdentifier);
    EXPECT_THROW(parse_expression("exp(x1, x2)", 2), ArityError);
    EXPECT_THROW(parse_expression("exp()", 2), ArityError);
    EXPECT_THROW(parse_expression("(x1", 2), SyntaxError);
    EXPECT_THROW(parse_expression("", 2), SyntaxError);
    EXPECT_THROW(parse_expression("x1 x2", 2), SyntaxError);
}

TEST(Parser, EvaluationDomainErrors) {
    auto e = parse_expression("log(x1)", 1);
    EXPECT_THROW(ev(e, {-1.0}), DomainError);
    auto d = parse_expression("1/x1", 1);
    EXPECT_THROW(ev(d, {0.0}), DomainError);
}

TEST(ToPolynomial, ConvertsPolynomials) {
    auto p = parse_expression("x1^2*x2 - 1/2*x1 + 3/4", 2).to_polynomial();
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->degree(), 3);
    RationalVector at = {Rational(2), Rational(3)};
    EXPECT_EQ(p->eval(at), Rational(4) * Rational(3) - Rational(1) + Rational(3, 4));

    auto q = parse_expression("(x1+x2)^3 / 2", 2).to_polynomial();
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(q->degree(), 3);
}

TEST(ToPolynomial, RejectsNonPolynomials) {
    EXPECT_FALSE(parse_expression("1/(1+x1+x2)", 2).to_polynomial().has_value());
    EXPECT_FALSE(parse_expression("exp(x1)", 1).to_polynomial().has_value());
    EXPECT_FALSE(parse_expression("x1^-1", 1).to_polynomial().has_value());
}
