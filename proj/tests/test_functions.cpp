#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "emsum/smooth_function.hpp"

using namespace emsum;

namespace {

ExpressionFunction fn(const std::string& src, int n) {
    return ExpressionFunction(parse_expression(src, n));
}

using Dirs = std::vector<std::vector<double>>;

}  // namespace

TEST(DirDeriv, LinearExamples) {
    auto f = fn("x1", 2);
    EXPECT_DOUBLE_EQ(dirderiv(f, {1.0, 0.0}, Dirs{{-1.0, 0.0}}), -1.0);
    // Second derivative of a linear function vanishes for any directions.
    EXPECT_DOUBLE_EQ(dirderiv(f, {0.3, 0.7}, Dirs{{1.0, 2.0}, {3.0, 4.0}}), 0.0);
    // Empty direction list = evaluation.
    EXPECT_DOUBLE_EQ(dirderiv(f, {5.0, 0.0}, Dirs{}), 5.0);
}

TEST(DirDeriv, ReciprocalGradient) {
    auto f = fn("1/(1+x1+x2)", 2);
    EXPECT_NEAR(dirderiv(f, {0.0, 0.0}, Dirs{{1.0, 1.0}}), -2.0, 1e-14);
    // D^2 f . ((1,0),(0,1)) = 2/(1+x1+x2)^3 at 0 = 2.
    EXPECT_NEAR(dirderiv(f, {0.0, 0.0}, Dirs{{1.0, 0.0}, {0.0, 1.0}}), 2.0, 1e-13);
}

TEST(DirDeriv, HigherOrderExact) {
    auto f = fn("exp(x1)", 1);
    for (int q = 1; q <= 6; ++q) {
        Dirs dirs(static_cast<std::size_t>(q), {1.0});
        EXPECT_NEAR(dirderiv(f, {0.5}, dirs), std::exp(0.5), 1e-12) << q;
    }
    auto g = fn("x1^3*x2", 2);
    // D^3 g . ((1,0),(1,0),(0,1)) = d^3/dx1^2 dx2 (x1^3 x2) = 6 x1.
    EXPECT_NEAR(dirderiv(g, {2.0, 7.0}, Dirs{{1, 0}, {1, 0}, {0, 1}}), 12.0, 1e-12);
}

TEST(DirDeriv, SymmetryUnderPermutation) {
    auto f = fn("sin(x1)*exp(x2) + x1^2*x2^3", 2);
    std::vector<double> x = {0.4, -0.3};
    Dirs dirs = {{1.0, 2.0}, {-1.0, 0.5}, {0.25, 1.0}};
    double base = dirderiv(f, x, dirs);
    Dirs perm = {dirs[2], dirs[0], dirs[1]};
    Dirs perm2 = {dirs[1], dirs[2], dirs[0]};
    EXPECT_NEAR(dirderiv(f, x, perm), base, 1e-12 * (1.0 + std::abs(base)));
    EXPECT_NEAR(dirderiv(f, x, perm2), base, 1e-12 * (1.0 + std::abs(base)));
}

TEST(DirDeriv, Multilinearity) {
    auto f = fn("exp(x1*x2) + cos(x1)", 2);
    std::vector<double> x = {0.2, 0.6};
    std::vector<double> u = {1.0, -0.5}, w = {0.3, 2.0}, rest = {1.0, 1.0};
    double a = 2.25, b = -1.5;
    std::vector<double> combo = {a * u[0] + b * w[0], a * u[1] + b * w[1]};
    double lhs = dirderiv(f, x, Dirs{combo, rest});
    double rhs = a * dirderiv(f, x, Dirs{u, rest}) + b * dirderiv(f, x, Dirs{w, rest});
    EXPECT_NEAR(lhs, rhs, 1e-12 * (1.0 + std::abs(rhs)));
}

TEST(DirDeriv, OrderCap) {
    auto f = fn("x1", 1);
    Dirs dirs(17, {1.0});
    EXPECT_THROW(dirderiv(f, {0.0}, dirs), OrderTooLarge);
}

TEST(FiniteDifference, MatchesJetOnSmoothFunction) {
    auto f = fn("sin(x1)*x2", 2);
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> x = {u(rng), u(rng)};
        Dirs dirs = {{u(rng), u(rng)}};
        double jet = dirderiv(f, x, dirs);
        double fd = finite_difference_check(f, x, dirs);
        EXPECT_NEAR(fd, jet, 1e-6 * std::max(1.0, std::abs(jet)));
    }
}

TEST(FiniteDifference, ExactOnQuadratics) {
    auto f = fn("x1^2 + 3*x1*x2 + 2*x2^2", 2);
    std::vector<double> x = {0.3, -0.8};
    Dirs dirs = {{1.0, 0.0}, {0.0, 1.0}};
    double fd = finite_difference_check(f, x, dirs);
    EXPECT_NEAR(fd, 3.0, 1e-10);
}

TEST(FiniteDifference, EmptyDirsIsEval) {
    auto f = fn("x1+2", 1);
    EXPECT_DOUBLE_EQ(finite_difference_check(f, {1.5}, Dirs{}), 3.5);
    Dirs five(5, {1.0});
    EXPECT_THROW(finite_difference_check(f, {0.0}, five), OrderTooLarge);
}

// Random expression corpus, orders 1..4, jet vs finite differences.
// Directions are normalized so the comparison scale stays O(1).
TEST(FiniteDifference, RandomExpressionCorpus) {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    const std::vector<std::string> corpus = {
        "exp(x1*x2/2)",
        "sin(x1)*cos(x2)",
        "1/(2+x1+x2)",
        "sqrt(4+x1^2+x2^2)",
        "log(3+x1*x2)",
        "x1^3*x2 - x2^2/3",
        "exp(sin(x1)+x2/2)",
        "cos(x1*x2)/(2+x1^2)",
        "x1*exp(-(x1^2+x2^2)/4)",
        "log(2+cos(x1))*x2",
    };
    int checked = 0;
    for (const auto& src : corpus) {
        auto f = fn(src, 2);
        for (int q = 1; q <= 4; ++q) {
            std::vector<double> x = {u(rng), u(rng)};
            Dirs dirs;
            for (int k = 0; k < q; ++k) {
                double a = u(rng), b = u(rng);
                double n = std::hypot(a, b);
                if (n < 1e-3) {
                    a = 1.0;
                    b = 0.0;
                    n = 1.0;
                }
                dirs.push_back({a / n, b / n});
            }
            double jet = dirderiv(f, x, dirs);
            double fd = finite_difference_check(f, x, dirs);
            EXPECT_NEAR(fd, jet, 1e-6 * std::max(1.0, std::abs(jet))) << src << " order " << q;
            ++checked;
        }
    }
    EXPECT_EQ(checked, 40);
}

// Chain rule through a unimodular affine map: derivatives of g = f(A x + b)
// along e_i match derivatives of f along the i-th column of A.
TEST(DirDeriv, ChainRuleUnderAffinePullback) {
    auto base = std::make_shared<ExpressionFunction>(parse_expression("exp(x1/3)*sin(x2)", 2));
    std::vector<std::vector<double>> a = {{1.0, 1.0}, {1.0, 2.0}};  // det 1
    std::vector<double> b = {0.5, -1.0};
    AffinePullback g(base, a, b);
    std::vector<double> x = {0.3, 0.2};
    std::vector<double> y = {a[0][0] * x[0] + a[0][1] * x[1] + b[0],
                             a[1][0] * x[0] + a[1][1] * x[1] + b[1]};
    for (int i = 0; i < 2; ++i) {
        for (int m = 1; m <= 3; ++m) {
            std::vector<double> ei(2, 0.0);
            ei[static_cast<std::size_t>(i)] = 1.0;
            std::vector<double> col = {a[0][static_cast<std::size_t>(i)],
                                       a[1][static_cast<std::size_t>(i)]};
            Dirs dg(static_cast<std::size_t>(m), ei);
            Dirs df(static_cast<std::size_t>(m), col);
            double lhs = dirderiv(g, x, dg);
            double rhs = dirderiv(*base, y, df);
            EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST(BumpCutoff, FlatRegions) {
    BumpCutoff cut({0.0, 0.0}, 1.0, 2.0);
    EXPECT_DOUBLE_EQ(cut.eval(std::vector<double>{0.5, 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(cut.eval(std::vector<double>{0.0, 0.0}), 1.0);
    EXPECT_DOUBLE_EQ(cut.eval(std::vector<double>{3.0, 0.0}), 0.0);
    double mid = cut.eval(std::vector<double>{1.5, 0.0});
    EXPECT_GT(mid, 0.0);
    EXPECT_LT(mid, 1.0);
    // All derivatives vanish in the flat regions.
    EXPECT_DOUBLE_EQ(dirderiv(cut, {0.5, 0.0}, Dirs{{1, 0}}), 0.0);
    EXPECT_DOUBLE_EQ(dirderiv(cut, {2.5, 0.0}, Dirs{{1, 0}, {1, 0}}), 0.0);
    // Smooth in the transition: jet and FD agree.
    std::vector<double> x = {1.4, 0.3};
    for (int q = 1; q <= 3; ++q) {
        Dirs dirs(static_cast<std::size_t>(q), {0.8, 0.6});
        double jet = dirderiv(cut, x, dirs);
        double fd = finite_difference_check(cut, x, dirs);
        EXPECT_NEAR(fd, jet, 2e-5 * std::max(1.0, std::abs(jet))) << q;
    }
    auto box = cut.support();
    ASSERT_TRUE(box.has_value());
    EXPECT_DOUBLE_EQ(box->lo[0], -2.0);
    EXPECT_DOUBLE_EQ(box->hi[1], 2.0);
}

TEST(ProductFunction, CombinesFactorsAndSupports) {
    auto cut = std::make_shared<BumpCutoff>(std::vector<double>{0.0}, 1.0, 2.0);
    auto lin = std::make_shared<ExpressionFunction>(parse_expression("x1+3", 1));
    ProductFunction prod({cut, lin});
    EXPECT_DOUBLE_EQ(prod.eval(std::vector<double>{0.5}), 3.5);
    EXPECT_DOUBLE_EQ(prod.eval(std::vector<double>{2.5}), 0.0);
    auto box = prod.support();
    ASSERT_TRUE(box.has_value());
    EXPECT_DOUBLE_EQ(box->lo[0], -2.0);
    EXPECT_DOUBLE_EQ(box->hi[0], 2.0);
    EXPECT_NEAR(dirderiv(prod, {0.2}, Dirs{{1.0}}), 1.0, 1e-14);
}

TEST(PolynomialFunction, ExactDerivatives) {
    auto p = parse_expression("x1^2*x2", 2).to_polynomial();
    ASSERT_TRUE(p.has_value());
    PolynomialFunction f(*p);
    ASSERT_NE(f.as_polynomial(), nullptr);
    EXPECT_DOUBLE_EQ(dirderiv(f, {3.0, 5.0}, Dirs{{1, 0}}), 30.0);
    // Exact rational directional derivative via the polynomial interface.
    RationalVector w = {Rational(1), Rational(0)};
    Polynomial dp = f.as_polynomial()->directional_derivative(w);
    RationalVector at = {Rational(3), Rational(5)};
    EXPECT_EQ(dp.eval(at), Rational(30));
}
