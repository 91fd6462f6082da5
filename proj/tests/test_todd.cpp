#include <gtest/gtest.h>

#include <vector>

#include "emsum/multi_index.hpp"
#include "emsum/todd.hpp"

using emsum::bernoulli;
using emsum::factorial;
using emsum::Int;
using emsum::lambda_alpha;
using emsum::MultiIndex;
using emsum::Rational;
using emsum::todd_coefficients;

namespace {

// Independent oracle: Akiyama-Tanigawa recurrence for the Bernoulli numbers
// in the B_1 = +1/2 convention, which are exactly the Todd coefficients b_k.
Rational akiyama_tanigawa(int n) {
    std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
    Rational b(0);
    for (int m = 0; m <= n; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
        b = a[0];
    }
    return b;
}

}  // namespace

TEST(Todd, LowOrderValues) {
    auto t = todd_coefficients(4);
    EXPECT_EQ(t[0], Rational(1));
    EXPECT_EQ(t[1], Rational(1, 2));
    EXPECT_EQ(t[2], Rational(1, 6));
    EXPECT_EQ(t[3], Rational(0));
    EXPECT_EQ(t[4], Rational(-1, 30));
}

TEST(Todd, OddCoefficientsVanish) {
    auto t = todd_coefficients(21);
    for (int p = 1; 2 * p + 1 <= 21; ++p) EXPECT_EQ(t[2 * p + 1], Rational(0)) << p;
}

// tau_K(s) * (1 - e^{-s}) == s exactly through order K.
TEST(Todd, SeriesIdentity) {
    const int K = 20;
    auto t = todd_coefficients(K);
    std::vector<Rational> tau(K + 1), divisor(K + 1, Rational(0));
    for (int k = 0; k <= K; ++k) tau[k] = t[k] / Rational(factorial(k));
    for (int k = 1; k <= K; ++k)
        divisor[k] = Rational(Int((k % 2) ? 1 : -1), factorial(k));
    for (int m = 0; m <= K; ++m) {
        Rational pm(0);
        for (int j = 0; j <= m; ++j) pm += tau[j] * divisor[m - j];
        EXPECT_EQ(pm, (m == 1) ? Rational(1) : Rational(0)) << "order " << m;
    }
}

TEST(Todd, MatchesAkiyamaTanigawaOracle) {
    auto t = todd_coefficients(20);
    for (int k = 0; k <= 20; ++k) EXPECT_EQ(t[k], akiyama_tanigawa(k)) << k;
}

TEST(Bernoulli, PositiveConvention) {
    EXPECT_EQ(bernoulli(1), Rational(1, 6));
    EXPECT_EQ(bernoulli(2), Rational(1, 30));
    EXPECT_EQ(bernoulli(3), Rational(1, 42));
    EXPECT_EQ(bernoulli(4), Rational(1, 30));
    for (int p = 1; p <= 8; ++p) {
        Rational expected = (p % 2 == 1) ? akiyama_tanigawa(2 * p) : -akiyama_tanigawa(2 * p);
        EXPECT_EQ(bernoulli(p), expected) << p;
        EXPECT_GT(bernoulli(p), Rational(0)) << p;
    }
}

TEST(LambdaAlpha, Examples) {
    EXPECT_EQ(lambda_alpha(MultiIndex({0, 0})), Rational(1));
    EXPECT_EQ(lambda_alpha(MultiIndex({1, 1})), Rational(1, 4));
    EXPECT_EQ(lambda_alpha(MultiIndex({2, 0})), Rational(1, 12));
    // Any odd entry >= 3 kills the product.
    EXPECT_EQ(lambda_alpha(MultiIndex({3, 1})), Rational(0));
    EXPECT_EQ(lambda_alpha(MultiIndex({2, 5, 1})), Rational(0));
}

TEST(LambdaAlpha, PermutationSymmetry) {
    MultiIndex a({2, 4, 1});
    MultiIndex b({4, 1, 2});
    MultiIndex c({1, 2, 4});
    EXPECT_EQ(lambda_alpha(a), lambda_alpha(b));
    EXPECT_EQ(lambda_alpha(a), lambda_alpha(c));
}

TEST(MultiIndex, Combinatorics) {
    MultiIndex a({2, 0, 1});
    EXPECT_EQ(a.order(), 3);
    EXPECT_EQ(a.nu(), 2);
    EXPECT_EQ(a.support(), (std::vector<int>{0, 2}));
    EXPECT_EQ(a.reduced().entries(), (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(a.factorial_product(), Int(2));

    int count = 0;
    emsum::for_each_multi_index(3, 4, [&](const MultiIndex& m) {
        EXPECT_EQ(m.order(), 4);
        ++count;
    });
    EXPECT_EQ(count, 15);  // C(4+2, 2)
}
