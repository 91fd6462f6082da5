#pragma once

#include <mutex>
#include <vector>

#include "emsum/multi_index.hpp"
#include "emsum/rational.hpp"

namespace emsum {

// Taylor coefficients b_k of the Todd function tau(s) = s/(1 - e^{-s}),
// normalized so that tau(s) = sum b_k s^k / k!.  b_0 = 1, b_1 = 1/2, the odd
// coefficients b_3, b_5, ... vanish, and b_{2p} = (-1)^{p-1} B_p with B_p the
// positive Bernoulli sequence (B_1 = 1/6, B_2 = 1/30, ...).
struct ToddCoefficients {
    std::vector<Rational> b;
    const Rational& operator[](std::size_t k) const { return b.at(k); }
    int max_order() const { return static_cast<int>(b.size()) - 1; }
};

namespace detail {

// tau coefficients c_k (so b_k = k! c_k) by exact power-series division of s
// by 1 - e^{-s}.  The divisor's k-th coefficient after factoring out s is
// d_k = (-1)^k / (k+1)!, giving c_n = -sum_{j=1..n} d_j c_{n-j}.
inline const std::vector<Rational>& todd_series(int K) {
    static std::vector<Rational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(Rational(1));
    while (static_cast<int>(cache.size()) <= K) {
        int n = static_cast<int>(cache.size());
        Rational s(0);
        for (int j = 1; j <= n; ++j) {
            Rational d(Int((j % 2) ? -1 : 1), factorial(j + 1));
            s += d * cache[n - j];
        }
        cache.push_back(-s);
    }
    return cache;
}

}  // namespace detail

inline ToddCoefficients todd_coefficients(int K) {
    if (K < 0) throw std::invalid_argument("todd_coefficients: negative order");
    const auto& c = detail::todd_series(K);
    ToddCoefficients t;
    t.b.reserve(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) t.b.push_back(c[k] * factorial(k));
    return t;
}

inline Rational todd_b(int k) {
    return detail::todd_series(k)[k] * factorial(k);
}

// p-th Bernoulli number in the positive convention: B_p = (-1)^{p-1} b_{2p}.
inline Rational bernoulli(int p) {
    if (p < 1) throw std::invalid_argument("bernoulli: p must be >= 1");
    Rational b2p = todd_b(2 * p);
    return (p % 2 == 1) ? b2p : -b2p;
}

// lambda_alpha = (1/alpha!) prod_i b_{alpha_i}; the universal coefficient in
// front of every face term of the wedge expansion.
inline Rational lambda_alpha(const MultiIndex& alpha) {
    Rational prod(1);
    for (int i = 0; i < alpha.size(); ++i) {
        prod *= todd_b(alpha[i]);
        if (prod.is_zero()) return prod;
    }
    return prod / Rational(alpha.factorial_product());
}

}  // namespace emsum
