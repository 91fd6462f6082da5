#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "emsum/rational.hpp"

namespace emsum {

// Multi-index alpha in N^n with the combinatorics used by the expansion
// formulas: |alpha|, the 0/1 reduction r(alpha), and nu(alpha) = #{i : a_i > 0}.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> a) : a_(std::move(a)) {
        for (int x : a_)
            if (x < 0) throw std::invalid_argument("multi-index entries must be non-negative");
    }

    int size() const { return static_cast<int>(a_.size()); }
    int operator[](int i) const { return a_[i]; }
    const std::vector<int>& entries() const { return a_; }

    int order() const {
        int s = 0;
        for (int x : a_) s += x;
        return s;
    }

    int nu() const {
        int c = 0;
        for (int x : a_) c += (x > 0);
        return c;
    }

    std::vector<int> support() const {
        std::vector<int> idx;
        for (int i = 0; i < size(); ++i)
            if (a_[i] > 0) idx.push_back(i);
        return idx;
    }

    // alpha - r(alpha): drops one from every positive entry.
    MultiIndex reduced() const {
        std::vector<int> r = a_;
        for (int& x : r)
            if (x > 0) --x;
        return MultiIndex(r);
    }

    Int factorial_product() const {
        Int p(1);
        for (int x : a_) p *= factorial(x);
        return p;
    }

private:
    std::vector<int> a_;
};

// Enumerates all alpha in N^n with |alpha| = q, in lexicographic order.
inline void for_each_multi_index(int n, int q, const std::function<void(const MultiIndex&)>& fn) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == n - 1) {
            a[pos] = rem;
            fn(MultiIndex(a));
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            a[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (n == 0) return;
    rec(0, q);
}

}  // namespace emsum
