#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "emsum/errors.hpp"

namespace emsum {

// Truncated multivariate Taylor value: coefficients of prod_i t_i^{e_i} with
// e_i <= caps_i, stored flat row-major.  One variable per distinct derivative
// direction with the cap equal to its multiplicity, so a directional
// derivative D^q f . (w_1,...,w_q) costs prod (m_i + 1) coefficients instead
// of a full symmetric tensor.
class Jet {
public:
    Jet() : caps_{}, c_{0.0} {}

    static Jet constant(const std::vector<int>& caps, double v) {
        Jet j;
        j.caps_ = caps;
        std::size_t size = 1;
        for (int c : caps) size *= static_cast<std::size_t>(c) + 1;
        j.c_.assign(size, 0.0);
        j.c_[0] = v;
        return j;
    }

    Jet like(double v) const { return constant(caps_, v); }

    int num_vars() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    double value() const { return c_[0]; }

    int total_cap() const {
        int s = 0;
        for (int c : caps_) s += c;
        return s;
    }

    std::size_t index_of(const std::vector<int>& exps) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < caps_.size(); ++i) {
            std::size_t stride = 1;
            for (std::size_t k = i + 1; k < caps_.size(); ++k)
                stride *= static_cast<std::size_t>(caps_[k]) + 1;
            idx += static_cast<std::size_t>(exps[i]) * stride;
        }
        return idx;
    }

    double coefficient(const std::vector<int>& exps) const { return c_[index_of(exps)]; }
    void set_coefficient(const std::vector<int>& exps, double v) { c_[index_of(exps)] = v; }

    // Coefficient of the top corner t_1^{c_1} ... t_k^{c_k}.
    double top_coefficient() const { return c_.back(); }

    Jet& operator+=(const Jet& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Jet& operator*=(double s) {
        for (double& x : c_) x *= s;
        return *this;
    }
    Jet& operator+=(double s) {
        c_[0] += s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, double s) { return a += s; }
    friend Jet operator+(double s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, double s) { return a += -s; }
    friend Jet operator-(double s, const Jet& a) { return a.like(s) - a; }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, double s) { return a *= (1.0 / s); }
    Jet operator-() const {
        Jet r = *this;
        for (double& x : r.c_) x = -x;
        return r;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r = a.like(0.0);
        const std::size_t k = a.caps_.size();
        std::vector<int> ea(k), eb(k);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0.0) continue;
            a.decode(i, ea);
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0.0) continue;
                b.decode(j, eb);
                bool fits = true;
                for (std::size_t v = 0; v < k; ++v)
                    if (ea[v] + eb[v] > a.caps_[v]) {
                        fits = false;
                        break;
                    }
                if (!fits) continue;
                std::size_t idx = 0;
                for (std::size_t v = 0; v < k; ++v) {
                    std::size_t stride = 1;
                    for (std::size_t w = v + 1; w < k; ++w)
                        stride *= static_cast<std::size_t>(a.caps_[w]) + 1;
                    idx += static_cast<std::size_t>(ea[v] + eb[v]) * stride;
                }
                r.c_[idx] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    // 1 / u as a truncated geometric series around the constant term.
    Jet inverse() const {
        double u0 = c_[0];
        if (u0 == 0.0) throw DomainError("jet division by a value with zero constant term");
        Jet e = *this;
        e.c_[0] = 0.0;
        e *= (1.0 / u0);  // u = u0 (1 + e)
        int d = total_cap();
        Jet r = like(1.0);
        for (int k = 0; k < d; ++k) {
            r = r * e;
            for (double& x : r.c_) x = -x;
            r.c_[0] += 1.0;
        }
        return r * (1.0 / u0);
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
    friend Jet operator/(double s, const Jet& b) { return b.inverse() * s; }

    // Composition g(u) given scaled outer derivatives d_k = g^{(k)}(u0)/k!.
    Jet compose(const std::vector<double>& d) const {
        Jet w = *this;
        w.c_[0] = 0.0;
        Jet r = like(d.back());
        for (int k = static_cast<int>(d.size()) - 2; k >= 0; --k) {
            r = r * w;
            r.c_[0] += d[static_cast<std::size_t>(k)];
        }
        return r;
    }

    Jet pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Jet r = like(1.0);
        Jet base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

private:
    void decode(std::size_t idx, std::vector<int>& exps) const {
        for (std::size_t v = caps_.size(); v-- > 0;) {
            std::size_t base = static_cast<std::size_t>(caps_[v]) + 1;
            exps[v] = static_cast<int>(idx % base);
            idx /= base;
        }
    }

    std::vector<int> caps_;
    std::vector<double> c_;
};

inline Jet exp(const Jet& u) {
    int d = u.total_cap();
    std::vector<double> coef(static_cast<std::size_t>(d) + 1);
    double e0 = std::exp(u.value());
    double fact = 1.0;
    for (int k = 0; k <= d; ++k) {
        coef[static_cast<std::size_t>(k)] = e0 / fact;
        fact *= (k + 1);
    }
    return u.compose(coef);
}

inline Jet log(const Jet& u) {
    double u0 = u.value();
    if (u0 <= 0.0) throw DomainError("log of non-positive value");
    int d = u.total_cap();
    std::vector<double> coef(static_cast<std::size_t>(d) + 1);
    coef[0] = std::log(u0);
    double p = 1.0;
    for (int k = 1; k <= d; ++k) {
        p /= u0;
        coef[static_cast<std::size_t>(k)] = ((k % 2) ? 1.0 : -1.0) * p / k;
    }
    return u.compose(coef);
}

inline Jet sqrt(const Jet& u) {
    double u0 = u.value();
    if (u0 <= 0.0) throw DomainError("sqrt of non-positive value in jet arithmetic");
    int d = u.total_cap();
    std::vector<double> coef(static_cast<std::size_t>(d) + 1);
    coef[0] = std::sqrt(u0);
    for (int k = 1; k <= d; ++k)
        coef[static_cast<std::size_t>(k)] =
            coef[static_cast<std::size_t>(k) - 1] * (1.5 - k) / (k * u0);
    return u.compose(coef);
}

inline Jet sin(const Jet& u) {
    int d = u.total_cap();
    std::vector<double> coef(static_cast<std::size_t>(d) + 1);
    double s = std::sin(u.value()), c = std::cos(u.value());
    double fact = 1.0;
    const double cycle[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // sin, cos weights
    for (int k = 0; k <= d; ++k) {
        coef[static_cast<std::size_t>(k)] = (cycle[k % 4][0] * s + cycle[k % 4][1] * c) / fact;
        fact *= (k + 1);
    }
    return u.compose(coef);
}

inline Jet cos(const Jet& u) {
    int d = u.total_cap();
    std::vector<double> coef(static_cast<std::size_t>(d) + 1);
    double s = std::sin(u.value()), c = std::cos(u.value());
    double fact = 1.0;
    const double cycle[4][2] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    for (int k = 0; k <= d; ++k) {
        coef[static_cast<std::size_t>(k)] = (cycle[k % 4][0] * s + cycle[k % 4][1] * c) / fact;
        fact *= (k + 1);
    }
    return u.compose(coef);
}

inline Jet pow(const Jet& u, long e) { return u.pow(e); }

}  // namespace emsum
