#pragma once

#include <map>
#include <span>
#include <vector>

#include "emsum/jet.hpp"
#include "emsum/lattice.hpp"
#include "emsum/rational.hpp"

namespace emsum {

// Sparse multivariate polynomial with exact rational coefficients.  Keeps the
// whole polygon pipeline in rationals whenever the integrand allows it.
class Polynomial {
public:
    using Terms = std::map<std::vector<int>, Rational>;

    explicit Polynomial(int n) : n_(n) {}

    static Polynomial constant(int n, const Rational& c) {
        Polynomial p(n);
        if (!c.is_zero()) p.terms_[std::vector<int>(static_cast<std::size_t>(n), 0)] = c;
        return p;
    }

    static Polynomial variable(int n, int i) {
        Polynomial p(n);
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    int dims() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first ==
                                         std::vector<int>(static_cast<std::size_t>(n_), 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        Polynomial r(a.n_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }
    friend Polynomial operator/(const Polynomial& a, const Rational& s) {
        return a * (Rational(1) / s);
    }

    Polynomial pow(long e) const {
        if (e < 0) throw DomainError("polynomial negative power");
        Polynomial r = constant(n_, Rational(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Polynomial derivative(int axis) const {
        Polynomial r(n_);
        for (const auto& [e, c] : terms_) {
            if (e[static_cast<std::size_t>(axis)] == 0) continue;
            std::vector<int> d(e);
            int k = d[static_cast<std::size_t>(axis)]--;
            r.add_term(d, c * Rational(k));
        }
        return r;
    }

    Polynomial directional_derivative(const RationalVector& w) const {
        Polynomial r(n_);
        for (int i = 0; i < n_; ++i)
            if (!w[static_cast<std::size_t>(i)].is_zero())
                r += derivative(i) * w[static_cast<std::size_t>(i)];
        return r;
    }

    double eval(std::span<const double> x) const {
        double s = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = c.to_double();
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    Jet eval(std::span<const Jet> x) const {
        if (x.empty()) throw DomainError("polynomial jet eval without variables");
        Jet s = x[0].like(0.0);
        for (const auto& [e, c] : terms_) {
            Jet t = x[0].like(c.to_double());
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * x[i].pow(e[i]);
            s += t;
        }
        return s;
    }

    Rational eval(const RationalVector& x) const {
        Rational s(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) t *= x[i].pow(e[i]);
            s += t;
        }
        return s;
    }

    // Substitution of polynomials for the variables (exact composition).
    Polynomial eval(std::span<const Polynomial> x) const {
        if (x.empty()) throw DomainError("polynomial substitution without variables");
        Polynomial s(x[0].dims());
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(x[0].dims(), c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) t = t * x[i].pow(e[i]);
            s += t;
        }
        return s;
    }

    // P(M y + b), exact; rows[i] is the i-th row of M.
    Polynomial compose_affine(const std::vector<RationalVector>& rows,
                              const RationalVector& b) const {
        int m = static_cast<int>(rows[0].size());
        std::vector<Polynomial> coords;
        coords.reserve(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            Polynomial ci = constant(m, b[static_cast<std::size_t>(i)]);
            for (int j = 0; j < m; ++j)
                ci += variable(m, j) * rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            coords.push_back(std::move(ci));
        }
        return eval(std::span<const Polynomial>(coords));
    }

private:
    void add_term(const std::vector<int>& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int n_;
    Terms terms_;
};

}  // namespace emsum
