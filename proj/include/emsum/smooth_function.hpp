#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "emsum/expression.hpp"
#include "emsum/jet.hpp"
#include "emsum/polynomial.hpp"

namespace emsum {

struct Box {
    std::vector<double> lo, hi;
};

inline std::optional<Box> intersect(const std::optional<Box>& a, const std::optional<Box>& b) {
    if (!a) return b;
    if (!b) return a;
    Box r = *a;
    for (std::size_t i = 0; i < r.lo.size(); ++i) {
        r.lo[i] = std::max(r.lo[i], b->lo[i]);
        r.hi[i] = std::min(r.hi[i], b->hi[i]);
    }
    return r;
}

// Smooth scalar function of n variables with evaluation on plain points and
// on jets (the jet entrypoint powers every directional derivative).
class SmoothFunction {
public:
    virtual ~SmoothFunction() = default;
    virtual int dims() const = 0;
    virtual double eval(std::span<const double> x) const = 0;
    virtual Jet eval(std::span<const Jet> x) const = 0;
    // Axis-aligned box outside of which the function vanishes, when known.
    virtual std::optional<Box> support() const { return std::nullopt; }
    virtual const Polynomial* as_polynomial() const { return nullptr; }
};

constexpr int kDefaultMaxJetOrder = 16;

// q-th derivative tensor contracted with the given directions:
//   D^q f(x) . (dirs[0], ..., dirs[q-1]).
// Equal directions are grouped so the jet has one variable per distinct
// direction, capped at its multiplicity.
inline double dirderiv(const SmoothFunction& f, std::span<const double> x,
                       std::span<const std::vector<double>> dirs,
                       int max_order = kDefaultMaxJetOrder) {
    if (dirs.empty()) return f.eval(x);
    if (static_cast<int>(dirs.size()) > max_order)
        throw OrderTooLarge("derivative order " + std::to_string(dirs.size()) +
                            " exceeds the jet order cap " + std::to_string(max_order));
    std::vector<std::vector<double>> distinct;
    std::vector<int> mult;
    for (const auto& d : dirs) {
        auto it = std::find(distinct.begin(), distinct.end(), d);
        if (it == distinct.end()) {
            distinct.push_back(d);
            mult.push_back(1);
        } else {
            ++mult[static_cast<std::size_t>(it - distinct.begin())];
        }
    }
    std::vector<Jet> seeds;
    seeds.reserve(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        Jet s = Jet::constant(mult, x[j]);
        for (std::size_t v = 0; v < distinct.size(); ++v) {
            std::vector<int> e(distinct.size(), 0);
            e[v] = 1;
            s.set_coefficient(e, distinct[v][j]);
        }
        seeds.push_back(std::move(s));
    }
    Jet out = f.eval(std::span<const Jet>(seeds));
    double coeff = out.top_coefficient();
    for (int m : mult)
        for (int k = 2; k <= m; ++k) coeff *= k;
    return coeff;
}

inline double dirderiv(const SmoothFunction& f, const std::vector<double>& x,
                       const std::vector<std::vector<double>>& dirs,
                       int max_order = kDefaultMaxJetOrder) {
    return dirderiv(f, std::span<const double>(x), std::span<const std::vector<double>>(dirs),
                    max_order);
}

namespace detail {

struct Stencil {
    std::vector<double> offsets;
    std::vector<double> weights;  // to be divided by h^order
};

inline Stencil central_stencil(int order) {
    switch (order) {
        case 1: return {{-1, 1}, {-0.5, 0.5}};
        case 2: return {{-1, 0, 1}, {1, -2, 1}};
        case 3: return {{-2, -1, 1, 2}, {-0.5, 1, -1, 0.5}};
        case 4: return {{-2, -1, 0, 1, 2}, {1, -4, 6, -4, 1}};
        default: throw OrderTooLarge("finite differences support order <= 4");
    }
}

}  // namespace detail

// Independent validation oracle: nested central differences with one
// Richardson extrapolation level.  Only used in tests; |dirs| <= 4.
inline double finite_difference_check(const SmoothFunction& f, std::span<const double> x,
                                      std::span<const std::vector<double>> dirs) {
    if (dirs.empty()) return f.eval(x);
    if (dirs.size() > 4) throw OrderTooLarge("finite_difference_check limited to order 4");

    std::vector<std::vector<double>> distinct;
    std::vector<int> mult;
    for (const auto& d : dirs) {
        auto it = std::find(distinct.begin(), distinct.end(), d);
        if (it == distinct.end()) {
            distinct.push_back(d);
            mult.push_back(1);
        } else {
            ++mult[static_cast<std::size_t>(it - distinct.begin())];
        }
    }

    double norm = 0.0;
    for (double xi : x) norm += xi * xi;
    norm = std::sqrt(norm);
    // Step scaled by the total order: roundoff amplifies as h^{-q}, so the
    // base step must grow with the order to stay near the optimum.
    int q = static_cast<int>(dirs.size());
    double base;
    switch (q) {
        case 1: base = 1e-4; break;
        case 2: base = 4e-3; break;
        case 3: base = 6e-3; break;
        default: base = 1.2e-2; break;
    }
    double h0 = base * (1.0 + norm);

    auto grid_eval = [&](double h) {
        std::vector<detail::Stencil> st;
        for (int m : mult) st.push_back(detail::central_stencil(m));
        double total = 0.0;
        std::vector<std::size_t> idx(distinct.size(), 0);
        while (true) {
            double w = 1.0;
            std::vector<double> pt(x.begin(), x.end());
            for (std::size_t v = 0; v < distinct.size(); ++v) {
                w *= st[v].weights[idx[v]];
                double off = st[v].offsets[idx[v]] * h;
                for (std::size_t j = 0; j < pt.size(); ++j) pt[j] += off * distinct[v][j];
            }
            total += w * f.eval(pt);
            std::size_t v = 0;
            for (; v < idx.size(); ++v) {
                if (++idx[v] < st[v].offsets.size()) break;
                idx[v] = 0;
            }
            if (v == idx.size()) break;
        }
        double scale = 1.0;
        for (int m : mult)
            for (int k = 0; k < m; ++k) scale *= h;
        return total / scale;
    };

    double g1 = grid_eval(h0);
    double g2 = grid_eval(h0 / 2.0);
    return (4.0 * g2 - g1) / 3.0;
}

inline double finite_difference_check(const SmoothFunction& f, const std::vector<double>& x,
                                      const std::vector<std::vector<double>>& dirs) {
    return finite_difference_check(f, std::span<const double>(x),
                                   std::span<const std::vector<double>>(dirs));
}

class ExpressionFunction : public SmoothFunction {
public:
    explicit ExpressionFunction(Expression e) : expr_(std::move(e)) {}
    int dims() const override { return expr_.dims(); }
    double eval(std::span<const double> x) const override { return expr_.eval(x); }
    Jet eval(std::span<const Jet> x) const override { return expr_.eval(x); }
    const Expression& expression() const { return expr_; }

private:
    Expression expr_;
};

class PolynomialFunction : public SmoothFunction {
public:
    explicit PolynomialFunction(Polynomial p) : poly_(std::move(p)) {}
    int dims() const override { return poly_.dims(); }
    double eval(std::span<const double> x) const override { return poly_.eval(x); }
    Jet eval(std::span<const Jet> x) const override { return poly_.eval(x); }
    const Polynomial* as_polynomial() const override { return &poly_; }

private:
    Polynomial poly_;
};

namespace detail {

// Smooth step rising from 0 (t <= 0) to 1 (t >= 1).  Profile selects the
// flat-at-the-ends mollifier h(t) = exp(-1/t) or exp(-1/t^2).
enum class StepProfile { Exp1, Exp2 };

template <class T>
T smooth_step01(const T& t, double t0, StepProfile profile) {
    auto constant_like = [&](double v) -> T {
        if constexpr (std::is_same_v<T, double>)
            return v;
        else
            return t.like(v);
    };
    if (t0 <= 0.0) return constant_like(0.0);
    if (t0 >= 1.0) return constant_like(1.0);
    auto h = [&](const T& u) -> T {
        using std::exp;
        if (profile == StepProfile::Exp1) return exp(-(1.0 / u));
        return exp(-(1.0 / (u * u)));
    };
    T a = h(t);
    T b = h(constant_like(1.0) - t);
    return a / (a + b);
}

}  // namespace detail

// C-infinity radial cutoff: 1 on ||x - c|| <= r_in, 0 on ||x - c|| >= r_out.
class BumpCutoff : public SmoothFunction {
public:
    BumpCutoff(std::vector<double> center, double r_in, double r_out,
               detail::StepProfile profile = detail::StepProfile::Exp1)
        : center_(std::move(center)), r_in_(r_in), r_out_(r_out), profile_(profile) {
        if (!(0.0 < r_in && r_in < r_out)) throw InputError("cutoff needs 0 < r_in < r_out");
    }

    int dims() const override { return static_cast<int>(center_.size()); }

    double eval(std::span<const double> x) const override {
        double r2 = 0.0;
        for (std::size_t i = 0; i < center_.size(); ++i) {
            double d = x[i] - center_[i];
            r2 += d * d;
        }
        double r = std::sqrt(r2);
        double t = (r_out_ - r) / (r_out_ - r_in_);
        return detail::smooth_step01<double>(t, t, profile_);
    }

    Jet eval(std::span<const Jet> x) const override {
        // Radius standard part decides the branch; in the flat regions the
        // cutoff is locally constant so the jet is constant.
        double r2c = 0.0;
        for (std::size_t i = 0; i < center_.size(); ++i) {
            double d = x[i].value() - center_[i];
            r2c += d * d;
        }
        double rc = std::sqrt(r2c);
        if (rc <= r_in_) return x[0].like(1.0);
        if (rc >= r_out_) return x[0].like(0.0);
        Jet r2 = x[0].like(0.0);
        for (std::size_t i = 0; i < center_.size(); ++i) {
            Jet d = x[i] - center_[i];
            r2 += d * d;
        }
        Jet t = (x[0].like(r_out_) - sqrt(r2)) * (1.0 / (r_out_ - r_in_));
        double t0 = (r_out_ - rc) / (r_out_ - r_in_);
        return detail::smooth_step01<Jet>(t, t0, profile_);
    }

    std::optional<Box> support() const override {
        Box b;
        for (double c : center_) {
            b.lo.push_back(c - r_out_);
            b.hi.push_back(c + r_out_);
        }
        return b;
    }

private:
    std::vector<double> center_;
    double r_in_, r_out_;
    detail::StepProfile profile_;
};

class ProductFunction : public SmoothFunction {
public:
    explicit ProductFunction(std::vector<std::shared_ptr<const SmoothFunction>> fs)
        : fs_(std::move(fs)) {
        if (fs_.empty()) throw InputError("empty product");
    }

    int dims() const override { return fs_[0]->dims(); }

    double eval(std::span<const double> x) const override {
        double p = 1.0;
        for (const auto& f : fs_) {
            p *= f->eval(x);
            if (p == 0.0) return 0.0;
        }
        return p;
    }

    Jet eval(std::span<const Jet> x) const override {
        Jet p = fs_[0]->eval(x);
        for (std::size_t i = 1; i < fs_.size(); ++i) p = p * fs_[i]->eval(x);
        return p;
    }

    std::optional<Box> support() const override {
        std::optional<Box> b;
        for (const auto& f : fs_) b = intersect(b, f->support());
        return b;
    }

private:
    std::vector<std::shared_ptr<const SmoothFunction>> fs_;
};

// g(x) = f(A x + b); used for unimodular pullbacks in tests and transforms.
class AffinePullback : public SmoothFunction {
public:
    AffinePullback(std::shared_ptr<const SmoothFunction> f, std::vector<std::vector<double>> a,
                   std::vector<double> b)
        : f_(std::move(f)), a_(std::move(a)), b_(std::move(b)) {}

    int dims() const override { return static_cast<int>(a_[0].size()); }

    double eval(std::span<const double> x) const override {
        std::vector<double> y(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) {
            double s = b_[i];
            for (std::size_t j = 0; j < a_[i].size(); ++j) s += a_[i][j] * x[j];
            y[i] = s;
        }
        return f_->eval(y);
    }

    Jet eval(std::span<const Jet> x) const override {
        std::vector<Jet> y;
        y.reserve(a_.size());
        for (std::size_t i = 0; i < a_.size(); ++i) {
            Jet s = x[0].like(b_[i]);
            for (std::size_t j = 0; j < a_[i].size(); ++j)
                if (a_[i][j] != 0.0) s += x[j] * a_[i][j];
            y.push_back(std::move(s));
        }
        return f_->eval(std::span<const Jet>(y));
    }

    std::optional<Box> support() const override {
        auto inner = f_->support();
        if (!inner) return std::nullopt;
        // Invert the affine map (square, small n) and bound the preimage box.
        std::size_t n = a_.size();
        std::vector<std::vector<double>> m = a_;
        std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col; r < n; ++r)
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
            double p = m[col][col];
            for (std::size_t c = 0; c < n; ++c) {
                m[col][c] /= p;
                inv[col][c] /= p;
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = m[r][col];
                for (std::size_t c = 0; c < n; ++c) {
                    m[r][c] -= f * m[col][c];
                    inv[r][c] -= f * inv[col][c];
                }
            }
        }
        Box out;
        out.lo.assign(n, 0.0);
        out.hi.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double lo = 0.0, hi = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                double w = inv[i][j];
                double ylo = inner->lo[j] - b_[j], yhi = inner->hi[j] - b_[j];
                lo += std::min(w * ylo, w * yhi);
                hi += std::max(w * ylo, w * yhi);
            }
            out.lo[i] = lo;
            out.hi[i] = hi;
        }
        return out;
    }

private:
    std::shared_ptr<const SmoothFunction> f_;
    std::vector<std::vector<double>> a_;
    std::vector<double> b_;
};

}  // namespace emsum
