#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <vector>

#include "emsum/errors.hpp"
#include "emsum/lattice.hpp"
#include "emsum/polynomial.hpp"
#include "emsum/polytope.hpp"
#include "emsum/smooth_function.hpp"

namespace emsum {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 20;  // panel-doubling rounds
    int rule_order = 10;        // Gauss-Legendre points per panel per axis
};

namespace detail {

struct GaussRule {
    std::vector<double> nodes;    // on (0,1)
    std::vector<double> weights;  // summing to 1
};

// Gauss-Legendre nodes by Newton iteration on P_n, mapped to (0,1).
inline const GaussRule& gauss_rule(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    GaussRule rule;
    int n = order;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes.push_back(0.5 * (1.0 - x));  // reversed order, irrelevant
        rule.weights.push_back(1.0 / ((1.0 - x * x) * dp * dp));
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

// Composite Gauss-Legendre over [0,1]^dim with m panels per axis of a scaled
// integrand; the caller maps the unit cube to the actual region.
inline double composite_unit_cube(const std::function<double(std::span<const double>)>& g, int dim,
                                  int panels, int order) {
    const GaussRule& rule = gauss_rule(order);
    const int npts = static_cast<int>(rule.nodes.size());
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    std::vector<int> panel(static_cast<std::size_t>(dim), 0);
    std::vector<double> pt(static_cast<std::size_t>(dim));
    double h = 1.0 / panels;
    double total = 0.0;
    // Iterate panels then quadrature points, accumulating in a fixed order.
    std::function<double(int)> over_panels = [&](int d) -> double {
        if (d == dim) {
            std::function<double(int, double)> over_pts = [&](int dd, double w) -> double {
                if (dd == dim) return w * g(pt);
                double s = 0.0;
                for (int k = 0; k < npts; ++k) {
                    pt[static_cast<std::size_t>(dd)] =
                        (panel[static_cast<std::size_t>(dd)] + rule.nodes[static_cast<std::size_t>(k)]) * h;
                    s += over_pts(dd + 1, w * rule.weights[static_cast<std::size_t>(k)]);
                }
                return s;
            };
            return over_pts(0, 1.0);
        }
        double s = 0.0;
        for (int p = 0; p < panels; ++p) {
            panel[static_cast<std::size_t>(d)] = p;
            s += over_panels(d + 1);
        }
        return s;
    };
    total = over_panels(0);
    for (int d = 0; d < dim; ++d) total *= h;
    return total;
}

// Panel-doubling refinement until the change is within tolerance.
inline double refine_unit_cube(const std::function<double(std::span<const double>)>& g, int dim,
                               const QuadratureConfig& cfg, int initial_panels = 1) {
    int panels = std::max(1, initial_panels);
    double prev = composite_unit_cube(g, dim, panels, cfg.rule_order);
    for (int round = 0; round < cfg.max_subdivisions; ++round) {
        // Memory/time guard: a doubling in 3-D octuples the work.
        long long next = 2LL * panels;
        double cur = composite_unit_cube(g, dim, static_cast<int>(next), cfg.rule_order);
        double err = std::abs(cur - prev);
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return cur;
        panels = static_cast<int>(next);
        prev = cur;
        if (static_cast<double>(panels) * std::pow(cfg.rule_order, dim) > 5e8)
            throw ToleranceNotReached("quadrature grid exhausted", err);
    }
    throw ToleranceNotReached("quadrature did not converge", std::abs(prev));
}

}  // namespace detail

// Integral over an axis-aligned box.
inline double integrate_box(const std::function<double(std::span<const double>)>& f,
                            std::span<const double> lo, std::span<const double> hi,
                            const QuadratureConfig& cfg) {
    int dim = static_cast<int>(lo.size());
    double volume = 1.0;
    for (int i = 0; i < dim; ++i) volume *= (hi[i] - lo[i]);
    if (volume == 0.0) return 0.0;
    std::vector<double> x(static_cast<std::size_t>(dim));
    auto g = [&](std::span<const double> u) {
        for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = lo[i] + (hi[i] - lo[i]) * u[i];
        return f(x);
    };
    // Start with roughly unit-sized panels so bump transitions are resolved.
    double longest = 0.0;
    for (int i = 0; i < dim; ++i) longest = std::max(longest, hi[i] - lo[i]);
    int initial = std::max(1, std::min(dim >= 3 ? 4 : 8, static_cast<int>(std::ceil(longest))));
    return volume * detail::refine_unit_cube(g, dim, cfg, initial);
}

inline double integrate_interval(const std::function<double(double)>& f, double a, double b,
                                 const QuadratureConfig& cfg) {
    std::array<double, 1> lo{a}, hi{b};
    return integrate_box([&](std::span<const double> x) { return f(x[0]); }, lo, hi, cfg);
}

// Triangle A,B,C via the collapsing square map x = A + s(B-A) + st(C-B),
// |J| = s |det(B-A, C-A)|.
inline double integrate_triangle(const std::function<double(std::span<const double>)>& f,
                                 std::span<const double> a, std::span<const double> b,
                                 std::span<const double> c, const QuadratureConfig& cfg) {
    double det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    double area2 = std::abs(det);
    if (area2 == 0.0) return 0.0;
    std::vector<double> x(2);
    auto g = [&](std::span<const double> u) {
        double s = u[0], t = u[1];
        x[0] = a[0] + s * (b[0] - a[0]) + s * t * (c[0] - b[0]);
        x[1] = a[1] + s * (b[1] - a[1]) + s * t * (c[1] - b[1]);
        return s * f(x);
    };
    return area2 * detail::refine_unit_cube(g, 2, cfg, 1);
}

// Tetrahedron A,B,C,D via x = A + s(B-A) + st(C-B) + stu(D-C), |J| = s^2 t |det|.
inline double integrate_tetrahedron(const std::function<double(std::span<const double>)>& f,
                                    std::span<const double> a, std::span<const double> b,
                                    std::span<const double> c, std::span<const double> d,
                                    const QuadratureConfig& cfg) {
    double m[3][3];
    for (int i = 0; i < 3; ++i) {
        m[i][0] = b[i] - a[i];
        m[i][1] = c[i] - a[i];
        m[i][2] = d[i] - a[i];
    }
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    double vol6 = std::abs(det);
    if (vol6 == 0.0) return 0.0;
    std::vector<double> x(3);
    auto g = [&](std::span<const double> u) {
        double s = u[0], t = u[1], w = u[2];
        for (int i = 0; i < 3; ++i)
            x[static_cast<std::size_t>(i)] = a[i] + s * (b[i] - a[i]) + s * t * (c[i] - b[i]) +
                                             s * t * w * (d[i] - c[i]);
        return s * s * t * f(x);
    };
    return vol6 * detail::refine_unit_cube(g, 3, cfg, 1);
}

// Integral of f over the polytope (fan triangulation in 2-D, tetrahedral
// decomposition from vertex 0 in 3-D).
inline double integrate_region(const DelzantPolytope& poly, const SmoothFunction& f,
                               const QuadratureConfig& cfg = {}) {
    const int n = poly.dim();
    auto call = [&](std::span<const double> x) { return f.eval(x); };
    if (n == 1) {
        double a = poly.vertices()[0][0].get_d();
        double b = poly.vertices()[1][0].get_d();
        if (a > b) std::swap(a, b);
        std::array<double, 1> lo{a}, hi{b};
        return integrate_box(call, lo, hi, cfg);
    }
    if (n == 2) {
        const auto& ring = poly.polygon_ring();
        std::vector<double> a = to_double(poly.vertices()[ring[0]]);
        double total = 0.0;
        for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
            std::vector<double> b = to_double(poly.vertices()[ring[i]]);
            std::vector<double> c = to_double(poly.vertices()[ring[i + 1]]);
            total += integrate_triangle(call, a, b, c, cfg);
        }
        return total;
    }
    // n == 3: cone from vertex 0 over triangulated facets.
    std::vector<double> apex = to_double(poly.vertices()[0]);
    double total = 0.0;
    for (std::size_t fid = 0; fid < poly.facets().size(); ++fid) {
        if (dot(poly.facets()[fid].first, poly.vertices()[0]) == poly.facets()[fid].second)
            continue;  // facet contains the apex, zero-volume cone
        const auto& geom = poly.facet_geometry(static_cast<int>(fid));
        const auto& ids = geom.ring_vertex_ids;
        std::vector<double> a = to_double(poly.vertices()[ids[0]]);
        for (std::size_t i = 1; i + 1 < ids.size(); ++i) {
            std::vector<double> b = to_double(poly.vertices()[ids[i]]);
            std::vector<double> c = to_double(poly.vertices()[ids[i + 1]]);
            total += integrate_tetrahedron(call, a, b, c, apex, cfg);
        }
    }
    return total;
}

// --- exact path for polynomials -----------------------------------------

namespace detail {

// integral over the standard simplex of prod u_i^{e_i} = prod e_i! / (n+|e|)!
inline Rational monomial_over_simplex(const std::vector<int>& e) {
    int n = static_cast<int>(e.size());
    int total = 0;
    Int num(1);
    for (int x : e) {
        num *= factorial(x);
        total += x;
    }
    return Rational(num, factorial(n + total));
}

// Exact integral of P over the simplex with vertices vs (n+1 points in n-D).
inline Rational polynomial_over_simplex(const Polynomial& p,
                                        const std::vector<RationalVector>& vs) {
    int n = static_cast<int>(vs.size()) - 1;
    // x = v0 + M u with M columns v_i - v0.
    std::vector<RationalVector> rows(static_cast<std::size_t>(n),
                                     RationalVector(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                vs[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(i)] -
                vs[0][static_cast<std::size_t>(i)];
    // |det M|
    std::function<Rational(std::vector<std::vector<Rational>>)> rdet =
        [&](std::vector<std::vector<Rational>> m) -> Rational {
        std::size_t k = m.size();
        if (k == 1) return m[0][0];
        if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
        Rational d(0);
        for (std::size_t j = 0; j < k; ++j) {
            if (m[0][j].is_zero()) continue;
            std::vector<std::vector<Rational>> minor;
            for (std::size_t r = 1; r < k; ++r) {
                std::vector<Rational> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Rational term = m[0][j] * rdet(minor);
            d += (j % 2 == 0) ? term : -term;
        }
        return d;
    };
    std::vector<std::vector<Rational>> mm;
    for (const auto& r : rows) mm.push_back(std::vector<Rational>(r.begin(), r.end()));
    Rational det = rdet(mm);
    if (det.is_zero()) return Rational(0);
    Polynomial q = p.compose_affine(rows, vs[0]);
    Rational total(0);
    for (const auto& [e, c] : q.terms()) total += c * monomial_over_simplex(e);
    return total * det.abs();
}

}  // namespace detail

// Exact integral of a rational-coefficient polynomial over the polytope.
inline Rational integrate_region_exact(const DelzantPolytope& poly, const Polynomial& p) {
    const int n = poly.dim();
    if (n == 1) {
        RationalVector a = {Rational(poly.vertices()[0][0])};
        RationalVector b = {Rational(poly.vertices()[1][0])};
        if (a[0] > b[0]) std::swap(a, b);
        return detail::polynomial_over_simplex(p, {a, b});
    }
    if (n == 2) {
        const auto& ring = poly.polygon_ring();
        RationalVector a = to_rational(poly.vertices()[ring[0]]);
        Rational total(0);
        for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
            RationalVector b = to_rational(poly.vertices()[ring[i]]);
            RationalVector c = to_rational(poly.vertices()[ring[i + 1]]);
            total += detail::polynomial_over_simplex(p, {a, b, c});
        }
        return total;
    }
    RationalVector apex = to_rational(poly.vertices()[0]);
    Rational total(0);
    for (std::size_t fid = 0; fid < poly.facets().size(); ++fid) {
        if (dot(poly.facets()[fid].first, poly.vertices()[0]) == poly.facets()[fid].second)
            continue;
        const auto& geom = poly.facet_geometry(static_cast<int>(fid));
        const auto& ids = geom.ring_vertex_ids;
        RationalVector a = to_rational(poly.vertices()[ids[0]]);
        for (std::size_t i = 1; i + 1 < ids.size(); ++i) {
            RationalVector b = to_rational(poly.vertices()[ids[i]]);
            RationalVector c = to_rational(poly.vertices()[ids[i + 1]]);
            total += detail::polynomial_over_simplex(p, {a, b, c, apex});
        }
    }
    return total;
}

}  // namespace emsum
