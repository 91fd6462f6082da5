#pragma once

#include <functional>
#include <span>
#include <vector>

#include "emsum/quadrature.hpp"

namespace emsum {

using PointFunction = std::function<double(std::span<const double>)>;

// x -> D^q f(x) . dirs, the integrand of every face term.
inline PointFunction dir_integrand(const SmoothFunction& f,
                                   std::vector<std::vector<double>> dirs,
                                   int max_order = kDefaultMaxJetOrder) {
    return [&f, dirs = std::move(dirs), max_order](std::span<const double> x) {
        if (dirs.empty()) return f.eval(x);
        return dirderiv(f, x, std::span<const std::vector<double>>(dirs), max_order);
    };
}

// --- lattice-normalized integrals over polytope faces ---------------------
//
// The star integral is the plain Lebesgue integral in lattice coordinates of
// the face: one lattice step has measure 1, which absorbs K_alpha exactly.

// Edge of a polytope: parametrize x = a + t * dir, t in [0, L].
inline double integrate_edge_star(const DelzantPolytope& poly, int eid, const PointFunction& g,
                                  const QuadratureConfig& cfg = {}) {
    const auto& e = poly.edges()[eid];
    std::vector<double> a = to_double(poly.vertices()[e.v0]);
    std::vector<double> w = to_double(e.dir);
    double len = e.length.get_d();
    std::vector<double> x(a.size());
    return integrate_interval(
        [&](double t) {
            for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i] + t * w[i];
            return g(x);
        },
        0.0, len, cfg);
}

// Facet of a 3-polytope in its lattice chart x = base + s g1 + t g2.
inline double integrate_facet_star_3d(const DelzantPolytope& poly, int fid, const PointFunction& g,
                                      const QuadratureConfig& cfg = {}) {
    const auto& geom = poly.facet_geometry(fid);
    std::vector<double> base = to_double(geom.base);
    std::vector<double> g1 = to_double(geom.tangent[0]);
    std::vector<double> g2 = to_double(geom.tangent[1]);
    std::vector<double> x(3);
    auto chart = [&](std::span<const double> st) {
        for (int i = 0; i < 3; ++i) x[static_cast<std::size_t>(i)] =
            base[static_cast<std::size_t>(i)] + st[0] * g1[static_cast<std::size_t>(i)] +
            st[1] * g2[static_cast<std::size_t>(i)];
        return g(x);
    };
    // Fan triangulation of the chart polygon (lattice measure in the chart).
    const auto& ring = geom.ring;
    std::vector<double> a = {ring[0][0].get_d(), ring[0][1].get_d()};
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
        std::vector<double> b = {ring[i][0].get_d(), ring[i][1].get_d()};
        std::vector<double> c = {ring[i + 1][0].get_d(), ring[i + 1][1].get_d()};
        total += integrate_triangle(chart, a, b, c, cfg);
    }
    return total;
}

// --- exact counterparts for polynomial integrands -------------------------

// Exact star integral over an edge of D^{|dirs|} P . dirs.
inline Rational integrate_edge_star_exact(const DelzantPolytope& poly, int eid,
                                          const Polynomial& p,
                                          const std::vector<LatticeVector>& dirs) {
    const auto& e = poly.edges()[eid];
    Polynomial q = p;
    for (const auto& d : dirs) q = q.directional_derivative(to_rational(d));
    // Restrict to the edge: x = a + t w, univariate in t.
    std::vector<RationalVector> rows;
    for (int i = 0; i < poly.dim(); ++i) rows.push_back({Rational(e.dir[static_cast<std::size_t>(i)])});
    Polynomial line = q.compose_affine(rows, to_rational(poly.vertices()[e.v0]));
    Rational total(0);
    Rational len(e.length);
    for (const auto& [exps, c] : line.terms()) {
        int k = exps[0];
        total += c * len.pow(k + 1) / Rational(k + 1);
    }
    return total;
}

inline Rational vertex_eval_exact(const DelzantPolytope& poly, int vid, const Polynomial& p,
                                  const std::vector<LatticeVector>& dirs) {
    Polynomial q = p;
    for (const auto& d : dirs) q = q.directional_derivative(to_rational(d));
    return q.eval(to_rational(poly.vertices()[vid]));
}

// --- star integrals over wedge faces --------------------------------------
//
// Face F = intersection of the facets H_i, i in I.  In dual-basis parameters
// x = x0 + sum_{j not in I} t_j v_j the face is { t_j <= 0 } and the star
// measure is dt.  Integrals are restricted to the integrand's support box.
// Real offsets support the perturbed wedges of the Todd-operator oracle.

struct WedgeFaceDomain {
    std::vector<int> free;        // indices j not in I
    std::vector<double> origin;   // x0 (real when offsets are perturbed)
    std::vector<double> lo;       // per free axis, [lo, 0]
};

inline WedgeFaceDomain wedge_face_domain(const RegularWedge& w, const std::vector<int>& face_set,
                                         const Box& support,
                                         std::span<const double> offsets = {}) {
    const int n = w.dim();
    WedgeFaceDomain dom;
    std::vector<double> off(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        off[static_cast<std::size_t>(i)] =
            offsets.empty() ? w.offsets()[static_cast<std::size_t>(i)].get_d() : offsets[i];
    dom.origin.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        std::vector<double> vj = to_double(w.dual()[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n; ++i)
            dom.origin[static_cast<std::size_t>(i)] += off[static_cast<std::size_t>(j)] * vj[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n; ++j) {
        if (std::find(face_set.begin(), face_set.end(), j) != face_set.end()) continue;
        dom.free.push_back(j);
        // t_j = <u_j, x - x0>; bound it below over the support box.
        std::vector<double> uj = to_double(w.normals()[static_cast<std::size_t>(j)]);
        double lo = 0.0;
        for (int i = 0; i < n; ++i) {
            double a = uj[static_cast<std::size_t>(i)] *
                       (support.lo[static_cast<std::size_t>(i)] - dom.origin[static_cast<std::size_t>(i)]);
            double b = uj[static_cast<std::size_t>(i)] *
                       (support.hi[static_cast<std::size_t>(i)] - dom.origin[static_cast<std::size_t>(i)]);
            lo += std::min(a, b);
        }
        dom.lo.push_back(std::min(lo - 1e-9, 0.0));
    }
    return dom;
}

inline double integrate_wedge_face_star(const RegularWedge& w, const std::vector<int>& face_set,
                                        const PointFunction& g, const Box& support,
                                        const QuadratureConfig& cfg = {},
                                        std::span<const double> offsets = {}) {
    WedgeFaceDomain dom = wedge_face_domain(w, face_set, support, offsets);
    const int n = w.dim();
    const int dim = static_cast<int>(dom.free.size());
    if (dim == 0) return g(dom.origin);
    std::vector<std::vector<double>> duals;
    for (int j : dom.free) duals.push_back(to_double(w.dual()[static_cast<std::size_t>(j)]));
    std::vector<double> x(static_cast<std::size_t>(n));
    auto h = [&](std::span<const double> t) {
        for (int i = 0; i < n; ++i) {
            double s = dom.origin[static_cast<std::size_t>(i)];
            for (int k = 0; k < dim; ++k)
                s += t[static_cast<std::size_t>(k)] * duals[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            x[static_cast<std::size_t>(i)] = s;
        }
        return g(x);
    };
    std::vector<double> hi(static_cast<std::size_t>(dim), 0.0);
    for (double v : dom.lo)
        if (v >= 0.0) return 0.0;
    return integrate_box(h, dom.lo, hi, cfg);
}

// Both sides of the face Stokes identity: int*_F Dg.v_j = int*_{F n H_j} g
// for compactly supported g.  The harness asserts their agreement.
inline std::pair<double, double> check_stokes_identity(const RegularWedge& w,
                                                       const std::vector<int>& face_set, int j,
                                                       const SmoothFunction& g,
                                                       const QuadratureConfig& cfg = {}) {
    auto support = g.support();
    if (!support) throw InputError("check_stokes_identity needs a compactly supported integrand");
    std::vector<std::vector<double>> dirs = {to_double(w.dual()[static_cast<std::size_t>(j)])};
    double lhs = integrate_wedge_face_star(w, face_set, dir_integrand(g, dirs), *support, cfg);
    std::vector<int> sub = face_set;
    sub.push_back(j);
    std::sort(sub.begin(), sub.end());
    double rhs = integrate_wedge_face_star(w, sub, dir_integrand(g, {}), *support, cfg);
    return {lhs, rhs};
}

}  // namespace emsum
