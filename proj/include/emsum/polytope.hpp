#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "emsum/errors.hpp"
#include "emsum/lattice.hpp"
#include "emsum/wedge.hpp"

namespace emsum {

namespace detail {

// Counterclockwise convex hull of 2-D lattice points (monotone chain, exact
// predicates).  Collinear boundary points are dropped.
inline std::vector<LatticeVector> hull_2d(std::vector<LatticeVector> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticeVector& a, const LatticeVector& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t m = pts.size();
    if (m <= 2) return pts;
    auto cross = [](const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) -> Int {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<LatticeVector> h(2 * m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = m - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace detail

// Oriented edge constants for the explicit polygon operators.  zeta(e) is
// computed from a lattice vector v2 in the inward cone that completes the
// primitive edge generator to a basis of Z^2; the value does not depend on
// the choice of v2, which is re-checked at construction.
struct EdgeData {
    int edge_id = -1;
    LatticeVector generator;  // primitive direction of the edge
    LatticeVector normal;     // outward primitive normal
    Rational zeta;
};

// Inward primitive edge directions at a polygon vertex and the derived
// constants eta_i(v) = <w1,w2>/|w_i|^2, mu(v) = eta_1 + eta_2.
struct PolygonVertexFrame {
    int vertex_id = -1;
    LatticeVector w1, w2;
    int edge1 = -1, edge2 = -1;  // edge ids: e_i is generated by w_i
    Rational eta1, eta2, mu;
};

// Simple regular lattice polytope in dimension 1, 2 or 3, validated eagerly:
// integer vertices, exactly n facets per vertex, and unimodular primitive edge
// directions at every vertex.  Immutable after construction.
class DelzantPolytope {
public:
    struct Edge {
        int v0 = -1, v1 = -1;       // endpoint vertex ids
        std::vector<int> facet_ids;  // incident facets (1 in 2-D, 2 in 3-D)
        LatticeVector dir;           // primitive direction v0 -> v1
        Int length;                  // lattice length
    };

    // Ordered ring of a 3-D facet in its own lattice chart: x = base + s*g1 + t*g2.
    struct FacetGeometry {
        LatticeVector base;
        std::array<LatticeVector, 2> tangent;
        std::vector<std::array<Int, 2>> ring;  // ccw-in-chart lattice coordinates
        std::vector<int> ring_vertex_ids;
    };

    static DelzantPolytope from_facets(int n, std::vector<std::pair<LatticeVector, Int>> facets) {
        DelzantPolytope p;
        p.n_ = n;
        p.facets_ = std::move(facets);
        p.validate_facet_input();
        p.check_bounded();
        p.enumerate_vertices();
        p.build_face_lattice();
        p.check_delzant();
        return p;
    }

    static DelzantPolytope from_vertices(int n, const std::vector<LatticeVector>& verts) {
        if (n < 1 || n > 3) throw InputError("polytope dimension must be 1, 2 or 3");
        for (const auto& v : verts)
            if (static_cast<int>(v.size()) != n)
                throw InputError("vertex " + vec_to_string(v) + " has wrong dimension");
        return from_facets(n, facets_of_hull(n, verts));
    }

    int dim() const { return n_; }
    const std::vector<std::pair<LatticeVector, Int>>& facets() const { return facets_; }
    const std::vector<LatticeVector>& vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& vertex_facets() const { return vertex_facets_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int find_vertex(const LatticeVector& v) const {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == v) return static_cast<int>(i);
        return -1;
    }

    RationalVector centroid() const {
        RationalVector c(static_cast<std::size_t>(n_), Rational(0));
        for (const auto& v : vertices_)
            for (int i = 0; i < n_; ++i) c[i] += Rational(v[i]);
        for (int i = 0; i < n_; ++i) c[i] /= Rational(Int(vertices_.size()));
        return c;
    }

    double circumradius() const {
        RationalVector c = centroid();
        double r = 0.0;
        for (const auto& v : vertices_) {
            double d2 = 0.0;
            for (int i = 0; i < n_; ++i) {
                double t = v[i].get_d() - c[i].to_double();
                d2 += t * t;
            }
            r = std::max(r, std::sqrt(d2));
        }
        return r;
    }

    // Smallest value of c_j - <u_j, v> over vertices v and facets j not
    // incident to v; the natural margin scale for the partition of unity.
    Int min_facet_margin() const {
        Int best(0);
        bool first = true;
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
            const auto& inc = vertex_facets_[vi];
            for (std::size_t j = 0; j < facets_.size(); ++j) {
                if (std::find(inc.begin(), inc.end(), static_cast<int>(j)) != inc.end()) continue;
                Int slack = facets_[j].second - dot(facets_[j].first, vertices_[vi]);
                if (first || slack < best) {
                    best = slack;
                    first = false;
                }
            }
        }
        if (first) throw InvalidPolytope("polytope has no non-incident vertex/facet pair");
        return best;
    }

    RegularWedge vertex_wedge(int vid) const {
        std::vector<LatticeVector> normals;
        std::vector<Int> offsets;
        for (int fid : vertex_facets_[vid]) {
            normals.push_back(facets_[fid].first);
            offsets.push_back(facets_[fid].second);
        }
        return RegularWedge::build(std::move(normals), std::move(offsets));
    }

    bool contains(const RationalVector& x) const {
        for (const auto& [u, c] : facets_)
            if (dot(u, x) > Rational(c)) return false;
        return true;
    }

    // --- polygon-specific data -------------------------------------------

    const std::vector<int>& polygon_ring() const {
        require_dim(2, "polygon_ring");
        return polygon_ring_;
    }

    EdgeData edge_data(int eid) const {
        require_dim(2, "edge_data");
        const Edge& e = edges_[eid];
        EdgeData d;
        d.edge_id = eid;
        d.generator = e.dir;
        d.normal = facets_[e.facet_ids[0]].first;
        d.zeta = zeta_from(d.generator, d.normal);
        // The value must not depend on which inward completion is used.
        LatticeVector shifted = add(inward_completion(d.generator, d.normal), d.generator);
        Rational alt = Rational(dot(shifted, d.normal)) / Rational(dot(d.normal, d.normal));
        if (alt != d.zeta) throw NumericalError("zeta(e) depends on the completion choice");
        return d;
    }

    PolygonVertexFrame vertex_frame(int vid) const {
        require_dim(2, "vertex_frame");
        std::vector<int> eids;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (edges_[e].v0 == vid || edges_[e].v1 == vid) eids.push_back(static_cast<int>(e));
        if (eids.size() != 2) throw InvalidPolytope("polygon vertex without two edges");
        PolygonVertexFrame f;
        f.vertex_id = vid;
        f.edge1 = eids[0];
        f.edge2 = eids[1];
        f.w1 = edge_direction_from(eids[0], vid);
        f.w2 = edge_direction_from(eids[1], vid);
        Rational w12(dot(f.w1, f.w2));
        f.eta1 = w12 / Rational(dot(f.w1, f.w1));
        f.eta2 = w12 / Rational(dot(f.w2, f.w2));
        f.mu = f.eta1 + f.eta2;
        return f;
    }

    // Primitive direction of edge eid pointing away from vertex vid.
    LatticeVector edge_direction_from(int eid, int vid) const {
        const Edge& e = edges_[eid];
        if (e.v0 == vid) return e.dir;
        if (e.v1 == vid) return negate(e.dir);
        throw InputError("edge_direction_from: vertex not on edge");
    }

    const FacetGeometry& facet_geometry(int fid) const {
        require_dim(3, "facet_geometry");
        return facet_geometry_[fid];
    }

    DelzantPolytope transformed(const IntMatrix& a, const LatticeVector& t) const {
        std::vector<LatticeVector> verts;
        verts.reserve(vertices_.size());
        for (const auto& v : vertices_) verts.push_back(add(matvec(a, v), t));
        return from_vertices(n_, verts);
    }

private:
    void require_dim(int d, const char* what) const {
        if (n_ != d)
            throw InputError(std::string(what) + " requires a polytope of dimension " +
                             std::to_string(d));
    }

    static Rational zeta_from_pair(const LatticeVector& v2, const LatticeVector& normal) {
        return Rational(dot(v2, normal)) / Rational(dot(normal, normal));
    }

    // Lattice vector completing the primitive generator to a basis of Z^2 and
    // lying in the inward cone (negative pairing with the outward normal).
    static LatticeVector inward_completion(const LatticeVector& gen, const LatticeVector& normal) {
        LatticeVector z = unimodular_complement_2d(gen);
        Int s = dot(z, normal);
        if (s == 0) throw NumericalError("degenerate completion");
        if (s > 0) z = negate(z);
        return z;
    }

    static Rational zeta_from(const LatticeVector& gen, const LatticeVector& normal) {
        return zeta_from_pair(inward_completion(gen, normal), normal);
    }

    void validate_facet_input() {
        if (n_ < 1 || n_ > 3) throw InputError("polytope dimension must be 1, 2 or 3");
        if (facets_.size() < static_cast<std::size_t>(n_) + 1)
            throw Unbounded("fewer than n+1 facets cannot bound a polytope");
        std::set<std::string> seen;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            const auto& [u, c] = facets_[i];
            if (static_cast<int>(u.size()) != n_)
                throw InputError("facet " + std::to_string(i + 1) + " has wrong dimension");
            if (is_zero(u)) throw InputError("facet " + std::to_string(i + 1) + " has zero normal");
            if (!is_primitive(u))
                throw NotPrimitive("facet " + std::to_string(i + 1) + " normal " +
                                   vec_to_string(u) + " is not primitive");
            std::string key = vec_to_string(u) + "|" + c.get_str();
            if (!seen.insert(key).second)
                throw InvalidPolytope("facet " + std::to_string(i + 1) + " is a duplicate");
        }
    }

    // Bounded iff the recession cone { r : <u_i, r> <= 0 } is {0}.
    void check_bounded() const {
        std::vector<LatticeVector> rays;
        if (n_ == 1) {
            rays.push_back({Int(1)});
            rays.push_back({Int(-1)});
        } else if (n_ == 2) {
            for (const auto& [u, c] : facets_) {
                rays.push_back({-u[1], u[0]});
                rays.push_back({u[1], -u[0]});
            }
        } else {
            // Lineality first: rank deficiency of the normal matrix.
            if (normal_rank() < n_)
                throw Unbounded("facet normals do not span the space");
            for (std::size_t i = 0; i < facets_.size(); ++i)
                for (std::size_t j = i + 1; j < facets_.size(); ++j) {
                    LatticeVector r = cross3(facets_[i].first, facets_[j].first);
                    if (is_zero(r)) continue;
                    rays.push_back(r);
                    rays.push_back(negate(r));
                }
        }
        if (n_ == 2 && normal_rank() < 2) throw Unbounded("facet normals do not span the space");
        for (const auto& r : rays) {
            bool escapes = true;
            for (const auto& [u, c] : facets_)
                if (dot(u, r) > 0) {
                    escapes = false;
                    break;
                }
            if (escapes)
                throw Unbounded("region is unbounded in direction " + vec_to_string(r));
        }
    }

    int normal_rank() const {
        std::vector<RationalVector> rows;
        for (const auto& [u, c] : facets_) rows.push_back(to_rational(u));
        int rank = 0;
        for (int col = 0; col < n_ && rank < static_cast<int>(rows.size()); ++col) {
            int pivot = -1;
            for (int r = rank; r < static_cast<int>(rows.size()); ++r)
                if (!rows[r][col].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(rows[rank], rows[pivot]);
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                if (r == rank || rows[r][col].is_zero()) continue;
                Rational factor = rows[r][col] / rows[rank][col];
                for (int cc = 0; cc < n_; ++cc) rows[r][cc] -= factor * rows[rank][cc];
            }
            ++rank;
        }
        return rank;
    }

    void enumerate_vertices() {
        const int d = static_cast<int>(facets_.size());
        std::vector<int> subset(static_cast<std::size_t>(n_));
        std::vector<RationalVector> found;
        std::vector<LatticeVector> found_int;
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == n_) {
                IntMatrix m;
                std::vector<Int> rhs;
                for (int k = 0; k < n_; ++k) {
                    m.push_back(facets_[subset[k]].first);
                    rhs.push_back(facets_[subset[k]].second);
                }
                Int dm = det(m);
                if (dm == 0) return;
                IntMatrix adj = adjugate(m);
                RationalVector x(static_cast<std::size_t>(n_), Rational(0));
                for (int i = 0; i < n_; ++i) {
                    Int s(0);
                    for (int j = 0; j < n_; ++j) s += adj[i][j] * rhs[j];
                    x[i] = Rational(s, dm);
                }
                for (const auto& [u, c] : facets_)
                    if (dot(u, x) > Rational(c)) return;
                for (const auto& prev : found)
                    if (prev == x) return;
                for (int i = 0; i < n_; ++i)
                    if (!x[i].is_integer())
                        throw NonIntegerVertex("vertex " + vec_to_string(x) +
                                               " is not a lattice point");
                LatticeVector xi(static_cast<std::size_t>(n_));
                for (int i = 0; i < n_; ++i) xi[i] = x[i].numerator();
                found.push_back(x);
                found_int.push_back(std::move(xi));
                return;
            }
            for (int f = start; f <= d - (n_ - pos); ++f) {
                subset[static_cast<std::size_t>(pos)] = f;
                rec(pos + 1, f + 1);
            }
        };
        rec(0, 0);
        if (found_int.empty()) throw InvalidPolytope("facet system has no vertex (empty region)");
        std::sort(found_int.begin(), found_int.end(),
                  [](const LatticeVector& a, const LatticeVector& b) {
                      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                  });
        vertices_ = std::move(found_int);
    }

    void build_face_lattice() {
        const int d = static_cast<int>(facets_.size());
        vertex_facets_.assign(vertices_.size(), {});
        std::vector<std::vector<int>> facet_vertices(static_cast<std::size_t>(d));
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi)
            for (int f = 0; f < d; ++f)
                if (dot(facets_[f].first, vertices_[vi]) == facets_[f].second) {
                    vertex_facets_[vi].push_back(f);
                    facet_vertices[f].push_back(static_cast<int>(vi));
                }
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi)
            if (static_cast<int>(vertex_facets_[vi].size()) != n_)
                throw NotSimple("vertex " + vec_to_string(vertices_[vi]) + " lies on " +
                                std::to_string(vertex_facets_[vi].size()) + " facets, expected " +
                                std::to_string(n_));
        for (int f = 0; f < d; ++f)
            if (facet_vertices[f].empty())
                throw InvalidPolytope("facet " + std::to_string(f + 1) +
                                      " touches no vertex (redundant constraint)");

        edges_.clear();
        auto make_edge = [&](int a, int b, std::vector<int> fids) {
            Edge e;
            e.v0 = std::min(a, b);
            e.v1 = std::max(a, b);
            e.facet_ids = std::move(fids);
            LatticeVector delta = sub(vertices_[e.v1], vertices_[e.v0]);
            e.length = content(delta);
            e.dir = primitive_of(delta);
            edges_.push_back(std::move(e));
        };
        if (n_ == 1) {
            // No positive-dimensional proper faces.
        } else if (n_ == 2) {
            for (int f = 0; f < d; ++f) {
                if (facet_vertices[f].size() != 2)
                    throw InvalidPolytope("polygon facet " + std::to_string(f + 1) + " has " +
                                          std::to_string(facet_vertices[f].size()) + " vertices");
                make_edge(facet_vertices[f][0], facet_vertices[f][1], {f});
            }
        } else {
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) {
                    std::vector<int> shared;
                    std::set_intersection(facet_vertices[i].begin(), facet_vertices[i].end(),
                                          facet_vertices[j].begin(), facet_vertices[j].end(),
                                          std::back_inserter(shared));
                    if (shared.empty()) continue;
                    if (shared.size() != 2)
                        throw InvalidPolytope("facets " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) +
                                              " intersect in a degenerate face");
                    make_edge(shared[0], shared[1], {i, j});
                }
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            if (a.v0 != b.v0) return a.v0 < b.v0;
            return a.v1 < b.v1;
        });

        if (n_ == 2) build_polygon_ring();
        if (n_ == 3) build_facet_geometry(facet_vertices);
    }

    void build_polygon_ring() {
        auto hull = detail::hull_2d(vertices_);
        if (hull.size() != vertices_.size())
            throw InvalidPolytope("polygon vertices are not in convex position");
        polygon_ring_.clear();
        for (const auto& h : hull) polygon_ring_.push_back(find_vertex(h));
    }

    void build_facet_geometry(const std::vector<std::vector<int>>& facet_vertices) {
        facet_geometry_.clear();
        facet_geometry_.resize(facets_.size());
        for (std::size_t f = 0; f < facets_.size(); ++f) {
            FacetGeometry& g = facet_geometry_[f];
            g.base = vertices_[facet_vertices[f][0]];
            g.tangent = kernel_basis_3d(facets_[f].first);
            // Lattice coordinates of the facet vertices in the chart.
            // v - base = s*g1 + t*g2 has a unique integer solution.
            std::vector<LatticeVector> chart_pts;
            std::map<std::pair<std::string, std::string>, int> chart_to_vid;
            for (int vid : facet_vertices[f]) {
                LatticeVector delta = sub(vertices_[vid], g.base);
                auto st = solve_chart(g.tangent, delta);
                chart_pts.push_back({st[0], st[1]});
                chart_to_vid[{st[0].get_str(), st[1].get_str()}] = vid;
            }
            auto ring = detail::hull_2d(chart_pts);
            if (ring.size() != chart_pts.size())
                throw InvalidPolytope("facet " + std::to_string(f + 1) +
                                      " vertices are not in convex position");
            for (const auto& p : ring) {
                g.ring.push_back({p[0], p[1]});
                g.ring_vertex_ids.push_back(chart_to_vid[{p[0].get_str(), p[1].get_str()}]);
            }
        }
    }

    static std::array<Int, 2> solve_chart(const std::array<LatticeVector, 2>& tangent,
                                          const LatticeVector& delta) {
        // Find two coordinate rows making the 2x2 system invertible.
        for (int r0 = 0; r0 < 3; ++r0)
            for (int r1 = r0 + 1; r1 < 3; ++r1) {
                Int dm = tangent[0][r0] * tangent[1][r1] - tangent[0][r1] * tangent[1][r0];
                if (dm == 0) continue;
                Int s_num = delta[r0] * tangent[1][r1] - delta[r1] * tangent[1][r0];
                Int t_num = tangent[0][r0] * delta[r1] - tangent[0][r1] * delta[r0];
                Rational s(s_num, dm), t(t_num, dm);
                if (!s.is_integer() || !t.is_integer())
                    throw InvalidPolytope("facet vertex is not a lattice point of the facet chart");
                return {s.numerator(), t.numerator()};
            }
        throw InvalidPolytope("degenerate facet tangent basis");
    }

    void check_delzant() const {
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
            std::vector<LatticeVector> dirs;
            for (std::size_t e = 0; e < edges_.size(); ++e)
                if (edges_[e].v0 == static_cast<int>(vi) || edges_[e].v1 == static_cast<int>(vi))
                    dirs.push_back(edge_direction_from(static_cast<int>(e), static_cast<int>(vi)));
            if (n_ == 1) {
                // Interval: nothing beyond simplicity to check.
                continue;
            }
            if (static_cast<int>(dirs.size()) != n_)
                throw NotSimple("vertex " + vec_to_string(vertices_[vi]) + " has " +
                                std::to_string(dirs.size()) + " edges, expected " +
                                std::to_string(n_));
            Int dm = det(dirs);
            if (dm != 1 && dm != -1)
                throw NotRegular("edge directions at vertex " + vec_to_string(vertices_[vi]) +
                                 " span a sublattice of index " + Int(::abs(dm)).get_str());
        }
        // Regularity of the normals at each vertex follows by duality but is
        // cheap to confirm while extracting vertex wedges.
        for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
            IntMatrix m;
            for (int fid : vertex_facets_[vi]) m.push_back(facets_[fid].first);
            Int dm = det(m);
            if (dm != 1 && dm != -1)
                throw NotRegular("facet normals at vertex " + vec_to_string(vertices_[vi]) +
                                 " are not a lattice basis");
        }
    }

    static std::vector<std::pair<LatticeVector, Int>> facets_of_hull(
        int n, const std::vector<LatticeVector>& verts) {
        std::vector<std::pair<LatticeVector, Int>> facets;
        if (verts.empty()) throw InvalidPolytope("no vertices given");
        if (n == 1) {
            Int lo = verts[0][0], hi = verts[0][0];
            for (const auto& v : verts) {
                lo = std::min(lo, v[0]);
                hi = std::max(hi, v[0]);
            }
            if (lo == hi) throw InvalidPolytope("interval has zero length");
            facets.push_back({{Int(1)}, hi});
            facets.push_back({{Int(-1)}, -lo});
            return facets;
        }
        if (n == 2) {
            auto ring = detail::hull_2d(verts);
            if (ring.size() < 3) throw InvalidPolytope("polygon hull is degenerate");
            for (std::size_t i = 0; i < ring.size(); ++i) {
                const auto& a = ring[i];
                const auto& b = ring[(i + 1) % ring.size()];
                // ccw ring: outward normal of edge a->b is (dy, -dx).
                LatticeVector u = primitive_of({b[1] - a[1], a[0] - b[0]});
                facets.push_back({u, dot(u, a)});
            }
            return facets;
        }
        // n == 3: enumerate supporting planes through vertex triples.
        std::set<std::string> seen;
        std::size_t m = verts.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    LatticeVector nrm = cross3(sub(verts[j], verts[i]), sub(verts[k], verts[i]));
                    if (is_zero(nrm)) continue;
                    nrm = primitive_of(nrm);
                    Int c = dot(nrm, verts[i]);
                    bool all_le = true, all_ge = true;
                    for (const auto& p : verts) {
                        Int s = dot(nrm, p);
                        if (s > c) all_le = false;
                        if (s < c) all_ge = false;
                    }
                    if (!all_le && !all_ge) continue;
                    LatticeVector u = all_le ? nrm : negate(nrm);
                    Int cc = all_le ? c : -c;
                    std::string key = vec_to_string(u) + "|" + cc.get_str();
                    if (seen.insert(key).second) facets.push_back({u, cc});
                }
        if (facets.size() < 4) throw InvalidPolytope("vertex set is not full-dimensional");
        return facets;
    }

    int n_ = 0;
    std::vector<std::pair<LatticeVector, Int>> facets_;
    std::vector<LatticeVector> vertices_;
    std::vector<std::vector<int>> vertex_facets_;
    std::vector<Edge> edges_;
    std::vector<int> polygon_ring_;
    std::vector<FacetGeometry> facet_geometry_;
};

inline DelzantPolytope build_polytope_from_facets(int n,
                                                  std::vector<std::pair<LatticeVector, Int>> f) {
    return DelzantPolytope::from_facets(n, std::move(f));
}

inline DelzantPolytope build_polytope_from_vertices(int n, const std::vector<LatticeVector>& v) {
    return DelzantPolytope::from_vertices(n, v);
}

inline Rational edge_zeta(const DelzantPolytope& p, int eid) { return p.edge_data(eid).zeta; }

}  // namespace emsum
