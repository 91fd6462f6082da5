#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "emsum/errors.hpp"
#include "emsum/lattice.hpp"
#include "emsum/multi_index.hpp"

namespace emsum {

// Regular integer n-wedge { x : <u_i, x> <= c_i, i = 1..n }.  Regularity means
// the primitive normals u_i form a lattice basis (|det U| = 1), which makes the
// dual basis v_j (with <u_i, v_j> = delta_ij) integral.
class RegularWedge {
public:
    static RegularWedge build(std::vector<LatticeVector> normals, std::vector<Int> offsets) {
        RegularWedge w;
        w.n_ = static_cast<int>(normals.size());
        if (w.n_ == 0 || offsets.size() != normals.size())
            throw InputError("wedge needs n normals and n offsets");
        for (int i = 0; i < w.n_; ++i) {
            if (static_cast<int>(normals[i].size()) != w.n_)
                throw InputError("wedge normal " + std::to_string(i + 1) + " has wrong dimension");
            if (!is_primitive(normals[i]))
                throw NotPrimitive("wedge normal " + std::to_string(i + 1) + " = " +
                                   vec_to_string(normals[i]) + " is not primitive");
        }
        Int d = det(normals);
        if (d != 1 && d != -1)
            throw NotRegular("wedge normals do not form a lattice basis (det = " + d.get_str() +
                             ")");
        IntMatrix adj = adjugate(normals);
        // U^{-1} = adj / det; |det| = 1 so the inverse is integral.
        w.dual_.assign(static_cast<std::size_t>(w.n_), LatticeVector(w.n_));
        for (int j = 0; j < w.n_; ++j)
            for (int i = 0; i < w.n_; ++i)
                w.dual_[j][i] = (d == 1) ? adj[i][j] : -adj[i][j];
        w.normals_ = std::move(normals);
        w.offsets_ = std::move(offsets);
        // Vertex: the unique solution of <u_i, x> = c_i for all i.
        w.vertex_.assign(static_cast<std::size_t>(w.n_), Int(0));
        for (int j = 0; j < w.n_; ++j)
            for (int i = 0; i < w.n_; ++i) w.vertex_[i] += w.offsets_[j] * w.dual_[j][i];
        return w;
    }

    int dim() const { return n_; }
    const std::vector<LatticeVector>& normals() const { return normals_; }
    const std::vector<Int>& offsets() const { return offsets_; }
    // dual()[j] is v_j; it generates the edge where all facets except H_j meet.
    const std::vector<LatticeVector>& dual() const { return dual_; }
    const LatticeVector& vertex() const { return vertex_; }

    bool contains(const RationalVector& x) const {
        for (int i = 0; i < n_; ++i)
            if (dot(normals_[i], x) > Rational(offsets_[i])) return false;
        return true;
    }

    // K_alpha: reciprocal of the volume of the parallelotope spanned by the
    // dual vectors v_i with alpha_i = 0.  For alpha with full support (the
    // vertex) the convention is K = 1 (integration = point evaluation).
    double k_alpha(const MultiIndex& alpha) const {
        if (alpha.size() != n_) throw InputError("k_alpha: dimension mismatch");
        std::vector<int> idx;
        for (int i = 0; i < n_; ++i)
            if (alpha[i] == 0) idx.push_back(i);
        if (idx.empty()) return 1.0;
        IntMatrix gram(idx.size(), LatticeVector(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                gram[a][b] = dot(dual_[idx[a]], dual_[idx[b]]);
        double vol2 = det(gram).get_d();
        return 1.0 / std::sqrt(vol2);
    }

    // Image of the wedge under the unimodular affine map x -> A x + t.
    // Inequalities <u_i, x> <= c_i become <u_i A^{-1}, y> <= c_i + <u_i A^{-1}, t>.
    RegularWedge transformed(const IntMatrix& a, const LatticeVector& t) const {
        Int d = det(a);
        if (d != 1 && d != -1) throw InputError("transformed: map is not unimodular");
        IntMatrix ainv = adjugate(a);
        if (d == -1)
            for (auto& row : ainv)
                for (auto& x : row) x = -x;
        std::vector<LatticeVector> normals(static_cast<std::size_t>(n_));
        std::vector<Int> offsets(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            LatticeVector ui(static_cast<std::size_t>(n_), Int(0));
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) ui[j] += normals_[i][k] * ainv[k][j];
            offsets[i] = offsets_[i] + dot(ui, t);
            normals[i] = std::move(ui);
        }
        return build(std::move(normals), std::move(offsets));
    }

private:
    int n_ = 0;
    std::vector<LatticeVector> normals_;
    std::vector<Int> offsets_;
    std::vector<LatticeVector> dual_;
    LatticeVector vertex_;
};

inline RegularWedge build_wedge(std::vector<LatticeVector> normals, std::vector<Int> offsets) {
    return RegularWedge::build(std::move(normals), std::move(offsets));
}

// Standard wedge { x_i <= 0 }.
inline RegularWedge standard_wedge(int n) {
    std::vector<LatticeVector> normals(static_cast<std::size_t>(n),
                                       LatticeVector(static_cast<std::size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) normals[i][i] = 1;
    return RegularWedge::build(std::move(normals), std::vector<Int>(static_cast<std::size_t>(n), Int(0)));
}

}  // namespace emsum
