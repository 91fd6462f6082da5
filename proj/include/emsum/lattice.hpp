#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include "emsum/errors.hpp"
#include "emsum/rational.hpp"

namespace emsum {

using LatticeVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;
// Row-major integer matrix.
using IntMatrix = std::vector<LatticeVector>;

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const LatticeVector& a, const RationalVector& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// gcd of the coordinates, non-negative.
inline Int content(const LatticeVector& v) {
    Int g(0);
    for (const Int& x : v) {
        Int a = ::abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

inline bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

inline bool is_zero(const LatticeVector& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline LatticeVector primitive_of(const LatticeVector& v) {
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("primitive_of: zero vector");
    LatticeVector r = v;
    for (Int& x : r) x /= g;
    return r;
}

inline LatticeVector negate(const LatticeVector& v) {
    LatticeVector r = v;
    for (Int& x : r) x = -x;
    return r;
}

inline LatticeVector sub(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline LatticeVector add(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Int det(const IntMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return Int(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int d(0);
    // Laplace expansion along the first row; fine for the small n used here.
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        IntMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            LatticeVector row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * det(minor);
        if (j % 2 == 0)
            d += term;
        else
            d -= term;
    }
    return d;
}

// Adjugate: adj(M) * M = det(M) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
    std::size_t n = m.size();
    IntMatrix adj(n, LatticeVector(n));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor;
            minor.reserve(n - 1);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                LatticeVector row;
                row.reserve(n - 1);
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;  // transpose of cofactor matrix
        }
    }
    return adj;
}

inline LatticeVector matvec(const IntMatrix& m, const LatticeVector& v) {
    LatticeVector r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline RationalVector matvec(const IntMatrix& m, const RationalVector& v) {
    RationalVector r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline LatticeVector cross3(const LatticeVector& a, const LatticeVector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// g = gcd(a,b) together with x, y such that a x + b y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// For primitive w in Z^2, a vector z with det[w z] = w0*z1 - w1*z0 = 1.
inline LatticeVector unimodular_complement_2d(const LatticeVector& w) {
    Int x, y;
    Int g = ext_gcd(w[0], w[1], x, y);
    if (g != 1) throw std::invalid_argument("unimodular_complement_2d: vector not primitive");
    // w0*x + w1*y = 1, so take z = (-y, x).
    return LatticeVector{-y, x};
}

// Lattice basis of {z in Z^3 : <u,z> = 0} for primitive u, via unimodular
// column operations reducing u to a unit vector.
inline std::array<LatticeVector, 2> kernel_basis_3d(const LatticeVector& u) {
    IntMatrix cols = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};  // cols[k] is the k-th column
    LatticeVector a = u;                                  // a[k] = <u, cols[k]>
    while (true) {
        int nz = 0, last = -1;
        for (int k = 0; k < 3; ++k)
            if (a[k] != 0) {
                ++nz;
                last = k;
            }
        if (nz <= 1) {
            if (nz == 0) throw std::invalid_argument("kernel_basis_3d: zero vector");
            std::array<LatticeVector, 2> basis;
            int out = 0;
            for (int k = 0; k < 3; ++k)
                if (k != last) basis[out++] = cols[k];
            return basis;
        }
        // Reduce the largest |a_i| by the smallest nonzero |a_j|.
        int i = -1, j = -1;
        for (int k = 0; k < 3; ++k) {
            if (a[k] == 0) continue;
            if (i == -1 || ::abs(a[k]) > ::abs(a[i])) i = k;
        }
        for (int k = 0; k < 3; ++k) {
            if (a[k] == 0 || k == i) continue;
            if (j == -1 || ::abs(a[k]) < ::abs(a[j])) j = k;
        }
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i].get_mpz_t(), a[j].get_mpz_t());
        a[i] -= q * a[j];
        for (int r = 0; r < 3; ++r) cols[i][r] -= q * cols[j][r];
    }
}

inline std::vector<double> to_double(const LatticeVector& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].get_d();
    return r;
}

inline std::vector<double> to_double(const RationalVector& v) {
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
    return r;
}

inline RationalVector to_rational(const LatticeVector& v) {
    RationalVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

inline std::string vec_to_string(const LatticeVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

inline std::string vec_to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

}  // namespace emsum
