#pragma once

// Shared fixtures and random-instance generators for the test suites.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <polarbp/polarbp.hpp>

namespace fixtures {

using namespace polarbp;

// Three unit-norm atoms in R^3: e1, e2, and the diagonal (1/sqrt(3))[1,1,1].
inline AtomMatrix unit_norm_d3() {
    const double s3 = 1.0 / std::sqrt(3.0);
    Matrix m(3, 3);
    m << 1, 0, s3,
         0, 1, s3,
         0, 0, s3;
    return {m};
}

// Two atoms in R^2 with very different norms: a1 = [1,0], a2 = [sqrt2, sqrt2].
inline AtomMatrix skewed_pair_d2() {
    const double s2 = std::sqrt(2.0);
    Matrix m(2, 2);
    m << 1, s2,
         0, s2;
    return {m};
}

// e1, e2 and the bisector (1/sqrt(2))[1,1]: the pair {1,2} has no face
// because atom 3 cuts it off.
inline AtomMatrix three_atom_d2() {
    const double s2 = 1.0 / std::sqrt(2.0);
    Matrix m(2, 3);
    m << 1, 0, s2,
         0, 1, s2;
    return {m};
}

inline Vector random_vector(std::mt19937& rng, Index d, double lo = -1.0,
                            double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vector v(d);
    for (Index i = 0; i < d; ++i) v(i) = u(rng);
    return v;
}

inline Matrix random_matrix(std::mt19937& rng, Index r, Index c, double lo = -1.0,
                            double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = u(rng);
    return m;
}

// Random atoms with columns bounded away from zero.
inline AtomMatrix random_atoms(std::mt19937& rng, Index d, Index n) {
    Matrix m(d, n);
    for (Index j = 0; j < n; ++j) {
        Vector col;
        do {
            col = random_vector(rng, d);
        } while (col.norm() < 0.1);
        m.col(j) = col;
    }
    return {m};
}

// Unit-norm atoms, pairwise distinct and non-antipodal (|aiᵀaj| < 1 − gap).
inline AtomMatrix random_unit_atoms(std::mt19937& rng, Index d, Index n,
                                    double gap = 5e-2) {
    Matrix m(d, n);
    for (Index j = 0; j < n; ++j) {
        for (;;) {
            Vector col = random_vector(rng, d);
            if (col.norm() < 0.1) continue;
            col.normalize();
            bool ok = true;
            for (Index i = 0; i < j; ++i) {
                if (std::abs(m.col(i).dot(col)) >= 1.0 - gap) ok = false;
            }
            if (ok) {
                m.col(j) = col;
                break;
            }
        }
    }
    return {m};
}

// Representation with a random size-m support, coefficients ±U[0.5, 1.5],
// regenerated until the support columns have full rank.
inline Representation random_representation(std::mt19937& rng, const AtomMatrix& a,
                                            Index m) {
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        std::vector<Index> idx(static_cast<size_t>(a.n()));
        for (Index i = 0; i < a.n(); ++i) idx[static_cast<size_t>(i)] = i;
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(static_cast<size_t>(m));

        Vector x = Vector::Zero(a.n());
        for (Index i : idx) x(i) = (coin(rng) ? 1.0 : -1.0) * mag(rng);
        Representation rep = make_representation(x);
        if (rank(signed_columns(a, rep.support)) == m) return rep;
    }
}

}  // namespace fixtures
