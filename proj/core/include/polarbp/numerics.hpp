#pragma once

#include <Eigen/Dense>

namespace polarbp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Shared numeric knobs.  The defaults are what every high-level routine
// uses unless a caller overrides them.
struct Tolerances {
    double rank_tol = 1e-10;      // singular values below rank_tol * smax are zero
    double strict_tol = 1e-9;     // margin needed to call an inequality strict
    double dedupe_tol = 1e-8;     // max-norm distance under which points merge
    double residual_tol = 1e-10;  // relative residual for "exact" solves
};

// Moore-Penrose pseudoinverse via SVD with relative singular-value cutoff.
Matrix pseudoinverse(const Matrix& a, double rank_tol = 1e-10);

// Numerical rank: count of singular values above rank_tol * largest.
Index rank(const Matrix& a, double rank_tol = 1e-10);

// Minimum-norm least-squares solution of a x = b.
Vector solve_least_squares(const Matrix& a, const Vector& b,
                           double rank_tol = 1e-10);

}  // namespace polarbp
