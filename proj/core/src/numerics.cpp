#include "polarbp/numerics.hpp"

namespace polarbp {

Matrix pseudoinverse(const Matrix& a, double rank_tol) {
    if (a.size() == 0) return Matrix(a.cols(), a.rows());
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = svd.singularValues();
    const double cutoff = rank_tol * (sv.size() > 0 ? sv(0) : 0.0);
    Vector inv_sv = Vector::Zero(sv.size());
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) inv_sv(i) = 1.0 / sv(i);
    }
    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
}

Index rank(const Matrix& a, double rank_tol) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(a);
    const Vector& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = rank_tol * sv(0);
    Index r = 0;
    for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++r;
    }
    return r;
}

Vector solve_least_squares(const Matrix& a, const Vector& b, double rank_tol) {
    if (a.cols() == 0) return Vector(0);
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(rank_tol);
    return svd.solve(b);
}

}  // namespace polarbp
