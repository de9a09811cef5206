#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <polarbp/numerics.hpp>

#include "support/instances.hpp"

using namespace polarbp;

namespace {

bool near(const Matrix& a, const Matrix& b, double tol) {
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

TEST_CASE("pseudoinverse of identity is identity") {
    Matrix m = Matrix::Identity(3, 3);
    CHECK(near(pseudoinverse(m), m, 1e-14));
}

TEST_CASE("pseudoinverse of a single column is the scaled transpose") {
    // a = [sqrt2, sqrt2]: a+ = aᵀ/‖a‖² = [sqrt2, sqrt2]/4.
    const double s2 = std::sqrt(2.0);
    Matrix a(2, 1);
    a << s2, s2;
    Matrix expected(1, 2);
    expected << s2 / 4.0, s2 / 4.0;
    CHECK(near(pseudoinverse(a), expected, 1e-14));
}

TEST_CASE("pseudoinverse of an orthonormal tall matrix is its transpose") {
    Matrix m(3, 2);
    m << 1, 0,
         0, 1,
         0, 0;
    CHECK(near(pseudoinverse(m), m.transpose(), 1e-14));
}

TEST_CASE("Penrose identities hold on random matrices") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> dim(1, 12);
        Index r = dim(rng), c = dim(rng);
        Matrix m = fixtures::random_matrix(rng, r, c);
        if (trial % 3 == 0) {
            // Force a rank deficiency through a low-rank factorization.
            Index k = std::min(r, c) > 1 ? std::min(r, c) - 1 : 1;
            m = fixtures::random_matrix(rng, r, k) * fixtures::random_matrix(rng, k, c);
        }
        Matrix p = pseudoinverse(m);
        double scale = std::max(1.0, m.norm());
        CHECK(near(m * p * m, m, 1e-8 * scale));
        CHECK(near(p * m * p, p, 1e-8 * std::max(1.0, p.norm())));
        CHECK(near((m * p).transpose(), m * p, 1e-8 * scale));
        CHECK(near((p * m).transpose(), p * m, 1e-8 * scale));
    }
}

TEST_CASE("rank matches construction and is transpose-invariant") {
    CHECK(rank(Matrix::Identity(3, 3)) == 3);

    Matrix parallel(2, 2);
    parallel << 1, 2,
                0, 0;
    CHECK(rank(parallel) == 1);

    CHECK(rank(fixtures::unit_norm_d3().atoms) == 3);

    std::mt19937 rng(72);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> dim(1, 10);
        Index r = dim(rng), c = dim(rng);
        std::uniform_int_distribution<Index> kd(1, std::min(r, c));
        Index k = kd(rng);
        Matrix m = fixtures::random_matrix(rng, r, k) * fixtures::random_matrix(rng, k, c);
        CHECK(rank(m) == rank(Matrix(m.transpose())));
        CHECK(rank(m) <= k);
    }
}

TEST_CASE("least squares on a single skewed atom") {
    const double s2 = std::sqrt(2.0);
    Matrix a(2, 1);
    a << s2, s2;
    Vector b(2);
    b << 1, 0;
    Vector x = solve_least_squares(a, b);
    REQUIRE(x.size() == 1);
    CHECK(std::abs(x(0) - 1.0 / (2.0 * s2)) <= 1e-15);
    CHECK(std::abs(x(0) - 0.35355339059327373) <= 1e-15);
}

TEST_CASE("least squares solves exactly determined systems") {
    Matrix a = fixtures::skewed_pair_d2().atoms;
    Vector b(2);
    b << 1, 0;
    Vector x = solve_least_squares(a, b);
    CHECK(std::abs(x(0) - 1.0) <= 1e-12);
    CHECK(std::abs(x(1)) <= 1e-12);
}

TEST_CASE("least squares residual is orthogonal to the column space") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> dim(1, 9);
        Index r = dim(rng), c = dim(rng);
        Matrix m = fixtures::random_matrix(rng, r, c);
        Vector b = fixtures::random_vector(rng, r);
        Vector x = solve_least_squares(m, b);
        Vector res = b - m * x;
        CHECK((m.transpose() * res).cwiseAbs().maxCoeff() <= 1e-8 * std::max(1.0, b.norm()));
        // Minimum-norm solution agrees with the pseudoinverse route.
        CHECK((x - pseudoinverse(m) * b).cwiseAbs().maxCoeff() <= 1e-8);
    }
}
