#include "polarbp/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "polarbp/errors.hpp"

namespace polarbp {

namespace {

constexpr double kPivotTol = 1e-11;

// Gauss-Jordan pivot on (row, col): row is scaled so the pivot becomes 1,
// then eliminated from every other row.
void pivot(Matrix& t, Vector& xb, std::vector<Index>& basis, Index row,
           Index col) {
    const double p = t(row, col);
    t.row(row) /= p;
    xb(row) /= p;
    for (Index i = 0; i < t.rows(); ++i) {
        if (i == row) continue;
        const double f = t(i, col);
        if (f != 0.0) {
            t.row(i) -= f * t.row(row);
            xb(i) = std::fma(-f, xb(row), xb(i));
            if (xb(i) < 0.0 && xb(i) > -1e-12) xb(i) = 0.0;
        }
    }
    basis[row] = col;
}

// Bland's rule: entering variable is the lowest-index nonbasic column with
// a negative reduced cost; the leaving row is the ratio-test minimizer with
// the smallest basic variable index.  Guarantees termination without
// cycling.  Only columns below n_enterable may enter (keeps artificial
// variables out once they have left).
LpStatus run_simplex(Matrix& t, Vector& xb, std::vector<Index>& basis,
                     const Vector& cost, Index n_enterable) {
    const Index m = t.rows();
    std::vector<char> is_basic(static_cast<size_t>(t.cols()), 0);
    for (Index i = 0; i < m; ++i) is_basic[static_cast<size_t>(basis[i])] = 1;

    const long max_iters = 2000 + 200 * static_cast<long>(t.cols() + m);
    for (long iter = 0; iter < max_iters; ++iter) {
        Vector cb(m);
        for (Index i = 0; i < m; ++i) cb(i) = cost(basis[i]);

        Index enter = -1;
        for (Index j = 0; j < n_enterable; ++j) {
            if (is_basic[static_cast<size_t>(j)]) continue;
            const double rj = cost(j) - cb.dot(t.col(j));
            if (rj < -kPivotTol) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return LpStatus::optimal;

        Index leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Index i = 0; i < m; ++i) {
            const double tij = t(i, enter);
            if (tij <= kPivotTol) continue;
            const double ratio = xb(i) / tij;
            if (ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 &&
                 (leave < 0 || basis[i] < basis[leave]))) {
                best_ratio = ratio;
                leave = i;
            }
        }
        if (leave < 0) return LpStatus::unbounded;

        is_basic[static_cast<size_t>(basis[leave])] = 0;
        is_basic[static_cast<size_t>(enter)] = 1;
        pivot(t, xb, basis, leave, enter);
    }
    throw std::runtime_error("simplex failed to terminate within the iteration cap");
}

}  // namespace

LpSolution solve_standard(const StandardLp& lp, const Tolerances& tol) {
    const Index m0 = lp.constraint_matrix.rows();
    const Index n = lp.constraint_matrix.cols();
    if (lp.rhs.size() != m0 || lp.objective.size() != n)
        throw std::invalid_argument("solve_standard: inconsistent LP dimensions");

    // Normalize to b ≥ 0, remembering flipped rows so the dual can be
    // mapped back to the original row signs.
    Matrix a0 = lp.constraint_matrix;
    Vector b = lp.rhs;
    std::vector<int> row_sign(static_cast<size_t>(m0), 1);
    for (Index i = 0; i < m0; ++i) {
        if (b(i) < 0.0) {
            a0.row(i) = -a0.row(i);
            b(i) = -b(i);
            row_sign[static_cast<size_t>(i)] = -1;
        }
    }

    // Phase 1 tableau [A | I] with artificial basis.
    Matrix t(m0, n + m0);
    t << a0, Matrix::Identity(m0, m0);
    Vector xb = b;
    std::vector<Index> basis(static_cast<size_t>(m0));
    for (Index i = 0; i < m0; ++i) basis[static_cast<size_t>(i)] = n + i;

    Vector cost1 = Vector::Zero(n + m0);
    cost1.tail(m0).setOnes();

    LpSolution out;
    out.primal = Vector::Zero(n);
    out.dual = Vector::Zero(m0);
    out.reduced_costs = Vector::Zero(n);

    if (m0 > 0) {
        const LpStatus st1 = run_simplex(t, xb, basis, cost1, n);
        if (st1 != LpStatus::optimal)
            throw std::runtime_error("phase-1 LP cannot be unbounded");
        double infeas = 0.0;
        for (Index i = 0; i < m0; ++i)
            if (basis[static_cast<size_t>(i)] >= n) infeas += xb(i);
        if (infeas > 1e-9 * (1.0 + b.lpNorm<1>())) {
            out.status = LpStatus::infeasible;
            return out;
        }
    }

    // Drive remaining artificial variables out of the basis; a row where no
    // structural pivot exists is redundant and is dropped.
    std::vector<Index> kept_rows;
    for (Index i = 0; i < m0; ++i) kept_rows.push_back(i);
    for (Index i = 0; i < t.rows();) {
        if (basis[static_cast<size_t>(i)] < n) {
            ++i;
            continue;
        }
        Index piv = -1;
        for (Index j = 0; j < n; ++j) {
            bool basic = false;
            for (Index r = 0; r < t.rows(); ++r)
                if (basis[static_cast<size_t>(r)] == j) basic = true;
            if (!basic && std::abs(t(i, j)) > kPivotTol) {
                piv = j;
                break;
            }
        }
        if (piv >= 0) {
            pivot(t, xb, basis, i, piv);
            ++i;
        } else {
            const Index last = t.rows() - 1;
            t.row(i) = t.row(last);
            xb(i) = xb(last);
            basis[static_cast<size_t>(i)] = basis[static_cast<size_t>(last)];
            kept_rows[static_cast<size_t>(i)] = kept_rows[static_cast<size_t>(last)];
            t.conservativeResize(last, Eigen::NoChange);
            xb.conservativeResize(last);
            basis.pop_back();
            kept_rows.pop_back();
        }
    }

    // Phase 2 with the real objective; artificial columns can no longer
    // enter.
    Vector cost2 = Vector::Zero(n + m0);
    cost2.head(n) = lp.objective;
    const LpStatus st2 = run_simplex(t, xb, basis, cost2, n);
    if (st2 == LpStatus::unbounded) {
        out.status = LpStatus::unbounded;
        return out;
    }

    for (Index i = 0; i < t.rows(); ++i) {
        if (basis[static_cast<size_t>(i)] < n)
            out.primal(basis[static_cast<size_t>(i)]) = std::max(xb(i), 0.0);
    }
    out.objective_value = lp.objective.dot(out.primal);

    // Dual from the final basis: solve A_Bᵀ y = c_B on the surviving rows,
    // zero on dropped (redundant) rows, then undo the sign normalization.
    const Index mk = t.rows();
    Matrix ab(mk, mk);
    Vector cb(mk);
    for (Index i = 0; i < mk; ++i) {
        for (Index r = 0; r < mk; ++r)
            ab(r, i) = a0(kept_rows[static_cast<size_t>(r)],
                          basis[static_cast<size_t>(i)]);
        cb(i) = cost2(basis[static_cast<size_t>(i)]);
    }
    Vector y_kept = mk > 0 ? solve_least_squares(ab.transpose(), cb, tol.rank_tol)
                           : Vector(0);
    for (Index r = 0; r < mk; ++r) {
        const Index orig = kept_rows[static_cast<size_t>(r)];
        out.dual(orig) = row_sign[static_cast<size_t>(orig)] * y_kept(r);
    }

    Vector y_full = Vector::Zero(m0);
    for (Index r = 0; r < mk; ++r) y_full(kept_rows[static_cast<size_t>(r)]) = y_kept(r);
    out.reduced_costs = lp.objective - a0.transpose() * y_full;

    out.unique_hint = true;
    std::vector<char> basic(static_cast<size_t>(n), 0);
    for (Index i = 0; i < mk; ++i)
        if (basis[static_cast<size_t>(i)] < n)
            basic[static_cast<size_t>(basis[static_cast<size_t>(i)])] = 1;
    for (Index j = 0; j < n; ++j) {
        if (!basic[static_cast<size_t>(j)] && out.reduced_costs(j) <= tol.strict_tol) {
            out.unique_hint = false;
            break;
        }
    }

    out.status = LpStatus::optimal;
    return out;
}

MarginResult solve_margin_lp(const Matrix& equality_atoms,
                             const Matrix& inequality_atoms,
                             const Tolerances& tol) {
    const Index d = equality_atoms.rows();
    const Index m = equality_atoms.cols();
    const Index k = inequality_atoms.cols();
    if (k > 0 && inequality_atoms.rows() != d)
        throw std::invalid_argument("solve_margin_lp: mismatched atom dimensions");

    // Variables: c = cp − cm (free split), margin t, cap slack u, and one
    // slack per inequality.  Rows: m equalities, k inequalities, t + u = 2.
    const Index nv = 2 * d + 2 + k;
    const Index nr = m + k + 1;
    Matrix a = Matrix::Zero(nr, nv);
    Vector b = Vector::Zero(nr);
    Vector c = Vector::Zero(nv);

    for (Index i = 0; i < m; ++i) {
        a.block(i, 0, 1, d) = equality_atoms.col(i).transpose();
        a.block(i, d, 1, d) = -equality_atoms.col(i).transpose();
        b(i) = 1.0;
    }
    for (Index j = 0; j < k; ++j) {
        const Index r = m + j;
        a.block(r, 0, 1, d) = inequality_atoms.col(j).transpose();
        a.block(r, d, 1, d) = -inequality_atoms.col(j).transpose();
        a(r, 2 * d) = 1.0;
        a(r, 2 * d + 2 + j) = 1.0;
        b(r) = 1.0;
    }
    a(m + k, 2 * d) = 1.0;
    a(m + k, 2 * d + 1) = 1.0;
    b(m + k) = 2.0;
    c(2 * d) = -1.0;

    const LpSolution sol = solve_standard({a, b, c}, tol);
    if (sol.status == LpStatus::infeasible)
        throw infeasible_error("margin LP infeasible: the requested face of the polar polytope is empty");
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("margin LP cannot be unbounded (t is capped)");

    MarginResult res;
    res.margin = sol.primal(2 * d);
    res.witness = sol.primal.segment(0, d) - sol.primal.segment(d, d);
    return res;
}

}  // namespace polarbp
