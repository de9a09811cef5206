#include "polarbp/pursuit.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "polarbp/errors.hpp"
#include "polarbp/lp.hpp"

namespace polarbp {

namespace {

// Exact nonnegative solve of b·x̃ = y.  Minimum-norm least squares first;
// when a degenerate (merged-vertex) column set makes that come out
// negative, fall back to an LP feasibility call, which returns a basic
// nonnegative solution whenever one exists.
std::optional<Vector> nonneg_solve(const Matrix& b, const Vector& y,
                                   const Tolerances& tol) {
    const double res_tol = 1e-8 * (1.0 + y.norm());
    Vector xs = solve_least_squares(b, y, tol.rank_tol);
    if ((b * xs - y).lpNorm<Eigen::Infinity>() <= res_tol &&
        xs.minCoeff() >= -tol.strict_tol)
        return xs.cwiseMax(0.0);

    const LpSolution sol = solve_standard({b, y, Vector::Zero(b.cols())}, tol);
    if (sol.status == LpStatus::optimal &&
        (b * sol.primal - y).lpNorm<Eigen::Infinity>() <= res_tol)
        return sol.primal;
    return std::nullopt;
}

Vector pruned(const Vector& x, double cutoff) {
    Vector out = x;
    for (Index i = 0; i < out.size(); ++i)
        if (std::abs(out(i)) <= cutoff) out(i) = 0.0;
    return out;
}

}  // namespace

BpResult basis_pursuit(const AtomMatrix& a, const Vector& y,
                       const Tolerances& tol) {
    if (y.size() != a.d())
        throw std::invalid_argument("basis_pursuit: y must have length d");
    const DoubledMatrix dm = doubled(a);
    const LpSolution sol =
        solve_standard({dm.columns, y, Vector::Ones(2 * a.n())}, tol);
    if (sol.status == LpStatus::infeasible)
        throw infeasible_error("basis pursuit infeasible: y is outside range(A)");
    if (sol.status != LpStatus::optimal)
        throw std::runtime_error("basis pursuit LP cannot be unbounded");

    BpResult r;
    r.coeffs = fold_coeffs(sol.primal);
    r.objective = sol.objective_value;
    r.dual_point = sol.dual;
    r.unique_hint = sol.unique_hint;
    return r;
}

BpResult basis_pursuit_brute(const AtomMatrix& a, const Vector& y,
                             const Tolerances& tol) {
    if (y.size() != a.d())
        throw std::invalid_argument("basis_pursuit_brute: y must have length d");
    const std::vector<PolarVertex> verts = enumerate_polar_vertices(a, tol);

    double best = -std::numeric_limits<double>::infinity();
    for (const PolarVertex& v : verts) best = std::max(best, v.point.dot(y));
    const double tie_tol = 1e-10 * (1.0 + std::abs(best));
    Index pick = -1;
    int ties = 0;
    for (Index i = 0; i < static_cast<Index>(verts.size()); ++i) {
        if (verts[static_cast<size_t>(i)].point.dot(y) >= best - tie_tol) {
            if (pick < 0) pick = i;  // lexicographically first: verts are sorted
            ++ties;
        }
    }
    const PolarVertex& v = verts[static_cast<size_t>(pick)];

    const Matrix cols = doubled(a).columns;
    Matrix b(a.d(), static_cast<Index>(v.active_set.size()));
    for (Index i = 0; i < b.cols(); ++i)
        b.col(i) = cols.col(v.active_set[static_cast<size_t>(i)]);

    const std::optional<Vector> xs = nonneg_solve(b, y, tol);
    if (!xs)
        throw infeasible_error("no nonnegative representation on the optimal face");

    Vector xt = Vector::Zero(2 * a.n());
    for (Index i = 0; i < b.cols(); ++i)
        xt(v.active_set[static_cast<size_t>(i)]) = (*xs)(i);

    BpResult r;
    r.coeffs = fold_coeffs(xt);
    r.objective = xs->sum();
    r.dual_point = v.point;
    r.unique_hint = ties == 1 && rank(b, tol.rank_tol) == b.cols();
    return r;
}

PursuitTrace omp(const AtomMatrix& a, const Vector& y, Index max_steps,
                 const Tolerances& tol) {
    if (max_steps < 1) throw std::invalid_argument("omp: max_steps must be >= 1");
    if (y.size() != a.d()) throw std::invalid_argument("omp: y must have length d");

    PursuitTrace trace;
    const Index n = a.n();
    trace.final_coeffs = Vector::Zero(n);
    const double stop = tol.residual_tol * (1.0 + y.norm());

    Vector r = y;
    if (r.norm() <= stop) {
        trace.converged = true;  // y = 0: zero effective steps
        return trace;
    }

    std::vector<Index> selected;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (Index step = 0; step < max_steps; ++step) {
        Index pick = -1;
        double pick_corr = 0.0;
        for (Index j = 0; j < n; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            const double corr = a.atoms.col(j).dot(r);
            // Strict > keeps the lowest index on exact ties.
            if (pick < 0 || std::abs(corr) > std::abs(pick_corr)) {
                pick = j;
                pick_corr = corr;
            }
        }
        if (pick < 0) break;  // every atom already selected
        used[static_cast<size_t>(pick)] = 1;
        selected.push_back(pick);

        Matrix b(a.d(), static_cast<Index>(selected.size()));
        for (Index i = 0; i < b.cols(); ++i)
            b.col(i) = a.atoms.col(selected[static_cast<size_t>(i)]);
        const Vector xs = solve_least_squares(b, y, tol.rank_tol);
        r = y - b * xs;

        PursuitStep st;
        st.chosen_index = pick_corr >= 0.0 ? pick : n + pick;
        st.correlation = pick_corr;
        st.coeffs_after = Vector::Zero(n);
        for (Index i = 0; i < b.cols(); ++i)
            st.coeffs_after(selected[static_cast<size_t>(i)]) = xs(i);
        st.residual_norm = r.norm();
        trace.steps.push_back(st);

        if (st.residual_norm <= stop) {
            trace.converged = true;
            break;
        }
    }

    trace.steps_used = static_cast<Index>(trace.steps.size());
    if (!trace.steps.empty())
        trace.final_coeffs = pruned(trace.steps.back().coeffs_after, tol.dedupe_tol);
    return trace;
}

PursuitTrace omp_eventual(const AtomMatrix& a, const Vector& y, Index k_max,
                          const Tolerances& tol) {
    // Run past the sparsity level; pruning in the trace drops the zeros the
    // extra steps introduce.
    return omp(a, y, k_max, tol);
}

PursuitTrace mp(const AtomMatrix& a, const Vector& y, Index max_iters,
                const Tolerances& tol) {
    if (max_iters < 1) throw std::invalid_argument("mp: max_iters must be >= 1");
    if (y.size() != a.d()) throw std::invalid_argument("mp: y must have length d");

    PursuitTrace trace;
    const Index n = a.n();
    trace.final_coeffs = Vector::Zero(n);
    const double stop = tol.residual_tol * (1.0 + y.norm());

    Vector r = y;
    if (r.norm() <= stop) {
        trace.converged = true;
        return trace;
    }

    Vector coeffs = Vector::Zero(n);
    for (Index iter = 0; iter < max_iters; ++iter) {
        Index pick = 0;
        double pick_corr = a.atoms.col(0).dot(r);
        for (Index j = 1; j < n; ++j) {
            const double corr = a.atoms.col(j).dot(r);
            if (std::abs(corr) > std::abs(pick_corr)) {
                pick = j;
                pick_corr = corr;
            }
        }
        const double delta = pick_corr / a.atoms.col(pick).squaredNorm();
        coeffs(pick) += delta;
        r -= delta * a.atoms.col(pick);

        PursuitStep st;
        st.chosen_index = pick_corr >= 0.0 ? pick : n + pick;
        st.correlation = pick_corr;
        st.coeffs_after = coeffs;
        st.residual_norm = r.norm();
        trace.steps.push_back(st);

        if (st.residual_norm <= stop) {
            trace.converged = true;
            break;
        }
    }

    trace.steps_used = static_cast<Index>(trace.steps.size());
    trace.final_coeffs = pruned(coeffs, tol.dedupe_tol);
    return trace;
}

Vector recover_primal_from_dual(const AtomMatrix& a, const Vector& y,
                                const Vector& c, const Tolerances& tol) {
    if (y.size() != a.d() || c.size() != a.d())
        throw std::invalid_argument("recover_primal_from_dual: bad vector length");
    const Matrix cols = doubled(a).columns;
    const Vector dots = cols.transpose() * c;
    if (dots.maxCoeff() > 1.0 + 1e-8)
        throw inconsistent_certificate_error("c violates the dual constraints");

    std::vector<Index> active;
    for (Index j = 0; j < dots.size(); ++j)
        if (std::abs(dots(j) - 1.0) <= tol.dedupe_tol) active.push_back(j);

    if (active.empty()) {
        if (y.lpNorm<Eigen::Infinity>() <= 1e-8 * (1.0 + y.norm()))
            return Vector::Zero(a.n());
        throw inconsistent_certificate_error(
            "empty active set: c certifies only y = 0");
    }

    Matrix b(a.d(), static_cast<Index>(active.size()));
    for (Index i = 0; i < b.cols(); ++i)
        b.col(i) = cols.col(active[static_cast<size_t>(i)]);
    const std::optional<Vector> xs = nonneg_solve(b, y, tol);
    if (!xs)
        throw inconsistent_certificate_error(
            "c is not an optimal dual vector for this y");

    Vector xt = Vector::Zero(2 * a.n());
    for (Index i = 0; i < b.cols(); ++i)
        xt(active[static_cast<size_t>(i)]) = (*xs)(i);
    return fold_coeffs(xt);
}

}  // namespace polarbp
