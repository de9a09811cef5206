#pragma once

#include "polarbp/numerics.hpp"

namespace polarbp {

// min objectiveᵀx  s.t.  constraint_matrix · x = rhs,  x ≥ 0.
struct StandardLp {
    Matrix constraint_matrix;  // m_eq × n_var
    Vector rhs;                // m_eq
    Vector objective;          // n_var
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Vector primal;         // n_var, basic optimal point when status == optimal
    Vector dual;           // m_eq, extracted from the final basis
    double objective_value = 0.0;
    Vector reduced_costs;  // n_var
    bool unique_hint = false;  // all nonbasic reduced costs > strict_tol
};

// Two-phase dense tableau simplex with Bland's anti-cycling rule.
// Redundant equality rows are dropped internally; their dual entries are
// reported as zero.
LpSolution solve_standard(const StandardLp& lp, const Tolerances& tol = {});

struct MarginResult {
    double margin = 0.0;  // optimal t
    Vector witness;       // an attaining c
};

// max t  s.t.  (equality columns)ᵀc = 1,  (inequality columns)ᵀc ≤ 1 − t,
// 0 ≤ t ≤ 2.  The strict system (equalities + strict inequalities) is
// solvable iff the returned margin exceeds strict_tol.  Throws
// infeasible_error when no c satisfies the constraints at any t ≥ 0,
// i.e. the queried face of the polar polytope is empty.
MarginResult solve_margin_lp(const Matrix& equality_atoms,
                             const Matrix& inequality_atoms,
                             const Tolerances& tol = {});

}  // namespace polarbp
