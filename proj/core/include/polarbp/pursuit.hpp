#pragma once

#include <vector>

#include "polarbp/polytope.hpp"

namespace polarbp {

struct PursuitStep {
    Index chosen_index = 0;     // doubled-column index: j picks +a_j, n+j picks −a_j
    double correlation = 0.0;   // raw inner product aⱼᵀr at selection time
    Vector coeffs_after;        // length n, signed
    double residual_norm = 0.0;
};

struct PursuitTrace {
    std::vector<PursuitStep> steps;
    Vector final_coeffs;  // length n, entries below dedupe_tol pruned to 0
    bool converged = false;
    Index steps_used = 0;
};

struct BpResult {
    Vector coeffs;  // length n
    double objective = 0.0;
    Vector dual_point;  // length d
    bool unique_hint = false;
};

// ℓ1 minimization through the standard-form LP on the doubled matrix.
// Throws infeasible_error when y ∉ range(A).
BpResult basis_pursuit(const AtomMatrix& a, const Vector& y,
                       const Tolerances& tol = {});

// Same answer via the polar polytope: enumerate vertices, maximize cᵀy
// (ties broken lexicographically), then solve on the tight columns.
// Throws unbounded_polar_error / guard_exceeded_error / infeasible_error.
BpResult basis_pursuit_brute(const AtomMatrix& a, const Vector& y,
                             const Tolerances& tol = {});

// Orthogonal Matching Pursuit with raw (unnormalized) inner products and
// full least-squares re-fit each step.  Ties: lowest atom index, then
// positive sign.
PursuitTrace omp(const AtomMatrix& a, const Vector& y, Index max_steps,
                 const Tolerances& tol = {});

// OMP allowed to run past the sparsity level: k_max steps, zeros pruned
// from the final representation.
PursuitTrace omp_eventual(const AtomMatrix& a, const Vector& y, Index k_max,
                          const Tolerances& tol = {});

// Plain Matching Pursuit: single-coefficient update (aⱼᵀr)/‖aⱼ‖², atoms
// may repeat, no re-orthogonalization.
PursuitTrace mp(const AtomMatrix& a, const Vector& y, Index max_iters,
                const Tolerances& tol = {});

// Complementary slackness: read the optimal support off a dual certificate
// and solve for the primal on it.  Throws inconsistent_certificate_error
// when c is not an optimal dual vector for this y.
Vector recover_primal_from_dual(const AtomMatrix& a, const Vector& y,
                                const Vector& c, const Tolerances& tol = {});

}  // namespace polarbp
