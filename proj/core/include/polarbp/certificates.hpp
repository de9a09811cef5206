#pragma once

#include <optional>
#include <vector>

#include "polarbp/polytope.hpp"

namespace polarbp {

// A candidate solution x0 of A x = y together with its signed support.
struct Representation {
    Vector coeffs;          // length n
    SignedSupport support;  // entries with |xᵢ| > dedupe_tol
};

Representation make_representation(const Vector& coeffs,
                                   const Tolerances& tol = {});

struct FuchsResult {
    bool holds = false;
    std::optional<Vector> witness;  // c with A_optᵀc = sign(x_opt), |aⱼᵀc| < 1 off support
    double margin = 0.0;
};

struct FuchsCorollaryResult {
    bool holds = false;
    Vector c_opt;           // A_opt⁺ᵀ · sign(x_opt)
    double max_dot = 0.0;   // max off-support |aⱼᵀc_opt|
};

struct ErcResult {
    bool holds = false;
    double coefficient = 0.0;  // max off-support ‖A_opt⁺ aⱼ‖₁; +inf when A_opt is rank-deficient
};

struct ErcSignEnumResult {
    bool holds = false;
    Index vertex_count = 0;  // sign classes enumerated: 2^(m−1)
};

// Exact test of ℓ1-unique-optimality: A_opt full rank and a strictly
// feasible dual witness exists (found by the max-margin LP).  Necessary
// and sufficient.
FuchsResult check_fuchs(const AtomMatrix& a, const Representation& x0,
                        const Tolerances& tol = {});

// Sufficient-only test with the fixed probe c_opt = A_opt⁺ᵀ sign(x_opt).
FuchsCorollaryResult check_fuchs_corollary(const AtomMatrix& a,
                                           const Representation& x0,
                                           const Tolerances& tol = {});

// Exact Recovery Condition: sign-independent, takes only the support.
ErcResult check_erc(const AtomMatrix& a, const std::vector<Index>& support,
                    const Tolerances& tol = {});

// Redundant route to the same verdict: test the probe vertex A_opt⁺ᵀσ for
// every sign class σ (2^(m−1), global flip quotiented out).
ErcSignEnumResult check_erc_by_sign_enumeration(const AtomMatrix& a,
                                                const std::vector<Index>& support,
                                                const Tolerances& tol = {});

// m < Spark(A)/2 — every other representation of the same y needs more
// than m nonzeros.
bool l0_unique(const AtomMatrix& a, Index m, const Tolerances& tol = {});

struct CertificateReport {
    FuchsResult fuchs;
    FuchsCorollaryResult fuchs_corollary;
    ErcResult erc;
    Index spark_value = 0;
    bool l0_unique = false;
    bool l1_unique = false;       // == fuchs.holds
    bool l1l0_equivalent = false; // l1_unique && l0_unique
    Index support_size = 0;
    Index support_rank = 0;       // rank(A_opt), reported separately for inspection
};

CertificateReport certify(const AtomMatrix& a, const Representation& x0,
                          const Tolerances& tol = {});

struct L1OracleResult {
    double min_cost = 0.0;
    std::vector<Vector> optimal_points;  // all distinct minimizers, sorted
};

// Independent ground truth: enumerate every basic feasible solution of the
// doubled nonnegative LP and keep the cheapest points.  x0 is
// ℓ1-unique-optimal iff the result is exactly {x0}.  Throws
// guard_exceeded_error when the subset count passes 10⁷ and
// infeasible_error when y is outside range(A).
L1OracleResult brute_force_l1_oracle(const AtomMatrix& a, const Vector& y,
                                     const Tolerances& tol = {});

// max_{i≠j} |aᵢᵀaⱼ| — meaningful for unit-norm dictionaries.
double mutual_coherence(const AtomMatrix& a);

}  // namespace polarbp
