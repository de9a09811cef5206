#pragma once

#include <optional>
#include <vector>

#include "polarbp/numerics.hpp"

namespace polarbp {

// Column j (0-based) of `atoms` is the atom named a_{j+1} in user-facing
// output.  Atoms must be nonzero but need not be unit norm.
struct AtomMatrix {
    Matrix atoms;  // d × n
    Index d() const { return atoms.rows(); }
    Index n() const { return atoms.cols(); }
};

// Throws std::invalid_argument on empty matrices or (near-)zero columns.
void validate(const AtomMatrix& a, const Tolerances& tol = {});

// Ã = [A, −A]: column j is a_j, column n+j is −a_j.
struct DoubledMatrix {
    AtomMatrix base;
    Matrix columns;  // d × 2n
};

DoubledMatrix doubled(const AtomMatrix& a);

// Fold a nonnegative doubled coefficient vector x̃ (length 2n) back to the
// signed coefficient vector x (length n): xᵢ = x̃ᵢ − x̃_{n+i}.
Vector fold_coeffs(const Vector& doubled_coeffs);

// Expand a signed coefficient vector to its canonical nonnegative doubled
// form (positive parts first, negative parts after).
Vector doubled_coeffs(const Vector& coeffs);

struct SignedAtom {
    Index index;  // 0-based atom index
    int sign;     // +1 or −1
};

// Ordered signed index set: identifies A_opt / Ã_opt and sign(x_opt).
struct SignedSupport {
    std::vector<SignedAtom> pairs;  // indices strictly increasing
    Index size() const { return static_cast<Index>(pairs.size()); }
    bool empty() const { return pairs.empty(); }
};

// Support of a coefficient vector: entries with |xᵢ| > dedupe_tol.
SignedSupport support_of(const Vector& coeffs, const Tolerances& tol = {});

// d×m matrix whose columns are signᵢ·a_{indexᵢ} for the pairs of s.
Matrix signed_columns(const AtomMatrix& a, const SignedSupport& s);

// Doubled-column indices NOT represented in s: for an atom i carrying sign
// σ in s, its column (i if σ>0, n+i otherwise) is excluded and the opposite
// column kept; unsupported atoms contribute both columns.
std::vector<Index> off_support_doubled_indices(const AtomMatrix& a,
                                               const SignedSupport& s);

struct PolarVertex {
    Vector point;                   // length d
    std::vector<Index> active_set;  // doubled-column indices with ãⱼᵀc = 1
};

// All vertices of the polar polytope P* = {c : Ãᵀc ≤ 1}, obtained by
// solving every nonsingular d-subset of tight constraints, keeping the
// feasible points, merging duplicates, and sorting lexicographically.
// Throws unbounded_polar_error when rank(A) < d and guard_exceeded_error
// when C(2n, d) > 10⁷.
std::vector<PolarVertex> enumerate_polar_vertices(const AtomMatrix& a,
                                                  const Tolerances& tol = {});

struct FaceQueryResult {
    bool exists = false;
    std::optional<Vector> witness;  // relative-interior point of the dual face
    double margin = 0.0;
};

// Does P* have a (d−m)-face where exactly the signed columns of s are
// tight?  Equivalent to: Ã_opt has full column rank and the max-margin LP
// over the remaining doubled columns attains margin > strict_tol.
FaceQueryResult face_exists(const AtomMatrix& a, const SignedSupport& s,
                            const Tolerances& tol = {});

struct NeighbourlyResult {
    bool verdict = false;
    std::optional<SignedSupport> first_failure;
};

// Checks all C(n,k) supports × 2^(k−1) sign patterns (first sign fixed
// positive by central symmetry) through face_exists.
NeighbourlyResult is_k_neighbourly(const AtomMatrix& a, Index k,
                                   const Tolerances& tol = {});

// Smallest number of linearly dependent columns; n+1 when every subset is
// independent (possible only for n ≤ d).
Index spark(const AtomMatrix& a, const Tolerances& tol = {});

// Is c inside the cone generated by the signed columns of s?  True iff c
// lies in their span (up to dedupe_tol·max(1,‖c‖)) and its projection has
// a nonnegative conic representation, decided by an LP feasibility call.
bool cone_contains(const AtomMatrix& a, const SignedSupport& s,
                   const Vector& c, const Tolerances& tol = {});

}  // namespace polarbp
