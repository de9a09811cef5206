#include "polarbp/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polarbp/errors.hpp"
#include "polarbp/lp.hpp"
#include "subsets.hpp"

namespace polarbp {

using detail::binomial;
using detail::first_combination;
using detail::next_combination;

namespace {
constexpr double kSubsetGuard = 1e7;
}  // namespace

void validate(const AtomMatrix& a, const Tolerances& tol) {
    if (a.atoms.rows() < 1 || a.atoms.cols() < 1)
        throw std::invalid_argument("atom matrix must have at least one row and column");
    if (!a.atoms.allFinite())
        throw std::invalid_argument("atom matrix entries must be finite");
    for (Index j = 0; j < a.n(); ++j) {
        if (a.atoms.col(j).norm() <= tol.dedupe_tol)
            throw std::invalid_argument("atom " + std::to_string(j + 1) + " is numerically zero");
    }
}

DoubledMatrix doubled(const AtomMatrix& a) {
    DoubledMatrix d;
    d.base = a;
    d.columns.resize(a.d(), 2 * a.n());
    d.columns << a.atoms, -a.atoms;
    return d;
}

Vector fold_coeffs(const Vector& doubled_coeffs) {
    const Index n = doubled_coeffs.size() / 2;
    return doubled_coeffs.head(n) - doubled_coeffs.tail(n);
}

Vector doubled_coeffs(const Vector& coeffs) {
    const Index n = coeffs.size();
    Vector out(2 * n);
    out.head(n) = coeffs.cwiseMax(0.0);
    out.tail(n) = (-coeffs).cwiseMax(0.0);
    return out;
}

SignedSupport support_of(const Vector& coeffs, const Tolerances& tol) {
    SignedSupport s;
    for (Index i = 0; i < coeffs.size(); ++i) {
        if (std::abs(coeffs(i)) > tol.dedupe_tol)
            s.pairs.push_back({i, coeffs(i) > 0.0 ? 1 : -1});
    }
    return s;
}

Matrix signed_columns(const AtomMatrix& a, const SignedSupport& s) {
    Matrix e(a.d(), s.size());
    for (Index i = 0; i < s.size(); ++i) {
        const SignedAtom& p = s.pairs[static_cast<size_t>(i)];
        e.col(i) = static_cast<double>(p.sign) * a.atoms.col(p.index);
    }
    return e;
}

std::vector<Index> off_support_doubled_indices(const AtomMatrix& a,
                                               const SignedSupport& s) {
    const Index n = a.n();
    std::vector<int> sign_of(static_cast<size_t>(n), 0);
    for (const SignedAtom& p : s.pairs) sign_of[static_cast<size_t>(p.index)] = p.sign;
    std::vector<Index> off;
    for (Index i = 0; i < n; ++i) {
        if (sign_of[static_cast<size_t>(i)] != 1) off.push_back(i);
    }
    for (Index i = 0; i < n; ++i) {
        if (sign_of[static_cast<size_t>(i)] != -1) off.push_back(n + i);
    }
    std::sort(off.begin(), off.end());
    return off;
}

std::vector<PolarVertex> enumerate_polar_vertices(const AtomMatrix& a,
                                                  const Tolerances& tol) {
    const Index d = a.d();
    const Index n2 = 2 * a.n();
    if (rank(a.atoms, tol.rank_tol) < d)
        throw unbounded_polar_error("polar polytope is unbounded: rank(A) < d");
    if (binomial(n2, d) > kSubsetGuard)
        throw guard_exceeded_error("vertex enumeration guard: C(2n, d) exceeds 10^7 subsets");

    const Matrix cols = doubled(a).columns;
    const Vector ones = Vector::Ones(d);
    std::vector<PolarVertex> verts;

    std::vector<Index> comb = first_combination(d);
    do {
        Matrix tight(d, d);
        for (Index r = 0; r < d; ++r)
            tight.row(r) = cols.col(comb[static_cast<size_t>(r)]).transpose();
        Eigen::FullPivLU<Matrix> lu(tight);
        lu.setThreshold(tol.rank_tol);
        if (!lu.isInvertible()) continue;
        const Vector c = lu.solve(ones);

        const Vector dots = cols.transpose() * c;
        if (dots.maxCoeff() > 1.0 + tol.strict_tol) continue;

        std::vector<Index> active;
        for (Index j = 0; j < n2; ++j) {
            if (std::abs(dots(j) - 1.0) <= tol.dedupe_tol) active.push_back(j);
        }

        bool merged = false;
        for (PolarVertex& v : verts) {
            if ((v.point - c).lpNorm<Eigen::Infinity>() <= tol.dedupe_tol) {
                std::vector<Index> u;
                std::set_union(v.active_set.begin(), v.active_set.end(),
                               active.begin(), active.end(), std::back_inserter(u));
                v.active_set = std::move(u);
                merged = true;
                break;
            }
        }
        if (!merged) verts.push_back({c, std::move(active)});
    } while (next_combination(comb, n2));

    std::sort(verts.begin(), verts.end(),
              [](const PolarVertex& u, const PolarVertex& v) {
                  return std::lexicographical_compare(
                      u.point.data(), u.point.data() + u.point.size(),
                      v.point.data(), v.point.data() + v.point.size());
              });
    return verts;
}

FaceQueryResult face_exists(const AtomMatrix& a, const SignedSupport& s,
                            const Tolerances& tol) {
    if (s.empty())
        throw std::invalid_argument("face_exists requires a nonempty signed support");
    FaceQueryResult res;
    const Matrix e = signed_columns(a, s);
    if (rank(e, tol.rank_tol) < s.size()) return res;  // rank-deficient: no face

    const Matrix cols = doubled(a).columns;
    const std::vector<Index> off = off_support_doubled_indices(a, s);
    Matrix f(a.d(), static_cast<Index>(off.size()));
    for (Index j = 0; j < f.cols(); ++j) f.col(j) = cols.col(off[static_cast<size_t>(j)]);

    try {
        const MarginResult mr = solve_margin_lp(e, f, tol);
        res.margin = mr.margin;
        res.witness = mr.witness;
        res.exists = mr.margin > tol.strict_tol;
    } catch (const infeasible_error&) {
        // Equality system has no solution inside the polytope.
    }
    return res;
}

NeighbourlyResult is_k_neighbourly(const AtomMatrix& a, Index k,
                                   const Tolerances& tol) {
    if (k < 1 || k > a.d())
        throw std::invalid_argument("neighbourliness order k must satisfy 1 <= k <= d");
    NeighbourlyResult res;
    res.verdict = true;
    if (k > a.n()) return res;  // no k-subsets to test

    std::vector<Index> comb = first_combination(k);
    do {
        const Index patterns = Index{1} << (k - 1);
        for (Index mask = 0; mask < patterns; ++mask) {
            SignedSupport s;
            for (Index i = 0; i < k; ++i) {
                // First sign fixed +; remaining bits ordered so masks run in
                // lexicographic sign order with + before −.
                int sign = 1;
                if (i > 0 && ((mask >> (k - 1 - i)) & 1)) sign = -1;
                s.pairs.push_back({comb[static_cast<size_t>(i)], sign});
            }
            if (!face_exists(a, s, tol).exists) {
                res.verdict = false;
                res.first_failure = s;
                return res;
            }
        }
    } while (next_combination(comb, a.n()));
    return res;
}

Index spark(const AtomMatrix& a, const Tolerances& tol) {
    const Index n = a.n();
    const Index top = std::min(a.d() + 1, n);
    for (Index size = 1; size <= top; ++size) {
        std::vector<Index> comb = first_combination(size);
        do {
            Matrix sub(a.d(), size);
            for (Index i = 0; i < size; ++i)
                sub.col(i) = a.atoms.col(comb[static_cast<size_t>(i)]);
            if (rank(sub, tol.rank_tol) < size) return size;
        } while (next_combination(comb, n));
    }
    return n + 1;
}

bool cone_contains(const AtomMatrix& a, const SignedSupport& s,
                   const Vector& c, const Tolerances& tol) {
    if (s.empty())
        throw std::invalid_argument("cone_contains requires a nonempty signed support");
    const Matrix e = signed_columns(a, s);
    const Vector proj = e * solve_least_squares(e, c, tol.rank_tol);
    if ((c - proj).norm() > tol.dedupe_tol * std::max(1.0, c.norm()))
        return false;  // c leaves the span of the signed basis

    StandardLp feas{e, proj, Vector::Zero(s.size())};
    return solve_standard(feas, tol).status == LpStatus::optimal;
}

}  // namespace polarbp
