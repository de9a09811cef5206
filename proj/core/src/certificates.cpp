#include "polarbp/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "polarbp/errors.hpp"
#include "subsets.hpp"

namespace polarbp {

using detail::binomial;
using detail::first_combination;
using detail::next_combination;

namespace {

constexpr double kSubsetGuard = 1e7;

// Unsigned support columns A_opt for an index list (validated + sorted).
Matrix support_columns(const AtomMatrix& a, std::vector<Index>& support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (Index i : support) {
        if (i < 0 || i >= a.n())
            throw std::invalid_argument("support index out of range");
    }
    Matrix cols(a.d(), static_cast<Index>(support.size()));
    for (Index i = 0; i < cols.cols(); ++i)
        cols.col(i) = a.atoms.col(support[static_cast<size_t>(i)]);
    return cols;
}

}  // namespace

Representation make_representation(const Vector& coeffs, const Tolerances& tol) {
    return {coeffs, support_of(coeffs, tol)};
}

FuchsResult check_fuchs(const AtomMatrix& a, const Representation& x0,
                        const Tolerances& tol) {
    FuchsResult res;
    if (x0.support.empty()) {
        // y = 0: the zero vector is the unique minimizer and c = 0 clears
        // every |aⱼᵀc| < 1 constraint with slack 1.
        res.holds = true;
        res.witness = Vector::Zero(a.d());
        res.margin = 1.0;
        return res;
    }
    const FaceQueryResult face = face_exists(a, x0.support, tol);
    res.holds = face.exists;
    res.witness = face.witness;
    res.margin = face.margin;
    return res;
}

FuchsCorollaryResult check_fuchs_corollary(const AtomMatrix& a,
                                           const Representation& x0,
                                           const Tolerances& tol) {
    FuchsCorollaryResult res;
    res.c_opt = Vector::Zero(a.d());
    if (x0.support.empty()) {
        res.holds = true;  // vacuous: no equalities, probe c = 0
        return res;
    }
    const Index m = x0.support.size();
    Matrix a_opt(a.d(), m);
    Vector sigma(m);
    for (Index i = 0; i < m; ++i) {
        const SignedAtom& p = x0.support.pairs[static_cast<size_t>(i)];
        a_opt.col(i) = a.atoms.col(p.index);
        sigma(i) = static_cast<double>(p.sign);
    }
    const bool full_rank = rank(a_opt, tol.rank_tol) == m;
    res.c_opt = pseudoinverse(a_opt, tol.rank_tol).transpose() * sigma;

    std::vector<char> on(static_cast<size_t>(a.n()), 0);
    for (const SignedAtom& p : x0.support.pairs) on[static_cast<size_t>(p.index)] = 1;
    for (Index j = 0; j < a.n(); ++j) {
        if (on[static_cast<size_t>(j)]) continue;
        res.max_dot = std::max(res.max_dot, std::abs(a.atoms.col(j).dot(res.c_opt)));
    }
    res.holds = full_rank && res.max_dot < 1.0 - tol.strict_tol;
    return res;
}

ErcResult check_erc(const AtomMatrix& a, const std::vector<Index>& support,
                    const Tolerances& tol) {
    ErcResult res;
    std::vector<Index> idx = support;
    const Matrix a_opt = support_columns(a, idx);
    const Index m = static_cast<Index>(idx.size());
    if (m == 0) {
        res.holds = true;  // vacuous
        return res;
    }
    if (rank(a_opt, tol.rank_tol) < m) {
        res.holds = false;
        res.coefficient = std::numeric_limits<double>::infinity();
        return res;
    }
    const Matrix pinv = pseudoinverse(a_opt, tol.rank_tol);
    std::vector<char> on(static_cast<size_t>(a.n()), 0);
    for (Index i : idx) on[static_cast<size_t>(i)] = 1;
    for (Index j = 0; j < a.n(); ++j) {
        if (on[static_cast<size_t>(j)]) continue;
        res.coefficient =
            std::max(res.coefficient, (pinv * a.atoms.col(j)).lpNorm<1>());
    }
    res.holds = res.coefficient < 1.0 - tol.strict_tol;
    return res;
}

ErcSignEnumResult check_erc_by_sign_enumeration(const AtomMatrix& a,
                                                const std::vector<Index>& support,
                                                const Tolerances& tol) {
    ErcSignEnumResult res;
    std::vector<Index> idx = support;
    const Matrix a_opt = support_columns(a, idx);
    const Index m = static_cast<Index>(idx.size());
    if (m == 0) {
        res.holds = true;
        return res;
    }
    if (rank(a_opt, tol.rank_tol) < m) return res;  // holds=false, no vertices tested

    const Matrix pinv_t = pseudoinverse(a_opt, tol.rank_tol).transpose();
    std::vector<char> on(static_cast<size_t>(a.n()), 0);
    for (Index i : idx) on[static_cast<size_t>(i)] = 1;

    res.holds = true;
    const Index classes = Index{1} << (m - 1);
    for (Index mask = 0; mask < classes; ++mask) {
        Vector sigma(m);
        sigma(0) = 1.0;  // global sign flip gives the same verdict
        for (Index i = 1; i < m; ++i)
            sigma(i) = ((mask >> (i - 1)) & 1) ? -1.0 : 1.0;
        const Vector c = pinv_t * sigma;
        for (Index j = 0; j < a.n(); ++j) {
            if (on[static_cast<size_t>(j)]) continue;
            if (std::abs(a.atoms.col(j).dot(c)) >= 1.0 - tol.strict_tol) {
                res.holds = false;
                break;
            }
        }
        ++res.vertex_count;
    }
    return res;
}

bool l0_unique(const AtomMatrix& a, Index m, const Tolerances& tol) {
    return 2 * m < spark(a, tol);
}

CertificateReport certify(const AtomMatrix& a, const Representation& x0,
                          const Tolerances& tol) {
    CertificateReport rep;
    rep.fuchs = check_fuchs(a, x0, tol);
    rep.fuchs_corollary = check_fuchs_corollary(a, x0, tol);
    std::vector<Index> idx;
    for (const SignedAtom& p : x0.support.pairs) idx.push_back(p.index);
    rep.erc = check_erc(a, idx, tol);
    rep.spark_value = spark(a, tol);
    rep.support_size = x0.support.size();
    rep.support_rank = x0.support.empty()
                           ? 0
                           : rank(signed_columns(a, x0.support), tol.rank_tol);
    rep.l0_unique = 2 * rep.support_size < rep.spark_value;
    rep.l1_unique = rep.fuchs.holds;
    rep.l1l0_equivalent = rep.l1_unique && rep.l0_unique;
    return rep;
}

L1OracleResult brute_force_l1_oracle(const AtomMatrix& a, const Vector& y,
                                     const Tolerances& tol) {
    const Index n = a.n();
    const Index n2 = 2 * n;
    const Index r = rank(a.atoms, tol.rank_tol);

    double subsets = 0.0;
    for (Index s = 0; s <= r; ++s) subsets += binomial(n2, s);
    if (subsets > kSubsetGuard)
        throw guard_exceeded_error("l1 oracle guard: basic-solution count exceeds 10^7");

    const Matrix cols = doubled(a).columns;
    const double res_tol = 1e-8 * (1.0 + y.norm());
    std::vector<std::pair<double, Vector>> candidates;

    if (y.lpNorm<Eigen::Infinity>() <= res_tol)
        candidates.emplace_back(0.0, Vector::Zero(n));

    for (Index s = 1; s <= r; ++s) {
        std::vector<Index> comb = first_combination(s);
        do {
            // A column and its negation are dependent; skip such supports.
            bool paired = false;
            for (Index i = 0; i < s && !paired; ++i)
                for (Index j = i + 1; j < s; ++j)
                    if (comb[static_cast<size_t>(j)] ==
                        comb[static_cast<size_t>(i)] + n) {
                        paired = true;
                        break;
                    }
            if (paired) continue;

            Matrix b(a.d(), s);
            for (Index i = 0; i < s; ++i)
                b.col(i) = cols.col(comb[static_cast<size_t>(i)]);
            if (rank(b, tol.rank_tol) < s) continue;

            Vector xs = solve_least_squares(b, y, tol.rank_tol);
            if ((b * xs - y).lpNorm<Eigen::Infinity>() > res_tol) continue;
            if (xs.minCoeff() < -tol.strict_tol) continue;
            xs = xs.cwiseMax(0.0);

            Vector xt = Vector::Zero(n2);
            for (Index i = 0; i < s; ++i) xt(comb[static_cast<size_t>(i)]) = xs(i);
            candidates.emplace_back(xs.sum(), fold_coeffs(xt));
        } while (next_combination(comb, n2));
    }

    if (candidates.empty())
        throw infeasible_error("y has no representation: outside range(A)");

    L1OracleResult out;
    out.min_cost = candidates.front().first;
    for (const auto& [cost, point] : candidates)
        out.min_cost = std::min(out.min_cost, cost);

    const double cost_cut = out.min_cost + tol.strict_tol * (1.0 + std::abs(out.min_cost));
    for (const auto& [cost, point] : candidates) {
        if (cost > cost_cut) continue;
        bool dup = false;
        for (const Vector& kept : out.optimal_points) {
            if ((kept - point).lpNorm<Eigen::Infinity>() <= tol.dedupe_tol) {
                dup = true;
                break;
            }
        }
        if (!dup) out.optimal_points.push_back(point);
    }
    std::sort(out.optimal_points.begin(), out.optimal_points.end(),
              [](const Vector& u, const Vector& v) {
                  return std::lexicographical_compare(u.data(), u.data() + u.size(),
                                                      v.data(), v.data() + v.size());
              });
    return out;
}

double mutual_coherence(const AtomMatrix& a) {
    double m = 0.0;
    for (Index i = 0; i < a.n(); ++i)
        for (Index j = i + 1; j < a.n(); ++j)
            m = std::max(m, std::abs(a.atoms.col(i).dot(a.atoms.col(j))));
    return m;
}

}  // namespace polarbp
