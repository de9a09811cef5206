#pragma once

#include <vector>

#include "polarbp/numerics.hpp"

namespace polarbp::detail {

// C(n, k) in floating point, saturating well above any guard threshold.
inline double binomial(Index n, Index k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double r = 1.0;
    for (Index i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
        if (r > 1e18) return r;
    }
    return r;
}

inline std::vector<Index> first_combination(Index k) {
    std::vector<Index> comb(static_cast<size_t>(k));
    for (Index i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    return comb;
}

// Advance comb (strictly increasing indices into 0..n-1) to its
// lexicographic successor; false once exhausted.
inline bool next_combination(std::vector<Index>& comb, Index n) {
    const Index k = static_cast<Index>(comb.size());
    for (Index i = k - 1; i >= 0; --i) {
        if (comb[static_cast<size_t>(i)] < n - k + i) {
            ++comb[static_cast<size_t>(i)];
            for (Index j = i + 1; j < k; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace polarbp::detail
