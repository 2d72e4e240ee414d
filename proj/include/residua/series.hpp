#ifndef RESIDUA_SERIES_HPP
#define RESIDUA_SERIES_HPP

#include <map>
#include <optional>
#include <vector>

#include "residua/parallel.hpp"
#include "residua/weights.hpp"

namespace residua {

/// Weighted homogenization of a verified system: each generator is stored as
/// a map from t-degree to its x-part. Every term t^k * x^b of generator i
/// satisfies k + <w, b> = d_i, and the t^0 part is the pure power x_i^{r_i+1}.
struct HomogenizedSystem {
    BasisProfile profile;
    std::vector<std::map<long long, Polynomial>> parts;
};

HomogenizedSystem homogenize(const BasisProfile& profile);

/// Coefficients A_0..A_{d_w} of the t-expansion of the product of the
/// homogenized generators; A_0 = x^{r+1}, A_j is w-homogeneous of degree
/// d_w - j.
std::vector<Polynomial> expand_product(const HomogenizedSystem& hs);

struct SeriesOptions {
    Exec exec = Exec::Parallel;
    /// When set, terms that can no longer contribute to the coefficient at
    /// `target` are dropped: a term exponent b survives iff b - target lies in
    /// the dual cone, tested against `prune_rays` (the extreme rays of the
    /// weight cone). Extraction at `target` is unaffected; other coefficients
    /// become partial.
    std::optional<ExponentVec> target;
    std::vector<std::vector<Integer>> prune_rays;
};

/// Laurent coefficients B_0..B_d of the inverse of the homogenized product:
/// B_0 = x^{-(r+1)} and sum_{j<=m} A_j B_{m-j} = 0 for m >= 1. Every term
/// x^b of B_m satisfies <w, b> = -(m + d_w).
struct DeformationSeries {
    BasisProfile profile;
    std::vector<Polynomial> a_coeffs;
    std::vector<Polynomial> b_coeffs;

    long long truncation() const { return static_cast<long long>(b_coeffs.size()) - 1; }
};

DeformationSeries invert_series(const HomogenizedSystem& hs, long long d,
                                const SeriesOptions& opts = {});

/// Grows an existing series in place to truncation d (no-op when already
/// large enough). Must be called with the same options the series was built
/// with.
void extend_series(DeformationSeries& series, long long d, const SeriesOptions& opts = {});

} // namespace residua

#endif
