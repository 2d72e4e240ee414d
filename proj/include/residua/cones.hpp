#ifndef RESIDUA_CONES_HPP
#define RESIDUA_CONES_HPP

#include <vector>

#include "residua/weights.hpp"

namespace residua {

using IntVec = std::vector<Integer>;

/// One defining inequality <w, normal> >= 0 of the weight cone; normal is
/// (r_i+1)e_i - b for a non-leading exponent b of generator i.
struct ConeInequality {
    std::size_t generator;
    ExponentVec exponent; ///< the non-leading exponent b
    IntVec normal;
};

/// The weight cone W of the verified system and its polar dual W*.
struct ConePair {
    std::vector<ConeInequality> w_inequalities;
    std::vector<IntVec> w_rays;              ///< primitive extreme rays of W
    std::vector<IntVec> wstar_rays;          ///< primitive extreme rays of W*
    std::vector<IntVec> wstar_inequalities;  ///< facet normals of W* (subset of w_rays)
    IntVec interior_point;                   ///< sum of the W rays, strictly interior
};

/// Extreme rays of { x : <n, x> >= 0 for all n in normals }, primitive and
/// orientation-preserving. Requires a pointed cone (the normals span R^dim).
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& normals, std::size_t dim);

/// Builds W from the generator inequalities and W* from the lattice points
/// (r+1) - b over the support of the product g_1...g_n, reduced to extreme
/// generators. Throws when W has empty interior.
ConePair build_cones(const BasisProfile& profile);

/// True iff a - r lies outside W*, which certifies Res(x^a) = 0.
bool vanishing_by_cone(const ConePair& cones, const ExponentVec& a, const ExponentVec& r);

/// Upper bound for the degree of Res(x^a) in the coefficient of the j-th
/// non-leading term of generator i: the minimum of <w, a-r> / <w, rho_ij>
/// over the extreme rays of W. Rays where the denominator vanishes are
/// skipped; if every ray is skipped the bound is unbounded (reported).
Rational degree_bound_single(const ConePair& cones, const BasisProfile& profile,
                             const ExponentVec& a, std::size_t i, std::size_t j);

/// Upper bound for the total degree of Res(x^a) in all coefficients:
/// <w0, a - r> minimized over the sampled interior integer points (the ray
/// sum plus any user-supplied ones, which must be strictly interior).
Integer degree_bound_total(const ConePair& cones, const BasisProfile& profile, const ExponentVec& a,
                           const std::vector<WeightVector>& extra_interior = {});

/// Upper bound for the total degree of tr(h) in the coefficients: deg_w0(h)
/// minimized over the sampled interior points.
Integer trace_degree_bound(const ConePair& cones, const BasisProfile& profile, const Polynomial& h,
                           const std::vector<WeightVector>& extra_interior = {});

/// Enumerates the non-leading exponents of generator i in canonical term
/// order (the indexing used by degree_bound_single).
std::vector<ExponentVec> nonleading_exponents(const BasisProfile& profile, std::size_t i);

} // namespace residua

#endif
