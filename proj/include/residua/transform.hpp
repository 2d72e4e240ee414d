#ifndef RESIDUA_TRANSFORM_HPP
#define RESIDUA_TRANSFORM_HPP

#include <optional>

#include "residua/weights.hpp"

namespace residua {

/// Output of the cofactor-tracking Buchberger run: a system with pure-power
/// leading terms expressed as an explicit polynomial combination of the
/// input, f_i = sum_j cofactors[i][j] * g_j, together with det(cofactors).
struct CofactorBasis {
    PolySystem original;
    PolySystem system;   ///< monic, generator i leads in variable i
    WeightVector weight; ///< a weight accepted by verify_basis for `system`
    std::vector<std::vector<Polynomial>> cofactors;
    Polynomial det_cofactor;
};

/// Runs Buchberger under the weight order with graded-lex tie-break until
/// the basis contains one pure-power leader per variable. The cofactor
/// identity is re-checked after every step. Exceeding `max_basis` elements
/// reports that zero-dimensionality could not be certified.
CofactorBasis extended_buchberger(const PolySystem& sys, const WeightVector& w,
                                  std::size_t max_basis = 10000);

/// Global residue of h over an arbitrary zero-dimensional square system:
/// verifies directly when possible, otherwise transforms through the
/// cofactor basis and evaluates Res(h * det A) over it.
Rational residue_general(const PolySystem& sys, const Polynomial& h,
                         const std::optional<WeightVector>& w = std::nullopt);

} // namespace residua

#endif
