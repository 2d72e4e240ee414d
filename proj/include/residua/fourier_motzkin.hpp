#ifndef RESIDUA_FOURIER_MOTZKIN_HPP
#define RESIDUA_FOURIER_MOTZKIN_HPP

#include <optional>
#include <vector>

#include "residua/exact.hpp"

namespace residua {

/// One inequality  <coeffs, x> >= bound.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational bound;
};

/// Exact Fourier-Motzkin feasibility for small systems (intended for
/// dimensions up to ~8). Returns a feasible point, or nullopt.
std::optional<std::vector<Rational>> feasible_point(std::vector<LinearConstraint> constraints,
                                                    std::size_t nvars);

} // namespace residua

#endif
