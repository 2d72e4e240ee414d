#ifndef RESIDUA_WEIGHTS_HPP
#define RESIDUA_WEIGHTS_HPP

#include <vector>

#include "residua/polynomial.hpp"

namespace residua {

/// Positive integer weight per variable.
using WeightVector = std::vector<long long>;

void require_positive(const WeightVector& w);

long long weighted_degree(const ExponentVec& e, const WeightVector& w);
/// Maximum weighted degree over the terms; rejects the zero polynomial.
long long weighted_degree(const Polynomial& p, const WeightVector& w);

/// Sum of the terms attaining the maximal weighted degree.
Polynomial initial_form(const Polynomial& p, const WeightVector& w);

/// A verified system: after an optional generator permutation and monic
/// scaling, in_w(g_i) = x_i^{r_i+1} for every i.
struct BasisProfile {
    PolySystem original;
    PolySystem system; ///< normalized: generator i is monic and leads in variable i
    WeightVector weight;
    ExponentVec r;
    std::vector<long long> degrees; ///< d_i = w_i * (r_i + 1)
    long long weighted_sum = 0;     ///< d_w = sum of d_i
    std::vector<Rational> leading_scalars; ///< per original generator
    std::vector<std::size_t> permutation;  ///< original generator k leads variable permutation[k]
    /// Residues of the original system equal residue_scale times residues of
    /// the normalized one (permutation sign and 1/prod(leading scalars)).
    Rational residue_scale;

    std::size_t nvars() const { return system.nvars(); }
    Integer quotient_dimension() const; ///< prod (r_i + 1) = dim of the quotient ring
    /// s(a) = <w, a - r>
    long long s_of(const ExponentVec& a) const;
    ExponentVec r_plus_one() const;
};

/// Checks the pure-power hypothesis for the given weight and returns the
/// normalized profile. Throws PreconditionError when an initial form is not
/// a single pure-power term or two generators lead in the same variable.
BasisProfile verify_basis(const PolySystem& sys, const WeightVector& w);

/// Searches for a weight under which the system verifies: enumerates
/// assignments of one pure-power term per generator (one per variable) and
/// solves the strict-dominance feasibility LP exactly.
WeightVector discover_weight(const PolySystem& sys);

/// True certifies a vanishing residue: deg_w(h) < d_w - sum(w).
bool euler_jacobi_vanishes(const Polynomial& h, const BasisProfile& profile);

} // namespace residua

#endif
