#ifndef RESIDUA_REFERENCE_CHECKS_HPP
#define RESIDUA_REFERENCE_CHECKS_HPP

#include <string>
#include <vector>

#include "residua/parallel.hpp"

namespace residua {

/// The bundled trivariate worked example; every published value for it is
/// re-derived by run_reference_checks.
std::string reference_system_text();

struct ReferenceCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Recomputes the worked example end to end (basis, series, residues,
/// normal forms, trace form, dual matrix, Chow form, cones) and compares
/// against the known values. All comparisons are exact.
std::vector<ReferenceCheck> run_reference_checks(Exec exec = Exec::Parallel);

} // namespace residua

#endif
