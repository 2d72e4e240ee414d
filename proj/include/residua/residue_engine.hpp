#ifndef RESIDUA_RESIDUE_ENGINE_HPP
#define RESIDUA_RESIDUE_ENGINE_HPP

#include <map>
#include <memory>

#include "residua/cones.hpp"
#include "residua/matrix.hpp"
#include "residua/normal_form.hpp"
#include "residua/series.hpp"

namespace residua {

/// All residues Res(x^a) with <w, a> <= bound.
struct ResidueTable {
    long long bound = 0;
    std::map<ExponentVec, Rational> entries;
};

struct SeriesCacheStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
};

/// Global residues through the deformation series. Single-monomial queries
/// with a deep series index run in targeted mode (support pruned toward the
/// one requested coefficient); everything else shares one cached series per
/// system, keyed by (system digest, truncation).
class ResidueEngine {
public:
    explicit ResidueEngine(BasisProfile profile, Exec exec = Exec::Parallel);

    const BasisProfile& profile() const { return profile_; }

    Rational residue_monomial(const ExponentVec& a) const;
    ResidueTable residue_batch(long long d) const;
    /// Linear extension over the terms of h, with the Euler-Jacobi shortcut
    /// applied per monomial.
    Rational residue_polynomial(const Polynomial& h) const;

    /// Extraction straight from a series (exposed for cross-checks): the
    /// x^{-(a+1)} coefficient of B_{s(a)}.
    Rational extract(const DeformationSeries& series, const ExponentVec& a) const;

    /// Shared series for this engine's system at truncation >= d.
    std::shared_ptr<const DeformationSeries> shared_series(long long d) const;

    /// dual matrix computed entirely from series extractions (cross-check
    /// route against NormalFormEngine::dual_matrix)
    RationalMatrix dual_matrix(const MonomialBasis& basis) const;

    static SeriesCacheStats cache_stats();
    static void reset_cache();

    /// Single-monomial queries switch to targeted pruning above this series
    /// index.
    static constexpr long long kTargetedThreshold = 64;

private:
    BasisProfile profile_;
    Exec exec_;
    HomogenizedSystem homogenized_;
    std::string cache_key_;
    mutable std::shared_ptr<const ConePair> cones_; // lazy, for pruning
    const ConePair& cones() const;
};

} // namespace residua

#endif
