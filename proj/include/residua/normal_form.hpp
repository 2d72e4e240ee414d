#ifndef RESIDUA_NORMAL_FORM_HPP
#define RESIDUA_NORMAL_FORM_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "residua/matrix.hpp"
#include "residua/parallel.hpp"
#include "residua/weights.hpp"

namespace residua {

/// The monomial box I = { i : 0 <= i_j <= r_j } with a fixed total order:
/// ascending weighted degree, ties by ascending lex. Under this order the
/// dual matrix is anti-triangular with unit anti-diagonal, and complementary
/// exponents sit at mirrored positions.
class MonomialBasis {
public:
    MonomialBasis(ExponentVec r, const WeightVector& w);

    std::size_t size() const { return exponents_.size(); }
    const ExponentVec& exponent(std::size_t i) const { return exponents_[i]; }
    const std::vector<ExponentVec>& exponents() const { return exponents_; }
    std::size_t index_of(const ExponentVec& e) const;
    const ExponentVec& r() const { return r_; }

private:
    ExponentVec r_;
    std::vector<ExponentVec> exponents_;
    std::map<ExponentVec, std::size_t> index_;
};

/// Division modulo the verified basis, with a memo of monomial normal forms
/// shared by the trace / dual-matrix / projection routines. The memo is
/// guarded by a mutex, so an engine may be shared across threads.
class NormalFormEngine {
public:
    explicit NormalFormEngine(BasisProfile profile);

    const BasisProfile& profile() const { return profile_; }
    const MonomialBasis& basis() const { return basis_; }

    /// Division algorithm: repeatedly rewrites a reducible term of maximal
    /// weighted degree (ties by graded-lex). `steps`, when given, receives
    /// the number of reductions performed.
    Polynomial normal_form(const Polynomial& h, std::size_t* steps = nullptr) const;

    /// NF(x^a) through the memoized linear recursion; agrees with
    /// normal_form on monomials.
    Polynomial monomial_normal_form(const ExponentVec& a) const;

    /// Residue of x^a for the normalized system: the x^r coefficient of its
    /// normal form.
    Rational monomial_residue(const ExponentVec& a) const;

    /// Global residue of h for the original system (the x^r coefficient of
    /// NF(h), times the profile's scale correction).
    Rational residue(const Polynomial& h) const;

    /// tr(h): trace of multiplication by h on the quotient ring, computed as
    /// the x^r coefficient of NF(h * NF(J)).
    Rational trace(const Polynomial& h) const;

    /// Normal form of the Jacobian of the normalized system (cached).
    const Polynomial& jacobian_normal_form() const;

    /// M[i][j] = Res(x^{i+j}) over the basis order, for the normalized
    /// system. Anti-triangular with unit anti-diagonal.
    RationalMatrix dual_matrix(Exec exec = Exec::Parallel) const;

    /// Normal form recovered from residues: solves M c = (Res(h x^j))_j.
    Polynomial nf_via_residues(const Polynomial& h) const;

    /// The Bezoutian determinant of the normalized system, as a polynomial
    /// in 2n variables (first the y block, then the x block).
    Polynomial bezoutian() const;

    /// Res_y(h(y) * Bezoutian(y, x)): a polynomial in x whose normal form
    /// equals NF(h).
    Polynomial bezoutian_project(const Polynomial& h) const;

    /// Coefficient vector of a box-supported polynomial in basis order.
    std::vector<Rational> coefficient_vector(const Polynomial& nf) const;

private:
    struct Rewrite {
        ExponentVec lead; ///< x_i^{r_i+1}
        Polynomial tail;  ///< x_i^{r_i+1} - g_i
    };

    const Polynomial& monomial_nf_locked(const ExponentVec& a) const;

    BasisProfile profile_;
    MonomialBasis basis_;
    std::vector<Rewrite> rewrites_;
    mutable std::mutex mutex_;
    mutable std::map<ExponentVec, std::unique_ptr<const Polynomial>> memo_;
    mutable std::unique_ptr<const Polynomial> nf_jacobian_;
};

} // namespace residua

#endif
