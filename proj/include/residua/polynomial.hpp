#ifndef RESIDUA_POLYNOMIAL_HPP
#define RESIDUA_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "residua/exact.hpp"

namespace residua {

// Exponents are machine-word integers; negative entries are allowed (Laurent
// terms). Arithmetic on them is overflow-checked.
using Exponent = std::int64_t;
using ExponentVec = std::vector<Exponent>;

long long total_degree(const ExponentVec& e);
ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b);
ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b);

/// Graded-lexicographic comparison, used descending everywhere: higher total
/// degree first, ties by lexicographic comparison (earlier variables weigh
/// more). This is the canonical term iteration and printing order.
bool graded_lex_before(const ExponentVec& a, const ExponentVec& b);

/// Ordered, immutable set of variable names shared by all polynomials of one
/// context. Contexts compare by content.
class VarSet {
public:
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarSet& other) const { return names_ == other.names_; }

private:
    explicit VarSet(std::vector<std::string> names);
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

struct Term {
    ExponentVec exponents;
    Rational coeff;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate Laurent polynomial over Rational. Terms are kept
/// sorted in descending graded-lex order with unique exponents and no zero
/// coefficients, so equality and printing are canonical.
class Polynomial {
public:
    explicit Polynomial(VarSetPtr vars);

    static Polynomial constant(VarSetPtr vars, Rational value);
    static Polynomial monomial(VarSetPtr vars, ExponentVec exponents, Rational coeff);
    static Polynomial variable(VarSetPtr vars, std::size_t index);
    /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
    static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms);

    const VarSetPtr& vars() const { return vars_; }
    std::size_t nvars() const;
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_laurent() const;
    /// Leading term in graded-lex order; polynomial must be nonzero.
    const Term& leading_term() const;

    Rational coefficient_of(const ExponentVec& e) const;
    long long degree() const; // total degree, nonzero input

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    Polynomial scaled(const Rational& c) const;
    /// Multiply by the monomial c*x^e (exponent shift; order-preserving).
    Polynomial times_monomial(const ExponentVec& e, const Rational& c) const;
    Polynomial pow(unsigned long e) const;

    /// Formal partial derivative; rejects Laurent input.
    Polynomial derivative(std::size_t var) const;

    /// Reinterpret into a wider context: exponent i of this polynomial goes
    /// to position var_map[i] of a fresh exponent vector over `target`.
    Polynomial embedded(VarSetPtr target, const std::vector<std::size_t>& var_map) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string to_string() const;

    bool operator==(const Polynomial& other) const;

private:
    VarSetPtr vars_;
    std::vector<Term> terms_;
};

/// Square system of polynomials sharing one variable context.
struct PolySystem {
    VarSetPtr vars;
    std::vector<Polynomial> generators;

    std::size_t nvars() const { return vars->size(); }
    /// Throws PreconditionError unless the system is square and consistent.
    void require_square() const;
    std::string to_string() const;
    bool operator==(const PolySystem&) const = default;
};

void require_same_vars(const Polynomial& a, const Polynomial& b);

/// det(d g_i / d x_j), expanded exactly.
Polynomial jacobian_determinant(const PolySystem& sys);

/// Determinant of a square matrix of polynomials (Laplace expansion).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m);

} // namespace residua

#endif
