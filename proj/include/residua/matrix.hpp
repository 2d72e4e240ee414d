#ifndef RESIDUA_MATRIX_HPP
#define RESIDUA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "residua/exact.hpp"

namespace residua {

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool square() const { return rows_ == cols_; }
    bool symmetric() const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

/// Coefficients of det(lambda*I - m), degree-descending, leading 1.
struct CharPoly {
    std::vector<Rational> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }
    Rational eval(const Rational& x) const;
};

/// Division-free (Samuelson-Berkowitz) characteristic polynomial.
CharPoly char_poly(const RationalMatrix& m);

struct RankSignature {
    std::size_t rank = 0;
    long long signature = 0;
};

/// For symmetric matrices: rank from the multiplicity of the zero eigenvalue,
/// signature from Descartes sign variations of the characteristic polynomial
/// (exact here, since all eigenvalues are real).
RankSignature rank_and_signature(const RationalMatrix& m);

/// det(m), read off the characteristic polynomial.
Rational determinant(const RationalMatrix& m);

/// Exact solve of m*x = rhs for nonsingular square m.
std::vector<Rational> solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs);

/// Sign variations in a coefficient sequence, zeros skipped.
std::size_t sign_variations(const std::vector<Rational>& coeffs);

} // namespace residua

#endif
