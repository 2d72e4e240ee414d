#include "residua/matrix.hpp"

#include <utility>

#include "residua/errors.hpp"

namespace residua {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Rational CharPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (const Rational& c : coefficients) acc = acc * x + c;
    return acc;
}

CharPoly char_poly(const RationalMatrix& m) {
    if (!m.square()) throw PreconditionError("char_poly requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return CharPoly{{Rational(1)}};

    // Berkowitz iteration: extend the characteristic polynomial of the leading
    // principal (k-1)x(k-1) block to the k x k block via a Toeplitz product.
    std::vector<Rational> poly{Rational(1), -m(0, 0)};
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<Rational> items;
        items.reserve(k + 1);
        items.emplace_back(1);
        items.push_back(-m(k - 1, k - 1));
        std::vector<Rational> vec(k - 1);
        for (std::size_t i = 0; i < k - 1; ++i) vec[i] = m(i, k - 1);
        for (std::size_t step = 0; step + 2 < k + 1; ++step) {
            Rational dot = 0;
            for (std::size_t i = 0; i < k - 1; ++i) dot += m(k - 1, i) * vec[i];
            items.push_back(-dot);
            if (step + 3 < k + 1) {
                std::vector<Rational> next(k - 1);
                for (std::size_t i = 0; i < k - 1; ++i) {
                    Rational acc = 0;
                    for (std::size_t j = 0; j < k - 1; ++j) acc += m(i, j) * vec[j];
                    next[i] = std::move(acc);
                }
                vec = std::move(next);
            }
        }
        std::vector<Rational> out(k + 1);
        for (std::size_t i = 0; i < k + 1; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < poly.size(); ++j) {
                if (i >= j && i - j < items.size()) acc += items[i - j] * poly[j];
            }
            out[i] = std::move(acc);
        }
        poly = std::move(out);
    }
    return CharPoly{std::move(poly)};
}

std::size_t sign_variations(const std::vector<Rational>& coeffs) {
    std::size_t count = 0;
    int prev = 0;
    for (const Rational& c : coeffs) {
        int s = sign_of(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

RankSignature rank_and_signature(const RationalMatrix& m) {
    if (!m.symmetric()) throw PreconditionError("rank_and_signature requires a symmetric matrix");
    const std::size_t n = m.rows();
    CharPoly p = char_poly(m);

    std::size_t trailing_zero = 0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend() && sign_of(*it) == 0; ++it)
        ++trailing_zero;

    // p(-lambda): negate coefficients of odd powers
    std::vector<Rational> reflected = p.coefficients;
    for (std::size_t i = 0; i < reflected.size(); ++i) {
        std::size_t power = n - i;
        if (power % 2 == 1) reflected[i] = -reflected[i];
    }
    auto positive = static_cast<long long>(sign_variations(p.coefficients));
    auto negative = static_cast<long long>(sign_variations(reflected));
    return RankSignature{n - trailing_zero, positive - negative};
}

Rational determinant(const RationalMatrix& m) {
    if (!m.square()) throw PreconditionError("determinant requires a square matrix");
    CharPoly p = char_poly(m);
    // p(0) = det(-m) = (-1)^n det(m)
    Rational c = p.coefficients.back();
    return (m.rows() % 2 == 1) ? -c : c;
}

std::vector<Rational> solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    if (!m.square()) throw PreconditionError("solve_linear requires a square matrix");
    const std::size_t n = m.rows();
    if (rhs.size() != n) throw PreconditionError("solve_linear: right-hand side has wrong length");

    RationalMatrix a = m;
    std::vector<Rational> b = rhs;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sign_of(a(perm[pivot], col)) == 0) ++pivot;
        if (pivot == n) throw PreconditionError("solve_linear: singular matrix");
        std::swap(perm[col], perm[pivot]);
        const Rational& lead = a(perm[col], col);
        for (std::size_t row = col + 1; row < n; ++row) {
            std::size_t ri = perm[row];
            if (sign_of(a(ri, col)) == 0) continue;
            Rational f = a(ri, col) / lead;
            for (std::size_t j = col; j < n; ++j) a(ri, j) -= f * a(perm[col], j);
            b[ri] -= f * b[perm[col]];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t col = n; col-- > 0;) {
        Rational acc = b[perm[col]];
        for (std::size_t j = col + 1; j < n; ++j) acc -= a(perm[col], j) * x[j];
        x[col] = acc / a(perm[col], col);
    }
    return x;
}

} // namespace residua
