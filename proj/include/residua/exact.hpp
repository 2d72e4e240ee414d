#ifndef RESIDUA_EXACT_HPP
#define RESIDUA_EXACT_HPP

#include <gmpxx.h>

#include <string>

#include "residua/errors.hpp"

namespace residua {

// Arbitrary-precision scalars. Rationals are kept canonical at all times:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. mpq_class arithmetic preserves
// canonical form, so only construction from raw parts needs care.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& z) { return sgn(z); }
inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational make_rational(Integer num, Integer den) {
    if (sgn(den) == 0) throw PreconditionError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) {
    return q.get_den() == 1;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Decimal form used in every external format: "p" when integral, else "p/q".
inline std::string to_string(const Rational& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Integer integer_from_string(const std::string& text) {
    Integer z;
    if (mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0)
        throw ParseError("invalid integer literal '" + text + "'", 0);
    return z;
}

inline Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(integer_from_string(text));
    return make_rational(integer_from_string(text.substr(0, slash)),
                         integer_from_string(text.substr(slash + 1)));
}

inline Integer pow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rational pow(const Rational& base, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return out;
}

inline Integer factorial(unsigned long k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

} // namespace residua

#endif
