#ifndef RESIDUA_TESTS_HELPERS_HPP
#define RESIDUA_TESTS_HELPERS_HPP

#include <random>
#include <string>

#include "residua/parse.hpp"
#include "residua/reference_checks.hpp"
#include "residua/system_file.hpp"

namespace residua::testing {

inline VarSetPtr vars(std::initializer_list<std::string> names) {
    return VarSet::make(std::vector<std::string>(names));
}

inline Polynomial P(const VarSetPtr& v, const std::string& text) { return parse_polynomial(text, v); }

/// The bundled worked example (three variables, weight (3,4,7)).
inline SystemFile reference_file() { return parse_system_text(reference_system_text()); }

inline BasisProfile reference_profile() {
    SystemFile f = reference_file();
    return verify_basis(f.system, *f.weight);
}

/// Deterministic random polynomial: exponents in [0, max_exp], coefficients
/// in [-9, 9], up to max_terms terms (possibly fewer after merging).
inline Polynomial random_polynomial(std::mt19937& rng, const VarSetPtr& v, int max_exp,
                                    int max_terms, bool allow_zero = true) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<Exponent> expo(0, max_exp);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExponentVec e(v->size());
        for (auto& x : e) x = expo(rng);
        terms.push_back(Term{std::move(e), Rational(coeff(rng))});
    }
    return Polynomial::from_terms(v, std::move(terms));
}

} // namespace residua::testing

#endif
