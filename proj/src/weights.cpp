#include "residua/weights.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "residua/errors.hpp"
#include "residua/fourier_motzkin.hpp"

namespace residua {

void require_positive(const WeightVector& w) {
    for (long long wi : w)
        if (wi < 1) throw PreconditionError("weight vector must be positive");
}

long long weighted_degree(const ExponentVec& e, const WeightVector& w) {
    internal_check(e.size() == w.size(), "weight arity mismatch");
    __int128 acc = 0;
    for (std::size_t i = 0; i < e.size(); ++i) acc += static_cast<__int128>(w[i]) * e[i];
    auto out = static_cast<long long>(acc);
    internal_check(static_cast<__int128>(out) == acc, "weighted degree overflow");
    return out;
}

long long weighted_degree(const Polynomial& p, const WeightVector& w) {
    if (p.is_zero()) throw PreconditionError("weighted degree of the zero polynomial is undefined");
    long long best = weighted_degree(p.terms().front().exponents, w);
    for (const Term& t : p.terms()) best = std::max(best, weighted_degree(t.exponents, w));
    return best;
}

Polynomial initial_form(const Polynomial& p, const WeightVector& w) {
    long long top = weighted_degree(p, w);
    std::vector<Term> terms;
    for (const Term& t : p.terms())
        if (weighted_degree(t.exponents, w) == top) terms.push_back(t);
    return Polynomial::from_terms(p.vars(), std::move(terms));
}

Integer BasisProfile::quotient_dimension() const {
    Integer dim = 1;
    for (Exponent ri : r) dim *= Integer(static_cast<long>(ri + 1));
    return dim;
}

long long BasisProfile::s_of(const ExponentVec& a) const {
    return weighted_degree(a, weight) - weighted_degree(r, weight);
}

ExponentVec BasisProfile::r_plus_one() const {
    ExponentVec out = r;
    for (Exponent& e : out) e += 1;
    return out;
}

namespace {

// pure power x_v^e, e >= 1: exactly one positive entry, none negative
std::optional<std::pair<std::size_t, Exponent>> pure_power_of(const ExponentVec& e) {
    std::optional<std::pair<std::size_t, Exponent>> found;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) return std::nullopt;
        if (e[i] > 0) {
            if (found) return std::nullopt;
            found = {i, e[i]};
        }
    }
    return found;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace

BasisProfile verify_basis(const PolySystem& sys, const WeightVector& w) {
    sys.require_square();
    if (w.size() != sys.nvars()) throw PreconditionError("weight arity mismatch");
    require_positive(w);

    const std::size_t n = sys.nvars();
    std::vector<std::size_t> leads(n);               // original generator -> variable
    std::vector<int> taken(n, -1);                   // variable -> original generator
    std::vector<Rational> scalars(n);
    std::vector<Exponent> powers(n);                 // per variable: r_v + 1

    for (std::size_t k = 0; k < n; ++k) {
        const Polynomial& g = sys.generators[k];
        if (g.is_zero()) throw PreconditionError("zero generator");
        if (g.is_laurent()) throw PreconditionError("Laurent generators are not supported");
        Polynomial in = initial_form(g, w);
        if (in.term_count() != 1)
            throw PreconditionError("initial form of generator " + std::to_string(k + 1) +
                                    " is not a single term (tie among " +
                                    std::to_string(in.term_count()) + " terms)");
        const Term& lead = in.leading_term();
        auto pure = pure_power_of(lead.exponents);
        if (!pure)
            throw PreconditionError("initial form of generator " + std::to_string(k + 1) +
                                    " is not a pure power: " + in.to_string());
        auto [v, e] = *pure;
        if (taken[v] >= 0)
            throw PreconditionError("generators " + std::to_string(taken[v] + 1) + " and " +
                                    std::to_string(k + 1) + " both lead in variable " +
                                    sys.vars->name(v));
        taken[v] = static_cast<int>(k);
        leads[k] = v;
        scalars[k] = lead.coeff;
        powers[v] = e;
    }

    BasisProfile profile;
    profile.original = sys;
    profile.weight = w;
    profile.permutation = leads;
    profile.leading_scalars = scalars;

    std::vector<Polynomial> normalized;
    normalized.reserve(n);
    Rational scale_product(1);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t k = static_cast<std::size_t>(taken[v]);
        normalized.push_back(sys.generators[k].scaled(Rational(1) / scalars[k]));
        scale_product *= scalars[k];
    }
    profile.system = PolySystem{sys.vars, std::move(normalized)};

    profile.r.resize(n);
    profile.degrees.resize(n);
    profile.weighted_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
        profile.r[v] = powers[v] - 1;
        profile.degrees[v] = w[v] * powers[v];
        profile.weighted_sum += profile.degrees[v];
    }

    profile.residue_scale = Rational(permutation_sign(leads)) / scale_product;
    return profile;
}

namespace {

// integer point from a rational feasible point of a system that is stable
// under scaling up (all our constraints have the form <w, v> >= 1)
WeightVector integer_scale(const std::vector<Rational>& point) {
    Integer lcm = 1;
    for (const Rational& q : point) ::mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    WeightVector out(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        Rational scaled = point[i] * Rational(lcm);
        internal_check(is_integral(scaled), "scaled weight is not integral");
        internal_check(scaled.get_num().fits_slong_p(), "weight exceeds machine word");
        out[i] = scaled.get_num().get_si();
    }
    return out;
}

} // namespace

WeightVector discover_weight(const PolySystem& sys) {
    sys.require_square();
    const std::size_t n = sys.nvars();

    // candidate pure-power terms per generator
    std::vector<std::vector<std::pair<std::size_t, Exponent>>> candidates(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (const Term& t : sys.generators[k].terms())
            if (auto p = pure_power_of(t.exponents)) candidates[k].push_back(*p);
        if (candidates[k].empty())
            throw PreconditionError("generator " + std::to_string(k + 1) +
                                    " has no pure-power term; not a pure-power basis for any weight");
    }

    std::vector<int> var_used(n, -1);
    std::vector<std::pair<std::size_t, Exponent>> chosen(n);

    // depth-first over assignments; first feasible LP wins
    std::optional<WeightVector> found;
    auto attempt = [&]() -> bool {
        std::vector<LinearConstraint> cons;
        for (std::size_t v = 0; v < n; ++v) {
            LinearConstraint c{std::vector<Rational>(n, Rational(0)), Rational(1)};
            c.coeffs[v] = 1;
            cons.push_back(std::move(c)); // w_v >= 1
        }
        for (std::size_t k = 0; k < n; ++k) {
            auto [v, e] = chosen[k];
            ExponentVec lead(n, 0);
            lead[v] = e;
            for (const Term& t : sys.generators[k].terms()) {
                if (t.exponents == lead) continue;
                LinearConstraint c{std::vector<Rational>(n), Rational(1)};
                for (std::size_t i = 0; i < n; ++i)
                    c.coeffs[i] = Rational(static_cast<long>(lead[i] - t.exponents[i]));
                cons.push_back(std::move(c)); // <w, lead - b> >= 1
            }
        }
        auto point = feasible_point(std::move(cons), n);
        if (!point) return false;
        found = integer_scale(*point);
        return true;
    };

    auto search = [&](auto&& self, std::size_t k) -> bool {
        if (k == n) return attempt();
        for (const auto& cand : candidates[k]) {
            if (var_used[cand.first] >= 0) continue;
            var_used[cand.first] = static_cast<int>(k);
            chosen[k] = cand;
            if (self(self, k + 1)) return true;
            var_used[cand.first] = -1;
        }
        return false;
    };

    if (!search(search, 0))
        throw PreconditionError("not a pure-power basis for any weight");
    return *found;
}

bool euler_jacobi_vanishes(const Polynomial& h, const BasisProfile& profile) {
    long long sum_w = 0;
    for (long long wi : profile.weight) sum_w += wi;
    return weighted_degree(h, profile.weight) < profile.weighted_sum - sum_w;
}

} // namespace residua
