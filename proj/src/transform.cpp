#include "residua/transform.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "residua/errors.hpp"
#include "residua/fourier_motzkin.hpp"
#include "residua/normal_form.hpp"

namespace residua {

namespace {

// term order: weighted degree, then total degree, then lex
struct TermCompare {
    const WeightVector& w;

    bool less(const ExponentVec& a, const ExponentVec& b) const {
        long long wa = weighted_degree(a, w);
        long long wb = weighted_degree(b, w);
        if (wa != wb) return wa < wb;
        long long da = total_degree(a);
        long long db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

struct TrackedPoly {
    Polynomial poly;
    std::vector<Polynomial> cofactors;
};

const Term& leading_term(const Polynomial& p, const TermCompare& cmp) {
    internal_check(!p.is_zero(), "leading term of zero");
    const Term* best = &p.terms().front();
    for (const Term& t : p.terms())
        if (cmp.less(best->exponents, t.exponents)) best = &t;
    return *best;
}

bool divides(const ExponentVec& a, const ExponentVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

void check_cofactors(const TrackedPoly& t, const PolySystem& sys) {
    Polynomial acc(sys.vars);
    for (std::size_t j = 0; j < sys.generators.size(); ++j)
        acc += t.cofactors[j] * sys.generators[j];
    internal_check(acc == t.poly, "cofactor identity violated");
}

// full reduction of t by the basis, keeping cofactors exact
void reduce(TrackedPoly& t, const std::vector<TrackedPoly>& basis, const TermCompare& cmp) {
    bool changed = true;
    while (changed && !t.poly.is_zero()) {
        changed = false;
        for (const Term& term : t.poly.terms()) {
            for (const TrackedPoly& b : basis) {
                const Term& lt = leading_term(b.poly, cmp);
                if (!divides(lt.exponents, term.exponents)) continue;
                ExponentVec shift = exp_sub(term.exponents, lt.exponents);
                Rational factor = term.coeff / lt.coeff;
                t.poly = t.poly - b.poly.times_monomial(shift, factor);
                for (std::size_t j = 0; j < t.cofactors.size(); ++j)
                    t.cofactors[j] = t.cofactors[j] - b.cofactors[j].times_monomial(shift, factor);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
}

std::optional<std::size_t> pure_power_variable(const ExponentVec& e) {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0) return std::nullopt;
        if (e[i] > 0) {
            if (var) return std::nullopt;
            var = i;
        }
    }
    return var;
}

// strict-dominance weight for the already-found leading terms
WeightVector separating_weight(const PolySystem& sys, const std::vector<ExponentVec>& leads) {
    const std::size_t n = sys.nvars();
    std::vector<LinearConstraint> cons;
    for (std::size_t v = 0; v < n; ++v) {
        LinearConstraint c{std::vector<Rational>(n, Rational(0)), Rational(1)};
        c.coeffs[v] = 1;
        cons.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (const Term& t : sys.generators[i].terms()) {
            if (t.exponents == leads[i]) continue;
            LinearConstraint c{std::vector<Rational>(n), Rational(1)};
            for (std::size_t k = 0; k < n; ++k)
                c.coeffs[k] = Rational(static_cast<long>(leads[i][k] - t.exponents[k]));
            cons.push_back(std::move(c));
        }
    }
    auto point = feasible_point(std::move(cons), n);
    internal_check(point.has_value(), "no separating weight for the transformed basis");
    Integer lcm = 1;
    for (const Rational& q : *point) ::mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    WeightVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational scaled = (*point)[i] * Rational(lcm);
        internal_check(is_integral(scaled) && scaled.get_num().fits_slong_p(), "weight overflow");
        out[i] = scaled.get_num().get_si();
    }
    return out;
}

} // namespace

CofactorBasis extended_buchberger(const PolySystem& sys, const WeightVector& w,
                                  std::size_t max_basis) {
    sys.require_square();
    require_positive(w);
    if (w.size() != sys.nvars()) throw PreconditionError("weight arity mismatch");
    const std::size_t n = sys.nvars();
    TermCompare cmp{w};

    std::vector<TrackedPoly> basis;
    for (std::size_t k = 0; k < n; ++k) {
        if (sys.generators[k].is_zero()) throw PreconditionError("zero generator");
        std::vector<Polynomial> cof(n, Polynomial(sys.vars));
        cof[k] = Polynomial::constant(sys.vars, Rational(1));
        basis.push_back(TrackedPoly{sys.generators[k], std::move(cof)});
        check_cofactors(basis.back(), sys);
    }

    // pick, per variable, the first basis element with a pure-power lead
    auto find_cover = [&]() -> std::optional<std::vector<std::size_t>> {
        std::vector<std::size_t> cover(n, basis.size());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            auto var = pure_power_variable(leading_term(basis[b].poly, cmp).exponents);
            if (var && cover[*var] == basis.size()) cover[*var] = b;
        }
        for (std::size_t v = 0; v < n; ++v)
            if (cover[v] == basis.size()) return std::nullopt;
        return cover;
    };

    // pair queue ordered by the weighted degree of the lcm
    struct Pair {
        std::size_t a, b;
    };
    std::deque<Pair> pairs;
    auto push_pairs_for = [&](std::size_t idx) {
        for (std::size_t other = 0; other < idx; ++other) pairs.push_back(Pair{other, idx});
    };
    for (std::size_t k = 0; k < n; ++k) push_pairs_for(k);

    auto lcm_exponents = [](const ExponentVec& a, const ExponentVec& b) {
        ExponentVec out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
        return out;
    };

    std::optional<std::vector<std::size_t>> cover = find_cover();
    while (!cover) {
        if (pairs.empty())
            throw PreconditionError("Buchberger finished without pure-power leads for every variable");
        // normal strategy: lowest weighted lcm degree first
        std::size_t best = 0;
        long long best_deg = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            ExponentVec lcm = lcm_exponents(leading_term(basis[pairs[k].a].poly, cmp).exponents,
                                            leading_term(basis[pairs[k].b].poly, cmp).exponents);
            long long deg = weighted_degree(lcm, w);
            if (k == 0 || deg < best_deg) {
                best = k;
                best_deg = deg;
            }
        }
        Pair pair = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        const TrackedPoly& pa = basis[pair.a];
        const TrackedPoly& pb = basis[pair.b];
        const Term& la = leading_term(pa.poly, cmp);
        const Term& lb = leading_term(pb.poly, cmp);
        ExponentVec lcm = lcm_exponents(la.exponents, lb.exponents);

        TrackedPoly s{Polynomial(sys.vars), std::vector<Polynomial>(n, Polynomial(sys.vars))};
        ExponentVec sa = exp_sub(lcm, la.exponents);
        ExponentVec sb = exp_sub(lcm, lb.exponents);
        Rational ca = Rational(1) / la.coeff;
        Rational cb = Rational(1) / lb.coeff;
        s.poly = pa.poly.times_monomial(sa, ca) - pb.poly.times_monomial(sb, cb);
        for (std::size_t j = 0; j < n; ++j)
            s.cofactors[j] = pa.cofactors[j].times_monomial(sa, ca) - pb.cofactors[j].times_monomial(sb, cb);

        reduce(s, basis, cmp);
        check_cofactors(s, sys);
        if (s.poly.is_zero()) {
            cover = find_cover();
            continue;
        }
        basis.push_back(std::move(s));
        if (basis.size() > max_basis)
            throw PreconditionError("basis cap exceeded: zero-dimensionality not certified");
        push_pairs_for(basis.size() - 1);
        cover = find_cover();
    }

    // assemble in variable order, monic
    std::vector<Polynomial> gens;
    std::vector<ExponentVec> leads;
    std::vector<std::vector<Polynomial>> cofactors(n);
    for (std::size_t v = 0; v < n; ++v) {
        const TrackedPoly& chosen = basis[(*cover)[v]];
        const Term& lt = leading_term(chosen.poly, cmp);
        Rational inv = Rational(1) / lt.coeff;
        gens.push_back(chosen.poly.scaled(inv));
        leads.push_back(lt.exponents);
        for (const Polynomial& c : chosen.cofactors) cofactors[v].push_back(c.scaled(inv));
    }
    PolySystem transformed{sys.vars, std::move(gens)};
    WeightVector weight = separating_weight(transformed, leads);
    Polynomial det = poly_determinant(cofactors);
    return CofactorBasis{sys, std::move(transformed), std::move(weight), std::move(cofactors),
                         std::move(det)};
}

Rational residue_general(const PolySystem& sys, const Polynomial& h,
                         const std::optional<WeightVector>& w) {
    sys.require_square();

    // direct route when the system already verifies
    std::optional<WeightVector> candidate = w;
    if (!candidate) {
        try {
            candidate = discover_weight(sys);
        } catch (const PreconditionError&) {
        }
    }
    if (candidate) {
        try {
            BasisProfile profile = verify_basis(sys, *candidate);
            return NormalFormEngine(profile).residue(h);
        } catch (const PreconditionError&) {
        }
    }

    WeightVector order = w ? *w : WeightVector(sys.nvars(), 1);
    CofactorBasis cb = extended_buchberger(sys, order);
    BasisProfile profile = verify_basis(cb.system, cb.weight);
    NormalFormEngine engine(profile);
    return engine.residue(h * cb.det_cofactor);
}

} // namespace residua
