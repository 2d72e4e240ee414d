#include "residua/normal_form.hpp"

#include <algorithm>
#include <utility>

#include "residua/errors.hpp"

namespace residua {

MonomialBasis::MonomialBasis(ExponentVec r, const WeightVector& w) : r_(std::move(r)) {
    ExponentVec current(r_.size(), 0);
    for (;;) {
        exponents_.push_back(current);
        std::size_t k = r_.size();
        while (k > 0) {
            --k;
            if (current[k] < r_[k]) {
                ++current[k];
                break;
            }
            current[k] = 0;
            if (k == 0) goto done;
        }
        if (r_.empty()) break;
    }
done:
    std::sort(exponents_.begin(), exponents_.end(), [&](const ExponentVec& a, const ExponentVec& b) {
        long long wa = weighted_degree(a, w);
        long long wb = weighted_degree(b, w);
        if (wa != wb) return wa < wb;
        return a < b;
    });
    for (std::size_t i = 0; i < exponents_.size(); ++i) index_.emplace(exponents_[i], i);
}

std::size_t MonomialBasis::index_of(const ExponentVec& e) const {
    auto it = index_.find(e);
    internal_check(it != index_.end(), "exponent outside the monomial basis");
    return it->second;
}

NormalFormEngine::NormalFormEngine(BasisProfile profile)
    : profile_(std::move(profile)), basis_(profile_.r, profile_.weight) {
    const std::size_t n = profile_.nvars();
    rewrites_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVec lead(n, 0);
        lead[i] = profile_.r[i] + 1;
        Polynomial tail =
            Polynomial::monomial(profile_.system.vars, lead, Rational(1)) - profile_.system.generators[i];
        rewrites_.push_back(Rewrite{std::move(lead), std::move(tail)});
    }
}

Polynomial NormalFormEngine::normal_form(const Polynomial& h, std::size_t* steps) const {
    require_same_vars(h, profile_.system.generators[0]);
    if (h.is_laurent()) throw PreconditionError("normal form of a Laurent polynomial");
    const std::size_t n = profile_.nvars();

    Polynomial work = h;
    std::size_t count = 0;
    for (;;) {
        // reducible term of maximal weighted degree; terms iterate in
        // graded-lex order, which settles ties deterministically
        const Term* chosen = nullptr;
        long long chosen_deg = 0;
        std::size_t var = 0;
        for (const Term& t : work.terms()) {
            std::size_t v = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (t.exponents[i] > profile_.r[i]) {
                    v = i;
                    break;
                }
            }
            if (v == n) continue;
            long long deg = weighted_degree(t.exponents, profile_.weight);
            if (!chosen || deg > chosen_deg) {
                chosen = &t;
                chosen_deg = deg;
                var = v;
            }
        }
        if (!chosen) break;
        ExponentVec shift = chosen->exponents;
        shift[var] -= profile_.r[var] + 1;
        // replace c*x^a by c*x^shift * tail_var
        Polynomial replacement = rewrites_[var].tail.times_monomial(shift, chosen->coeff);
        Polynomial removed = Polynomial::monomial(work.vars(), chosen->exponents, chosen->coeff);
        work = work - removed + replacement;
        ++count;
    }
    if (steps) *steps = count;
    return work;
}

const Polynomial& NormalFormEngine::monomial_nf_locked(const ExponentVec& a) const {
    auto it = memo_.find(a);
    if (it != memo_.end()) return *it->second;

    const std::size_t n = profile_.nvars();
    std::size_t var = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] > profile_.r[i]) {
            var = i;
            break;
        }
    }
    Polynomial result(profile_.system.vars);
    if (var == n) {
        result = Polynomial::monomial(profile_.system.vars, a, Rational(1));
    } else {
        ExponentVec shift = a;
        shift[var] -= profile_.r[var] + 1;
        for (const Term& t : rewrites_[var].tail.terms()) {
            const Polynomial& sub = monomial_nf_locked(exp_add(shift, t.exponents));
            result += sub.scaled(t.coeff);
        }
    }
    auto stored = std::make_unique<const Polynomial>(std::move(result));
    const Polynomial& ref = *stored;
    memo_.emplace(a, std::move(stored));
    return ref;
}

Polynomial NormalFormEngine::monomial_normal_form(const ExponentVec& a) const {
    internal_check(a.size() == profile_.nvars(), "exponent arity mismatch");
    for (Exponent e : a) internal_check(e >= 0, "negative exponent in normal form query");
    std::lock_guard<std::mutex> lock(mutex_);
    return monomial_nf_locked(a);
}

Rational NormalFormEngine::monomial_residue(const ExponentVec& a) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return monomial_nf_locked(a).coefficient_of(profile_.r);
}

Rational NormalFormEngine::residue(const Polynomial& h) const {
    require_same_vars(h, profile_.system.generators[0]);
    if (h.is_laurent()) throw PreconditionError("residue of a Laurent polynomial");
    Rational acc = 0;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (const Term& t : h.terms())
            acc += t.coeff * monomial_nf_locked(t.exponents).coefficient_of(profile_.r);
    }
    return acc * profile_.residue_scale;
}

const Polynomial& NormalFormEngine::jacobian_normal_form() const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!nf_jacobian_) {
        Polynomial jac = jacobian_determinant(profile_.system);
        Polynomial acc(profile_.system.vars);
        for (const Term& t : jac.terms()) acc += monomial_nf_locked(t.exponents).scaled(t.coeff);
        nf_jacobian_ = std::make_unique<const Polynomial>(std::move(acc));
    }
    return *nf_jacobian_;
}

Rational NormalFormEngine::trace(const Polynomial& h) const {
    require_same_vars(h, profile_.system.generators[0]);
    if (h.is_laurent()) throw PreconditionError("trace of a Laurent polynomial");
    Polynomial weighted = h * jacobian_normal_form();
    Rational acc = 0;
    std::lock_guard<std::mutex> lock(mutex_);
    for (const Term& t : weighted.terms())
        acc += t.coeff * monomial_nf_locked(t.exponents).coefficient_of(profile_.r);
    return acc;
}

RationalMatrix NormalFormEngine::dual_matrix(Exec exec) const {
    const std::size_t dim = basis_.size();
    // warm the memo serially, then assemble entries concurrently
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j)
                monomial_nf_locked(exp_add(basis_.exponent(i), basis_.exponent(j)));
    }
    RationalMatrix m(dim, dim);
    parallel_for(dim, exec, [&](std::size_t i) {
        for (std::size_t j = i; j < dim; ++j) {
            Rational v = monomial_residue(exp_add(basis_.exponent(i), basis_.exponent(j)));
            m(i, j) = v;
            if (i != j) m(j, i) = v;
        }
    });
    return m;
}

std::vector<Rational> NormalFormEngine::coefficient_vector(const Polynomial& nf) const {
    std::vector<Rational> out(basis_.size(), Rational(0));
    for (const Term& t : nf.terms()) out[basis_.index_of(t.exponents)] = t.coeff;
    return out;
}

Polynomial NormalFormEngine::nf_via_residues(const Polynomial& h) const {
    const std::size_t dim = basis_.size();
    RationalMatrix m = dual_matrix();
    std::vector<Rational> rhs(dim);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (std::size_t j = 0; j < dim; ++j) {
            Rational acc = 0;
            for (const Term& t : h.terms())
                acc += t.coeff *
                       monomial_nf_locked(exp_add(t.exponents, basis_.exponent(j))).coefficient_of(profile_.r);
            rhs[j] = std::move(acc);
        }
    }
    std::vector<Rational> coeffs;
    try {
        coeffs = solve_linear(m, rhs);
    } catch (const PreconditionError&) {
        throw InternalError("dual matrix is singular");
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < dim; ++i)
        if (sign_of(coeffs[i]) != 0) terms.push_back(Term{basis_.exponent(i), coeffs[i]});
    return Polynomial::from_terms(profile_.system.vars, std::move(terms));
}

namespace {

// exact division by (y_k - x_k); the dividend must vanish at y_k = x_k
Polynomial divide_linear_difference(const Polynomial& p, std::size_t yk, std::size_t xk) {
    std::vector<Term> quotient;
    Polynomial rem = p;
    while (!rem.is_zero()) {
        const Term* top = nullptr;
        for (const Term& t : rem.terms()) {
            if (t.exponents[yk] > 0) {
                top = &t;
                break;
            }
        }
        if (!top) break;
        ExponentVec q = top->exponents;
        q[yk] -= 1;
        quotient.push_back(Term{q, top->coeff});
        // rem -= c * x^q * (y_k - x_k)
        ExponentVec qx = q;
        qx[xk] += 1;
        std::vector<Term> sub;
        sub.push_back(Term{top->exponents, top->coeff});
        sub.push_back(Term{std::move(qx), -top->coeff});
        rem = rem - Polynomial::from_terms(p.vars(), std::move(sub));
    }
    internal_check(rem.is_zero(), "Bezoutian splitting: non-divisible difference");
    return Polynomial::from_terms(p.vars(), std::move(quotient));
}

} // namespace

Polynomial NormalFormEngine::bezoutian() const {
    const std::size_t n = profile_.nvars();
    const VarSet& xs = *profile_.system.vars;
    std::vector<std::string> names;
    names.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("y_" + xs.name(i));
    for (std::size_t i = 0; i < n; ++i) names.push_back(xs.name(i));
    VarSetPtr pair_vars = VarSet::make(std::move(names));

    // g_i evaluated with the first j variables from the y block
    auto embedded = [&](const Polynomial& g, std::size_t j) {
        std::vector<std::size_t> map(n);
        for (std::size_t k = 0; k < n; ++k) map[k] = k < j ? k : n + k;
        return g.embedded(pair_vars, map);
    };

    std::vector<std::vector<Polynomial>> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& g = profile_.system.generators[i];
        Polynomial prev = embedded(g, 0);
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial next = embedded(g, j + 1);
            entries[i].push_back(divide_linear_difference(next - prev, j, n + j));
            prev = std::move(next);
        }
    }
    return poly_determinant(entries);
}

Polynomial NormalFormEngine::bezoutian_project(const Polynomial& h) const {
    require_same_vars(h, profile_.system.generators[0]);
    if (h.is_laurent()) throw PreconditionError("projection of a Laurent polynomial");
    const std::size_t n = profile_.nvars();
    Polynomial delta = bezoutian();
    const VarSetPtr& pair_vars = delta.vars();

    std::vector<std::size_t> to_y(n);
    for (std::size_t k = 0; k < n; ++k) to_y[k] = k;
    Polynomial integrand = h.embedded(pair_vars, to_y) * delta;

    // residue over the y block, term by term; group the x parts
    std::vector<Term> terms;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        for (const Term& t : integrand.terms()) {
            ExponentVec ye(t.exponents.begin(), t.exponents.begin() + static_cast<long>(n));
            ExponentVec xe(t.exponents.begin() + static_cast<long>(n), t.exponents.end());
            Rational res = monomial_nf_locked(ye).coefficient_of(profile_.r);
            if (sign_of(res) == 0) continue;
            terms.push_back(Term{std::move(xe), t.coeff * res});
        }
    }
    return Polynomial::from_terms(profile_.system.vars, std::move(terms));
}

} // namespace residua
