#include "residua/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "residua/errors.hpp"

namespace residua {

long long total_degree(const ExponentVec& e) {
    long long d = 0;
    for (Exponent x : e) {
        if (__builtin_add_overflow(d, static_cast<long long>(x), &d))
            throw InternalError("exponent degree overflow");
    }
    return d;
}

ExponentVec exp_add(const ExponentVec& a, const ExponentVec& b) {
    internal_check(a.size() == b.size(), "exponent arity mismatch");
    ExponentVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (__builtin_add_overflow(a[i], b[i], &out[i]))
            throw InternalError("exponent overflow");
    }
    return out;
}

ExponentVec exp_sub(const ExponentVec& a, const ExponentVec& b) {
    internal_check(a.size() == b.size(), "exponent arity mismatch");
    ExponentVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (__builtin_sub_overflow(a[i], b[i], &out[i]))
            throw InternalError("exponent overflow");
    }
    return out;
}

bool graded_lex_before(const ExponentVec& a, const ExponentVec& b) {
    long long da = total_degree(a);
    long long db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw PreconditionError("duplicate variable name '" + names[i] + "'");
    return std::shared_ptr<const VarSet>(new VarSet(std::move(names)));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void require_same_vars(const Polynomial& a, const Polynomial& b) {
    if (a.vars() == b.vars()) return;
    if (a.vars() && b.vars() && *a.vars() == *b.vars()) return;
    throw PreconditionError("variable context mismatch");
}

Polynomial::Polynomial(VarSetPtr vars) : vars_(std::move(vars)) {
    internal_check(vars_ != nullptr, "null variable context");
}

std::size_t Polynomial::nvars() const { return vars_->size(); }

Polynomial Polynomial::constant(VarSetPtr vars, Rational value) {
    Polynomial p(std::move(vars));
    if (sign_of(value) != 0)
        p.terms_.push_back(Term{ExponentVec(p.nvars(), 0), std::move(value)});
    return p;
}

Polynomial Polynomial::monomial(VarSetPtr vars, ExponentVec exponents, Rational coeff) {
    Polynomial p(std::move(vars));
    internal_check(exponents.size() == p.nvars(), "monomial arity mismatch");
    if (sign_of(coeff) != 0)
        p.terms_.push_back(Term{std::move(exponents), std::move(coeff)});
    return p;
}

Polynomial Polynomial::variable(VarSetPtr vars, std::size_t index) {
    ExponentVec e(vars->size(), 0);
    e.at(index) = 1;
    return monomial(std::move(vars), std::move(e), Rational(1));
}

Polynomial Polynomial::from_terms(VarSetPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    for (const Term& t : terms)
        internal_check(t.exponents.size() == p.nvars(), "term arity mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return graded_lex_before(a.exponents, b.exponents);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && out.back().exponents == t.exponents) {
            out.back().coeff += t.coeff;
            if (sign_of(out.back().coeff) == 0) out.pop_back();
        } else if (sign_of(t.coeff) != 0) {
            out.push_back(std::move(t));
        }
    }
    p.terms_ = std::move(out);
    return p;
}

bool Polynomial::is_laurent() const {
    for (const Term& t : terms_)
        for (Exponent e : t.exponents)
            if (e < 0) return true;
    return false;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return terms_.front();
}

Rational Polynomial::coefficient_of(const ExponentVec& e) const {
    internal_check(e.size() == nvars(), "exponent arity mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const ExponentVec& key) {
        return graded_lex_before(t.exponents, key);
    });
    if (it != terms_.end() && it->exponents == e) return it->coeff;
    return Rational(0);
}

long long Polynomial::degree() const {
    if (terms_.empty()) throw PreconditionError("degree of the zero polynomial is undefined");
    return total_degree(terms_.front().exponents);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(vars_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back(Term{t.exponents, -t.coeff});
    return out;
}

namespace {

// merge of two canonical term lists with coefficient combination
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].exponents == b[j].exponents) {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (sign_of(c) != 0) out.push_back(Term{a[i].exponents, std::move(c)});
            ++i;
            ++j;
        } else if (graded_lex_before(a[i].exponents, b[j].exponents)) {
            out.push_back(a[i]);
            ++i;
        } else {
            out.push_back(Term{b[j].exponents, subtract ? -b[j].coeff : b[j].coeff});
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(Term{b[j].exponents, subtract ? -b[j].coeff : b[j].coeff});
    return out;
}

} // namespace

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_vars(*this, rhs);
    Polynomial out(vars_);
    out.terms_ = merge_terms(terms_, rhs.terms_, false);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    require_same_vars(*this, rhs);
    Polynomial out(vars_);
    out.terms_ = merge_terms(terms_, rhs.terms_, true);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    *this = *this + rhs;
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    *this = *this - rhs;
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_vars(*this, rhs);
    std::vector<Term> buf;
    buf.reserve(terms_.size() * rhs.terms_.size());
    for (const Term& ta : terms_)
        for (const Term& tb : rhs.terms_)
            buf.push_back(Term{exp_add(ta.exponents, tb.exponents), ta.coeff * tb.coeff});
    return from_terms(vars_, std::move(buf));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(vars_);
    if (sign_of(c) == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back(Term{t.exponents, t.coeff * c});
    return out;
}

Polynomial Polynomial::times_monomial(const ExponentVec& e, const Rational& c) const {
    Polynomial out(vars_);
    if (sign_of(c) == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back(Term{exp_add(t.exponents, e), t.coeff * c});
    return out;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial acc = constant(vars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = (e >>= 1UL) ? base * base : base;
    }
    return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    internal_check(var < nvars(), "derivative variable out of range");
    if (is_laurent()) throw PreconditionError("derivative of a Laurent polynomial is not supported");
    std::vector<Term> buf;
    buf.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (t.exponents[var] == 0) continue;
        ExponentVec e = t.exponents;
        Rational c = t.coeff * Rational(static_cast<long>(e[var]));
        e[var] -= 1;
        buf.push_back(Term{std::move(e), std::move(c)});
    }
    return from_terms(vars_, std::move(buf));
}

Polynomial Polynomial::embedded(VarSetPtr target, const std::vector<std::size_t>& var_map) const {
    internal_check(var_map.size() == nvars(), "embedding map arity mismatch");
    std::vector<Term> buf;
    buf.reserve(terms_.size());
    for (const Term& t : terms_) {
        ExponentVec e(target->size(), 0);
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            internal_check(var_map[i] < e.size(), "embedding map out of range");
            e[var_map[i]] = t.exponents[i];
        }
        buf.push_back(Term{std::move(e), t.coeff});
    }
    return from_terms(std::move(target), std::move(buf));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    internal_check(point.size() == nvars(), "evaluation point arity mismatch");
    Rational acc = 0;
    for (const Term& t : terms_) {
        Rational prod = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            Exponent e = t.exponents[i];
            if (e == 0) continue;
            if (e > 0) {
                prod *= residua::pow(point[i], static_cast<unsigned long>(e));
            } else {
                if (sign_of(point[i]) == 0)
                    throw PreconditionError("evaluation of a Laurent term at zero");
                prod /= residua::pow(point[i], static_cast<unsigned long>(-e));
            }
        }
        acc += prod;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        bool negative = sign_of(c) < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool has_vars = false;
        std::ostringstream vars;
        bool first_var = true;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            Exponent e = t.exponents[i];
            if (e == 0) continue;
            if (!first_var) vars << "*";
            first_var = false;
            has_vars = true;
            vars << vars_->name(i);
            if (e != 1) vars << "^" << e;
        }
        if (!has_vars) {
            os << residua::to_string(c);
        } else if (c == 1) {
            os << vars.str();
        } else {
            os << residua::to_string(c) << "*" << vars.str();
        }
    }
    return os.str();
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!(vars_ == other.vars_ || (vars_ && other.vars_ && *vars_ == *other.vars_))) return false;
    return terms_ == other.terms_;
}

void PolySystem::require_square() const {
    if (!vars) throw PreconditionError("system without variable context");
    if (generators.size() != vars->size())
        throw PreconditionError("system is not square: " + std::to_string(generators.size()) +
                                " generators for " + std::to_string(vars->size()) + " variables");
    for (const Polynomial& g : generators)
        if (!(g.vars() == vars || *g.vars() == *vars))
            throw PreconditionError("generator does not share the system's variable context");
}

std::string PolySystem::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) os << "; ";
        os << generators[i].to_string();
    }
    return os.str();
}

Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    internal_check(n > 0, "empty determinant");
    for (const auto& row : m) internal_check(row.size() == n, "ragged determinant input");
    const VarSetPtr& vars = m[0][0].vars();

    // Laplace expansion along the first remaining row, skipping zero entries.
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;

    struct Rec {
        const std::vector<std::vector<Polynomial>>& m;
        VarSetPtr vars;
        Polynomial run(std::size_t row, std::vector<std::size_t>& cols) {
            if (cols.size() == 1) return m[row][cols[0]];
            Polynomial acc(vars);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                const Polynomial& entry = m[row][cols[k]];
                if (entry.is_zero()) continue;
                std::vector<std::size_t> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != k) rest.push_back(cols[t]);
                Polynomial minor = run(row + 1, rest);
                Polynomial contrib = entry * minor;
                if (k % 2 == 1) contrib = -contrib;
                acc += contrib;
            }
            return acc;
        }
    } rec{m, vars};
    return rec.run(0, cols);
}

Polynomial jacobian_determinant(const PolySystem& sys) {
    sys.require_square();
    const std::size_t n = sys.nvars();
    std::vector<std::vector<Polynomial>> jac;
    jac.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(sys.generators[i].derivative(j));
        jac.push_back(std::move(row));
    }
    return poly_determinant(jac);
}

} // namespace residua
