#include "residua/root_analysis.hpp"

#include <utility>

#include "residua/errors.hpp"

namespace residua {

namespace {

TraceForm build_trace_form(const NormalFormEngine& engine, const Polynomial& h, Exec exec) {
    const MonomialBasis& basis = engine.basis();
    const std::size_t dim = basis.size();
    // one NF pass for the weight, then every entry is a memo lookup sum
    Polynomial kernel = engine.normal_form(h * engine.jacobian_normal_form());

    // distinct exponent sums i+j, warmed serially through the engine memo
    std::map<ExponentVec, Rational> traces;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            traces.emplace(exp_add(basis.exponent(i), basis.exponent(j)), Rational(0));
    std::vector<std::map<ExponentVec, Rational>::iterator> slots;
    slots.reserve(traces.size());
    for (auto it = traces.begin(); it != traces.end(); ++it) slots.push_back(it);
    for (auto& it : slots)
        for (const Term& t : kernel.terms()) engine.monomial_normal_form(exp_add(it->first, t.exponents));

    parallel_for(slots.size(), exec, [&](std::size_t k) {
        Rational acc = 0;
        for (const Term& t : kernel.terms())
            acc += t.coeff * engine.monomial_residue(exp_add(slots[k]->first, t.exponents));
        slots[k]->second = std::move(acc);
    });

    RationalMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            const Rational& v = traces.at(exp_add(basis.exponent(i), basis.exponent(j)));
            m(i, j) = v;
            if (i != j) m(j, i) = v;
        }
    }
    return TraceForm{std::move(m), h};
}

} // namespace

TraceForm trace_form(const NormalFormEngine& engine, Exec exec) {
    return build_trace_form(engine,
                            Polynomial::constant(engine.profile().system.vars, Rational(1)), exec);
}

TraceForm trace_form(const NormalFormEngine& engine, const Polynomial& h, Exec exec) {
    return build_trace_form(engine, h, exec);
}

RootCountReport count_roots(const NormalFormEngine& engine) {
    TraceForm t = trace_form(engine);
    RankSignature rs = rank_and_signature(t.matrix);
    RootCountReport report;
    report.dim_v = engine.profile().quotient_dimension();
    report.rank = rs.rank;
    report.signature = rs.signature;
    report.distinct_complex = rs.rank;
    report.distinct_real = rs.signature;
    return report;
}

long long count_roots_weighted(const NormalFormEngine& engine, const Polynomial& h) {
    TraceForm t = trace_form(engine, h);
    return rank_and_signature(t.matrix).signature;
}

long long mapping_degree(const NormalFormEngine& engine) {
    return rank_and_signature(engine.dual_matrix()).signature;
}

std::map<ExponentVec, Rational> power_sums(const NormalFormEngine& engine, long long dmax) {
    if (dmax < 1) throw PreconditionError("power sums need degree bound >= 1");
    const std::size_t n = engine.profile().nvars();
    const VarSetPtr& vars = engine.profile().system.vars;
    std::map<ExponentVec, Rational> out;
    ExponentVec j(n, 0);
    auto rec = [&](auto&& self, std::size_t level, long long remaining) -> void {
        if (level == n) {
            if (total_degree(j) >= 1)
                out.emplace(j, engine.trace(Polynomial::monomial(vars, j, Rational(1))));
            return;
        }
        for (Exponent v = 0; v <= remaining; ++v) {
            j[level] = v;
            self(self, level + 1, remaining - v);
        }
        j[level] = 0;
    };
    rec(rec, 0, dmax);
    return out;
}

TruncatedMultiSeries::TruncatedMultiSeries(std::size_t nvars, long long truncation)
    : nvars_(nvars), truncation_(truncation) {
    internal_check(truncation_ >= 0, "negative series truncation");
}

Rational TruncatedMultiSeries::coefficient(const ExponentVec& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational TruncatedMultiSeries::constant_term() const {
    return coefficient(ExponentVec(nvars_, 0));
}

void TruncatedMultiSeries::add(const ExponentVec& e, const Rational& c) {
    internal_check(e.size() == nvars_, "series exponent arity mismatch");
    if (total_degree(e) > truncation_ || sign_of(c) == 0) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (sign_of(it->second) == 0) coeffs_.erase(it);
    }
}

TruncatedMultiSeries TruncatedMultiSeries::operator+(const TruncatedMultiSeries& rhs) const {
    internal_check(nvars_ == rhs.nvars_, "series arity mismatch");
    TruncatedMultiSeries out(nvars_, std::min(truncation_, rhs.truncation_));
    for (const auto& [e, c] : coeffs_) out.add(e, c);
    for (const auto& [e, c] : rhs.coeffs_) out.add(e, c);
    return out;
}

TruncatedMultiSeries TruncatedMultiSeries::operator*(const TruncatedMultiSeries& rhs) const {
    internal_check(nvars_ == rhs.nvars_, "series arity mismatch");
    TruncatedMultiSeries out(nvars_, std::min(truncation_, rhs.truncation_));
    for (const auto& [ea, ca] : coeffs_)
        for (const auto& [eb, cb] : rhs.coeffs_) out.add(exp_add(ea, eb), ca * cb);
    return out;
}

TruncatedMultiSeries TruncatedMultiSeries::scaled(const Rational& c) const {
    TruncatedMultiSeries out(nvars_, truncation_);
    if (sign_of(c) == 0) return out;
    for (const auto& [e, v] : coeffs_) out.add(e, v * c);
    return out;
}

TruncatedMultiSeries series_log(const TruncatedMultiSeries& s) {
    if (s.constant_term() != 1) throw PreconditionError("series log needs constant term 1");
    TruncatedMultiSeries q = s; // q = s - 1
    q.add(ExponentVec(s.nvars(), 0), Rational(-1));
    TruncatedMultiSeries out(s.nvars(), s.truncation());
    TruncatedMultiSeries power(s.nvars(), s.truncation());
    power.add(ExponentVec(s.nvars(), 0), Rational(1));
    for (long long k = 1; k <= s.truncation(); ++k) {
        power = power * q;
        Rational coeff = Rational((k % 2 == 1) ? 1 : -1) / Rational(static_cast<long>(k));
        out = out + power.scaled(coeff);
    }
    return out;
}

TruncatedMultiSeries series_exp(const TruncatedMultiSeries& s) {
    if (sign_of(s.constant_term()) != 0) throw PreconditionError("series exp needs constant term 0");
    TruncatedMultiSeries out(s.nvars(), s.truncation());
    out.add(ExponentVec(s.nvars(), 0), Rational(1));
    TruncatedMultiSeries term(s.nvars(), s.truncation());
    term.add(ExponentVec(s.nvars(), 0), Rational(1));
    for (long long k = 1; k <= s.truncation(); ++k) {
        term = (term * s).scaled(Rational(1) / Rational(static_cast<long>(k)));
        out = out + term;
    }
    return out;
}

ChowForm chow_form(const NormalFormEngine& engine, long long dprime) {
    if (dprime < 1) throw PreconditionError("Chow form needs truncation >= 1");
    const std::size_t n = engine.profile().nvars();
    std::map<ExponentVec, Rational> sums = power_sums(engine, dprime);

    TruncatedMultiSeries log_series(n, dprime);
    for (const auto& [j, value] : sums) {
        long long d = total_degree(j);
        Integer multinomial = factorial(static_cast<unsigned long>(d));
        for (Exponent ji : j) multinomial /= factorial(static_cast<unsigned long>(ji));
        Rational w = make_rational((d % 2 == 1) ? multinomial : -multinomial,
                                   Integer(static_cast<long>(d)));
        log_series.add(j, w * value);
    }
    TruncatedMultiSeries series = series_exp(log_series);
    return ChowForm{std::move(log_series), std::move(series)};
}

} // namespace residua
