#ifndef RESIDUA_ROOT_ANALYSIS_HPP
#define RESIDUA_ROOT_ANALYSIS_HPP

#include <map>

#include "residua/normal_form.hpp"

namespace residua {

/// The symmetric trace form T^h with T_{ij} = tr(x^i x^j h); h defaults to 1.
struct TraceForm {
    RationalMatrix matrix;
    Polynomial weight;
};

TraceForm trace_form(const NormalFormEngine& engine, Exec exec = Exec::Parallel);
TraceForm trace_form(const NormalFormEngine& engine, const Polynomial& h, Exec exec = Exec::Parallel);

struct RootCountReport {
    Integer dim_v;
    std::size_t distinct_complex = 0;
    long long distinct_real = 0;
    std::size_t rank = 0;
    long long signature = 0;
};

/// rank(T) counts distinct complex roots; signature(T) distinct real ones.
RootCountReport count_roots(const NormalFormEngine& engine);

/// signature(T^h): distinct real roots with h > 0 minus those with h < 0.
long long count_roots_weighted(const NormalFormEngine& engine, const Polynomial& h);

/// Topological degree of the (normalized) polynomial map: signature of the
/// dual matrix.
long long mapping_degree(const NormalFormEngine& engine);

/// Power sums of the root multiset: phi(h_j) = tr(x^j) for 1 <= |j| <= dmax.
std::map<ExponentVec, Rational> power_sums(const NormalFormEngine& engine, long long dmax);

/// Truncated formal power series in the u variables, total degree <= bound.
class TruncatedMultiSeries {
public:
    TruncatedMultiSeries(std::size_t nvars, long long truncation);

    std::size_t nvars() const { return nvars_; }
    long long truncation() const { return truncation_; }
    const std::map<ExponentVec, Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(const ExponentVec& e) const;
    Rational constant_term() const;

    void add(const ExponentVec& e, const Rational& c);
    TruncatedMultiSeries operator+(const TruncatedMultiSeries& rhs) const;
    TruncatedMultiSeries operator*(const TruncatedMultiSeries& rhs) const;
    TruncatedMultiSeries scaled(const Rational& c) const;

    bool operator==(const TruncatedMultiSeries&) const = default;

private:
    std::size_t nvars_;
    long long truncation_;
    std::map<ExponentVec, Rational> coeffs_;
};

/// Formal log; requires constant term 1.
TruncatedMultiSeries series_log(const TruncatedMultiSeries& s);
/// Formal exp; requires constant term 0.
TruncatedMultiSeries series_exp(const TruncatedMultiSeries& s);

struct ChowForm {
    TruncatedMultiSeries log_series; ///< built from power sums with multinomial weights
    TruncatedMultiSeries series;     ///< its exponential: coefficients are the elementary
                                     ///< symmetric polynomial values at the roots
};

/// Chow form through total degree dprime (dprime = dim V determines it
/// completely).
ChowForm chow_form(const NormalFormEngine& engine, long long dprime);

} // namespace residua

#endif
