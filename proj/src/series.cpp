#include "residua/series.hpp"

#include <algorithm>
#include <utility>

#include "residua/errors.hpp"

namespace residua {

HomogenizedSystem homogenize(const BasisProfile& profile) {
    HomogenizedSystem hs{profile, {}};
    const std::size_t n = profile.nvars();
    hs.parts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& g = profile.system.generators[i];
        long long di = profile.degrees[i];
        std::map<long long, Polynomial> part;
        for (const Term& t : g.terms()) {
            long long k = di - weighted_degree(t.exponents, profile.weight);
            internal_check(k >= 0, "homogenization produced a negative t-degree");
            auto it = part.find(k);
            if (it == part.end()) it = part.emplace(k, Polynomial(g.vars())).first;
            it->second += Polynomial::monomial(g.vars(), t.exponents, t.coeff);
        }
        hs.parts.push_back(std::move(part));
    }
    return hs;
}

std::vector<Polynomial> expand_product(const HomogenizedSystem& hs) {
    const VarSetPtr& vars = hs.profile.system.vars;
    std::map<long long, Polynomial> acc;
    acc.emplace(0, Polynomial::constant(vars, Rational(1)));
    for (const auto& part : hs.parts) {
        std::map<long long, Polynomial> next;
        for (const auto& [ta, pa] : acc) {
            for (const auto& [tb, pb] : part) {
                Polynomial prod = pa * pb;
                if (prod.is_zero()) continue;
                auto it = next.find(ta + tb);
                if (it == next.end())
                    next.emplace(ta + tb, std::move(prod));
                else
                    it->second += prod;
            }
        }
        acc = std::move(next);
    }
    std::vector<Polynomial> a(static_cast<std::size_t>(hs.profile.weighted_sum) + 1, Polynomial(vars));
    for (auto& [t, p] : acc) {
        internal_check(t >= 0 && t <= hs.profile.weighted_sum, "product t-degree out of range");
        a[static_cast<std::size_t>(t)] = std::move(p);
    }
    return a;
}

namespace {

// keep a term iff it can still contribute to the target coefficient:
// exponent - target must lie in the dual cone (nonnegative against all rays)
bool survives(const ExponentVec& e, const ExponentVec& target,
              const std::vector<std::vector<Integer>>& rays) {
    for (const auto& ray : rays) {
        Integer dot = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            dot += ray[i] * Integer(static_cast<long>(e[i] - target[i]));
        if (sign_of(dot) < 0) return false;
    }
    return true;
}

std::vector<Term> merge_pair(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].exponents == b[j].exponents) {
            Rational c = a[i].coeff + b[j].coeff;
            if (sign_of(c) != 0) out.push_back(Term{a[i].exponents, std::move(c)});
            ++i;
            ++j;
        } else if (graded_lex_before(a[i].exponents, b[j].exponents)) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

// deterministic pairwise merge tree over the per-j partial products
std::vector<Term> merge_many(std::vector<std::vector<Term>> lists, Exec exec) {
    if (lists.empty()) return {};
    while (lists.size() > 1) {
        std::size_t pairs = lists.size() / 2;
        std::vector<std::vector<Term>> next(pairs + lists.size() % 2);
        parallel_for(pairs, exec, [&](std::size_t k) {
            next[k] = merge_pair(lists[2 * k], lists[2 * k + 1]);
        });
        if (lists.size() % 2) next.back() = std::move(lists.back());
        lists = std::move(next);
    }
    return std::move(lists.front());
}

void build_range(DeformationSeries& series, long long from, long long d, const SeriesOptions& opts) {
    const BasisProfile& profile = series.profile;
    const VarSetPtr& vars = profile.system.vars;
    const std::vector<Polynomial>& a = series.a_coeffs;
    ExponentVec neg_rp1 = profile.r_plus_one();
    for (Exponent& e : neg_rp1) e = -e;

    if (opts.target)
        internal_check(!opts.prune_rays.empty(), "targeted series inversion needs prune rays");

    series.b_coeffs.resize(static_cast<std::size_t>(d) + 1, Polynomial(vars));
    for (long long m = std::max<long long>(from, 1); m <= d; ++m) {
        // products A_j * B_{m-j} for 1 <= j <= min(m, d_w), in parallel: each
        // A_j term contributes one pre-sorted shifted copy of B_{m-j}
        std::vector<std::pair<const Term*, const Polynomial*>> jobs;
        long long jmax = std::min<long long>(m, profile.weighted_sum);
        for (long long j = 1; j <= jmax; ++j) {
            const Polynomial& aj = a[static_cast<std::size_t>(j)];
            const Polynomial& bmj = series.b_coeffs[static_cast<std::size_t>(m - j)];
            if (aj.is_zero() || bmj.is_zero()) continue;
            for (const Term& t : aj.terms()) jobs.emplace_back(&t, &bmj);
        }
        std::vector<std::vector<Term>> lists(jobs.size());
        parallel_for(jobs.size(), opts.exec, [&](std::size_t k) {
            const Term& at = *jobs[k].first;
            const Polynomial& bp = *jobs[k].second;
            std::vector<Term> shifted;
            shifted.reserve(bp.term_count());
            for (const Term& bt : bp.terms()) {
                // final exponent after the x^{-(r+1)} shift below
                ExponentVec e = exp_add(exp_add(at.exponents, bt.exponents), neg_rp1);
                if (opts.target && !survives(e, *opts.target, opts.prune_rays)) continue;
                shifted.push_back(Term{std::move(e), -(at.coeff * bt.coeff)});
            }
            lists[k] = std::move(shifted);
        });
        std::vector<Term> merged = merge_many(std::move(lists), opts.exec);
        series.b_coeffs[static_cast<std::size_t>(m)] = Polynomial::from_terms(vars, std::move(merged));
    }
}

} // namespace

DeformationSeries invert_series(const HomogenizedSystem& hs, long long d, const SeriesOptions& opts) {
    internal_check(d >= 0, "series truncation must be nonnegative");
    DeformationSeries series{hs.profile, expand_product(hs), {}};
    internal_check(series.a_coeffs[0].term_count() == 1, "A_0 is not a monomial");
    internal_check(series.a_coeffs[0].leading_term().coeff == 1, "A_0 is not monic");

    ExponentVec neg_rp1 = hs.profile.r_plus_one();
    for (Exponent& e : neg_rp1) e = -e;
    series.b_coeffs.push_back(Polynomial::monomial(hs.profile.system.vars, neg_rp1, Rational(1)));
    build_range(series, 1, d, opts);
    return series;
}

void extend_series(DeformationSeries& series, long long d, const SeriesOptions& opts) {
    if (d <= series.truncation()) return;
    build_range(series, series.truncation() + 1, d, opts);
}

} // namespace residua
