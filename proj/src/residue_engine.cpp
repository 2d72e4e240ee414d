#include "residua/residue_engine.hpp"

#include <mutex>
#include <unordered_map>
#include <utility>

#include "residua/digest.hpp"
#include "residua/errors.hpp"

namespace residua {

namespace {

struct CacheEntry {
    std::shared_ptr<DeformationSeries> series;
};

std::mutex g_cache_mutex;
std::unordered_map<std::string, CacheEntry> g_cache;
SeriesCacheStats g_stats;

std::string profile_cache_key(const BasisProfile& profile) {
    std::string text = profile.system.to_string();
    text += "|w:";
    for (long long w : profile.weight) text += std::to_string(w) + ",";
    return hex64(fnv1a64(text));
}

} // namespace

ResidueEngine::ResidueEngine(BasisProfile profile, Exec exec)
    : profile_(std::move(profile)), exec_(exec), homogenized_(homogenize(profile_)),
      cache_key_(profile_cache_key(profile_)) {}

const ConePair& ResidueEngine::cones() const {
    if (!cones_) cones_ = std::make_shared<const ConePair>(build_cones(profile_));
    return *cones_;
}

std::shared_ptr<const DeformationSeries> ResidueEngine::shared_series(long long d) const {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(cache_key_);
    if (it == g_cache.end()) {
        ++g_stats.misses;
        SeriesOptions opts;
        opts.exec = exec_;
        auto series = std::make_shared<DeformationSeries>(invert_series(homogenized_, d, opts));
        g_cache.emplace(cache_key_, CacheEntry{series});
        return series;
    }
    if (it->second.series->truncation() >= d) {
        ++g_stats.hits;
    } else {
        ++g_stats.misses;
        SeriesOptions opts;
        opts.exec = exec_;
        extend_series(*it->second.series, d, opts);
    }
    return it->second.series;
}

Rational ResidueEngine::extract(const DeformationSeries& series, const ExponentVec& a) const {
    long long s = profile_.s_of(a);
    if (s < 0) return Rational(0);
    internal_check(s <= series.truncation(), "series truncation too small for extraction");
    ExponentVec key(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) key[i] = -(a[i] + 1);
    return series.b_coeffs[static_cast<std::size_t>(s)].coefficient_of(key);
}

Rational ResidueEngine::residue_monomial(const ExponentVec& a) const {
    internal_check(a.size() == profile_.nvars(), "exponent arity mismatch");
    for (Exponent e : a)
        if (e < 0) throw PreconditionError("residue of a Laurent monomial");

    long long s = profile_.s_of(a);
    if (s < 0 || (s == 0 && a != profile_.r)) return Rational(0);
    if (a == profile_.r) return profile_.residue_scale; // Res(x^r) = 1, scale-corrected

    Rational value;
    if (s > kTargetedThreshold) {
        SeriesOptions opts;
        opts.exec = exec_;
        ExponentVec target(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) target[i] = -(a[i] + 1);
        opts.target = target;
        opts.prune_rays = cones().w_rays;
        DeformationSeries series = invert_series(homogenized_, s, opts);
        value = series.b_coeffs[static_cast<std::size_t>(s)].coefficient_of(target);
    } else {
        value = extract(*shared_series(s), a);
    }
    return value * profile_.residue_scale;
}

ResidueTable ResidueEngine::residue_batch(long long d) const {
    if (d < 0) throw PreconditionError("batch bound must be nonnegative");
    ResidueTable table;
    table.bound = d;

    long long wr = weighted_degree(profile_.r, profile_.weight);
    std::shared_ptr<const DeformationSeries> series;
    if (d >= wr) series = shared_series(d - wr);

    // enumerate all a >= 0 with <w, a> <= d
    const std::size_t n = profile_.nvars();
    ExponentVec a(n, 0);
    std::vector<ExponentVec> all;
    auto enumerate = [&](auto&& self, std::size_t level, long long remaining) -> void {
        if (level == n) {
            all.push_back(a);
            return;
        }
        long long w = profile_.weight[level];
        for (Exponent v = 0; v * w <= remaining; ++v) {
            a[level] = v;
            self(self, level + 1, remaining - v * w);
        }
        a[level] = 0;
    };
    enumerate(enumerate, 0, d);

    std::vector<Rational> values(all.size());
    parallel_for(all.size(), exec_, [&](std::size_t k) {
        const ExponentVec& e = all[k];
        long long s = profile_.s_of(e);
        if (s < 0 || (s == 0 && e != profile_.r)) {
            values[k] = Rational(0);
        } else if (e == profile_.r) {
            values[k] = profile_.residue_scale;
        } else {
            values[k] = extract(*series, e) * profile_.residue_scale;
        }
    });
    for (std::size_t k = 0; k < all.size(); ++k) table.entries.emplace(all[k], std::move(values[k]));
    return table;
}

Rational ResidueEngine::residue_polynomial(const Polynomial& h) const {
    if (h.is_zero()) return Rational(0);
    if (h.is_laurent()) throw PreconditionError("residue of a Laurent polynomial");
    require_same_vars(h, profile_.system.generators[0]);

    // Euler-Jacobi shortcut per term: s(a) < 0 contributes nothing
    long long needed = -1;
    for (const Term& t : h.terms()) {
        long long s = profile_.s_of(t.exponents);
        if (s > 0 && s <= kTargetedThreshold) needed = std::max(needed, s);
    }
    std::shared_ptr<const DeformationSeries> series;
    if (needed >= 0) series = shared_series(needed);

    Rational acc = 0;
    for (const Term& t : h.terms()) {
        long long s = profile_.s_of(t.exponents);
        if (s < 0) continue;
        if (s == 0) {
            if (t.exponents == profile_.r) acc += t.coeff;
            continue;
        }
        if (s > kTargetedThreshold) {
            acc += t.coeff * residue_monomial(t.exponents) / profile_.residue_scale;
        } else {
            acc += t.coeff * extract(*series, t.exponents);
        }
    }
    return acc * profile_.residue_scale;
}

RationalMatrix ResidueEngine::dual_matrix(const MonomialBasis& basis) const {
    const std::size_t dim = basis.size();
    RationalMatrix m(dim, dim);
    long long smax = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            smax = std::max(smax, profile_.s_of(exp_add(basis.exponent(i), basis.exponent(j))));
    auto series = shared_series(std::max<long long>(smax, 0));
    parallel_for(dim, exec_, [&](std::size_t i) {
        for (std::size_t j = i; j < dim; ++j) {
            ExponentVec e = exp_add(basis.exponent(i), basis.exponent(j));
            Rational v;
            if (e == profile_.r)
                v = Rational(1);
            else
                v = extract(*series, e);
            m(i, j) = v;
            if (i != j) m(j, i) = v;
        }
    });
    return m;
}

SeriesCacheStats ResidueEngine::cache_stats() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_stats;
}

void ResidueEngine::reset_cache() {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_cache.clear();
    g_stats = SeriesCacheStats{};
}

} // namespace residua
