#include "residua/cones.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "residua/errors.hpp"

namespace residua {

namespace {

Integer dot(const IntVec& a, const IntVec& b) {
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

Integer dot(const IntVec& a, const ExponentVec& b) {
    Integer acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * Integer(static_cast<long>(b[i]));
    return acc;
}

// divide by the gcd of the entries; orientation is preserved
IntVec primitive(IntVec v) {
    Integer g = 0;
    for (const Integer& x : v) ::mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sign_of(g) > 0 && g != 1)
        for (Integer& x : v) x /= g;
    return v;
}

std::size_t rank_of(const std::vector<const IntVec*>& rows, std::size_t dim) {
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const IntVec* r : rows) {
        std::vector<Rational> row(dim);
        for (std::size_t i = 0; i < dim; ++i) row[i] = Rational((*r)[i]);
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && sign_of(m[pivot][col]) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || sign_of(m[i][col]) == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < dim; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::vector<IntVec> extreme_rays(const std::vector<IntVec>& normals, std::size_t dim) {
    // double description, seeded with +-e_i (a generating set of R^dim)
    std::vector<IntVec> rays;
    for (std::size_t k = 0; k < dim; ++k) {
        IntVec e(dim, 0);
        e[k] = 1;
        rays.push_back(e);
        e[k] = -1;
        rays.push_back(e);
    }
    for (const IntVec& nv : normals) {
        std::vector<IntVec> pos, zero, neg;
        for (IntVec& u : rays) {
            int s = sign_of(dot(nv, u));
            (s > 0 ? pos : s == 0 ? zero : neg).push_back(std::move(u));
        }
        std::vector<IntVec> next;
        next.insert(next.end(), pos.begin(), pos.end());
        next.insert(next.end(), zero.begin(), zero.end());
        for (const IntVec& p : pos) {
            Integer wp = dot(nv, p);
            for (const IntVec& q : neg) {
                Integer wq = dot(nv, q); // negative
                IntVec cand(dim);
                bool nonzero = false;
                for (std::size_t k = 0; k < dim; ++k) {
                    cand[k] = wp * q[k] - wq * p[k];
                    if (sign_of(cand[k]) != 0) nonzero = true;
                }
                if (nonzero) next.push_back(primitive(std::move(cand)));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
    }

    // keep extreme rays only: active constraint set of rank dim-1
    std::vector<IntVec> out;
    for (const IntVec& u : rays) {
        if (std::all_of(u.begin(), u.end(), [](const Integer& x) { return sign_of(x) == 0; }))
            continue;
        std::vector<const IntVec*> active;
        bool feasible = true;
        for (const IntVec& nv : normals) {
            int s = sign_of(dot(nv, u));
            if (s < 0) {
                feasible = false;
                break;
            }
            if (s == 0) active.push_back(&nv);
        }
        if (!feasible) continue;
        if (rank_of(active, dim) == dim - 1) out.push_back(primitive(u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ExponentVec> nonleading_exponents(const BasisProfile& profile, std::size_t i) {
    const Polynomial& g = profile.system.generators.at(i);
    ExponentVec lead(profile.nvars(), 0);
    lead[i] = profile.r[i] + 1;
    std::vector<ExponentVec> out;
    for (const Term& t : g.terms())
        if (t.exponents != lead) out.push_back(t.exponents);
    return out;
}

ConePair build_cones(const BasisProfile& profile) {
    const std::size_t n = profile.nvars();
    ConePair cones;

    for (std::size_t i = 0; i < n; ++i) {
        for (const ExponentVec& b : nonleading_exponents(profile, i)) {
            IntVec normal(n, 0);
            for (std::size_t k = 0; k < n; ++k) normal[k] = Integer(static_cast<long>(-b[k]));
            normal[i] += Integer(static_cast<long>(profile.r[i] + 1));
            cones.w_inequalities.push_back(ConeInequality{i, b, std::move(normal)});
        }
    }

    std::vector<IntVec> normals;
    normals.reserve(cones.w_inequalities.size());
    for (const auto& ineq : cones.w_inequalities) normals.push_back(ineq.normal);
    {
        std::vector<const IntVec*> rows;
        for (const IntVec& nv : normals) rows.push_back(&nv);
        if (rank_of(rows, n) < n)
            throw PreconditionError("weight cone is not pointed (a generator has too few terms)");
    }
    cones.w_rays = extreme_rays(normals, n);

    // interior certificate: the sum of the extreme rays
    cones.interior_point.assign(n, Integer(0));
    for (const IntVec& u : cones.w_rays)
        for (std::size_t k = 0; k < n; ++k) cones.interior_point[k] += u[k];
    for (const IntVec& nv : normals)
        if (sign_of(dot(nv, cones.interior_point)) <= 0)
            throw PreconditionError("weight cone has empty interior");

    // W* generators: (r+1) - b over the support of the product of the
    // generators, reduced to extreme rays (active W-ray set of rank n-1)
    Polynomial product = Polynomial::constant(profile.system.vars, Rational(1));
    for (const Polynomial& g : profile.system.generators) product = product * g;
    ExponentVec rp1 = profile.r_plus_one();
    std::set<IntVec> gens;
    for (const Term& t : product.terms()) {
        IntVec v(n);
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = Integer(static_cast<long>(rp1[k] - t.exponents[k]));
            if (sign_of(v[k]) != 0) nonzero = true;
        }
        if (nonzero) gens.insert(primitive(std::move(v)));
    }
    for (const IntVec& v : gens) {
        std::vector<const IntVec*> active;
        bool inside = true;
        for (const IntVec& u : cones.w_rays) {
            int s = sign_of(dot(u, v));
            if (s < 0) {
                inside = false;
                break;
            }
            if (s == 0) active.push_back(&u);
        }
        internal_check(inside, "product support generator escapes the dual cone");
        if (rank_of(active, n) == n - 1) cones.wstar_rays.push_back(v);
    }
    std::sort(cones.wstar_rays.begin(), cones.wstar_rays.end());
    cones.wstar_rays.erase(std::unique(cones.wstar_rays.begin(), cones.wstar_rays.end()),
                           cones.wstar_rays.end());

    // facet normals of W*: the W rays whose zero set among the W* rays has
    // rank n-1
    for (const IntVec& u : cones.w_rays) {
        std::vector<const IntVec*> active;
        for (const IntVec& v : cones.wstar_rays)
            if (sign_of(dot(u, v)) == 0) active.push_back(&v);
        if (rank_of(active, n) == n - 1) cones.wstar_inequalities.push_back(u);
    }
    return cones;
}

bool vanishing_by_cone(const ConePair& cones, const ExponentVec& a, const ExponentVec& r) {
    ExponentVec diff = exp_sub(a, r);
    for (const IntVec& u : cones.w_rays)
        if (sign_of(dot(u, diff)) < 0) return true;
    return false;
}

Rational degree_bound_single(const ConePair& cones, const BasisProfile& profile,
                             const ExponentVec& a, std::size_t i, std::size_t j) {
    if (vanishing_by_cone(cones, a, profile.r))
        throw PreconditionError("degree bound requires a - r inside the dual cone");
    std::vector<ExponentVec> tails = nonleading_exponents(profile, i);
    const ExponentVec& b = tails.at(j);
    IntVec rho(profile.nvars(), 0);
    for (std::size_t k = 0; k < profile.nvars(); ++k) rho[k] = Integer(static_cast<long>(-b[k]));
    rho[i] += Integer(static_cast<long>(profile.r[i] + 1));

    ExponentVec diff = exp_sub(a, profile.r);
    bool have = false;
    Rational best;
    for (const IntVec& u : cones.w_rays) {
        Integer den = dot(u, rho);
        if (sign_of(den) == 0) continue;
        Rational ratio = make_rational(dot(u, diff), den);
        if (!have || ratio < best) {
            best = ratio;
            have = true;
        }
    }
    if (!have) throw PreconditionError("degree bound unbounded: denominator vanishes on every ray");
    return best;
}

namespace {

IntVec validated_interior(const ConePair& cones, const WeightVector& w) {
    IntVec v(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) v[k] = Integer(static_cast<long>(w[k]));
    for (const auto& ineq : cones.w_inequalities)
        if (sign_of(dot(ineq.normal, v)) <= 0)
            throw PreconditionError("supplied weight is not strictly interior to the cone");
    return v;
}

} // namespace

Integer degree_bound_total(const ConePair& cones, const BasisProfile& profile, const ExponentVec& a,
                           const std::vector<WeightVector>& extra_interior) {
    if (vanishing_by_cone(cones, a, profile.r))
        throw PreconditionError("degree bound requires a - r inside the dual cone");
    ExponentVec diff = exp_sub(a, profile.r);
    Integer best = dot(cones.interior_point, diff);
    for (const WeightVector& w : extra_interior) {
        Integer v = dot(validated_interior(cones, w), diff);
        if (v < best) best = v;
    }
    return best;
}

Integer trace_degree_bound(const ConePair& cones, const BasisProfile& profile, const Polynomial& h,
                           const std::vector<WeightVector>& extra_interior) {
    (void)profile;
    if (h.is_zero()) throw PreconditionError("trace degree bound of the zero polynomial");
    std::vector<IntVec> points{cones.interior_point};
    for (const WeightVector& w : extra_interior) points.push_back(validated_interior(cones, w));
    Integer best;
    bool have = false;
    for (const IntVec& p : points) {
        Integer deg;
        bool first = true;
        for (const Term& t : h.terms()) {
            Integer d = dot(p, t.exponents);
            if (first || d > deg) deg = d;
            first = false;
        }
        if (!have || deg < best) {
            best = deg;
            have = true;
        }
    }
    return best;
}

} // namespace residua
