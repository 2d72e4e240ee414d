#include "residua/fourier_motzkin.hpp"

#include <utility>

#include "residua/errors.hpp"

namespace residua {

std::optional<std::vector<Rational>> feasible_point(std::vector<LinearConstraint> constraints,
                                                    std::size_t nvars) {
    for (const auto& c : constraints)
        internal_check(c.coeffs.size() == nvars, "constraint arity mismatch");

    // Eliminate x_{nvars-1}, ..., x_0, remembering each stage's constraints
    // for back-substitution.
    std::vector<std::vector<LinearConstraint>> stages;
    stages.reserve(nvars);
    std::vector<LinearConstraint> current = std::move(constraints);
    for (std::size_t var = nvars; var-- > 0;) {
        stages.push_back(current);
        std::vector<LinearConstraint> next;
        std::vector<const LinearConstraint*> pos, neg;
        for (const auto& c : current) {
            int s = sign_of(c.coeffs[var]);
            if (s > 0)
                pos.push_back(&c);
            else if (s < 0)
                neg.push_back(&c);
            else
                next.push_back(c);
        }
        for (const auto* p : pos) {
            for (const auto* q : neg) {
                // (-q_var)*p + p_var*q eliminates x_var; both multipliers positive
                Rational mp = -q->coeffs[var];
                Rational mq = p->coeffs[var];
                LinearConstraint combined;
                combined.coeffs.resize(var);
                for (std::size_t k = 0; k < var; ++k)
                    combined.coeffs[k] = mp * p->coeffs[k] + mq * q->coeffs[k];
                combined.bound = mp * p->bound + mq * q->bound;
                next.push_back(std::move(combined));
            }
        }
        for (auto& c : next) c.coeffs.resize(var);
        current = std::move(next);
    }

    for (const auto& c : current)
        if (sign_of(c.bound) > 0) return std::nullopt; // 0 >= positive: infeasible

    // Back-substitute, picking the tightest lower bound for each variable
    // (every stage is guaranteed consistent by the elimination above).
    std::vector<Rational> point(nvars);
    for (std::size_t var = 0; var < nvars; ++var) {
        const auto& stage = stages[nvars - 1 - var];
        bool have_lower = false, have_upper = false;
        Rational lower = 0, upper = 0;
        for (const auto& c : stage) {
            int s = sign_of(c.coeffs[var]);
            if (s == 0) continue;
            Rational rest = c.bound;
            for (std::size_t k = 0; k < var; ++k) rest -= c.coeffs[k] * point[k];
            Rational ratio = rest / c.coeffs[var];
            if (s > 0) {
                if (!have_lower || ratio > lower) lower = ratio;
                have_lower = true;
            } else {
                if (!have_upper || ratio < upper) upper = ratio;
                have_upper = true;
            }
        }
        if (have_lower) {
            point[var] = lower;
        } else if (have_upper) {
            point[var] = upper < 0 ? upper : Rational(0);
        } else {
            point[var] = 0;
        }
        internal_check(!have_lower || !have_upper || lower <= upper,
                       "fourier-motzkin back-substitution out of range");
    }
    return point;
}

} // namespace residua
