#pragma once

#include <vector>

#include "lmow/relspace.hpp"
#include "lmow/wheels.hpp"

namespace lmow {

// Degree-truncated universal invariant of a 3-manifold with first homology
// Z: one zero-leg combination per degree, with degree-0 part 1.
struct LMOElement {
    int max_degree = 0;
    std::vector<DiagramCombination> parts; // index = degree

    const DiagramCombination& part(int m) const {
        if (m < 0 || m > max_degree)
            throw domain_error("LMOElement: degree out of range");
        return parts[m];
    }
};

inline constexpr int kMaxLmoDegree = 4; // quotient spaces available through here

namespace detail {

inline void require_lmo_degree(int max_degree) {
    if (max_degree < 0 || max_degree > kMaxLmoDegree)
        throw domain_error("degree bound must lie in 0.." + std::to_string(kMaxLmoDegree));
}

} // namespace detail

// Forward map: the degree-m part is the closure of the degree-2m part of
// exp_u(alpha(M)).
inline LMOElement lmo_forward(const SymmetricLaurent& alexander, int max_degree) {
    detail::require_lmo_degree(max_degree);
    if (!alexander.is_normalized())
        throw domain_error("lmo_forward: Alexander polynomial must be normalized");
    AlphaSeries alpha = alpha_from_alexander(alexander, 2 * max_degree);
    WheelSeries w = exp_disjoint(alpha, 2 * max_degree);
    LMOElement z;
    z.max_degree = max_degree;
    z.parts.assign(max_degree + 1, DiagramCombination::zero());
    z.parts[0] = DiagramCombination::unit();
    for (const auto& [mono, coeff] : w.terms()) {
        int deg = WheelSeries::mono_degree(mono);
        if (deg == 0 || deg % 2 != 0)
            continue;
        UniTrivalentDiagram d = empty_diagram();
        for (int wh : mono)
            d = disjoint_union(d, wheel(wh));
        z.parts[deg / 2] += close(d) * coeff;
    }
    return z;
}

// Recovers the wheel coefficients degree by degree: at degree m, closures
// of the already-known lower monomials are subtracted and the remainder
// must be proportional to close(w_{2m}) in the quotient. This is the
// injective half of the correspondence.
inline AlphaSeries alpha_from_lmo(const LMOElement& z, int max_degree) {
    detail::require_lmo_degree(max_degree);
    if (max_degree > z.max_degree)
        throw domain_error("alpha_from_lmo: element truncated below the requested degree");
    if (z.part(0) != DiagramCombination::unit())
        throw not_in_image_error("alpha_from_lmo: degree-0 part is not the unit");

    AlphaSeries alpha;
    for (int m = 1; m <= max_degree; ++m) {
        const QuotientSpace& qs = quotient_space(m);
        // Contribution of wheels already determined.
        WheelSeries known = exp_disjoint(alpha, 2 * m);
        DiagramCombination lower;
        for (const auto& [mono, coeff] : known.terms()) {
            if (WheelSeries::mono_degree(mono) != 2 * m)
                continue;
            UniTrivalentDiagram d = empty_diagram();
            for (int wh : mono)
                d = disjoint_union(d, wheel(wh));
            lower += close(d) * coeff;
        }
        std::vector<Rational> remainder = qs.coordinates(z.part(m) - lower);
        std::vector<Rational> generator = qs.coordinates(close(wheel(2 * m)));

        int pivot = -1;
        for (size_t k = 0; k < generator.size(); ++k)
            if (!generator[k].is_zero()) {
                pivot = (int)k;
                break;
            }
        if (pivot < 0)
            throw internal_error("alpha_from_lmo: closed wheel vanished in the quotient");
        Rational c = remainder[pivot] / generator[pivot];
        for (size_t k = 0; k < generator.size(); ++k)
            if (remainder[k] != c * generator[k])
                throw not_in_image_error(
                    "alpha_from_lmo: degree-" + std::to_string(m) +
                    " part is not in the image of the forward map");
        if (!c.is_zero())
            alpha.set(2 * m, c);
    }
    return alpha;
}

inline SymmetricLaurent lmo_invert(const LMOElement& z, int max_degree, int span_bound) {
    detail::require_lmo_degree(max_degree);
    if (span_bound < 0 || span_bound > max_degree)
        throw domain_error("lmo_invert: span bound must lie in 0..max_degree");
    AlphaSeries alpha = alpha_from_lmo(z, max_degree);

    auto b = b_coefficients(2 * max_degree);
    std::map<int, Rational> aprime;
    for (int w = 2; w <= 2 * max_degree; w += 2) {
        Rational v = alpha.at(w) - Rational(2) * b[w];
        if (!v.is_zero())
            aprime[w] = v;
    }
    return alexander_from_a_prime(aprime, span_bound);
}

// iota_m applied to the full truncated exponential agrees with the closure
// of its wheel part degree by degree (the a = c = 1 instance of the
// contraction identity driving the forward map).
inline bool verify_forward_chain(const SymmetricLaurent& alexander, int max_degree) {
    detail::require_lmo_degree(max_degree);
    AlphaSeries alpha = alpha_from_alexander(alexander, 2 * max_degree);
    DiagramCombination e = exp_disjoint(alpha, 2 * max_degree).to_combination();
    LMOElement z = lmo_forward(alexander, max_degree);
    for (int m = 1; m <= max_degree; ++m) {
        DiagramCombination lhs = iota(e, m).degree_part(m);
        if (lhs != z.part(m))
            return false;
    }
    return true;
}

} // namespace lmow
