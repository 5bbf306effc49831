#pragma once

#include <optional>
#include <string>

#include "mcg/matrix.hpp"
#include "mcg/quadratic.hpp"
#include "mcg/slope.hpp"

namespace mcg {

enum class MappingKind { identity, finite_order, dehn_twist, pseudo_anosov };

inline const char* kind_name(MappingKind k) {
    switch (k) {
        case MappingKind::identity: return "identity";
        case MappingKind::finite_order: return "finite_order";
        case MappingKind::dehn_twist: return "dehn_twist";
        case MappingKind::pseudo_anosov: return "pseudo_anosov";
    }
    return "?";
}

// Trace trichotomy for torus mapping classes.  The canonical reducing
// system is the twist axis in the dehn_twist case and empty otherwise.
struct ClassificationResult {
    MappingKind kind;
    std::optional<Slope> axis;                       // dehn_twist only
    Integer power = 0;                               // dehn_twist only, signed
    std::optional<QuadraticIrrational> dilatation;   // pseudo_anosov only
};

// |trace| < 2 (and not +-I)  -> finite order
// |trace| = 2, M != +-I      -> Dehn twist about the fixed slope
// |trace| > 2                -> pseudo-Anosov with dilatation (|t|+sqrt(t^2-4))/2
inline ClassificationResult classify(const MappingClass& m) {
    ClassificationResult result;
    if (m.is_plus_minus_identity()) {
        result.kind = MappingKind::identity;
        return result;
    }
    Integer t = m.trace();
    Integer abs_t = t < 0 ? -t : t;
    if (abs_t < 2) {
        result.kind = MappingKind::finite_order;
        return result;
    }
    if (abs_t == 2) {
        result.kind = MappingKind::dehn_twist;
        // M = s*T_axis^n with s = sign(trace); N := M - s*I = s*n*K(axis)
        // where K(axis) = [[-pq, p^2], [-q^2, pq]].
        int s = (t > 0) ? 1 : -1;
        Integer na = m.a() - s, nb = m.b(), nc = m.c(), nd = m.d() - s;
        // axis = primitive generator of the column space of N
        Integer vp, vq;
        if (na != 0 || nc != 0) {
            vp = na;
            vq = nc;
        } else {
            vp = nb;
            vq = nd;
        }
        Integer g = gcd(vp, vq);
        if (g < 0) g = -g;
        vp /= g;
        vq /= g;
        Slope axis(vp, vq);
        // recover the coefficient from a nonzero slot of s*n*K(axis)
        const Integer& p = axis.p();
        const Integer& q = axis.q();
        Integer coeff;  // = s*n
        if (p != 0)
            coeff = nb / (p * p);
        else
            coeff = -nc / (q * q);
        result.axis = axis;
        result.power = s * coeff;
        return result;
    }
    result.kind = MappingKind::pseudo_anosov;
    result.dilatation =
        QuadraticIrrational(abs_t, 1, 2, abs_t * abs_t - 4);
    return result;
}

}  // namespace mcg
