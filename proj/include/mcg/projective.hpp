#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "mcg/certificates.hpp"
#include "mcg/classify.hpp"
#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"
#include "mcg/quadratic.hpp"

namespace mcg {

// Points of the projective line as nonzero integer vectors up to sign, and
// exact cyclic-order predicates.  The determinant-1 action preserves the
// cyclic orientation, so arcs map to arcs endpoint-by-endpoint.

struct ProjPoint {
    Integer x, y;

    static ProjPoint from_rational(const Rational& r) {
        return {r.get_num(), r.get_den()};
    }
    static ProjPoint infinity() { return {1, 0}; }
};

inline ProjPoint mobius(const MappingClass& m, const ProjPoint& p) {
    return {m.a() * p.x + m.b() * p.y, m.c() * p.x + m.d() * p.y};
}

inline Integer bracket(const ProjPoint& u, const ProjPoint& v) {
    return u.x * v.y - u.y * v.x;
}

// +1 if u, v, w are in counterclockwise cyclic order, -1 if clockwise,
// 0 if two coincide.  Independent of representative signs.
inline int cyclic_orientation(const ProjPoint& u, const ProjPoint& v,
                              const ProjPoint& w) {
    // sign convention: for reals lo < m < hi the triple (lo, m, hi) is +1,
    // so the arc (lo, hi) is the ordinary interval and (hi, lo) wraps
    // through infinity
    Integer prod = bracket(u, v) * bracket(v, w) * bracket(w, u);
    return mpz_sgn(prod.get_mpz_t());
}

// Oriented arc from s to t (counterclockwise); for rational lo < hi this is
// the ordinary open interval (lo, hi).
struct Arc {
    ProjPoint s, t;
};

inline bool arc_contains(const Arc& arc, const ProjPoint& p) {
    return cyclic_orientation(arc.s, p, arc.t) == +1;
}

// inner strictly inside outer: endpoints in order outer.s, inner.s, inner.t,
// outer.t counterclockwise.
inline bool arc_strictly_inside(const Arc& inner, const Arc& outer) {
    return cyclic_orientation(outer.s, inner.s, inner.t) == +1 &&
           cyclic_orientation(outer.s, inner.t, outer.t) == +1;
}

inline Arc image_arc(const MappingClass& m, const Arc& arc) {
    return {mobius(m, arc.s), mobius(m, arc.t)};
}

// Attracting and repelling fixed points of a hyperbolic matrix on the
// boundary circle.  Integer hyperbolics have c != 0 (c = 0 forces trace
// +-2), so both fixed points are finite quadratic irrationals over
// D = trace^2 - 4.
struct HyperbolicAxis {
    QuadraticIrrational attracting;
    QuadraticIrrational repelling;
};

inline HyperbolicAxis hyperbolic_fixed_points(const MappingClass& m) {
    if (classify(m).kind != MappingKind::pseudo_anosov)
        throw HypothesisError("fixed points on the circle need |trace| > 2");
    // c x^2 + (d - a) x - b = 0
    Integer disc = m.trace() * m.trace() - 4;
    QuadraticIrrational x_plus(m.a() - m.d(), 1, 2 * m.c(), disc);
    QuadraticIrrational x_minus(m.a() - m.d(), -1, 2 * m.c(), disc);
    // multiplier at a fixed point x is c x + d; attracting iff |c x + d| > 1
    QuadraticIrrational mult =
        QuadraticIrrational::rational(m.c(), 1) * x_plus +
        QuadraticIrrational::rational(m.d(), 1);
    bool plus_attracts = mult > Rational(1) || mult < Rational(-1);
    if (plus_attracts) return {x_plus, x_minus};
    return {x_minus, x_plus};
}

namespace detail {

// Dyadic interval of width 2^-k around an irrational value.
inline RationalInterval dyadic_neighborhood(const QuadraticIrrational& x,
                                            unsigned long k) {
    Integer m = x.floor_scaled_pow2(k);
    Integer two_k = pow_ui(2, k);
    return {make_rational(m, two_k), make_rational(m + 1, two_k)};
}

inline Arc to_arc(const RationalInterval& iv) {
    return {ProjPoint::from_rational(iv.lo), ProjPoint::from_rational(iv.hi)};
}

inline Arc complement_arc(const RationalInterval& iv) {
    return {ProjPoint::from_rational(iv.hi), ProjPoint::from_rational(iv.lo)};
}

// the closed ping-pong mapping condition: m sends the complement of `source`
// strictly into `target`
inline bool maps_complement_into(const MappingClass& m,
                                 const RationalInterval& source,
                                 const RationalInterval& target) {
    Arc image = image_arc(m, complement_arc(source));
    return arc_strictly_inside(image, to_arc(target));
}

}  // namespace detail

struct ProjectivePingPongFailure {
    std::string reason;
};

// Interval ping-pong for two hyperbolic mapping classes.  Builds disjoint
// rational-endpoint neighborhoods of the four fixed points on a dyadic
// precision ladder, widens them into the separating gaps, and checks with
// exact arithmetic that each generator maps the complement of its repelling
// interval strictly inside its attracting interval (and inversely).  That
// single condition propagates to every nonzero power, which is exactly the
// ping-pong hypothesis for X_a, X_b the interval unions.
//
// Failure (points too close at the attempted precisions, or contraction too
// weak for the separation) is reported, not thrown; callers raise powers
// and retry.
inline std::optional<FreeCertificate> projective_pingpong_cert(
    const MappingClass& a, const MappingClass& b,
    unsigned long max_precision_bits = 128) {
    if (classify(a).kind != MappingKind::pseudo_anosov ||
        classify(b).kind != MappingKind::pseudo_anosov)
        throw HypothesisError("projective ping-pong needs two pseudo-Anosov classes");
    if (commute(a, b)) return std::nullopt;  // identical axes, no separation

    HyperbolicAxis axis_a = hyperbolic_fixed_points(a);
    HyperbolicAxis axis_b = hyperbolic_fixed_points(b);
    const QuadraticIrrational* points[4] = {&axis_a.attracting, &axis_a.repelling,
                                            &axis_b.attracting, &axis_b.repelling};

    for (unsigned long bits = 8; bits <= max_precision_bits; bits *= 2) {
        RationalInterval iv[4];
        for (int i = 0; i < 4; ++i)
            iv[i] = detail::dyadic_neighborhood(*points[i], bits);

        // sort by rational endpoints and require strict pairwise separation
        int order[4] = {0, 1, 2, 3};
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (iv[order[j]].lo < iv[order[i]].lo) std::swap(order[i], order[j]);
        bool disjoint = true;
        for (int i = 0; i + 1 < 4; ++i)
            if (!(iv[order[i]].hi < iv[order[i + 1]].lo)) disjoint = false;
        if (!disjoint) continue;

        // widen into a third of each separating gap; the outermost ends
        // extend past the whole cluster so that no complement endpoint sits
        // next to a repelling point
        Rational grid = make_rational(1, pow_ui(2, bits));
        Rational spread = iv[order[3]].hi - iv[order[0]].lo;
        RationalInterval wide[4];
        for (int i = 0; i < 4; ++i) wide[i] = iv[i];
        for (int i = 0; i + 1 < 4; ++i) {
            Rational gap = iv[order[i + 1]].lo - iv[order[i]].hi;
            wide[order[i]].hi += gap / 3;
            wide[order[i + 1]].lo -= gap / 3;
        }
        wide[order[0]].lo -= spread + grid;
        wide[order[3]].hi += spread + grid;

        ProjectivePingPongParams params;
        params.intervals_a = {wide[0], wide[1]};
        params.intervals_b = {wide[2], wide[3]};
        params.precision_bits = bits;

        const RationalInterval& a_plus = params.intervals_a[0];
        const RationalInterval& a_minus = params.intervals_a[1];
        const RationalInterval& b_plus = params.intervals_b[0];
        const RationalInterval& b_minus = params.intervals_b[1];

        if (detail::maps_complement_into(a, a_minus, a_plus) &&
            detail::maps_complement_into(a.inverse(), a_plus, a_minus) &&
            detail::maps_complement_into(b, b_minus, b_plus) &&
            detail::maps_complement_into(b.inverse(), b_plus, b_minus)) {
            return FreeCertificate{CertificateKind::projective_pingpong, a, b,
                                   std::move(params), std::nullopt};
        }
    }
    return std::nullopt;
}

}  // namespace mcg
