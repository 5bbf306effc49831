#pragma once

#include <algorithm>
#include <utility>

#include "mcg/classify.hpp"
#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"
#include "mcg/slope.hpp"

namespace mcg {

// Distance in the Farey graph (vertices: slopes; edges: intersection one).
//
// The graph is locally infinite, so plain search does not terminate.  The
// algorithm below walks the Stern-Brocot structure between the endpoints:
// normalize s1 to 1/0 by a unimodular change of basis, then descend from
// the target through its mediant parents.  Any path from 1/0 into the fan
// below a vertex must pass through one of its two parents (the parent
// triangle separates the fan in the Farey tessellation), so
//     d(v) = 1 + min(d(parent1), d(parent2)),
// and along a run of j mediant steps toward a fixed parent A,
//     d(m_j) = 1 + min(d(A), d(B) + j - 1).
// Runs are jumped with a division, so the cost is one Euclid cascade.
//
// Tests cross-validate against a bounded breadth-first search.

struct FareyDistance {
    bool exceeded = false;  // true: distance > cap, value not reported
    long distance = 0;
};

namespace detail {

// Unimodular matrix sending s to (1, 0): first row a Bezout pair for s.
inline MappingClass normalizer(const Slope& s) {
    Integer x, y, g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), s.p().get_mpz_t(),
               s.q().get_mpz_t());
    // g = 1 since slopes are coprime
    return MappingClass(x, y, -s.q(), s.p());
}

// 1 + min(d_keep, d_move + steps - 1) with an Integer run length.
inline long run_distance(long d_keep, long d_move, const Integer& steps) {
    Integer alt = steps - 1 + d_move;
    if (alt >= d_keep) return 1 + d_keep;
    return 1 + static_cast<long>(mpz_get_si(alt.get_mpz_t()));
}

inline long farey_distance_to_infinity(const Integer& p, const Integer& q) {
    // distance from 1/0 to p/q, q >= 1
    if (q == 1) return 1;
    Integer a0 = floor_div(p, q);
    Integer beta = p - a0 * q;  // 0 < beta < q since gcd(p, q) = 1, q >= 2
    Integer alpha = q - beta;
    // target = alpha*A + beta*B with parents A = a0/1, B = (a0+1)/1
    long dist_a = 1, dist_b = 1;
    while (true) {
        if (beta == 1) return run_distance(dist_a, dist_b, alpha);
        if (alpha == 1) return run_distance(dist_b, dist_a, beta);
        if (alpha > beta) {
            // jump j mediant steps toward A: the far parent becomes jA + B
            Integer j = floor_div(alpha - 1, beta);
            dist_b = run_distance(dist_a, dist_b, j);
            alpha -= j * beta;
        } else {
            Integer j = floor_div(beta - 1, alpha);
            dist_a = run_distance(dist_b, dist_a, j);
            beta -= j * alpha;
        }
    }
}

}  // namespace detail

// Exact Farey-graph distance, no cap.
inline long farey_distance_exact(const Slope& s1, const Slope& s2) {
    if (s1 == s2) return 0;
    Slope t = detail::normalizer(s1).apply(s2);
    // t != (1,0) because s2 != s1; canonical form has q >= 1 here
    return detail::farey_distance_to_infinity(t.p(), t.q());
}

// Distance with an explicit cap: distances beyond the cap are reported as
// exceeded, never as a number.
inline FareyDistance farey_distance(const Slope& s1, const Slope& s2, long cap) {
    if (cap < 0) throw std::invalid_argument("negative distance cap");
    long d = farey_distance_exact(s1, s2);
    if (d > cap) return {true, 0};
    return {false, d};
}

// Empirical translation-length quotient d(M^n(s), s) / n for pseudo-Anosov M.
inline Rational translation_estimate(const MappingClass& m, const Slope& s,
                                     long n) {
    if (n < 1) throw std::invalid_argument("translation estimate needs n >= 1");
    if (classify(m).kind != MappingKind::pseudo_anosov)
        throw HypothesisError("translation estimate requires a pseudo-Anosov class");
    long d = farey_distance_exact(m.pow(n).apply(s), s);
    return make_rational(d, n);
}

}  // namespace mcg
