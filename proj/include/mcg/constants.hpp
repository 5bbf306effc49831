#pragma once

#include <span>
#include <string>
#include <vector>

#include "mcg/certificates.hpp"
#include "mcg/ints.hpp"
#include "mcg/rng.hpp"

namespace mcg {

// Abstract projection-distance parameters for the relative ping-pong
// argument.  General subsurface projections carry no algorithm here; the
// engine verifies the arithmetic skeleton of the proof on parameters.
struct ProjectionParams {
    Rational c;        // minimal translation constant, c > 0
    long d_in = 10;    // hypothesis threshold
    long d_out = 4;    // conclusion bound, d_in > d_out >= 0

    ProjectionParams(Rational c_, long d_in_ = 10, long d_out_ = 4)
        : c(std::move(c_)), d_in(d_in_), d_out(d_out_) {
        if (c <= 0) throw std::invalid_argument("translation constant must be positive");
        if (d_out < 0 || d_in <= d_out)
            throw std::invalid_argument("thresholds need d_in > d_out >= 0");
    }
};

// Curves at projection distance d intersect at least 2^((d-2)/2) times;
// odd d uses the floored exponent (reported by the caller as such).
inline Integer intersection_lower_bound(long d) {
    if (d < 2) throw std::invalid_argument("intersection bound needs distance >= 2");
    return pow_ui(2, static_cast<unsigned long>((d - 2) / 2));
}

// Arc intersections from curve intersections: i(a_u, a_v) >= (i(u,v) - 2)/4.
// The additive constant 2 counts the crossings lost near the boundary; it
// is a parameter so threshold regressions can probe relaxations of it.
inline Rational arc_crossing_lower_bound(const Integer& iuv, long additive = 2) {
    if (iuv < 0) throw std::invalid_argument("negative intersection number");
    return make_rational(iuv - additive, 4);
}

struct BehrstockReport {
    long d_in = 0;
    bool floored_exponent = false;
    Integer iuv_min;
    Rational arcs_min;
    bool implies_d_out_4 = false;
};

// The threshold chain: distance >= d_in forces >= 2^((d_in-2)/2) curve
// intersections, hence >= (2^... - 2)/4 arc intersections; three arc
// crossings trap a segment in the other subsurface and cap the projection
// there at 4.
inline BehrstockReport behrstock_threshold_check(long d_in, long arc_bound_additive = 2) {
    BehrstockReport report;
    report.d_in = d_in;
    report.floored_exponent = (d_in % 2) != 0;
    report.iuv_min = intersection_lower_bound(d_in);
    report.arcs_min = arc_crossing_lower_bound(report.iuv_min, arc_bound_additive);
    report.implies_d_out_4 = report.arcs_min >= 3;
    return report;
}

// p1 = max({14/c : c in the list} union {2})
inline Rational p1_constant(std::span<const Rational> c_values) {
    if (c_values.empty()) throw std::invalid_argument("p1 needs at least one c");
    Rational best(2);
    for (const auto& c : c_values) {
        if (c <= 0) throw std::invalid_argument("translation constants are positive");
        Rational candidate = Rational(14) / c;
        candidate.canonicalize();
        if (candidate > best) best = candidate;
    }
    return best;
}

struct ConstantChain {
    ProjectionParams params;
    long p = 0;
    long m = 0;
    std::vector<CheckedStep> steps;
    bool accepted = false;
    std::string first_failure;  // empty when accepted
};

// Replay of the proof's inequality chain at (c, p, m), as exact comparisons:
//   (i)  the Behrstock implication at d_in,
//   (ii) translation: c p |m| >= d_in + d_out,
//   (iii) triangle:   c p |m| - d_out >= d_in.
inline ConstantChain chain_verify(const ProjectionParams& params, long p, long m) {
    if (p < 1) throw std::invalid_argument("power must be >= 1");
    if (m == 0) throw std::invalid_argument("m must be nonzero");

    ConstantChain chain{params, p, m, {}, true, ""};
    auto record = [&](std::string name, Rational lhs, Rational rhs) {
        bool holds = lhs >= rhs;
        chain.steps.push_back({name, std::move(lhs), std::move(rhs), holds});
        if (!holds && chain.accepted) {
            chain.accepted = false;
            chain.first_failure = chain.steps.back().name;
        }
    };

    auto behrstock = behrstock_threshold_check(params.d_in);
    record("behrstock: arcs_min >= 3 at d_in = " + std::to_string(params.d_in),
           behrstock.arcs_min, Rational(3));

    Rational translation = params.c * Rational(p) * Rational(m < 0 ? -m : m);
    translation.canonicalize();
    record("translation: c p |m| >= d_in + d_out", translation,
           Rational(params.d_in + params.d_out));
    record("triangle: c p |m| - d_out >= d_in",
           translation - Rational(params.d_out), Rational(params.d_in));
    return chain;
}

struct ThresholdSearch {
    long d_in_min = 0;
    long sum_min = 0;  // minimal c*p budget d_in + d_out along the chain
};

// First d_in accepted by the Behrstock check, scanning upward; with the
// conclusion bound 4 this pins the proof's budget d_in + d_out.
inline ThresholdSearch threshold_search(long scan_cap = 100,
                                        long arc_bound_additive = 2) {
    for (long d = 2; d <= scan_cap; ++d) {
        if (behrstock_threshold_check(d, arc_bound_additive).implies_d_out_4)
            return {d, d + 4};
    }
    throw SearchExhausted("no Behrstock threshold up to " +
                          std::to_string(scan_cap));
}

// Symbolic ping-pong trace: tokens carry the coordinate pair
// (d_A(gamma, boundary B), d_B(gamma, boundary A)) and alternate under
// abstract powers obeying the translation axiom and the Behrstock bound.
struct RelpaStep {
    long step = 0;
    long m = 0;          // random exponent sign/multiple applied
    bool in_xa = false;  // membership after the step
    Rational d_far;      // coordinate in the set just entered
    Rational d_near;     // the other coordinate (Behrstock-capped)
};

struct RelpaTrace {
    bool passed = false;
    std::vector<RelpaStep> steps;
    std::string failure;
};

inline RelpaTrace simulate_relpa_pingpong(const ProjectionParams& params,
                                          long p, long length,
                                          std::uint64_t seed) {
    if (!chain_verify(params, p, 1).accepted)
        throw HypothesisError("chain_verify rejects (c, p): simulation undefined");
    if (length < 0) throw std::invalid_argument("negative trajectory length");

    RelpaTrace trace;
    trace.passed = true;
    Rng rng(seed);

    // token starts in X_a; only the Behrstock-capped coordinate feeds the
    // triangle-inequality recurrence
    Rational d_other(static_cast<long>(rng.below(params.d_out + 1)));
    bool in_xa = true;

    for (long step = 1; step <= length; ++step) {
        // random nonzero multiple; axiom-violating draws are rejected at
        // generation and redrawn
        long m = 0;
        Rational translation(0);
        while (true) {
            m = rng.range(-3, 3);
            if (m == 0) continue;
            Rational slack(static_cast<long>(rng.below(6)));
            translation = params.c * Rational(p) * Rational(m < 0 ? -m : m) + slack;
            translation.canonicalize();
            if (translation >= params.c * Rational(p) * Rational(m < 0 ? -m : m))
                break;
        }
        // the opposite generator moves the token: its coordinate grows by at
        // least the translation minus the Behrstock cap (triangle inequality)
        Rational entered = translation - d_other;
        entered.canonicalize();
        bool entered_target = entered >= params.d_in;
        // Behrstock forces the coordinate in the set just left below d_out
        Rational capped(static_cast<long>(rng.below(params.d_out + 1)));

        in_xa = !in_xa;
        trace.steps.push_back({step, m, in_xa, entered, capped});
        if (!entered_target) {
            trace.passed = false;
            trace.failure = "token left the target set at step " +
                            std::to_string(step);
            break;
        }
        d_other = capped;
    }
    return trace;
}

// Dispatch table for the relative pseudo-Anosov cases over abstract
// component-overlap configurations.  Each branch names the subgroup form
// the proof certifies and the inequalities it needs, checked exactly.
enum class OverlapConfig {
    overlapping_components,      // pseudo-Anosov supports overlap directly
    b_pseudo_anosov,             // case 1
    b_twists_identity_support,   // case 2
    roles_reversed,              // case 3, boundary in a's identity support
    nested_components            // case 3, nesting forces an overlap
};

struct DispatchOutcome {
    std::string subgroup_form;
    std::vector<CheckedStep> requirements;
    bool ok = false;
};

inline DispatchOutcome relpa_dispatch(OverlapConfig config,
                                      const ProjectionParams& params, long k) {
    if (k < 1) throw std::invalid_argument("power must be >= 1");
    DispatchOutcome outcome;
    Rational ck = params.c * Rational(k);
    ck.canonicalize();
    auto require = [&](std::string name, Rational lhs, Rational rhs) {
        bool holds = lhs > rhs;
        outcome.requirements.push_back({name, std::move(lhs), std::move(rhs), holds});
    };

    switch (config) {
        case OverlapConfig::overlapping_components:
        case OverlapConfig::nested_components:
            outcome.subgroup_form = "<a^k, b^k>";
            // k > p1 = (d_in + d_out)/c, so strictly c k > d_in + d_out
            require("translation: c k > d_in + d_out", ck,
                    Rational(params.d_in + params.d_out));
            break;
        case OverlapConfig::b_pseudo_anosov:
            outcome.subgroup_form = "<a^k, b^k a^k b^-k>";
            // boundary moves more than one step: c k > 1
            require("translation: c k > 1", ck, Rational(1));
            break;
        case OverlapConfig::b_twists_identity_support:
            outcome.subgroup_form = "<a^k, b^k a^k b^-k>";
            // twisting inequality needs k > 2 for positive intersection
            require("twist: k > 2", Rational(k), Rational(2));
            break;
        case OverlapConfig::roles_reversed:
            outcome.subgroup_form = "<b^k, a^k b^k a^-k>";
            require("twist: k > 2", Rational(k), Rational(2));
            break;
    }
    outcome.ok = true;
    for (const auto& r : outcome.requirements) outcome.ok = outcome.ok && r.holds;
    return outcome;
}

}  // namespace mcg
