#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "mcg/certificates.hpp"
#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"
#include "mcg/slope.hpp"

namespace mcg {

struct TwistFactor {
    Slope axis;
    Integer power;
};

// A composition of Dehn twists about disjoint curves.  Distinct slopes on
// the torus always intersect, so a valid multicurve here is a single slope
// and same-axis factors collapse to one total power.  The factor list is
// kept so the intersection inequality below is computed as a sum over
// factors, exactly as stated for the general multi-axis form.
class TwistWord {
   public:
    TwistWord(Slope axis, Integer power) : factors_{{std::move(axis), std::move(power)}} {
        if (factors_[0].power == 0)
            throw HypothesisError("twist word with zero total power");
    }

    explicit TwistWord(std::span<const TwistFactor> factors) {
        if (factors.empty()) throw HypothesisError("empty twist word");
        Slope axis = factors.front().axis;
        Integer total = 0;
        for (const auto& f : factors) {
            if (f.axis != axis)
                throw HypothesisError(
                    "twist factors about distinct torus slopes are never "
                    "disjoint: " +
                    axis.str() + " vs " + f.axis.str());
            total += f.power;
        }
        if (total == 0) throw HypothesisError("twist word with zero total power");
        factors_ = {{std::move(axis), std::move(total)}};
    }

    const Slope& axis() const { return factors_[0].axis; }
    const Integer& power() const { return factors_[0].power; }
    const std::vector<TwistFactor>& factors() const { return factors_; }

    MappingClass matrix() const { return twist_matrix(axis(), power()); }

    // k-th power of the whole word
    TwistWord pow(const Integer& k) const { return TwistWord(axis(), power() * k); }

   private:
    std::vector<TwistFactor> factors_;
};

struct TwistInequalityReport {
    Integer lhs;
    Integer rhs;
    bool holds = false;
};

// i(T(delta), delta') >= sum_j (|e_j| - 2) i(delta, g_j) i(delta', g_j) - i(delta, delta')
// The left side is computed through the twist matrix, the right side from
// the formula; `holds` is a theorem, so a false value is an implementation bug.
// With same_sign_sharp the -2 is omitted (valid when all powers share a sign).
inline TwistInequalityReport twist_inequality_check(const TwistWord& word,
                                                    const Slope& delta,
                                                    const Slope& delta_prime,
                                                    bool same_sign_sharp = false) {
    TwistInequalityReport report;
    report.lhs = intersection(word.matrix().apply(delta), delta_prime);
    Integer sum = 0;
    for (const auto& f : word.factors()) {
        Integer mag = f.power < 0 ? -f.power : f.power;
        Integer weight = same_sign_sharp ? mag : mag - 2;
        sum += weight * intersection(delta, f.axis) * intersection(delta_prime, f.axis);
    }
    report.rhs = sum - intersection(delta, delta_prime);
    report.holds = report.lhs >= report.rhs;
    return report;
}

// Ping-pong sets for a pair of twist axes:
//   X_a = {gamma : i(gamma, alpha) < i(gamma, beta)}
//   X_b = {gamma : i(gamma, beta) < i(gamma, alpha)}
struct PingPongSets {
    Slope alpha, beta;
};

enum class PingPongSide { in_Xa, in_Xb, neither };

inline const char* side_name(PingPongSide s) {
    switch (s) {
        case PingPongSide::in_Xa: return "in_Xa";
        case PingPongSide::in_Xb: return "in_Xb";
        case PingPongSide::neither: return "neither";
    }
    return "?";
}

inline PingPongSide pingpong_membership(const PingPongSets& sets,
                                        const Slope& gamma) {
    if (intersection(sets.alpha, sets.beta) == 0)
        throw HypothesisError("ping-pong sets need intersecting axes");
    Integer ia = intersection(gamma, sets.alpha);
    Integer ib = intersection(gamma, sets.beta);
    if (ia < ib) return PingPongSide::in_Xa;
    if (ib < ia) return PingPongSide::in_Xb;
    return PingPongSide::neither;
}

// A sampled curve that escaped its target set (cannot occur; kept so the
// checker reports instead of asserting).
struct TwistCounterexample {
    Slope gamma;
    long k = 0;
    bool under_a = false;
};

using TwistPingPongResult = std::variant<FreeCertificate, TwistCounterexample>;

// Certify <a, b> free for twist words with |power| >= 4 and intersecting
// axes.  The universal containment is the exact chain
//   i(b^k g, alpha) >= (|k m| - 2) i(g, beta) i(alpha, beta) - i(g, alpha)
//                   >  ((|m| - 2) i(alpha, beta) - 1) i(g, beta)
//                   >= i(g, beta) = i(b^k g, beta),
// which holds for every curve g in X_a and every nonzero k as soon as
// (|m| - 2) i(alpha, beta) >= 2; the sampled curves and powers replay the
// first step through twist_inequality_check as a smoke test.
inline TwistPingPongResult verify_twist_pingpong(const TwistWord& a,
                                                 const TwistWord& b,
                                                 std::span<const Slope> sample,
                                                 std::span<const long> powers) {
    if (a.axis() == b.axis())
        throw HypothesisError("not independent: twist words share the axis " +
                              a.axis().str());
    Integer i_ab = intersection(a.axis(), b.axis());
    auto magnitude = [](const Integer& n) { return n < 0 ? -n : n; };
    if (magnitude(a.power()) < 4 || magnitude(b.power()) < 4)
        throw HypothesisError("hypothesis violated: twist powers must have magnitude >= 4");

    PingPongSets sets{a.axis(), b.axis()};

    TwistPingPongParams params{a.axis(), b.axis(), a.power(), b.power(),
                               i_ab,     {},       0,         0};

    // universal conditions, one per generator
    for (const auto& [name, power] :
         {std::pair{"((|power_b|-2) i(alpha,beta) - 1) >= 1", b.power()},
          std::pair{"((|power_a|-2) i(alpha,beta) - 1) >= 1", a.power()}}) {
        Integer margin = (magnitude(power) - 2) * i_ab - 1;
        CheckedStep step{name, Rational(margin), Rational(1), margin >= 1};
        if (!step.holds)
            throw HypothesisError("hypothesis violated: " + std::string(name));
        params.universal_steps.push_back(std::move(step));
    }

    // sampled smoke test: shuttle each sampled curve with each power and
    // replay the inequality instance
    long checked = 0;
    for (const Slope& gamma : sample) {
        PingPongSide side = pingpong_membership(sets, gamma);
        if (side == PingPongSide::neither) continue;
        for (long k : powers) {
            if (k == 0) continue;
            const TwistWord& mover = (side == PingPongSide::in_Xa) ? b : a;
            PingPongSide target = (side == PingPongSide::in_Xa)
                                      ? PingPongSide::in_Xb
                                      : PingPongSide::in_Xa;
            TwistWord moved = mover.pow(k);
            Slope image = moved.matrix().apply(gamma);
            const Slope& opposite_axis =
                (side == PingPongSide::in_Xa) ? sets.alpha : sets.beta;
            auto instance = twist_inequality_check(moved, gamma, opposite_axis);
            if (!instance.holds || pingpong_membership(sets, image) != target)
                return TwistCounterexample{gamma, k, side == PingPongSide::in_Xb};
            ++checked;
        }
    }
    params.samples_checked = checked;

    FreeCertificate cert{CertificateKind::twist_pingpong, a.matrix(), b.matrix(),
                         std::move(params), std::nullopt};
    return cert;
}

}  // namespace mcg
