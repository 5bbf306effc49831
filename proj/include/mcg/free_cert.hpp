#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcg/certificates.hpp"
#include "mcg/classify.hpp"
#include "mcg/oracle.hpp"
#include "mcg/projective.hpp"
#include "mcg/purify.hpp"
#include "mcg/twist.hpp"

namespace mcg {

// log(3)/w kept symbolically, with a decimal rendering on the side.
struct LogThreeOver {
    Integer denominator;
    double decimal() const {
        return std::log(3.0) / mpz_get_d(denominator.get_mpz_t());
    }
    std::string str() const { return "log(3)/" + denominator.get_str(); }
};

// w = 3 p (2 index - 1), r = log(3)/w: the uniform short-word length and
// growth-rate constants produced by the purification argument.
struct UniformGrowthConstants {
    Integer w;
    LogThreeOver r;
};

inline UniformGrowthConstants uniform_growth_constants(const Integer& p, const Integer& index) {
    if (p < 1 || index < 1)
        throw std::invalid_argument("theorem constants need p >= 1, index >= 1");
    Integer w = 3 * p * (2 * index - 1);
    return {w, LogThreeOver{w}};
}

struct IndependenceConfig {
    long max_power = 32;      // ascending power ladder cap
    long oracle_depth = 8;    // cross-check depth (0 disables)
    long sample_box = 5;      // twist ping-pong smoke sample
    unsigned long precision_bits = 128;
};

struct IndependenceResult {
    MappingClass u, v;
    long u_length = 0;
    long v_length = 0;
    FreeCertificate certificate;
    LogThreeOver growth_bound;  // log(3)/max(u_length, v_length)
    long p_used = 0;
    long index = 1;
    std::string dispatch_case;  // "dehn_twists" or "pseudo_anosov_conjugate"
};

namespace detail {

inline std::vector<Slope> sample_box_slopes(long box) {
    std::vector<Slope> out;
    out.emplace_back(1, 0);
    for (long q = 1; q <= box; ++q)
        for (long p = -box; p <= box; ++p)
            if (gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

}  // namespace detail

// The short-independent-words pipeline: purify the generating set, pick a
// noncommuting pure pair, and certify a free pair of bounded word length.
//
// Dispatch follows the trichotomy of pure classes.  With a pseudo-Anosov in
// the pair (a say), the candidates are (a^p, b a^p b^-1) for ascending p,
// certified on the projective line; with two Dehn twists, (a^p, b^p) for
// the least p that pushes both twist powers to magnitude >= 4, certified by
// twist ping-pong.  The relative pseudo-Anosov case does not occur on the
// torus: a pure class here is the identity, a twist, or pseudo-Anosov.
//
// Word lengths are accounted through the Schreier expressions, so
// max(u_length, v_length) <= 3 p (2 index - 1) and the per-instance growth
// bound log(3)/max(...) is at least the uniform r = log(3)/w.
inline IndependenceResult find_short_independent(
    std::span<const MappingClass> gens, const IndependenceConfig& config = {}) {
    PurifiedGenerators purified = purify(gens);

    // noncommuting pure pair of least combined Schreier length
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = 0; i < purified.schreier.size(); ++i)
        for (std::size_t j = i + 1; j < purified.schreier.size(); ++j) {
            if (commute(purified.schreier[i].element,
                        purified.schreier[j].element))
                continue;
            if (!best ||
                purified.schreier[i].a_length + purified.schreier[j].a_length <
                    purified.schreier[best->first].a_length +
                        purified.schreier[best->second].a_length)
                best = {i, j};
        }
    if (!best)
        throw HypothesisError(
            "virtually abelian - no free subgroup (all pure pairs commute)");

    SchreierGenerator a = purified.schreier[best->first];
    SchreierGenerator b = purified.schreier[best->second];

    auto kind_of = [](const MappingClass& m) { return classify(m).kind; };
    // pure non-identity classes are twists or pseudo-Anosov; put a
    // pseudo-Anosov first when there is one
    if (kind_of(a.element) != MappingKind::pseudo_anosov &&
        kind_of(b.element) == MappingKind::pseudo_anosov)
        std::swap(a, b);

    IndependenceResult result{
        MappingClass::identity(), MappingClass::identity(), 0, 0,
        FreeCertificate{CertificateKind::oracle_only, MappingClass::identity(),
                        MappingClass::identity(), OracleOnlyParams{0},
                        std::nullopt},
        LogThreeOver{1}, 0, purified.index, ""};

    if (kind_of(a.element) == MappingKind::pseudo_anosov) {
        for (long p = 1; p <= config.max_power; ++p) {
            MappingClass u = a.element.pow(p);
            MappingClass v = b.element * u * b.element.inverse();
            auto cert = projective_pingpong_cert(u, v, config.precision_bits);
            if (!cert) continue;
            if (config.oracle_depth > 0) {
                if (relation_oracle(u, v, config.oracle_depth))
                    throw std::logic_error(
                        "certificate contradicted by the relation oracle");
                cert->oracle_cross_check_depth = config.oracle_depth;
            }
            result.u = u;
            result.v = v;
            result.u_length = p * a.a_length;
            result.v_length = p * a.a_length + 2 * b.a_length;
            result.certificate = std::move(*cert);
            result.p_used = p;
            result.dispatch_case = "pseudo_anosov_conjugate";
            break;
        }
        if (result.p_used == 0)
            throw SearchExhausted(
                "no projective ping-pong certificate up to power " +
                std::to_string(config.max_power) + " for generators " +
                a.element.str() + ", " + b.element.str());
    } else {
        // two noncommuting pure twists
        auto ca = classify(a.element);
        auto cb = classify(b.element);
        auto magnitude = [](const Integer& n) { return n < 0 ? -n : n; };
        long p = 1;
        while (magnitude(ca.power) * p < 4 || magnitude(cb.power) * p < 4) ++p;
        auto slopes = detail::sample_box_slopes(config.sample_box);
        std::vector<long> powers = {-3, -2, -1, 1, 2, 3};
        auto verdict = verify_twist_pingpong(TwistWord(*ca.axis, ca.power * p),
                                             TwistWord(*cb.axis, cb.power * p),
                                             slopes, powers);
        if (!std::holds_alternative<FreeCertificate>(verdict))
            throw std::logic_error("twist ping-pong smoke sample failed");
        FreeCertificate cert = std::get<FreeCertificate>(verdict);
        MappingClass u = a.element.pow(p);
        MappingClass v = b.element.pow(p);
        // pure twists have trace exactly +2, so powers match the certificate
        if (cert.generator_a != u || cert.generator_b != v)
            throw std::logic_error("certificate generators mismatch");
        if (config.oracle_depth > 0) {
            if (relation_oracle(u, v, config.oracle_depth))
                throw std::logic_error(
                    "certificate contradicted by the relation oracle");
            cert.oracle_cross_check_depth = config.oracle_depth;
        }
        result.u = u;
        result.v = v;
        result.u_length = p * a.a_length;
        result.v_length = p * b.a_length;
        result.certificate = std::move(cert);
        result.p_used = p;
        result.dispatch_case = "dehn_twists";
    }

    result.growth_bound =
        LogThreeOver{Integer(std::max(result.u_length, result.v_length))};
    return result;
}

}  // namespace mcg
