#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"
#include "mcg/slope.hpp"

namespace mcg {

enum class CertificateKind { twist_pingpong, projective_pingpong, oracle_only };

inline const char* certificate_kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::twist_pingpong: return "twist_pingpong";
        case CertificateKind::projective_pingpong: return "projective_pingpong";
        case CertificateKind::oracle_only: return "oracle_only";
    }
    return "?";
}

// One verified exact comparison inside a certificate or constant chain.
struct CheckedStep {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

// Twist ping-pong: X_a = {i(.,alpha) < i(.,beta)}, X_b symmetric.  The
// universal_steps replay the containment chain that certifies b^k(X_a) in X_b
// for every curve and every nonzero k, not just the sampled ones.
struct TwistPingPongParams {
    Slope alpha, beta;
    Integer power_a, power_b;
    Integer i_alpha_beta;
    std::vector<CheckedStep> universal_steps;
    long sample_box = 0;
    long samples_checked = 0;
};

// Projective-line ping-pong: closed rational-endpoint intervals around the
// attracting/repelling fixed points; a maps the complement of each of its
// intervals strictly into the other one, so every nonzero power shuttles
// X_b into X_a and conversely.
struct RationalInterval {
    Rational lo, hi;  // lo < hi, real interval
};

struct ProjectivePingPongParams {
    std::array<RationalInterval, 2> intervals_a;  // attracting, repelling
    std::array<RationalInterval, 2> intervals_b;
    unsigned long precision_bits = 0;
};

struct OracleOnlyParams {
    long depth = 0;  // no relation of length <= depth; not a proof of freeness
};

// Evidence that two mapping classes generate a rank-2 free group.
// twist_pingpong and projective_pingpong are proofs; oracle_only records
// only a bounded relation search.
struct FreeCertificate {
    CertificateKind kind;
    MappingClass generator_a;
    MappingClass generator_b;
    std::variant<TwistPingPongParams, ProjectivePingPongParams, OracleOnlyParams>
        params;
    std::optional<long> oracle_cross_check_depth;
};

}  // namespace mcg
