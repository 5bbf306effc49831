#include <catch2/catch.hpp>

#include <cmath>
#include <vector>

#include "mcg/free_cert.hpp"
#include "mcg/growth.hpp"
#include "mcg/walk.hpp"

using namespace mcg;

TEST_CASE("theorem constants") {
    auto c1 = uniform_growth_constants(4, 24);
    CHECK(c1.w == 564);
    CHECK(c1.r.str() == "log(3)/564");
    CHECK(c1.r.decimal() == Approx(std::log(3.0) / 564));

    auto c2 = uniform_growth_constants(1, 1);
    CHECK(c2.w == 3);

    auto c3 = uniform_growth_constants(14, 24);
    CHECK(c3.w == 1974);

    CHECK_THROWS_AS(uniform_growth_constants(0, 5), std::invalid_argument);
}

TEST_CASE("pure twist pair pipeline") {
    std::vector<MappingClass> gens = {MappingClass(1, 3, 0, 1),
                                      MappingClass(1, 0, 3, 1)};
    auto result = find_short_independent(gens);
    CHECK(result.index == 1);
    CHECK(result.p_used == 2);  // twist power 3 needs doubling to reach 4
    CHECK(result.dispatch_case == "dehn_twists");
    CHECK(result.u == MappingClass(1, 6, 0, 1));
    CHECK(result.certificate.kind == CertificateKind::twist_pingpong);
    CHECK(result.u_length == 2);
    CHECK(result.v_length == 2);
    CHECK(result.growth_bound.denominator == 2);
    CHECK(result.growth_bound.decimal() == Approx(std::log(3.0) / 2));
}

TEST_CASE("virtually abelian inputs are rejected") {
    std::vector<MappingClass> upper = {MappingClass(1, 1, 0, 1),
                                       MappingClass(1, 2, 0, 1)};
    CHECK_THROWS_WITH(find_short_independent(upper),
                      Catch::Contains("virtually abelian"));

    std::vector<MappingClass> cyclic = {MappingClass(2, 1, 1, 1)};
    CHECK_THROWS_WITH(find_short_independent(cyclic),
                      Catch::Contains("virtually abelian"));

    std::vector<MappingClass> finite = {MappingClass(0, -1, 1, 0)};
    CHECK_THROWS_WITH(find_short_independent(finite),
                      Catch::Contains("virtually abelian"));
}

TEST_CASE("hyperbolic pair pipeline") {
    std::vector<MappingClass> gens = {MappingClass(2, 1, 1, 1),
                                      MappingClass(1, 1, 1, 2)};
    auto result = find_short_independent(gens);
    CHECK(result.dispatch_case == "pseudo_anosov_conjugate");
    CHECK(result.certificate.kind == CertificateKind::projective_pingpong);
    CHECK(result.p_used >= 1);
    CHECK(result.v == result.certificate.generator_b);
    // growth bound at least the uniform constant for the power used
    auto uniform = uniform_growth_constants(result.p_used, result.index);
    CHECK(result.growth_bound.decimal() >= uniform.r.decimal() - 1e-12);
    // the certificate survived the oracle cross-check
    CHECK(result.certificate.oracle_cross_check_depth.has_value());
}

TEST_CASE("standard generators purify and certify") {
    std::vector<MappingClass> gens = {MappingClass(1, 1, 0, 1),
                                      MappingClass(1, 0, 1, 1)};
    auto result = find_short_independent(gens);
    CHECK(result.index == 24);
    CHECK(result.u_length <= 3 * result.p_used * 47);
    CHECK(result.v_length <= 3 * result.p_used * 47);
    auto uniform = uniform_growth_constants(result.p_used, result.index);
    CHECK(result.growth_bound.decimal() >= uniform.r.decimal() - 1e-12);
}

TEST_CASE("empirical growth respects the certified lower bound") {
    std::vector<std::vector<MappingClass>> inputs = {
        {MappingClass(1, 3, 0, 1), MappingClass(1, 0, 3, 1)},
        {MappingClass(1, 1, 0, 1), MappingClass(1, 0, 1, 1)},
    };
    for (const auto& gens : inputs) {
        auto result = find_short_independent(gens);
        auto table = ball_sizes(gens, 12);
        auto estimate = growth_estimate(table, 3);
        CHECK(estimate.extrapolated >= result.growth_bound.decimal() - 0.05);
    }
}

TEST_CASE("certified pair walks like the free-group radial chain") {
    std::vector<MappingClass> gens = {MappingClass(1, 3, 0, 1),
                                      MappingClass(1, 0, 3, 1)};
    auto result = find_short_independent(gens);
    std::vector<MappingClass> symmetric = {result.u, result.u.inverse(),
                                           result.v, result.v.inverse()};
    auto dp = return_probs(symmetric, 8);
    auto radial = free_radial_return_probs(2, 8);
    REQUIRE(dp.probs.size() == radial.probs.size());
    for (std::size_t n = 0; n < dp.probs.size(); ++n)
        CHECK(dp.probs[n] == radial.probs[n]);
}

TEST_CASE("growth bound dominates the uniform bound across inputs") {
    std::vector<std::vector<MappingClass>> inputs = {
        {MappingClass(1, 3, 0, 1), MappingClass(1, 0, 3, 1)},
        {MappingClass(1, 1, 0, 1), MappingClass(1, 0, 1, 1)},
        {MappingClass(2, 1, 1, 1), MappingClass(1, 1, 1, 2)},
        {MappingClass(1, 2, 0, 1), MappingClass(1, 0, 2, 1)},
        {MappingClass(2, 1, 1, 1), MappingClass(1, 3, 0, 1)},
    };
    for (const auto& gens : inputs) {
        auto result = find_short_independent(gens);
        auto uniform = uniform_growth_constants(result.p_used, result.index);
        long d = std::max(result.u_length, result.v_length);
        CHECK(result.growth_bound.denominator == d);
        CHECK(result.growth_bound.decimal() >= uniform.r.decimal() - 1e-12);
        // soundness: no oracle relation against any certificate
        CHECK_FALSE(relation_oracle(result.u, result.v, 8).has_value());
    }
}
