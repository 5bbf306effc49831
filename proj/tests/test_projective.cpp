#include <catch2/catch.hpp>

#include "mcg/oracle.hpp"
#include "mcg/projective.hpp"
#include "mcg/rng.hpp"

using namespace mcg;

TEST_CASE("cyclic orientation basics") {
    ProjPoint zero{0, 1}, one{1, 1}, two{2, 1}, inf = ProjPoint::infinity();
    CHECK(cyclic_orientation(zero, one, two) == 1);
    CHECK(cyclic_orientation(two, one, zero) == -1);
    CHECK(cyclic_orientation(zero, zero, one) == 0);
    // interval (0, 2) holds 1 but not infinity or -1
    Arc arc{zero, two};
    CHECK(arc_contains(arc, one));
    CHECK_FALSE(arc_contains(arc, inf));
    CHECK_FALSE(arc_contains(arc, ProjPoint{-1, 1}));
    // the complement arc wraps through infinity
    Arc comp{two, zero};
    CHECK(arc_contains(comp, inf));
    CHECK(arc_contains(comp, ProjPoint{-1, 1}));
    CHECK_FALSE(arc_contains(comp, one));
}

TEST_CASE("orientation predicates are projective-action invariant") {
    Rng rng(31);
    MappingClass R(1, 1, 0, 1), L(1, 0, 1, 1);
    for (int trial = 0; trial < 200; ++trial) {
        MappingClass g = R.pow(rng.range(-4, 4)) * L.pow(rng.range(-4, 4)) *
                         R.pow(rng.range(-4, 4));
        auto coord = [&rng] { return static_cast<long>(rng.range(-9, 9)); };
        ProjPoint u{coord(), coord()};
        ProjPoint v{coord(), coord()};
        ProjPoint w{coord(), coord()};
        if ((u.x == 0 && u.y == 0) || (v.x == 0 && v.y == 0) ||
            (w.x == 0 && w.y == 0))
            continue;
        CHECK(cyclic_orientation(mobius(g, u), mobius(g, v), mobius(g, w)) ==
              cyclic_orientation(u, v, w));
    }
}

TEST_CASE("hyperbolic fixed points") {
    MappingClass m(2, 1, 1, 1);
    auto axis = hyperbolic_fixed_points(m);
    // x^2 - x - 1 = 0: attracting (1+sqrt5)/2, repelling (1-sqrt5)/2
    CHECK(axis.attracting == QuadraticIrrational(1, 1, 2, 5));
    CHECK(axis.repelling == QuadraticIrrational(1, -1, 2, 5));
    // fixed points of the inverse swap roles
    auto inv = hyperbolic_fixed_points(m.inverse());
    CHECK(inv.attracting == axis.repelling);
    CHECK(inv.repelling == axis.attracting);
    // -M acts identically, so the axis is unchanged
    auto neg = hyperbolic_fixed_points(m.negated());
    CHECK(neg.attracting == axis.attracting);
    CHECK(neg.repelling == axis.repelling);
    CHECK_THROWS_AS(hyperbolic_fixed_points(MappingClass(1, 1, 0, 1)),
                    HypothesisError);
}

TEST_CASE("fixed points satisfy the fixed-point equation") {
    Rng rng(32);
    MappingClass R(1, 1, 0, 1), L(1, 0, 1, 1);
    int seen = 0;
    for (int trial = 0; trial < 100 && seen < 30; ++trial) {
        MappingClass m = R.pow(rng.range(1, 4)) * L.pow(rng.range(1, 4)) *
                         R.pow(rng.range(-3, 0));
        if (classify(m).kind != MappingKind::pseudo_anosov) continue;
        ++seen;
        auto axis = hyperbolic_fixed_points(m);
        for (const auto& x : {axis.attracting, axis.repelling}) {
            // c x^2 + (d - a) x - b = 0
            auto cx2 = QuadraticIrrational::rational(m.c(), 1) * x * x;
            auto dax = QuadraticIrrational::rational(m.d() - m.a(), 1) * x;
            auto minus_b = QuadraticIrrational::rational(-m.b(), 1);
            CHECK(cx2 + dax + minus_b == QuadraticIrrational::rational(0, 1));
        }
    }
    CHECK(seen >= 20);
}

TEST_CASE("projective ping-pong certifies a Schottky-style pair") {
    MappingClass a(2, 1, 1, 1);
    MappingClass g(1, 3, 0, 1);
    MappingClass b = g * a * g.inverse();
    auto cert = projective_pingpong_cert(a.pow(3), b.pow(3));
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::projective_pingpong);
    // certified pairs carry no oracle relation
    CHECK_FALSE(relation_oracle(cert->generator_a, cert->generator_b, 10)
                    .has_value());
    const auto& params = std::get<ProjectivePingPongParams>(cert->params);
    CHECK(params.intervals_a[0].lo < params.intervals_a[0].hi);
    CHECK(params.precision_bits >= 8);
}

TEST_CASE("projective ping-pong fails on identical axes") {
    MappingClass m(2, 1, 1, 1);
    CHECK_FALSE(projective_pingpong_cert(m, m.inverse()).has_value());
    CHECK_FALSE(projective_pingpong_cert(m, m.pow(3)).has_value());
}

TEST_CASE("projective ping-pong rejects non-hyperbolic input") {
    CHECK_THROWS_AS(
        projective_pingpong_cert(MappingClass(1, 1, 0, 1), MappingClass(2, 1, 1, 1)),
        HypothesisError);
}

TEST_CASE("random hyperbolic pairs certify under the power ladder") {
    Rng rng(33);
    MappingClass R(1, 1, 0, 1), L(1, 0, 1, 1);
    int attempted = 0, certified = 0;
    while (attempted < 20) {
        MappingClass a = R.pow(rng.range(1, 3)) * L.pow(rng.range(1, 3)) *
                         R.pow(rng.range(-2, 0));
        MappingClass b = L.pow(rng.range(1, 3)) * R.pow(rng.range(-3, -1));
        if (classify(a).kind != MappingKind::pseudo_anosov) continue;
        if (classify(b).kind != MappingKind::pseudo_anosov) continue;
        if (commute(a, b)) continue;
        ++attempted;
        for (long p = 1; p <= 8; ++p) {
            auto cert = projective_pingpong_cert(a.pow(p), b.pow(p));
            if (!cert) continue;
            ++certified;
            // a certificate is a proof: the oracle must stay silent
            CHECK_FALSE(relation_oracle(cert->generator_a, cert->generator_b, 8)
                            .has_value());
            break;
        }
    }
    // the ladder is expected to certify noncommuting hyperbolic pairs
    CHECK(certified == attempted);
}

TEST_CASE("interleaved fixed points still certify at a power") {
    // a = RL and b = LR have linked axes; interval ping-pong is insensitive
    // to linking once the contraction is strong enough
    MappingClass a(2, 1, 1, 1), b(1, 1, 1, 2);
    bool certified = false;
    for (long p = 1; p <= 6 && !certified; ++p) {
        auto cert = projective_pingpong_cert(a.pow(p), b.pow(p));
        if (cert) {
            certified = true;
            CHECK_FALSE(
                relation_oracle(cert->generator_a, cert->generator_b, 12)
                    .has_value());
        }
    }
    CHECK(certified);
}
