#include <catch2/catch.hpp>

#include "mcg/classify.hpp"
#include "mcg/rng.hpp"

using namespace mcg;

TEST_CASE("trace trichotomy on the stock examples") {
    auto twist = classify(MappingClass(1, 1, 0, 1));
    REQUIRE(twist.kind == MappingKind::dehn_twist);
    CHECK(*twist.axis == Slope(1, 0));
    CHECK(twist.power == 1);

    auto pa = classify(MappingClass(2, 1, 1, 1));
    REQUIRE(pa.kind == MappingKind::pseudo_anosov);
    CHECK(*pa.dilatation == QuadraticIrrational(3, 1, 2, 5));

    CHECK(classify(MappingClass(0, -1, 1, 0)).kind == MappingKind::finite_order);
    CHECK(classify(MappingClass::identity()).kind == MappingKind::identity);
    CHECK(classify(MappingClass::identity().negated()).kind ==
          MappingKind::identity);
}

TEST_CASE("twist classification inverts twist_matrix") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        long p = rng.range(-9, 9), q = rng.range(-9, 9);
        if (gcd(p, q) != 1) continue;
        long n = rng.range(-10, 10);
        if (n == 0) continue;
        Slope axis(p, q);
        for (bool negate : {false, true}) {
            MappingClass m = twist_matrix(axis, n);
            if (negate) m = m.negated();
            auto r = classify(m);
            REQUIRE(r.kind == MappingKind::dehn_twist);
            CHECK(*r.axis == axis);
            CHECK(r.power == n);
            CHECK(m.apply(*r.axis) == *r.axis);
        }
    }
}

TEST_CASE("dilatation satisfies lambda + 1/lambda = |trace|") {
    Rng rng(42);
    int seen = 0;
    for (int trial = 0; trial < 400 && seen < 100; ++trial) {
        MappingClass m = MappingClass::identity();
        for (int i = 0; i < 4; ++i) {
            long e = rng.range(-4, 4);
            if (e == 0) continue;
            m = m * (rng.next() % 2 ? MappingClass(1, 1, 0, 1).pow(e)
                                    : MappingClass(1, 0, 1, 1).pow(e));
        }
        auto r = classify(m);
        if (r.kind != MappingKind::pseudo_anosov) continue;
        ++seen;
        Integer t = m.trace();
        if (t < 0) t = -t;
        auto& lambda = *r.dilatation;
        CHECK(lambda > Rational(1));
        CHECK(lambda + QuadraticIrrational::rational(1, 1) / lambda ==
              QuadraticIrrational::rational(t, 1));
    }
    CHECK(seen >= 50);
}

TEST_CASE("classification is total and exclusive") {
    Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        MappingClass m = MappingClass::identity();
        for (int i = 0; i < 3; ++i) {
            long e = rng.range(-5, 5);
            if (e == 0) continue;
            m = m * (rng.next() % 2 ? MappingClass(1, 1, 0, 1).pow(e)
                                    : MappingClass(0, -1, 1, 0));
        }
        auto r = classify(m);
        Integer t = m.trace();
        if (t < 0) t = -t;
        switch (r.kind) {
            case MappingKind::identity:
                CHECK(m.is_plus_minus_identity());
                break;
            case MappingKind::finite_order:
                CHECK(t < 2);
                break;
            case MappingKind::dehn_twist:
                CHECK(t == 2);
                CHECK_FALSE(m.is_plus_minus_identity());
                break;
            case MappingKind::pseudo_anosov:
                CHECK(t > 2);
                break;
        }
    }
}
