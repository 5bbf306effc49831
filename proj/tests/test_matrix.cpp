#include <catch2/catch.hpp>

#include "mcg/matrix.hpp"
#include "mcg/rng.hpp"

using namespace mcg;

namespace {
MappingClass R() { return MappingClass(1, 1, 0, 1); }
MappingClass L() { return MappingClass(1, 0, 1, 1); }
}  // namespace

TEST_CASE("matrix construction validates determinant") {
    CHECK_NOTHROW(MappingClass(2, 1, 1, 1));
    CHECK_THROWS_AS(MappingClass(1, 1, 1, 1), HypothesisError);
    CHECK_THROWS_AS(MappingClass(2, 0, 0, 2), HypothesisError);
}

TEST_CASE("matrix algebra") {
    MappingClass m(2, 1, 1, 1);
    CHECK(m * m.inverse() == MappingClass::identity());
    CHECK(m.pow(4) == MappingClass(34, 21, 21, 13));
    CHECK(m.pow(-1) == m.inverse());
    CHECK(m.pow(0) == MappingClass::identity());
    CHECK(m.trace() == 3);
    CHECK(projectively_equal(m, m.negated()));
    CHECK_FALSE(projectively_equal(m, m.inverse()));
}

TEST_CASE("action on slopes") {
    CHECK(MappingClass::identity().apply(Slope(7, 3)) == Slope(7, 3));
    CHECK(R().apply(Slope(0, 1)) == Slope(1, 1));
    CHECK(MappingClass(2, 1, 1, 1).apply(Slope(1, 0)) == Slope(2, 1));
}

TEST_CASE("action preserves intersection numbers") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        MappingClass m = MappingClass::identity();
        for (int i = 0; i < 6; ++i) {
            long e = rng.range(-3, 3);
            if (e == 0) continue;
            m = m * (rng.next() % 2 ? R().pow(e) : L().pow(e));
        }
        long p1 = rng.range(-15, 15), q1 = rng.range(-15, 15);
        long p2 = rng.range(-15, 15), q2 = rng.range(-15, 15);
        if (gcd(p1, q1) != 1 || gcd(p2, q2) != 1) continue;
        Slope s1(p1, q1), s2(p2, q2);
        CHECK(intersection(m.apply(s1), m.apply(s2)) == intersection(s1, s2));
    }
}

TEST_CASE("matrix parsing both forms") {
    CHECK(MappingClass::parse("[[1,1],[0,1]]") == R());
    CHECK(MappingClass::parse("1 1 0 1") == R());
    CHECK(MappingClass::parse("[[ 2, 1 ],[ 1, 1 ]]") == MappingClass(2, 1, 1, 1));
    CHECK(MappingClass::parse("[[-1,0],[0,-1]]") ==
          MappingClass::identity().negated());
    CHECK_THROWS_AS(MappingClass::parse("[[1,1],[0]]"), ParseError);
    CHECK_THROWS_AS(MappingClass::parse("[[1,x],[0,1]]"), ParseError);
    CHECK_THROWS_AS(MappingClass::parse("[[1,1],[1,1]]"), HypothesisError);
}

TEST_CASE("purity is the mod-3 congruence") {
    CHECK(is_pure(MappingClass::identity()));
    CHECK(is_pure(MappingClass(1, 3, 0, 1)));
    CHECK(is_pure(MappingClass(1, 0, 3, 1)));
    CHECK(is_pure(MappingClass(4, 3, 9, 7)));
    CHECK_FALSE(is_pure(R()));
    CHECK_FALSE(is_pure(MappingClass::identity().negated()));
    CHECK_FALSE(is_pure(MappingClass(1, -2, 0, 1)));
    CHECK(is_pure(MappingClass(1, -3, 0, 1)));
}

TEST_CASE("twist matrices") {
    CHECK(twist_matrix(Slope(1, 0), 4) == MappingClass(1, 4, 0, 1));
    CHECK(twist_matrix(Slope(0, 1), 4) == MappingClass(1, 0, -4, 1));
    CHECK(twist_matrix(Slope(1, 1), 1) == MappingClass(0, 1, -1, 2));
    CHECK_THROWS_AS(twist_matrix(Slope(1, 0), 0), HypothesisError);

    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        long p = rng.range(-8, 8), q = rng.range(-8, 8);
        if (gcd(p, q) != 1) continue;
        Slope axis(p, q);
        long n = rng.range(-6, 6), m = rng.range(-6, 6);
        if (n == 0 || m == 0 || n + m == 0) continue;
        MappingClass tn = twist_matrix(axis, n);
        CHECK(tn.trace() == 2);
        CHECK(tn.apply(axis) == axis);
        CHECK(tn * twist_matrix(axis, m) == twist_matrix(axis, n + m));
        CHECK(is_pure(tn) == (n % 3 == 0));
    }
}

TEST_CASE("matrix with huge entries") {
    MappingClass big = MappingClass(2, 1, 1, 1).pow(200);
    CHECK(big.trace() > pow_ui(10, 80));
    CHECK(big * big.inverse() == MappingClass::identity());
}
