#include <catch2/catch.hpp>

#include "mcg/rng.hpp"
#include "mcg/slope.hpp"

using namespace mcg;

TEST_CASE("slope canonical form") {
    CHECK(Slope(3, -2) == Slope(-3, 2));
    CHECK(Slope(3, -2).p() == -3);
    CHECK(Slope(3, -2).q() == 2);
    CHECK(Slope(1, 0).p() == 1);
    CHECK(Slope(-1, 0) == Slope(1, 0));
    CHECK_THROWS_AS(Slope(2, 4), HypothesisError);
    CHECK_THROWS_AS(Slope(0, 0), HypothesisError);
    CHECK_THROWS_AS(Slope(10, 5), HypothesisError);
}

TEST_CASE("slope parsing") {
    CHECK(Slope::parse("5/2") == Slope(5, 2));
    CHECK(Slope::parse("-3/2") == Slope(-3, 2));
    CHECK(Slope::parse("1/0") == Slope(1, 0));
    CHECK(Slope::parse("4") == Slope(4, 1));
    CHECK_THROWS_AS(Slope::parse("x/2"), ParseError);
    CHECK_THROWS_AS(Slope::parse(""), ParseError);
}

TEST_CASE("intersection numbers") {
    CHECK(intersection(Slope(1, 0), Slope(0, 1)) == 1);
    CHECK(intersection(Slope(1, 0), Slope(1, 0)) == 0);
    CHECK(intersection(Slope(2, 3), Slope(1, 1)) == 1);
    CHECK(intersection(Slope(5, 2), Slope(0, 1)) == 5);
}

TEST_CASE("intersection is symmetric and vanishes only on equal slopes") {
    Rng rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        long p1 = rng.range(-20, 20), q1 = rng.range(-20, 20);
        long p2 = rng.range(-20, 20), q2 = rng.range(-20, 20);
        Integer g1 = gcd(p1, q1), g2 = gcd(p2, q2);
        if (g1 != 1 && g1 != -1) continue;
        if (g2 != 1 && g2 != -1) continue;
        Slope a(p1, q1), b(p2, q2);
        CHECK(intersection(a, b) == intersection(b, a));
        CHECK((intersection(a, b) == 0) == (a == b));
    }
}
