#include <catch2/catch.hpp>

#include <cmath>
#include <vector>

#include "mcg/growth.hpp"

using namespace mcg;

namespace {

// independent oracle: multiply out every word of length <= n and count
// distinct products
std::vector<Integer> ball_by_word_products(const std::vector<MappingClass>& gens,
                                           long n) {
    std::vector<MappingClass> seen = {MappingClass::identity()};
    std::vector<MappingClass> frontier = seen;
    std::vector<Integer> sizes = {1};
    for (long k = 1; k <= n; ++k) {
        std::vector<MappingClass> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                MappingClass candidate = w * g;
                bool fresh = true;
                for (const auto& s : seen)
                    if (s == candidate) {
                        fresh = false;
                        break;
                    }
                for (const auto& s : next)
                    if (s == candidate) {
                        fresh = false;
                        break;
                    }
                if (fresh) next.push_back(candidate);
            }
        for (const auto& m : next) seen.push_back(m);
        sizes.push_back(Integer(static_cast<unsigned long>(seen.size())));
        frontier = std::move(next);
    }
    return sizes;
}

}  // namespace

TEST_CASE("free pair ball sizes follow 2*3^k - 1") {
    std::vector<MappingClass> gens = {MappingClass(1, 2, 0, 1),
                                      MappingClass(1, 0, 2, 1)};
    auto table = ball_sizes(gens, 7);
    REQUIRE(table.sizes.size() == 8);
    CHECK_FALSE(table.truncated);
    for (long k = 0; k <= 7; ++k)
        CHECK(table.sizes[k] == 2 * pow_ui(3, k) - 1);
}

TEST_CASE("cyclic generator ball sizes are 2k + 1") {
    std::vector<MappingClass> gens = {MappingClass(1, 1, 0, 1)};
    auto table = ball_sizes(gens, 5);
    REQUIRE(table.sizes.size() == 6);
    for (long k = 0; k <= 5; ++k) CHECK(table.sizes[k] == 2 * k + 1);
}

TEST_CASE("finite group balls saturate") {
    std::vector<MappingClass> gens = {MappingClass(0, -1, 1, 0)};  // order 4
    auto table = ball_sizes(gens, 6);
    CHECK(table.sizes[0] == 1);
    CHECK(table.sizes[1] == 3);   // I, S, S^-1
    CHECK(table.sizes[2] == 4);   // plus S^2 = -I
    CHECK(table.sizes[6] == 4);
    CHECK_FALSE(table.truncated);
}

TEST_CASE("ball sizes match the word-product oracle") {
    // S and R generate the whole group; the test pins the verified values
    std::vector<MappingClass> gens = {MappingClass(0, -1, 1, 0),
                                      MappingClass(1, 1, 0, 1)};
    auto table = ball_sizes(gens, 6);
    auto oracle = ball_by_word_products(table.generators, 6);
    REQUIRE(table.sizes.size() == oracle.size());
    for (std::size_t k = 0; k < oracle.size(); ++k)
        CHECK(table.sizes[k] == oracle[k]);
    // frozen from the cross-validated enumeration
    const long expected[] = {1, 5, 16, 36, 68, 120, 204};
    for (std::size_t k = 0; k < 7; ++k) CHECK(table.sizes[k] == expected[k]);
}

TEST_CASE("ball sizes are independent of generator order and closure") {
    std::vector<MappingClass> a = {MappingClass(1, 2, 0, 1),
                                   MappingClass(1, 0, 2, 1)};
    std::vector<MappingClass> b = {MappingClass(1, 0, 2, 1),
                                   MappingClass(1, 0, -2, 1),
                                   MappingClass(1, 2, 0, 1),
                                   MappingClass(1, -2, 0, 1)};
    auto ta = ball_sizes(a, 5);
    auto tb = ball_sizes(b, 5);
    REQUIRE(ta.sizes.size() == tb.sizes.size());
    for (std::size_t k = 0; k < ta.sizes.size(); ++k)
        CHECK(ta.sizes[k] == tb.sizes[k]);
}

TEST_CASE("monotonicity and branching bound") {
    std::vector<MappingClass> gens = {MappingClass(0, -1, 1, 0),
                                      MappingClass(1, 1, 0, 1)};
    auto table = ball_sizes(gens, 6);
    Integer branching = static_cast<long>(table.generators.size()) + 1;
    for (std::size_t k = 1; k < table.sizes.size(); ++k) {
        CHECK(table.sizes[k] >= table.sizes[k - 1]);
        CHECK(table.sizes[k] <= table.sizes[k - 1] * branching);
    }
}

TEST_CASE("element cap truncates explicitly") {
    std::vector<MappingClass> gens = {MappingClass(1, 2, 0, 1),
                                      MappingClass(1, 0, 2, 1)};
    auto table = ball_sizes(gens, 10, /*element_cap=*/100);
    CHECK(table.truncated);
    CHECK(table.radius_computed < 10);
    CHECK(table.sizes.size() ==
          static_cast<std::size_t>(table.radius_computed) + 1);
}

TEST_CASE("growth estimate on the free table") {
    std::vector<MappingClass> gens = {MappingClass(1, 2, 0, 1),
                                      MappingClass(1, 0, 2, 1)};
    auto table = ball_sizes(gens, 12);
    auto estimate = growth_estimate(table, 3);
    CHECK(estimate.extrapolated == Approx(std::log(3.0)).margin(0.02));
    CHECK(estimate.rates[12] ==
          Approx(std::log(mpz_get_d(table.sizes[12].get_mpz_t())) / 12.0));
    CHECK_THROWS_AS(growth_estimate(table, 20), std::invalid_argument);
}

TEST_CASE("growth estimate on the cyclic table") {
    std::vector<MappingClass> gens = {MappingClass(1, 1, 0, 1)};
    auto table = ball_sizes(gens, 30);
    auto estimate = growth_estimate(table, 3);
    CHECK(std::abs(estimate.extrapolated) < 0.2);
}

TEST_CASE("projectively certified pairs count like free groups") {
    // hyperbolic pair with a projective-interval certificate: the ball
    // counts must show no coincidences at all
    MappingClass a(2, 1, 1, 1);
    MappingClass g(1, 3, 0, 1);
    MappingClass b = g * a * g.inverse();
    std::vector<MappingClass> pair = {a.pow(3), b.pow(3)};
    auto table = ball_sizes(pair, 6);
    for (long k = 0; k <= 6; ++k)
        CHECK(table.sizes[k] == 2 * pow_ui(3, k) - 1);
}
