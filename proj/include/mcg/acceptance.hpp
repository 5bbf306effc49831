#pragma once

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/constants.hpp"
#include "mcg/farey.hpp"
#include "mcg/free_cert.hpp"
#include "mcg/growth.hpp"
#include "mcg/oracle.hpp"
#include "mcg/rng.hpp"
#include "mcg/twist.hpp"
#include "mcg/walk.hpp"

// The acceptance suite: each criterion pins its tolerances in code and
// reports one pass/fail line.  The same runners back the `mcg reproduce`
// subcommand and the ctest acceptance target.

namespace mcg::acceptance {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double runtime_limit = 0.0;  // 0 = no stated limit
};

namespace detail {

inline std::vector<Slope> slope_box(long box) {
    std::vector<Slope> out;
    out.emplace_back(1, 0);
    for (long q = 1; q <= box; ++q)
        for (long p = -box; p <= box; ++p)
            if (gcd(p, q) == 1) out.emplace_back(p, q);
    return out;
}

inline Slope random_slope(Rng& rng, long box) {
    while (true) {
        long p = rng.range(-box, box), q = rng.range(-box, box);
        if ((p != 0 || q != 0) && gcd(p, q) == 1) return Slope(p, q);
    }
}

// random pure twist power with magnitude >= 4: multiples of 3 in 6..12
inline long random_pure_power(Rng& rng) {
    long magnitude = 3 * rng.range(2, 4);
    return rng.next() % 2 ? magnitude : -magnitude;
}

struct TwistPair {
    TwistWord a, b;
};

inline std::vector<TwistPair> random_pure_twist_pairs(int count, Rng& rng) {
    std::vector<TwistPair> pairs;
    while (static_cast<int>(pairs.size()) < count) {
        Slope alpha = random_slope(rng, 10);
        Slope beta = random_slope(rng, 10);
        if (alpha == beta) continue;  // equal axes commute
        pairs.push_back(
            {TwistWord(alpha, random_pure_power(rng)), TwistWord(beta, random_pure_power(rng))});
    }
    return pairs;
}

template <typename Fn>
CriterionResult timed(int number, std::string title, double runtime_limit,
                      Fn&& body) {
    CriterionResult result;
    result.number = number;
    result.title = std::move(title);
    result.runtime_limit = runtime_limit;
    auto start = std::chrono::steady_clock::now();
    try {
        body(result);
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail += std::string(" exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (runtime_limit > 0 && result.seconds > runtime_limit) {
        result.passed = false;
        result.detail += " [runtime limit " + std::to_string(runtime_limit) +
                         " s exceeded]";
    }
    return result;
}

inline std::string fmt(double v, int digits = 6) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << v;
    return out.str();
}

}  // namespace detail

// 1. Twist inequality fuzz: 10^4 instances, powers up to 20 in magnitude,
// slope entries up to 100, zero violations, under 10 s.
inline CriterionResult criterion1() {
    return detail::timed(1, "twist intersection inequality (fuzzed)", 10.0, [](CriterionResult& r) {
        Rng rng(0xC1);
        long violations = 0;
        long checked = 0;
        while (checked < 10000) {
            long e = rng.range(-20, 20);
            if (e == 0) continue;
            TwistWord word(detail::random_slope(rng, 100), e);
            auto report = twist_inequality_check(
                word, detail::random_slope(rng, 100), detail::random_slope(rng, 100));
            if (!report.holds) ++violations;
            ++checked;
        }
        r.passed = violations == 0;
        r.detail = std::to_string(checked) + " instances, " +
                   std::to_string(violations) + " violations";
    });
}

// 2. Twist ping-pong: 100 random noncommuting pure twist pairs with powers
// of magnitude >= 4, all certified; 20 of them oracle-checked to depth 12.
inline CriterionResult criterion2() {
    return detail::timed(2, "twist ping-pong certificates", 120.0, [](CriterionResult& r) {
        Rng rng(0xC2);
        auto pairs = detail::random_pure_twist_pairs(100, rng);
        auto sample = detail::slope_box(5);
        std::vector<long> powers = {-3, -2, -1, 1, 2, 3};
        int certified = 0;
        int oracle_clean = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto verdict =
                verify_twist_pingpong(pairs[i].a, pairs[i].b, sample, powers);
            if (!std::holds_alternative<FreeCertificate>(verdict)) continue;
            ++certified;
            if (i < 20) {
                const auto& cert = std::get<FreeCertificate>(verdict);
                if (!relation_oracle(cert.generator_a, cert.generator_b, 12))
                    ++oracle_clean;
            }
        }
        r.passed = certified == 100 && oracle_clean == 20;
        r.detail = std::to_string(certified) + "/100 certified, " +
                   std::to_string(oracle_clean) + "/20 relation-free to depth 12";
    });
}

// 3. Behrstock / constants chain, all exact.
inline CriterionResult criterion3() {
    return detail::timed(3, "Behrstock and constant chain", 5.0, [](CriterionResult& r) {
        bool ok = true;
        long first = 0;
        for (long d = 2; d <= 20 && first == 0; ++d)
            if (behrstock_threshold_check(d).implies_d_out_4) first = d;
        ok = ok && first == 10;
        ok = ok && intersection_lower_bound(10) == 16;
        ok = ok && arc_crossing_lower_bound(16) == Rational(7, 2);
        std::vector<Rational> ones = {Rational(1)};
        ok = ok && p1_constant(ones) == 14;
        ProjectionParams params{Rational(1)};
        ok = ok && chain_verify(params, 14, 1).accepted;
        ok = ok && !chain_verify(params, 13, 1).accepted;
        r.passed = ok;
        r.detail = "first acceptance at d_in = " + std::to_string(first) +
                   ", intersection bound 16 at distance 10, arc bound 7/2, p1({1}) = 14, "
                   "chain accepts p = 14 and rejects p = 13";
    });
}

// 4. Kesten radius via the radial chain: 500 even-step return
// probabilities (raw steps to 1000), best bound within 1% of sqrt(3)/2,
// p^(2) and p^(4) exact.  The value at raw step 500 is reported alongside.
inline CriterionResult criterion4() {
    return detail::timed(4, "Kesten spectral radius on the free group", 60.0, [](CriterionResult& r) {
        auto table = free_radial_return_probs(2, 1000);
        bool exact_ok = table.probs[2] == Rational(1, 4) &&
                        table.probs[4] == Rational(7, 64);
        auto estimate = rho_estimate(table);
        double reference = std::sqrt(3.0) / 2.0;
        double gap = (reference - estimate.best) / reference;
        double at_500 = 0.0;
        for (const auto& [step, bound] : estimate.lower_bounds)
            if (step == 500) at_500 = bound;
        r.passed = exact_ok && gap < 0.01 && estimate.best <= reference + 1e-9;
        r.detail = "p(2) = 1/4 and p(4) = 7/64 " +
                   std::string(exact_ok ? "exact" : "WRONG") +
                   "; best bound " + detail::fmt(estimate.best) + " at step " +
                   std::to_string(estimate.best_step) + " (gap " +
                   detail::fmt(100 * gap, 3) + "% of " + detail::fmt(reference) +
                   "); raw step 500 gives " + detail::fmt(at_500) +
                   " (500 even entries need steps to 1000)";
    });
}

// 5. Corollary bound: certified-pair walks never beat f(4, w) with
// w = 3 * 4 * (2 * 24 - 1) = 564, and f is monotone on a grid.
inline CriterionResult criterion5() {
    return detail::timed(5, "return-probability corollary bound", 5.0, [](CriterionResult& r) {
        Rng rng(0xC2);  // same stream as criterion 2: same pairs
        auto pairs = detail::random_pure_twist_pairs(100, rng);
        auto constants = uniform_growth_constants(4, 24);
        bool ok = constants.w == 564;
        auto bound = return_probability_bound(4, constants.w);
        for (int i = 0; i < 6; ++i) {
            MappingClass u = pairs[i].a.matrix();
            MappingClass v = pairs[i].b.matrix();
            std::vector<MappingClass> symmetric = {u, u.inverse(), v, v.inverse()};
            auto walk = return_probs(symmetric, 8);
            auto estimate = rho_estimate(walk);
            // exact comparison of the empirical bound against f(4, 564)
            for (const auto& [step, lb] : estimate.lower_bounds)
                ok = ok && Rational(lb) < Rational(1) &&
                     bound.exact > Rational(lb);
        }
        bool monotone = true;
        for (long k = 2; k <= 5; ++k)
            for (long w : {2L, 3L, 10L, 50L}) {
                monotone = monotone &&
                           return_probability_bound(k + 1, w).exact > return_probability_bound(k, w).exact &&
                           return_probability_bound(k, w + 1).exact > return_probability_bound(k, w).exact;
            }
        r.passed = ok && monotone;
        r.detail = std::string("w = 564, f(4, 564) = 1 - 10^") +
                   detail::fmt(bound.log10_gap, 1) +
                   "; 6 certified-pair walks stay below it; monotone on the grid";
    });
}

// 6. Growth: certified-free pair counts 2*3^k - 1 through radius 12,
// window estimate within 0.02 of log 3, cyclic table 2k + 1.
inline CriterionResult criterion6() {
    return detail::timed(6, "exact ball growth", 60.0, [](CriterionResult& r) {
        std::vector<MappingClass> gens = {MappingClass(1, 3, 0, 1),
                                          MappingClass(1, 0, 3, 1)};
        auto pipeline = find_short_independent(gens);
        std::vector<MappingClass> pair = {pipeline.u, pipeline.v};
        auto table = ball_sizes(pair, 12);
        bool counts_ok = !table.truncated;
        for (long k = 0; k <= 12 && counts_ok; ++k)
            counts_ok = table.sizes[k] == 2 * pow_ui(3, k) - 1;
        auto estimate = growth_estimate(table, 3);
        double gap = std::abs(estimate.extrapolated - std::log(3.0));
        bool estimate_ok = gap < 0.02;

        std::vector<MappingClass> cyclic = {MappingClass(1, 1, 0, 1)};
        auto cyclic_table = ball_sizes(cyclic, 30);
        bool cyclic_ok = true;
        for (long k = 0; k <= 30; ++k)
            cyclic_ok = cyclic_ok && cyclic_table.sizes[k] == 2 * k + 1;

        r.passed = counts_ok && estimate_ok && cyclic_ok;
        r.detail = std::string("free-pair counts 2*3^k-1 ") +
                   (counts_ok ? "exact to radius 12" : "WRONG") +
                   ", estimate " + detail::fmt(estimate.extrapolated) +
                   " vs log 3 = " + detail::fmt(std::log(3.0)) + " (|gap| " +
                   detail::fmt(gap) + "), cyclic table " +
                   (cyclic_ok ? "= 2k+1" : "WRONG");
    });
}

// 7. The short-independent-words pipeline end to end.
inline CriterionResult criterion7() {
    return detail::timed(7, "purification pipeline", 300.0, [](CriterionResult& r) {
        std::vector<MappingClass> standard = {MappingClass(1, 1, 0, 1),
                                              MappingClass(1, 0, 1, 1)};
        auto purified = purify(standard);
        bool purify_ok = purified.index == 24;
        for (const auto& s : purified.schreier)
            purify_ok = purify_ok && s.a_length <= 47 && is_pure(s.element);

        const MappingClass R(1, 1, 0, 1), L(1, 0, 1, 1), S(0, -1, 1, 0);
        std::vector<std::vector<MappingClass>> sampled = {
            {R, L},
            {R.pow(3), L.pow(3)},
            {R * L, L * R},
            {MappingClass(1, 3, 0, 1), MappingClass(1, 0, 3, 1)},
            {R, S},
            {R.pow(2), L.pow(3)},
            {MappingClass(2, 1, 1, 1), MappingClass(1, 3, 0, 1)},
            {R, L, S},
            {MappingClass(1, 6, 0, 1), MappingClass(1, 0, 6, 1)},
            {MappingClass(5, 2, 2, 1), MappingClass(1, 2, 2, 5)},
        };
        int certified = 0;
        bool bounds_ok = true;
        for (const auto& gens : sampled) {
            auto result = find_short_independent(gens);
            ++certified;
            auto uniform = uniform_growth_constants(result.p_used, result.index);
            bounds_ok = bounds_ok &&
                        result.growth_bound.decimal() >= uniform.r.decimal() - 1e-12;
        }

        std::vector<std::vector<MappingClass>> abelian = {
            {R},
            {MappingClass(1, 1, 0, 1), MappingClass(1, 2, 0, 1)},
            {S},
            {MappingClass(2, 1, 1, 1)},
        };
        int rejected = 0;
        for (const auto& gens : abelian) {
            try {
                find_short_independent(gens);
            } catch (const HypothesisError& e) {
                if (std::string(e.what()).find("virtually abelian") !=
                    std::string::npos)
                    ++rejected;
            }
        }

        r.passed = purify_ok && certified == 10 && bounds_ok && rejected == 4;
        r.detail = "index 24 with Schreier lengths <= 47; " +
                   std::to_string(certified) +
                   "/10 generating sets certified with growth_bound >= r; " +
                   std::to_string(rejected) + "/4 virtually abelian inputs rejected";
    });
}

// 8. Scope attestation: uniform constants for general surfaces and the
// slow-growing sequence are existence results, replaced here by the
// property suites (twist fuzz, oracle-equivalence, chain verification).
inline CriterionResult criterion8() {
    return detail::timed(8, "desk-scale scope attestation", 0.0, [](CriterionResult& r) {
        // p0 has no published value: the pipeline must expose the ascending
        // search cap instead of a constant
        bool search_capped = false;
        try {
            std::vector<MappingClass> gens = {MappingClass(2, 1, 1, 1),
                                              MappingClass(1, 1, 1, 2)};
            IndependenceConfig config;
            config.max_power = 0;  // force exhaustion
            find_short_independent(gens, config);
        } catch (const SearchExhausted&) {
            search_capped = true;
        }
        // c(S) is tabulated empirically, never assumed
        auto q = translation_estimate(MappingClass(2, 1, 1, 1), Slope(1, 0), 4);
        bool tabulated = q > 0;
        r.passed = search_capped && tabulated;
        r.detail =
            "general-surface constants are not computed: power search is "
            "capped and explicit, translation constants only tabulated "
            "(sample estimate " + str(q) + ")";
    });
}

inline std::vector<CriterionResult> run_all() {
    return {criterion1(), criterion2(), criterion3(), criterion4(),
            criterion5(), criterion6(), criterion7(), criterion8()};
}

}  // namespace mcg::acceptance
