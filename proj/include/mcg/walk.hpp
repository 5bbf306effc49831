#pragma once

#include <cmath>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"
#include "mcg/quadratic.hpp"
#include "mcg/rng.hpp"

namespace mcg {

// Exact n-step return probabilities of the simple random walk driven by a
// symmetric generator list.  Multiset semantics: the step kernel is uniform
// over the list as given, so duplicate entries change the walk and are kept
// (flagged, not dropped).
struct WalkTable {
    std::vector<MappingClass> generators;
    std::vector<Rational> probs;  // probs[n] = p^(n), n = 0..N
    bool truncated = false;       // state cap reached; probs end early
    bool duplicate_generators = false;
};

namespace detail {

inline bool is_symmetric_multiset(std::span<const MappingClass> gens) {
    for (const auto& g : gens) {
        MappingClass inv = g.inverse();
        long balance = 0;
        for (const auto& h : gens) {
            if (h == g) ++balance;
            if (h == inv) --balance;
        }
        if (balance != 0) return false;
    }
    return true;
}

}  // namespace detail

inline WalkTable return_probs(std::span<const MappingClass> gens, long steps,
                              std::size_t state_cap = 2'000'000) {
    if (steps < 0) throw std::invalid_argument("negative step count");
    if (gens.empty()) throw std::invalid_argument("walk needs generators");
    if (!detail::is_symmetric_multiset(gens))
        throw HypothesisError("walk generators must form a symmetric set");

    WalkTable table;
    table.generators.assign(gens.begin(), gens.end());
    for (std::size_t i = 0; i < gens.size() && !table.duplicate_generators; ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j]) {
                table.duplicate_generators = true;
                break;
            }

    // distribution over exact group elements; matrices cached by key
    std::unordered_map<std::string, std::pair<MappingClass, Rational>> dist;
    dist.emplace(MappingClass::identity().key(),
                 std::make_pair(MappingClass::identity(), Rational(1)));
    table.probs.push_back(Rational(1));

    const Rational step_weight(1, static_cast<unsigned long>(gens.size()));
    const std::string identity_key = MappingClass::identity().key();

    for (long n = 1; n <= steps; ++n) {
        std::unordered_map<std::string, std::pair<MappingClass, Rational>> next;
        next.reserve(dist.size() * 2);
        for (const auto& [key, entry] : dist) {
            (void)key;
            for (const auto& g : table.generators) {
                MappingClass moved = entry.first * g;
                Rational mass = entry.second * step_weight;
                auto [it, inserted] =
                    next.emplace(moved.key(), std::make_pair(moved, mass));
                if (!inserted) it->second.second += mass;
                if (next.size() > state_cap) {
                    table.truncated = true;
                    return table;
                }
            }
        }
        dist = std::move(next);
        auto it = dist.find(identity_key);
        table.probs.push_back(it == dist.end() ? Rational(0) : it->second.second);
    }
    return table;
}

// Radial reduction for the free group of rank k on standard symmetric
// generators: the distance from the identity is a birth-death chain that
// steps down with probability 1/(2k) and up with (2k-1)/(2k).  Exact and
// fast, this is how long tables are produced.
inline WalkTable free_radial_return_probs(long rank, long steps) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (steps < 0) throw std::invalid_argument("negative step count");
    const unsigned long two_k = static_cast<unsigned long>(2 * rank);
    const Rational down(1, two_k), up(two_k - 1, two_k);

    WalkTable table;
    table.probs.push_back(Rational(1));
    std::vector<Rational> cur(static_cast<std::size_t>(steps) + 2, Rational(0));
    std::vector<Rational> nxt(cur.size(), Rational(0));
    cur[0] = 1;
    for (long n = 1; n <= steps; ++n) {
        for (long r = 0; r <= n; ++r) nxt[r] = 0;
        for (long r = 0; r <= n - 1; ++r) {
            if (cur[r] == 0) continue;
            if (r == 0) {
                nxt[1] += cur[0];
            } else {
                nxt[r - 1] += cur[r] * down;
                nxt[r + 1] += cur[r] * up;
            }
        }
        std::swap(cur, nxt);
        table.probs.push_back(cur[0]);
    }
    return table;
}

// Kesten-style lower bounds (p^(2n))^(1/(2n)) from the even steps;
// supermultiplicativity makes every entry a rigorous lower bound for the
// spectral radius, and the sequence is nondecreasing.
struct RhoEstimate {
    std::vector<std::pair<long, double>> lower_bounds;  // (2n, bound)
    double best = 0.0;
    long best_step = 0;
};

inline RhoEstimate rho_estimate(const WalkTable& table) {
    if (table.probs.size() < 3)
        throw std::invalid_argument("rho estimate needs even steps >= 2");
    RhoEstimate estimate;
    for (std::size_t n = 2; n < table.probs.size(); n += 2) {
        const Rational& p = table.probs[n];
        if (p == 0) continue;
        double bound = std::exp(log_double(p) / static_cast<double>(n));
        estimate.lower_bounds.emplace_back(static_cast<long>(n), bound);
        if (bound > estimate.best) {
            estimate.best = bound;
            estimate.best_step = static_cast<long>(n);
        }
    }
    return estimate;
}

// Spectral radius of the rank-k free group on standard symmetric
// generators: sqrt(2k-1)/k, exactly.
inline QuadraticIrrational kesten_free_radius(long k) {
    if (k < 2) throw std::invalid_argument("free radius needs rank >= 2");
    return QuadraticIrrational(0, 1, k, 2 * k - 1);
}

// f(k) = 1 - (1 - sqrt(3)/2) / (w^3 (k-1)^(w-1)), exactly over sqrt(3),
// together with the intermediate constant kappa(T) >= (1 - rho(T))^-1 the
// derivation routes through at rho(T) = sqrt(3)/2.
struct ReturnProbabilityBound {
    QuadraticIrrational exact;
    QuadraticIrrational kappa;   // (1 - sqrt(3)/2)^-1 = 4 + 2 sqrt 3
    double decimal = 0.0;        // 1.0 once the gap underflows
    double log10_gap = 0.0;      // log10 of (1 - f(k)), for rendering
};

inline ReturnProbabilityBound return_probability_bound(long k, const Integer& w) {
    if (k < 2) throw std::invalid_argument("corollary bound needs k >= 2");
    if (w < 1) throw std::invalid_argument("corollary bound needs w >= 1");
    if (!w.fits_ulong_p())
        throw std::invalid_argument("w too large");
    unsigned long wu = mpz_get_ui(w.get_mpz_t());
    Integer denom = w * w * w * pow_ui(Integer(k - 1), wu - 1);
    // 1 - (1 - sqrt(3)/2)/denom = (2 denom - 2 + sqrt(3)) / (2 denom)
    ReturnProbabilityBound bound{QuadraticIrrational(2 * denom - 2, 1, 2 * denom, 3),
                         QuadraticIrrational(4, 2, 1, 3), 0.0, 0.0};
    bound.log10_gap = std::log10(1.0 - std::sqrt(3.0) / 2.0) -
                      log_double(denom) / std::log(10.0);
    bound.decimal = 1.0 - std::pow(10.0, bound.log10_gap);
    return bound;
}

// kappa >= (1 - rho)^-1: the Cayley-graph functional constant obtained
// from a spectral gap (the canonical choice, returned exactly).
inline QuadraticIrrational kappa_from_rho(const QuadraticIrrational& rho) {
    if (!(rho < Rational(1)))
        throw std::invalid_argument("kappa conversion needs rho < 1");
    return QuadraticIrrational::rational(1, 1) /
           (QuadraticIrrational::rational(1, 1) - rho);
}

// rho <= 1 - kappa^-1 given the functional constant kappa.
inline QuadraticIrrational rho_from_kappa(const QuadraticIrrational& kappa) {
    if (!(kappa > Rational(0)))
        throw std::invalid_argument("rho conversion needs kappa > 0");
    return QuadraticIrrational::rational(1, 1) -
           QuadraticIrrational::rational(1, 1) / kappa;
}

// Seeded simulation of the same walk; deterministic for a fixed seed and
// used to validate the exact dynamic programming.
struct MonteCarloTable {
    std::vector<double> frequencies;  // return frequency per step, 0..N
    long trials = 0;
    std::uint64_t seed = 0;
};

inline MonteCarloTable monte_carlo(std::span<const MappingClass> gens,
                                   long steps, long trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (gens.empty()) throw std::invalid_argument("walk needs generators");
    if (!detail::is_symmetric_multiset(gens))
        throw HypothesisError("walk generators must form a symmetric set");

    MonteCarloTable table;
    table.trials = trials;
    table.seed = seed;
    std::vector<long> hits(static_cast<std::size_t>(steps) + 1, 0);
    hits[0] = trials;

    Rng master(seed);
    for (long t = 0; t < trials; ++t) {
        Rng rng = master.split();
        MappingClass position = MappingClass::identity();
        for (long n = 1; n <= steps; ++n) {
            position = position * gens[rng.below(gens.size())];
            if (position.is_identity()) ++hits[n];
        }
    }
    for (long n = 0; n <= steps; ++n)
        table.frequencies.push_back(static_cast<double>(hits[n]) /
                                    static_cast<double>(trials));
    return table;
}

}  // namespace mcg
