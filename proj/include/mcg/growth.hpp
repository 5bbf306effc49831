#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcg/ints.hpp"
#include "mcg/matrix.hpp"

namespace mcg {

// Exact Cayley-ball sizes for a matrix subgroup.  sizes[k] counts the
// elements of word length <= k; the "words of length < n" convention is
// sizes[n-1] (both are reported by the CLI).
struct BallTable {
    std::vector<MappingClass> generators;  // symmetrized, deduplicated
    std::vector<Integer> sizes;            // indexed by radius 0..n
    bool truncated = false;                // element cap reached
    long radius_computed = 0;
};

inline std::vector<MappingClass> symmetrize_generators(
    std::span<const MappingClass> gens) {
    std::vector<MappingClass> out;
    auto push_unique = [&](const MappingClass& m) {
        for (const auto& g : out)
            if (g == m) return;
        out.push_back(m);
    };
    for (const auto& g : gens) push_unique(g);
    for (const auto& g : gens) push_unique(g.inverse());
    return out;
}

// Breadth-first enumeration with exact canonical matrix keys.  The store is
// capped; hitting the cap yields a truncated table with the radii that
// completed, never a silently wrong count.
inline BallTable ball_sizes(std::span<const MappingClass> gens, long radius,
                            std::size_t element_cap = 10'000'000) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    if (gens.empty()) throw std::invalid_argument("ball of the empty set");

    BallTable table;
    table.generators = symmetrize_generators(gens);

    std::unordered_set<std::string> seen;
    std::vector<MappingClass> frontier;
    seen.insert(MappingClass::identity().key());
    frontier.push_back(MappingClass::identity());
    table.sizes.push_back(1);
    table.radius_computed = 0;

    for (long k = 1; k <= radius; ++k) {
        std::vector<MappingClass> next;
        for (const auto& element : frontier) {
            for (const auto& g : table.generators) {
                MappingClass candidate = element * g;
                if (seen.size() >= element_cap &&
                    !seen.contains(candidate.key())) {
                    table.truncated = true;
                    return table;
                }
                if (seen.insert(candidate.key()).second)
                    next.push_back(std::move(candidate));
            }
        }
        table.sizes.push_back(Integer(static_cast<unsigned long>(seen.size())));
        table.radius_computed = k;
        frontier = std::move(next);
        if (frontier.empty()) {
            // the whole group was enumerated; the remaining radii repeat
            for (long j = k + 1; j <= radius; ++j) {
                table.sizes.push_back(table.sizes.back());
                table.radius_computed = j;
            }
            break;
        }
    }
    return table;
}

// Rates log(sizes[k])/k and the window estimate of the growth exponent.
// `extrapolated` is the average per-step log growth over the final window,
// (log sizes[n] - log sizes[n - window]) / window, which converges to
// h(G, A) geometrically for exponential tables.
struct GrowthEstimate {
    std::vector<double> rates;  // rates[k] = log(sizes[k])/k, rates[0] = 0
    double extrapolated = 0.0;
    long window = 0;
};

inline GrowthEstimate growth_estimate(const BallTable& table, long window) {
    if (window < 1) throw std::invalid_argument("window must be positive");
    long n = static_cast<long>(table.sizes.size()) - 1;
    if (n < window + 2)
        throw std::invalid_argument("table needs at least window + 2 radii");

    GrowthEstimate estimate;
    estimate.window = window;
    estimate.rates.push_back(0.0);
    auto log_size = [&](long k) {
        return std::log(mpz_get_d(table.sizes[k].get_mpz_t()));
    };
    for (long k = 1; k <= n; ++k)
        estimate.rates.push_back(log_size(k) / static_cast<double>(k));
    estimate.extrapolated =
        (log_size(n) - log_size(n - window)) / static_cast<double>(window);
    return estimate;
}

}  // namespace mcg
