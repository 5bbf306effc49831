#pragma once

#include <cstdint>

namespace mcg {

// Deterministic splittable generator (splitmix64 core).  Results are
// identical across platforms and standard libraries, which keeps seeded
// fuzz batches and Monte Carlo runs byte-reproducible.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); rejection sampling, exact.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Independent derived stream; the parent advances once.
    Rng split() { return Rng(next() ^ 0xd1b54a32d192ed03ull); }

   private:
    std::uint64_t state_;
};

}  // namespace mcg
