#pragma once

#include <cstdint>
#include <random>

namespace torgr {

/// Seeded generator with platform-independent bounded draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : g_(seed) {}

    /// Uniform integer in [lo, hi] by rejection, identical on every platform.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
        std::uint64_t x;
        do x = g_();
        while (limit != 0 && x >= limit);
        return lo + static_cast<long long>(span == 0 ? x : x % span);
    }

    /// Nonzero integer in [-bound, bound].
    long long nonzero(long long bound) {
        long long v = uniform(-bound, bound - 1);
        return v >= 0 ? v + 1 : v;
    }

    std::uint64_t next() { return g_(); }

private:
    std::mt19937_64 g_;
};

} // namespace torgr
