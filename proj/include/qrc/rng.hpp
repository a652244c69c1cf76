#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qrc/errors.hpp"

namespace qrc {

// Deterministic random source. std::uniform_int_distribution is
// implementation-defined, so all range reduction is done here explicitly;
// the same seed yields the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n), n > 0. Rejection sampling to avoid modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw Error("Rng::below: empty range");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        if (lo > hi) throw Error("Rng::range: lo > hi");
        return lo + static_cast<long long>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return below(2) == 1; }

    template <class T>
    const T& pick(const std::vector<T>& xs) {
        if (xs.empty()) throw Error("Rng::pick: empty vector");
        return xs[static_cast<std::size_t>(below(xs.size()))];
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace qrc
