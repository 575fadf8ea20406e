#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace trgr {

// Seeded generator passed around by value. Bounded draws are implemented by
// rejection on the raw 64-bit stream so that a given seed produces the same
// sequence on every platform and standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi], inclusive.
    long uniform_int(long lo, long hi) {
        if (lo > hi) throw std::invalid_argument("SeededRng: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    /// Default entry range for randomized geometric sampling.
    long small_entry() { return uniform_int(-10, 10); }

private:
    std::mt19937_64 gen_;
};

}  // namespace trgr
