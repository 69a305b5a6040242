#pragma once

#include <cstdint>
#include <random>

namespace lctforge {

// Seeded RNG with a self-contained uniform integer draw. std::mt19937_64 is
// bit-reproducible across platforms; std::uniform_int_distribution is not,
// so the range reduction is done here by rejection.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t r;
        do { r = engine_(); } while (r >= limit);
        return lo + static_cast<long>(r % span);
    }

    uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace lctforge
