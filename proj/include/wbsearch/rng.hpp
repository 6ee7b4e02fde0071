#pragma once

#include <cstdint>
#include <random>

namespace wbsearch {

/// splitmix64 finalizer; decorrelates (seed, run, stream) triples.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t run,
                                    std::uint64_t stream = 0) noexcept {
    return mix_seed(mix_seed(mix_seed(master) ^ run) ^ (stream * 0xD1B54A32D192ED03ULL));
}

/// mt19937_64 with a distribution mapping fixed here rather than left to the
/// standard library, so draws are identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// [0, 1) with 53 random bits.
    double canonical() noexcept {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) noexcept { return lo + canonical() * (hi - lo); }

private:
    std::mt19937_64 engine_;
};

}  // namespace wbsearch
