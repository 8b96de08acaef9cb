#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>

namespace uavcic {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators"). Used for seed expansion and to derive independent substream
// keys from (seed, path) tuples.
struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256** 1.0 (Blackman & Vigna), state seeded through SplitMix64.
// Satisfies uniform_random_bit_generator; all distribution sampling below is
// self-contained so sequences are reproducible across standard libraries.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) {
            w = sm.next();
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~std::uint64_t{0}; }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via Box-Muller; the second variate of each pair is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));  // log(1-u1), u1 < 1
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex Gaussian, E[|g|^2] = 1.
    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re * M_SQRT1_2, im * M_SQRT1_2};
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Key for an independent stream addressed by (seed, path...): each path
// component is folded through the SplitMix64 finalizer, so streams for
// distinct paths are decorrelated and stable across runs and thread counts.
inline std::uint64_t derive_stream_key(std::uint64_t seed,
                                       std::initializer_list<std::uint64_t> path) {
    std::uint64_t key = seed;
    for (std::uint64_t component : path) {
        SplitMix64 sm{key ^ (component + 0x9e3779b97f4a7c15ULL)};
        key = sm.next();
    }
    return key;
}

inline Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    return Rng{derive_stream_key(seed, path)};
}

}  // namespace uavcic
