#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace pathmean {

/// SplitMix64 step; used to expand seeds and to derive substream keys.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic counter-based RNG stream (xoshiro256++ core).
///
/// Streams are value types. Distinct substreams derived from the same root
/// seed are independent for Monte Carlo purposes and reproducible regardless
/// of thread scheduling: worker i always draws from substream(root, cell, i).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    /// Stream keyed by (root, a, b); used for per-cell / per-sample substreams.
    static Rng substream(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0) {
        std::uint64_t sm = root;
        std::uint64_t k1 = splitmix64(sm);
        sm = k1 ^ (a * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
        std::uint64_t k2 = splitmix64(sm);
        sm = k2 ^ (b * 0xbf58476d1ce4e5b9ULL + 0x1ce4e5b9ULL);
        return Rng(splitmix64(sm));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Marsaglia polar (no trigonometry, pairs cached).
    double next_gaussian() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u, v, q;
        do {
            u = 2.0 * next_double() - 1.0;
            v = 2.0 * next_double() - 1.0;
            q = u * u + v * v;
        } while (q >= 1.0 || q == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(q) / q);
        cached_ = v * scale;
        has_cached_ = true;
        return u * scale;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_{};
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace pathmean
