#pragma once
// Reproducible random number generation.
//
// All stochastic code in this project draws from SplitMix64 streams. The
// algorithm (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014) is fixed and documented here so that instances
// and population-dynamics runs can be reproduced by an independent
// implementation from the seed alone:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Parallel work derives one stream per logical task (e.g. per population
// sample) by folding task ids into the seed with the same finalizer; results
// are therefore independent of thread count.

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cspchain {

constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kSplitMix64Gamma;
        return splitmix64_finalize(state_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Fixed-point rejection-free multiply-shift is
    // biased by at most 2^-64 for the n used here (n << 2^32); acceptable and
    // platform-independent.
    std::uint32_t next_below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool next_bool() { return (next_u64() >> 63) != 0; }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }
    std::uint64_t operator()() { return next_u64(); }

private:
    std::uint64_t state_;
};

// Derives a stream key by folding ids into the seed, one finalizer round per
// id. Used as SplitMix64(derive_stream(seed, {sweep, position, sample})).
inline std::uint64_t derive_stream(std::uint64_t seed,
                                   std::initializer_list<std::uint64_t> ids) {
    std::uint64_t k = splitmix64_finalize(seed + kSplitMix64Gamma);
    for (std::uint64_t id : ids)
        k = splitmix64_finalize(k ^ (id + kSplitMix64Gamma));
    return k;
}

// Inverse-CDF Poisson sampler with a precomputed table. The rate is fixed at
// construction; a draw costs one uniform plus a short scan.
class PoissonSampler {
public:
    explicit PoissonSampler(double lambda);

    int sample(SplitMix64& rng) const {
        const double u = rng.next_double();
        // CDF table is short (mean + ~12 std devs); linear scan beats binary
        // search at these sizes.
        const int n = static_cast<int>(cdf_.size());
        for (int k = 0; k < n; ++k)
            if (u < cdf_[k]) return k;
        return n - 1;
    }

    double lambda() const { return lambda_; }

private:
    double lambda_;
    std::vector<double> cdf_;
};

} // namespace cspchain
