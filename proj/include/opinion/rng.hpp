#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace opinion {

// splitmix64: fixed output sequence on every platform, one 64-bit word of
// state. All randomized behaviour in the library flows through this so that
// equal seeds give bit-identical results everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), unbiased (rejection sampling)
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    double unit() {  // uniform in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Decorrelated child seed for a named stream (and optional index within it).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                                 std::uint64_t index = 0) {
    std::uint64_t h = mix64(base + 0x9e3779b97f4a7c15ULL * (stream + 1));
    return mix64(h ^ (index + 0x632be59bd9b4e019ULL));
}

// First k entries of a seeded Fisher-Yates shuffle of [0, n).
inline std::vector<int> sample_without_replacement(int k, int n, SplitMix64& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace opinion
