#pragma once

#include <cstdint>
#include <cmath>
#include <vector>

namespace csbm {

// Splittable counter-seeded random stream.
//
// The generator is xoshiro256++ (Blackman/Vigna, public domain). Streams are
// never seeded directly from user input; instead a 128-bit stream key is
// derived by absorbing (master seed, tag, tag, ...) words through a
// SplitMix64-style mixer, and the key is then expanded into the 256-bit
// generator state. Two streams whose key words differ in any absorbed tag are
// independent for all practical purposes. This is what makes parallel Monte
// Carlo sweeps reproducible: the stream for (seed, point, trial) does not
// depend on scheduling order or thread count.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) { seed_from_key(mix64(seed), mix64(seed ^ kPhi)); }

    // Derives an independent child stream from the current state and a tag.
    // Does not advance or otherwise modify this stream.
    RandomStream split(std::uint64_t tag) const {
        std::uint64_t a = s_[0] ^ s_[2];
        std::uint64_t b = s_[1] ^ s_[3];
        a = mix64(a ^ mix64(tag));
        b = mix64(b + kPhi * (tag + 1));
        return RandomStream(a, b);
    }

    // 128-bit key derivation used by the experiment harness:
    // (seed, point, trial) -> stream. Equivalent to chained split() calls but
    // spelled out so the contract is explicit.
    static RandomStream from_key(std::uint64_t seed, std::uint64_t point, std::uint64_t trial) {
        return RandomStream(seed).split(point).split(trial);
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

    // Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return real01() < p;
    }

    // Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * bound;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= static_cast<std::uint64_t>(-static_cast<std::int64_t>(bound)) % bound)
                return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Number of failures before the next success in Bernoulli(p) trials:
    // lets sparse samplers skip over runs of non-edges in O(#edges).
    // Pre: 0 < p <= 1.
    std::uint64_t geometric_skip(double p) {
        if (p >= 1.0) return 0;
        double u = 1.0 - real01();  // u in (0, 1]
        double d = std::floor(std::log(u) / std::log1p(-p));
        if (d < 0.0) d = 0.0;
        constexpr double kCap = 9.0e18;
        return d > kCap ? static_cast<std::uint64_t>(kCap) : static_cast<std::uint64_t>(d);
    }

    // In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static constexpr std::uint64_t kPhi = 0x9e3779b97f4a7c15ull;

    RandomStream(std::uint64_t k0, std::uint64_t k1) { seed_from_key(k0, k1); }

    void seed_from_key(std::uint64_t k0, std::uint64_t k1) {
        // Expand the 128-bit key into four nonzero state words.
        std::uint64_t x = k0;
        s_[0] = mix64(x += kPhi);
        s_[1] = mix64(x += kPhi ^ k1);
        s_[2] = mix64(x += kPhi);
        s_[3] = mix64(x += kPhi ^ k0);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kPhi;
    }

    static std::uint64_t mix64(std::uint64_t z) {
        z += kPhi;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

// Fixed role tags for substreams derived inside library pipelines. Public so
// tests can reconstruct the exact stream a pipeline stage consumed.
namespace stream_tag {
inline constexpr std::uint64_t matcher = 0x6d617463u;   // "matc"
inline constexpr std::uint64_t spectral = 0x73706563u;  // "spec"
}  // namespace stream_tag

}  // namespace csbm
