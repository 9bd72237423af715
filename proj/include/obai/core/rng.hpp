#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace obai {

// Counter-based PRNG (Philox4x32-10). A stream is addressed by (seed, stream id);
// draws depend only on (seed, stream, counter), so independent substreams are
// cheap and reproducible across platforms and thread counts.
namespace detail {

inline void philox_round(std::array<uint32_t, 4>& ctr, const std::array<uint32_t, 2>& key) {
    constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    const uint64_t p0 = static_cast<uint64_t>(M0) * ctr[0];
    const uint64_t p1 = static_cast<uint64_t>(M1) * ctr[2];
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

inline std::array<uint32_t, 4> philox10(uint64_t counter, uint64_t stream, uint64_t seed) {
    std::array<uint32_t, 4> ctr = {
        static_cast<uint32_t>(counter), static_cast<uint32_t>(counter >> 32),
        static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
    std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
    constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int r = 0; r < 10; ++r) {
        philox_round(ctr, key);
        key[0] += W0;
        key[1] += W1;
    }
    return ctr;
}

}  // namespace detail

// splitmix64 finalizer; used to derive stream ids from structured tags.
inline uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline uint64_t derive_stream(uint64_t tag, uint64_t index) {
    return mix64(mix64(tag) ^ index);
}

class RngStream {
public:
    RngStream() = default;
    RngStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    uint32_t next_u32() {
        if (word_ == 4) {
            block_ = detail::philox10(counter_++, stream_, seed_);
            word_ = 0;
        }
        return block_[word_++];
    }

    uint64_t next_u64() {
        const uint64_t lo = next_u32();
        const uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // [0, n)
    uint64_t uniform_int(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    // Box-Muller; pairs are cached so draw order stays deterministic.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }

private:
    uint64_t seed_ = 0;
    uint64_t stream_ = 0;
    uint64_t counter_ = 0;
    std::array<uint32_t, 4> block_{};
    int word_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace obai
