#pragma once

#include <cstdint>

namespace lnmeans {

// SplitMix64 finalizer. Used both as a bit mixer for seeding and as the
// hash behind deterministic substream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Order-sensitive combination of hash values, e.g.
// hash_combine(hash_combine(seed, scenario), replicate).
constexpr std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept {
    return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

// Deterministic, splittable random stream: xoshiro256++ with its state
// derived from (seed, stream_id) through SplitMix64.
//
// Contract: equal (seed, stream_id) give bitwise-identical sequences on
// every platform and under any threading; distinct stream_ids give
// statistically independent sequences. Callers that want parallel
// determinism assign each unit of work its own stream_id and never share
// a stream across threads.
class RngStream {
public:
    RngStream() noexcept : RngStream(0, 0) {}

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t x = mix64(seed) ^ mix64(stream_id + 0x6a09e667f3bcc909ULL);
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            word = mix64(x);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 1;  // all-zero state is the one forbidden point
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53 random bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on the open interval (0, 1); safe under log().
    double next_open_double() noexcept {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

}  // namespace lnmeans
