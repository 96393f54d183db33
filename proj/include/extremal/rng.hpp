// rng.hpp — counter-seeded splittable random streams (xoshiro256++ core).
//
// Every sampler in this library is a pure function of an RngStream, so a
// fixed (seed, stream-id) pair reproduces output bit for bit.  Sub-streams
// are derived by hashing the parent key with a caller-chosen id, which makes
// parallel Monte Carlo reproducible independently of the thread count.
#pragma once

#include <cstdint>
#include <limits>

namespace extremal {

namespace detail {

// SplitMix64 step; also used as the stream-key mixing function.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_key(std::uint64_t key, std::uint64_t id) {
    std::uint64_t s = key ^ (0x9e3779b97f4a7c15ULL + id * 0xd1342543de82ef95ULL);
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// xoshiro256++ generator addressed by (seed, stream-id).
/// Satisfies UniformRandomBitGenerator.
class RngStream {
  public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : key_(detail::mix_key(seed, stream_id)) {
        std::uint64_t s = key_;
        for (auto& word : state_) word = detail::splitmix64(s);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t result = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    /// Child stream fully determined by (this stream's key, id); the child is
    /// independent of how much the parent has been consumed.
    RngStream substream(std::uint64_t id) const {
        RngStream child(0, 0);
        child.key_ = detail::mix_key(key_, id);
        std::uint64_t s = child.key_;
        for (auto& word : child.state_) word = detail::splitmix64(s);
        return child;
    }

    /// Uniform on the open interval (0,1), 53-bit resolution.
    double uniform() {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t key_;
    std::uint64_t state_[4];
};

}  // namespace extremal
