#pragma once

#include <cstdint>
#include <numbers>

namespace dbsim {

/// Deterministic pseudorandom stream: xoshiro256** 1.0, state filled from the
/// 64-bit seed with splitmix64. Both algorithms follow the published
/// reference implementations bit for bit, so a run is reproducible across
/// platforms and across reimplementations in other languages (see the README
/// section on randomness). No std:: engine or distribution is used anywhere
/// on the simulation path; their output is not portable.
///
/// A stream is a value type with single-owner semantics: copy it to fork a
/// replay, never share one instance across concurrent consumers.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) {
        // splitmix64, the seeding procedure recommended for the xoshiro family
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            word = z ^ (z >> 31);
        }
    }

    /// Next raw 64-bit output.
    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1): the top 53 bits scaled by 2^-53 (the
    /// generator's documented unit-interval method).
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform bit, taken from the most significant output bit.
    int uniform_bit() { return static_cast<int>(next_u64() >> 63); }

    /// Uniform length in [0, upper).
    double uniform_in(double upper) { return uniform_double() * upper; }

    /// Uniform heading in [0, 2*pi).
    double uniform_angle() {
        return uniform_double() * (2.0 * std::numbers::pi_v<double>);
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace dbsim
