// Counter-based random streams (Philox4x32-10): every draw is a pure function
// of (seed, stream, member, block), so results do not depend on scheduling.
#ifndef GEOSPEC_RNG_HPP
#define GEOSPEC_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace geospec {

inline std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                               std::array<std::uint32_t, 4> ctr) {
    constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(M0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(M1) * ctr[2];
        ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
               static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
               static_cast<std::uint32_t>(p0)};
        k0 += W0;
        k1 += W1;
    }
    return ctr;
}

/// Indexed access into the stream identified by (seed, stream, member).
/// Block -> two uniforms / two normals; draws are cheap and stateless.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint32_t stream, std::uint64_t member)
        : seed_(seed), stream_(stream), member_(member) {}

    /// Two uniforms in [0, 1) from one block.
    std::array<double, 2> uniform_pair(std::uint32_t block) const {
        const auto words = philox4x32(
            seed_, {block, static_cast<std::uint32_t>(member_),
                    static_cast<std::uint32_t>(member_ >> 32), stream_});
        const std::uint64_t a =
            (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
        const std::uint64_t b =
            (static_cast<std::uint64_t>(words[2]) << 32) | words[3];
        return {static_cast<double>(a >> 11) * 0x1.0p-53,
                static_cast<double>(b >> 11) * 0x1.0p-53};
    }

    /// Two independent N(0,1) values from one block (Box-Muller).
    std::array<double, 2> normal_pair(std::uint32_t block) const {
        const auto u = uniform_pair(block);
        const double r = std::sqrt(-2.0 * std::log1p(-u[0]));   // 1-u in (0,1]
        const double a = 2.0 * std::numbers::pi * u[1];
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    std::uint64_t seed_;
    std::uint32_t stream_;
    std::uint64_t member_;
};

/// Sequential view over a CounterStream: next_normal()/next_uniform() walk the
/// blocks in order. Mixing draw kinds stays deterministic (uniform draws
/// consume a whole block).
class SequentialDraws {
public:
    SequentialDraws(std::uint64_t seed, std::uint32_t stream, std::uint64_t member)
        : cs_(seed, stream, member) {}

    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const auto z = cs_.normal_pair(block_++);
        spare_ = z[1];
        have_spare_ = true;
        return z[0];
    }

    double next_uniform() {
        have_spare_ = false;
        return cs_.uniform_pair(block_++)[0];
    }

private:
    CounterStream cs_;
    std::uint32_t block_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace geospec

#endif
