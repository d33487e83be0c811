#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace fracbound {

/**
 * Philox4x32-10 counter-based generator. A (seed, stream) pair fixes the key and the
 * high counter words, so every path draws from its own reproducible substream.
 */
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0, 0, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    std::uint32_t next_u32() noexcept {
        if (idx_ == 4) refill();
        return buf_[idx_++];
    }

    /// Uniform on (0, 1], 53 bits.
    double uniform_pos() noexcept {
        const std::uint64_t a = next_u32() >> 5, b = next_u32() >> 6;
        return (double(a * 67108864u + b) + 1.0) * (1.0 / 9007199254740992.0);
    }
    /// Uniform on [0, 1), 53 bits.
    double uniform() noexcept { return uniform_pos() - (1.0 / 9007199254740992.0); }
    /// Exp(rate) by inversion.
    double exponential(double rate) noexcept { return -std::log(uniform_pos()) / rate; }

private:
    static constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    static constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;

    void refill() noexcept {
        std::array<std::uint32_t, 4> c = ctr_;
        std::array<std::uint32_t, 2> k = key_;
        for (int r = 0; r < 10; ++r) {
            const std::uint64_t p0 = std::uint64_t(M0) * c[0];
            const std::uint64_t p1 = std::uint64_t(M1) * c[2];
            c = {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
                 static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
            k[0] += W0;
            k[1] += W1;
        }
        buf_ = c;
        idx_ = 0;
        if (++ctr_[0] == 0) ++ctr_[1];
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> ctr_;
    std::array<std::uint32_t, 4> buf_{};
    int idx_ = 4;
};

}  // namespace fracbound
