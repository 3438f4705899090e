#pragma once

#include <array>
#include <cstdint>

namespace twopoint {

// Philox4x32-10: counter-based, so any block of any
// stream can be computed directly without advancing state.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key)
    {
        for (int round = 0; round < 10; ++round) {
            if (round) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * ctr[0];
            const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
        }
        return ctr;
    }
};

// Uniform doubles in [0, 1) for one (seed, stream) pair; two per Philox block.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint64_t stream)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)}, stream_(stream)
    {
    }

    double next()
    {
        if (half_ == 0) {
            buf_ = Philox4x32::block({std::uint32_t(index_), std::uint32_t(index_ >> 32),
                                      std::uint32_t(stream_), std::uint32_t(stream_ >> 32)},
                                     key_);
            ++index_;
        }
        const std::uint64_t x = (std::uint64_t(buf_[2 * half_]) << 32) | buf_[2 * half_ + 1];
        half_ ^= 1;
        return double(x >> 11) * 0x1p-53;
    }

private:
    Philox4x32::Key key_;
    std::uint64_t stream_;
    std::uint64_t index_ = 0;
    Philox4x32::Counter buf_{};
    int half_ = 0;
};

}  // namespace twopoint
