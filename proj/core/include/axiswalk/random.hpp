#pragma once

#include <array>
#include <cstdint>

namespace axiswalk {

/// Philox4x32-10 block function (Salmon et al., SC'11).
class Philox4x32 {
  public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Block hash(Block ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

  private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Counter-based stream keyed by (seed, stream id). Draw number i is a pure
/// function of (seed, stream, i), so streams can be split, skipped and
/// resumed without carrying hidden state.
class RandomSource {
  public:
    RandomSource(std::uint64_t seed, std::uint64_t stream, std::uint64_t position = 0)
        : seed_(seed), stream_(stream), position_(position) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    /// Index of the next draw.
    std::uint64_t position() const { return position_; }
    void seek(std::uint64_t position) { position_ = position; }

    /// 64 random bits of draw `index`.
    std::uint64_t bits_at(std::uint64_t index) const {
        const Philox4x32::Block out = block(index >> 1);
        return (index & 1u) ? (std::uint64_t{out[3]} << 32 | out[2]) : (std::uint64_t{out[1]} << 32 | out[0]);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform_at(std::uint64_t index) const { return to_unit(bits_at(index)); }

    std::uint64_t next_bits() {
        const std::uint64_t index = position_++;
        if ((index >> 1) != cached_block_ || !cache_valid_) {
            cache_ = block(index >> 1);
            cached_block_ = index >> 1;
            cache_valid_ = true;
        }
        return (index & 1u) ? (std::uint64_t{cache_[3]} << 32 | cache_[2])
                            : (std::uint64_t{cache_[1]} << 32 | cache_[0]);
    }

    double uniform() { return to_unit(next_bits()); }

    static constexpr double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

  private:
    Philox4x32::Block block(std::uint64_t block_index) const {
        return Philox4x32::hash({static_cast<std::uint32_t>(block_index), static_cast<std::uint32_t>(block_index >> 32),
                                 static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                                {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t position_;
    Philox4x32::Block cache_{};
    std::uint64_t cached_block_ = 0;
    bool cache_valid_ = false;
};

} // namespace axiswalk
