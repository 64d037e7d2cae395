#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "axiswalk/random.hpp"

namespace axiswalk {
namespace {

// Known-answer vectors of the reference Philox4x32-10 implementation.
TEST(Philox, KnownAnswers) {
    using B = Philox4x32::Block;
    EXPECT_EQ(Philox4x32::hash({0, 0, 0, 0}, {0, 0}), (B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(Philox4x32::hash({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(Philox4x32::hash({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, UsableAtCompileTime) {
    constexpr auto b = Philox4x32::hash({0, 0, 0, 0}, {0, 0});
    static_assert(b[0] == 0x6627e8d5);
}

TEST(RandomSource, SequentialMatchesRandomAccess) {
    RandomSource rng(99, 3);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        ASSERT_EQ(rng.next_bits(), rng.bits_at(i));
    }
    rng.seek(17);
    EXPECT_EQ(rng.next_bits(), rng.bits_at(17));
    EXPECT_EQ(rng.position(), 18u);
}

TEST(RandomSource, StreamsAndSeedsAreDistinct) {
    std::set<std::uint64_t> first;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        for (std::uint64_t stream = 0; stream < 16; ++stream) {
            first.insert(RandomSource(seed, stream).bits_at(0));
        }
    }
    EXPECT_EQ(first.size(), 256u);
}

TEST(RandomSource, IdenticalKeysGiveIdenticalStreams) {
    RandomSource a(5, 8, 100);
    RandomSource b(5, 8, 100);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(a.uniform(), b.uniform());
    }
}

TEST(RandomSource, UniformMoments) {
    RandomSource rng(1, 0);
    constexpr int kN = 1'000'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    double lo = 1.0;
    double hi = 0.0;
    for (int i = 0; i < kN; ++i) {
        const double u = rng.uniform();
        sum += u;
        sum_sq += u * u;
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    EXPECT_NEAR(sum / kN, 0.5, 4.0 * std::sqrt(1.0 / 12 / kN));
    EXPECT_NEAR(sum_sq / kN, 1.0 / 3, 4.0 * std::sqrt(4.0 / 45 / kN));
    EXPECT_GE(lo, 0.0);
    EXPECT_LT(hi, 1.0);
    EXPECT_EQ(RandomSource::to_unit(~std::uint64_t{0}), 1.0 - 0x1.0p-53);
}

} // namespace
} // namespace axiswalk
