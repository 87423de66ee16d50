#include <gtest/gtest.h>

#include <set>

#include "tq/bits.hpp"
#include "tq/random.hpp"

using tq::BitString;

TEST(BitString, ParseIsBigEndian) {
  const auto b = BitString::parse("101");
  EXPECT_EQ(b.size(), 3u);
  EXPECT_TRUE(b[0]);
  EXPECT_FALSE(b[1]);
  EXPECT_EQ(b.to_index(), 5u);
  EXPECT_EQ(b.to_string(), "101");
  EXPECT_EQ(BitString::parse("001").to_index(), 1u);
}

TEST(BitString, FromIndexRoundTrip) {
  for (std::uint64_t v = 0; v < 64; ++v) EXPECT_EQ(BitString::from_index(v, 6).to_index(), v);
  EXPECT_THROW(BitString::from_index(8, 3), std::out_of_range);
}

TEST(BitString, WeightAndComplement) {
  const auto b = BitString::parse("1101");
  EXPECT_EQ(b.hamming_weight(), 3u);
  EXPECT_EQ(b.complement(), BitString::parse("0010"));
  EXPECT_EQ(BitString::ones(4).hamming_weight(), 4u);
  EXPECT_EQ(BitString::zeros(4).hamming_weight(), 0u);
}

TEST(BitString, RejectsBadText) {
  EXPECT_THROW(BitString::parse("10a"), std::invalid_argument);
  EXPECT_THROW(BitString(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
}

TEST(Random, DerivedSeedsAreDistinctAndStable) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(tq::derive_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(tq::derive_seed(7, 3), tq::derive_seed(7, 3));
  EXPECT_NE(tq::derive_seed(7, 3), tq::derive_seed(8, 3));
}

TEST(Random, UniformInUnitInterval) {
  tq::Rng rng(42);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000.0, 0.5, 0.005);
}
