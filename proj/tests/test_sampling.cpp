#include <gtest/gtest.h>

#include <set>

#include "polywidth/bending.hpp"
#include "polywidth/sampling.hpp"

using namespace polywidth;

TEST(Sampling, Deterministic) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    EXPECT_EQ(sample_generic(6, 9, 8, i), sample_generic(6, 9, 8, i));
    EXPECT_EQ(sample_projective(5, 9, 8, i), sample_projective(5, 9, 8, i));
  }
}

TEST(Sampling, FrozenDraws) {
  EXPECT_EQ(sample_generic(5, 1, 8, 0), LengthVector({frac(37, 7), 4, frac(1, 2), 5, 1}));
  EXPECT_EQ(sample_generic(6, 2, 4, 3), LengthVector({frac(17, 2), 7, frac(23, 3), frac(15, 2), 5, frac(17, 2)}));
  EXPECT_EQ(sample_projective(5, 1, 8, 0), LengthVector({1, 4, frac(29, 6), frac(15, 2), frac(854, 51)}));
}

TEST(Sampling, IndicesAndSeedsDiffer) {
  std::set<std::string> seen;
  for (std::uint64_t seed : {1, 2, 3})
    for (std::uint64_t i = 0; i < 30; ++i) {
      std::ostringstream os;
      os << sample_generic(5, seed, 8, i);
      seen.insert(os.str());
    }
  EXPECT_GT(seen.size(), 85u);
}

TEST(Sampling, GenericNonemptyAndBounded) {
  for (std::size_t n : {4, 5, 6, 8, 10}) {
    for (std::uint64_t i = 0; i < 40; ++i) {
      const auto r = sample_generic(n, 3, 6, i);
      EXPECT_TRUE(is_generic(r));
      EXPECT_FALSE(has_long_singleton(r));
      for (const auto& x : r.entries()) {
        EXPECT_GT(x, 0);
        EXPECT_LE(x, kSampleScale);
        EXPECT_LE(x.get_den(), 6);
        EXPECT_EQ(x, Rational(x.get_num(), x.get_den()));  // canonical
      }
    }
  }
}

TEST(Sampling, AnyKeepsEmptySpaces) {
  int empty = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto r = sample_generic_any(4, 5, 4, i);
    EXPECT_TRUE(is_generic(r));
    empty += has_long_singleton(r);
  }
  EXPECT_GT(empty, 0);
}

TEST(Sampling, ProjectiveChamber) {
  for (std::size_t n : {4, 5, 6, 7}) {
    for (std::uint64_t i = 0; i < 30; ++i) {
      const auto r = sample_projective(n, 11, 5, i);
      EXPECT_TRUE(r.is_sorted());
      EXPECT_TRUE(is_generic(r));
      EXPECT_TRUE(is_long(r, IndexSet(n, {1, n})));
      EXPECT_EQ(singleton_maximal_short(r), std::optional<std::size_t>(n));
    }
  }
}

TEST(Sampling, PartialOrder) {
  const LengthVector r({5, 2, 3, 9, 1, 4});
  EXPECT_EQ(partially_ordered(r), LengthVector({2, 5, 3, 9, 1, 4}));
  EXPECT_TRUE(is_partially_ordered_6(partially_ordered(LengthVector({5, 2, 9, 3, 7, 1}))));
  EXPECT_THROW(partially_ordered(LengthVector({1, 2, 3, 4})), Error);
}

TEST(Sampling, UsageErrors) {
  EXPECT_THROW(sample_generic(3, 1, 8), Error);
  EXPECT_THROW(sample_generic(21, 1, 8), Error);
  EXPECT_THROW(sample_generic(5, 1, 0), Error);
}
