#include <gtest/gtest.h>

#include "polywidth/sampling.hpp"
#include "polywidth/volume.hpp"

using namespace polywidth;

namespace {

LengthVector V(std::initializer_list<const char*> xs) {
  std::vector<std::string> t(xs.begin(), xs.end());
  return LengthVector::parse(t);
}

Rational fact(long k) {
  Rational f = 1;
  for (long i = 2; i <= k; ++i) f *= i;
  return f;
}

// Literal formula: the inner sum runs over all compositions K of k into n
// parts with multinomial weights, no collapse to epsilon^k.
Rational literal_volume(const LengthVector& r) {
  const auto n = r.size();
  const long k = static_cast<long>(n) - 3;
  Rational outer = 0;
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
    Rational in = 0, out = 0;
    for (std::size_t i = 0; i < n; ++i) (m >> i & 1 ? in : out) += r[i];
    if (in <= out) continue;  // short
    std::vector<long> comp(n, 0);
    Rational inner = 0;
    // enumerate compositions by odometer with a running sum bound
    while (true) {
      long used = 0;
      for (auto c : comp) used += c;
      if (used == k) {
        Rational w = fact(k);
        for (std::size_t i = 0; i < n; ++i) {
          w /= fact(comp[i]);
          const Rational base = (m >> i & 1) ? r[i] : Rational(-r[i]);
          w *= pow(base, static_cast<unsigned long>(comp[i]));
        }
        inner += w;
      }
      std::size_t j = 0;
      while (j < n && comp[j] == k) comp[j++] = 0;
      if (j == n) break;
      ++comp[j];
    }
    const int members = __builtin_popcountll(m);
    outer += ((n - members) % 2 == 1) ? Rational(-inner) : inner;
  }
  return -outer / (2 * fact(k));
}

}  // namespace

TEST(Volume, ProjectiveValues) {
  EXPECT_EQ(combinatorial_volume(V({"1", "1", "1", "2"})), (VolumeValue{1, 1}));
  EXPECT_EQ(combinatorial_volume(V({"1", "1", "1", "1", "3"})), (VolumeValue{frac(1, 2), 2}));
  EXPECT_EQ(projective_volume(V({"1", "1", "1", "2"})), (VolumeValue{1, 1}));
  EXPECT_EQ(projective_volume(V({"1", "1", "1", "1", "3"})), (VolumeValue{frac(1, 2), 2}));
  EXPECT_EQ(combinatorial_volume(V({"1", "1", "1", "1", "1", "4"})).coefficient, frac(1, 6));
  EXPECT_EQ(combinatorial_volume(V({"1", "1", "1", "1", "1", "1", "5"})).coefficient, frac(1, 24));
}

TEST(Volume, ClosedFormWithExtraHalfIsHalfTheSum) {
  // gamma^k / (2 k!) is exactly half of what the alternating sum produces.
  for (const auto& r : {V({"1", "1", "1", "2"}), V({"1", "1", "1", "1", "3"}), V({"1", "2", "2", "2", "6"})}) {
    const auto g = gamma_of(r);
    const auto k = r.size() - 3;
    const Rational halved = pow(g, k) / (2 * fact(static_cast<long>(k)));
    EXPECT_EQ(combinatorial_volume(r).coefficient, 2 * halved) << r;
  }
}

TEST(Volume, MatchesLiteralMultinomialSum) {
  for (std::size_t n : {4, 5, 6, 7}) {
    for (std::uint64_t i = 0; i < 8; ++i) {
      const auto r = sample_generic(n, 43, 7, i);
      EXPECT_EQ(combinatorial_volume(r).coefficient, literal_volume(r)) << r;
    }
  }
}

TEST(Volume, ProjectiveAgreesWithSumOnSamples) {
  for (std::size_t n : {4, 5, 6, 7, 8}) {
    for (std::uint64_t i = 0; i < 10; ++i) {
      const auto r = sample_projective(n, 47, 6, i);
      EXPECT_EQ(combinatorial_volume(r), projective_volume(r)) << r;
    }
  }
}

TEST(Volume, Errors) {
  try {
    combinatorial_volume(V({"1", "2", "3", "4", "11"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySpace);
  }
  EXPECT_THROW(combinatorial_volume(V({"1", "1", "1", "3"})), Error);
  EXPECT_THROW(projective_volume(V({"1", "2", "3", "4", "7"})), Error);
  std::vector<Rational> big(13);
  for (long i = 0; i < 13; ++i) big[i] = frac(100 + i * i, 7);
  try {
    combinatorial_volume(LengthVector(big));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Capability);
  }
}

TEST(Volume, RatioToEuclideanIsOne) {
  int toric = 0;
  for (std::size_t n : {4, 5, 6}) {
    for (std::uint64_t i = 0; i < 30; ++i) {
      const auto r = sample_generic(n, 53, 6, i);
      const auto image = caterpillar_polytope(r);
      if (!is_bending_toric(image).toric) continue;
      ++toric;
      EXPECT_EQ(volume_ratio_check(r, image), 1) << r;
    }
  }
  EXPECT_GT(toric, 40);
}

TEST(Volume, TriplePairsImageRatio) {
  const auto r = V({"3", "5", "3", "5", "3", "5"});
  EXPECT_EQ(volume_ratio_check(r, triple_pairs_polytope_6(r)), 1);
}

TEST(Volume, RatioRejectsMismatch) {
  const auto r = V({"1", "2", "3", "4", "7"});
  EXPECT_THROW(volume_ratio_check(V({"1", "2", "3", "4", "6"}), caterpillar_polytope(r)), Error);
  EXPECT_THROW(volume_ratio_check(V({"1", "1", "2", "2", "3"}), caterpillar_polytope(V({"1", "1", "2", "2", "3"}))),
               Error);
}
