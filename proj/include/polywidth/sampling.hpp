#pragma once

// Deterministic sampling of generic length vectors.
//
// Word c of stream (seed, index) is
//   key  = mix(seed + G * (index + 1))
//   word = mix(key  + G * (c + 1))
// with G = 0x9E3779B97F4A7C15 and all arithmetic mod 2^64:
//   mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//           z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31.
// Any sample is addressable in O(1) from (seed, index).

#include <algorithm>
#include <cstdint>
#include <vector>

#include "polywidth/error.hpp"
#include "polywidth/length_space.hpp"

namespace polywidth {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
inline constexpr int kMaxDraws = 10000;
inline constexpr std::int64_t kSampleScale = 10;  // entries lie in (0, 10]

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index) : key_(mix64(seed + kGolden * (index + 1))) {}

  std::uint64_t word(std::uint64_t counter) const { return mix64(key_ + kGolden * (counter + 1)); }

  /// Uniform-ish integer in [0, bound) from one word (modulo bias is accepted).
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const { return word(counter) % bound; }

  /// p/q with 1 <= q <= max_den and 0 < p/q <= kSampleScale.
  Rational rational(std::uint64_t counter, std::uint64_t max_den) const {
    const auto q = 1 + below(2 * counter, max_den);
    const auto p = 1 + below(2 * counter + 1, q * kSampleScale);
    return frac(static_cast<long>(p), static_cast<long>(q));
  }

 private:
  std::uint64_t key_;
};

namespace detail {

inline LengthVector sample_until(std::size_t n, std::uint64_t seed, std::uint64_t max_den, std::uint64_t index,
                                 bool allow_empty) {
  require(n >= 4 && n <= kMaxExhaustiveArity, ErrorKind::Usage, "sample arity must be in 4..20");
  require(max_den >= 1, ErrorKind::Usage, "max denominator must be positive");
  const Stream s(seed, index);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(s.rational(static_cast<std::uint64_t>(draw) * n + k, max_den));
    LengthVector r(std::move(v));
    if ((allow_empty || !has_long_singleton(r)) && is_generic(r)) return r;
  }
  throw Error(ErrorKind::Capability, "no generic sample within the draw limit");
}

}  // namespace detail

/// Sample `index` of the (n, seed, max_den) family: the first draw that is
/// generic with a nonempty space.
inline LengthVector sample_generic(std::size_t n, std::uint64_t seed, std::uint64_t max_den, std::uint64_t index = 0) {
  return detail::sample_until(n, seed, max_den, index, false);
}

/// Same stream, but empty spaces (a long singleton) are kept.
inline LengthVector sample_generic_any(std::size_t n, std::uint64_t seed, std::uint64_t max_den,
                                       std::uint64_t index = 0) {
  return detail::sample_until(n, seed, max_den, index, true);
}

/// Sorted sample with {1, n} long: r_n = S - 2 r_1 (1 - f), f in (0, 1),
/// where S is the sum of the other entries.
inline LengthVector sample_projective(std::size_t n, std::uint64_t seed, std::uint64_t max_den,
                                      std::uint64_t index = 0) {
  require(n >= 4 && n <= kMaxExhaustiveArity, ErrorKind::Usage, "sample arity must be in 4..20");
  const Stream s(seed ^ 0x70726f6aULL, index);
  const std::uint64_t steps = 2 * max_den + 1;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const std::uint64_t base = static_cast<std::uint64_t>(draw) * (n + 1);
    std::vector<Rational> v;
    for (std::size_t k = 0; k + 1 < n; ++k) v.push_back(s.rational(base + k, max_den));
    std::sort(v.begin(), v.end());
    Rational rest = 0;
    for (const auto& x : v) rest += x;
    const Rational f = frac(static_cast<long>(1 + s.below(2 * (base + n), steps - 1)), static_cast<long>(steps));
    v.push_back(rest - 2 * v.front() * (1 - f));
    LengthVector r(std::move(v));
    if (r.is_sorted() && !has_long_singleton(r) && is_generic(r)) return r;
  }
  throw Error(ErrorKind::Capability, "no projective sample within the draw limit");
}

/// Swaps within the pairs (1,2), (4,5) for pentagons and (1,2), (3,4), (5,6)
/// for hexagons so that each pair is non-decreasing.
inline LengthVector partially_ordered(const LengthVector& r) {
  auto v = r.entries();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (r.size() == 5) pairs = {{0, 1}, {3, 4}};
  else if (r.size() == 6) pairs = {{0, 1}, {2, 3}, {4, 5}};
  else throw Error(ErrorKind::Usage, "partial ordering defined for n = 5, 6");
  for (auto [a, b] : pairs)
    if (v[b] < v[a]) std::swap(v[a], v[b]);
  return LengthVector(std::move(v));
}

}  // namespace polywidth
