#pragma once

// Symplectic volume of polygon spaces from the alternating sum over long
// sets, and its comparison with the Euclidean volume of moment polytopes.

#include "polywidth/bending.hpp"
#include "polywidth/error.hpp"
#include "polywidth/length_space.hpp"
#include "polywidth/polytope.hpp"

namespace polywidth {

inline constexpr std::size_t kMaxVolumeArity = 12;

/// value = coefficient * (2 pi)^power, power = n - 3.
struct VolumeValue {
  Rational coefficient;
  int power = 0;

  friend bool operator==(const VolumeValue&, const VolumeValue&) = default;
};

/// -1/(2 k!) * sum over long I of (-1)^(n-|I|) * sum_K multinom(k; K) prod (lambda_I^i r_i)^(K_i),
/// where the inner multinomial sum collapses to epsilon_I^k.
inline VolumeValue combinatorial_volume(const LengthVector& r) {
  const auto n = r.size();
  require(n <= kMaxVolumeArity, ErrorKind::Capability, "volume formula limited to n <= 12");
  require_generic(r);
  require_nonempty(r);
  const auto k = static_cast<unsigned long>(n - 3);
  Rational sum = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    IndexSet I(n, m);
    const auto e = epsilon(r, I);
    if (e <= 0) continue;
    Rational term = pow(e, k);
    if ((n - I.size()) % 2 == 1) term = -term;
    sum += term;
  }
  return {-sum / (2 * detail::factorial(n - 3)), static_cast<int>(n - 3)};
}

/// gamma^k / k! on the chamber where {1, n} is long.
inline VolumeValue projective_volume(const LengthVector& r_sorted) {
  require(r_sorted.is_sorted(), ErrorKind::Precondition, "vector must be sorted non-decreasingly");
  require_nonempty(r_sorted);
  require(singleton_maximal_short(r_sorted).has_value(), ErrorKind::Precondition,
          "{1,n} is short: not the projective chamber");
  const auto k = r_sorted.size() - 3;
  return {pow(gamma_of(r_sorted), k) / detail::factorial(k), static_cast<int>(k)};
}

/// Combinatorial coefficient divided by the Euclidean volume of the image.
inline Rational volume_ratio_check(const LengthVector& r, const MomentImage& image) {
  require(image.source == r, ErrorKind::Usage, "moment image was built from a different vector");
  require(is_bending_toric(image).toric, ErrorKind::Precondition, "bending action is not toric");
  const auto euclid = euclidean_volume(image.polytope);
  ensure(euclid > 0, "toric moment image with zero volume");
  return combinatorial_volume(r).coefficient / euclid;
}

}  // namespace polywidth
