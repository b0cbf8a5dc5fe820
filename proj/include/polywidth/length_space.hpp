#pragma once

// Combinatorics of edge-length vectors: genericity, short/long index sets,
// chambers of 5-gons and the closed-form width candidate.

#include <ostream>
#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polywidth/error.hpp"
#include "polywidth/rational.hpp"

namespace polywidth {

inline constexpr std::size_t kMaxExhaustiveArity = 20;

/// Edge lengths r_1..r_n of a closed spatial polygon, n >= 4, all positive.
class LengthVector {
 public:
  LengthVector() = default;
  explicit LengthVector(std::vector<Rational> entries) : r_(std::move(entries)) {
    require(r_.size() >= 4, ErrorKind::Usage, "length vector needs n >= 4 entries");
    require(r_.size() <= 63, ErrorKind::Capability, "length vector arity above 63");
    for (const auto& x : r_) require(x > 0, ErrorKind::Usage, "edge lengths must be positive");
  }

  static LengthVector parse(const std::vector<std::string>& tokens) {
    std::vector<Rational> v;
    for (const auto& t : tokens) v.push_back(parse_rational(t));
    return LengthVector(std::move(v));
  }

  std::size_t size() const noexcept { return r_.size(); }
  /// 1-based access, matching the usual edge numbering.
  const Rational& operator()(std::size_t i) const { return r_.at(i - 1); }
  const Rational& operator[](std::size_t i) const { return r_[i]; }
  const std::vector<Rational>& entries() const noexcept { return r_; }

  Rational total() const {
    Rational s = 0;
    for (const auto& x : r_) s += x;
    return s;
  }

  bool is_sorted() const { return std::is_sorted(r_.begin(), r_.end()); }

  friend bool operator==(const LengthVector& a, const LengthVector& b) { return a.r_ == b.r_; }

  friend std::ostream& operator<<(std::ostream& os, const LengthVector& r) {
    os << '(';
    for (std::size_t i = 0; i < r.r_.size(); ++i) os << (i ? "," : "") << r.r_[i];
    return os << ')';
  }

 private:
  std::vector<Rational> r_;
};

/// Subset of {1..n} stored as a bitmask; bit (i-1) represents index i.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {
    require(n <= 63, ErrorKind::Capability, "index sets limited to n <= 63");
    require((mask >> n) == 0, ErrorKind::Usage, "index set element out of range");
  }
  IndexSet(std::size_t n, std::initializer_list<std::size_t> elems) : n_(n) {
    for (auto i : elems) insert(i);
  }
  static IndexSet of(std::size_t n, const std::vector<std::size_t>& elems) {
    IndexSet s(n, 0);
    for (auto i : elems) s.insert(i);
    return s;
  }

  void insert(std::size_t i) {
    require(i >= 1 && i <= n_, ErrorKind::Usage,
            "index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    mask_ |= std::uint64_t{1} << (i - 1);
  }
  bool contains(std::size_t i) const { return i >= 1 && i <= n_ && ((mask_ >> (i - 1)) & 1U); }
  std::size_t arity() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(mask_)); }
  IndexSet complement() const { return IndexSet(n_, ~mask_ & ((std::uint64_t{1} << n_) - 1)); }
  bool is_subset_of(const IndexSet& o) const { return (mask_ & ~o.mask_) == 0; }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  std::string str() const {
    std::string s = "{";
    for (auto i : elements()) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t mask_ = 0;
};

/// epsilon_I(r) = sum_{i in I} r_i - sum_{i not in I} r_i.
inline Rational epsilon(const LengthVector& r, const IndexSet& I) {
  require(I.arity() == r.size(), ErrorKind::Usage, "index set arity does not match vector");
  Rational s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if ((I.mask() >> i) & 1U)
      s += r[i];
    else
      s -= r[i];
  }
  return s;
}

/// Exhaustive wall test. Only half the subsets are visited since
/// epsilon_{I^c} = -epsilon_I.
inline bool is_generic(const LengthVector& r, std::size_t cap = kMaxExhaustiveArity) {
  const auto n = r.size();
  require(n <= cap, ErrorKind::Capability,
          "genericity check limited to n <= " + std::to_string(cap));
  // Subsets not containing n; sums built incrementally over a Gray code.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  Rational sum = 0;
  const Rational half = r.total() / 2;
  std::uint64_t prev = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    if (k > 0) {
      const std::uint64_t flip = gray ^ prev;
      const auto bit = static_cast<std::size_t>(__builtin_ctzll(flip));
      if (gray & flip)
        sum += r[bit];
      else
        sum -= r[bit];
    }
    prev = gray;
    if (sum == half) return false;
  }
  return true;
}

inline void require_generic(const LengthVector& r) {
  require(is_generic(r), ErrorKind::NonGeneric, "length vector lies on a wall (some epsilon_I = 0)");
}

inline bool is_short(const LengthVector& r, const IndexSet& I) {
  const auto e = epsilon(r, I);
  require(e != 0, ErrorKind::NonGeneric, "epsilon vanishes on " + I.str());
  return e < 0;
}

inline bool is_long(const LengthVector& r, const IndexSet& I) { return !is_short(r, I); }

/// Empty moduli space <=> some singleton is long.
inline bool has_long_singleton(const LengthVector& r) {
  const Rational half = r.total() / 2;
  return std::any_of(r.entries().begin(), r.entries().end(), [&](const Rational& x) { return x > half; });
}

inline void require_nonempty(const LengthVector& r) {
  require(!has_long_singleton(r), ErrorKind::EmptySpace,
          "a singleton is long: no closed polygon has these edge lengths");
}

/// All short sets, ordered by mask. Caller guarantees genericity.
inline std::vector<IndexSet> short_sets(const LengthVector& r) {
  const auto n = r.size();
  require(n <= kMaxExhaustiveArity, ErrorKind::Capability, "short-set enumeration limited to n <= 20");
  std::vector<IndexSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    IndexSet I(n, m);
    if (epsilon(r, I) < 0) out.push_back(I);
  }
  return out;
}

inline std::vector<IndexSet> maximal_short_sets(const LengthVector& r) {
  require_generic(r);
  const auto n = r.size();
  std::vector<IndexSet> out;
  for (const auto& I : short_sets(r)) {
    bool maximal = true;
    for (std::size_t i = 1; i <= n && maximal; ++i) {
      if (I.contains(i)) continue;
      IndexSet J = I;
      J.insert(i);
      if (epsilon(r, J) < 0) maximal = false;
    }
    if (maximal) out.push_back(I);
  }
  return out;
}

/// For sorted r: returns n when {n} is maximal short, i.e. {1,n} is long.
inline std::optional<std::size_t> singleton_maximal_short(const LengthVector& r_sorted) {
  require(r_sorted.is_sorted(), ErrorKind::Precondition, "vector must be sorted non-decreasingly");
  require_generic(r_sorted);
  require_nonempty(r_sorted);
  const auto n = r_sorted.size();
  if (epsilon(r_sorted, IndexSet(n, {1, n})) > 0) return n;
  return std::nullopt;
}

struct SortedVector {
  LengthVector sorted;
  /// sorted[k] = input[perm[k]] (0-based).
  std::vector<std::size_t> perm;
};

inline SortedVector sort_with_permutation(const LengthVector& r) {
  std::vector<std::size_t> perm(r.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return r[a] < r[b]; });
  std::vector<Rational> s;
  for (auto p : perm) s.push_back(r[p]);
  return {LengthVector(std::move(s)), std::move(perm)};
}

/// Applies a 1-based index recipe: out_k = r_{recipe[k]}.
inline LengthVector permute(const LengthVector& r, const std::vector<std::size_t>& recipe) {
  require(recipe.size() == r.size(), ErrorKind::Usage, "permutation arity mismatch");
  std::vector<Rational> out;
  for (auto i : recipe) out.push_back(r(i));
  return LengthVector(std::move(out));
}

/// gamma = (sum_{i<n} r_i) - r_n for a sorted vector.
inline Rational gamma_of(const LengthVector& r_sorted) {
  return r_sorted.total() - 2 * r_sorted(r_sorted.size());
}

/// min over j of {2 r_j, (sum_{i != j} r_i) - r_j}, in units of 2*pi.
inline Rational width_formula(const LengthVector& r) {
  require_generic(r);
  const auto total = r.total();
  std::optional<Rational> best;
  for (const auto& x : r.entries()) {
    for (Rational c : {Rational(2 * x), Rational(total - 2 * x)})
      if (!best || c < *best) best = c;
  }
  return *best;
}

enum class Chamber5 { C1, C2, C3, C4, C5, C6 };

inline const char* to_string(Chamber5 c) {
  static constexpr std::array<const char*, 6> names{"C1", "C2", "C3", "C4", "C5", "C6"};
  return names[static_cast<std::size_t>(c)];
}

namespace detail {

struct ChamberListing {
  Chamber5 chamber;
  std::vector<std::vector<std::size_t>> shorts;  // short sets of size 2 and 3
};

// Short sets of size 2 and 3 for sorted generic 5-vectors; all singletons are
// short in every chamber.
inline const std::vector<ChamberListing>& chamber_listings() {
  static const std::vector<ChamberListing> table = {
      {Chamber5::C1, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                      {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
      {Chamber5::C2, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 4},
                      {1, 2, 3}, {1, 2, 4}, {1, 3, 4}}},
      {Chamber5::C3, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                      {1, 2, 3}, {1, 2, 4}, {1, 2, 5}}},
      {Chamber5::C4, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                      {1, 2, 3}, {1, 2, 4}}},
      {Chamber5::C5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                      {1, 2, 3}}},
      {Chamber5::C6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}},
  };
  return table;
}

}  // namespace detail

inline Chamber5 classify_5gon_chamber(const LengthVector& r_sorted) {
  require(r_sorted.size() == 5, ErrorKind::Precondition, "chamber classification needs n = 5");
  require(r_sorted.is_sorted(), ErrorKind::Precondition, "vector must be sorted non-decreasingly");
  require_generic(r_sorted);
  require_nonempty(r_sorted);
  std::vector<IndexSet> observed;
  for (const auto& I : short_sets(r_sorted))
    if (I.size() == 2 || I.size() == 3) observed.push_back(I);
  for (const auto& entry : detail::chamber_listings()) {
    std::vector<IndexSet> listed;
    for (const auto& s : entry.shorts) listed.push_back(IndexSet::of(5, s));
    std::sort(listed.begin(), listed.end());
    if (listed == observed) return entry.chamber;
  }
  throw Error(ErrorKind::Internal, "sorted generic 5-vector matched none of the six chambers");
}

enum class SixGonCondition { A, B, C };

inline const char* to_string(SixGonCondition c) {
  switch (c) {
    case SixGonCondition::A: return "A";
    case SixGonCondition::B: return "B";
    case SixGonCondition::C: return "C";
  }
  return "?";
}

/// Every upper-bound condition that holds for a sorted 6-vector with {1,6}
/// short, in the order A, B, C:
///   A: {1,2,3,4} and {1,2,6} short;
///   B: {1,2,6} and {4,6} long;
///   C: {5,6} and {2,3,6} short.
inline std::vector<SixGonCondition> six_gon_conditions(const LengthVector& r_sorted) {
  require(r_sorted.size() == 6, ErrorKind::Precondition, "six-gon conditions need n = 6");
  require(r_sorted.is_sorted(), ErrorKind::Precondition, "vector must be sorted non-decreasingly");
  require_generic(r_sorted);
  require(is_short(r_sorted, IndexSet(6, {1, 6})), ErrorKind::Precondition,
          "{1,6} must be short (projective chamber handled separately)");
  auto sh = [&](std::initializer_list<std::size_t> e) { return is_short(r_sorted, IndexSet(6, e)); };
  std::vector<SixGonCondition> out;
  if (sh({1, 2, 3, 4}) && sh({1, 2, 6})) out.push_back(SixGonCondition::A);
  if (!sh({1, 2, 6}) && !sh({4, 6})) out.push_back(SixGonCondition::B);
  if (sh({5, 6}) && sh({2, 3, 6})) out.push_back(SixGonCondition::C);
  return out;
}

inline std::optional<SixGonCondition> first_six_gon_condition(const LengthVector& r_sorted) {
  auto all = six_gon_conditions(r_sorted);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace polywidth
