#pragma once

// Moment polytopes of bending actions: the caterpillar system (diagonals
// from the first vertex) and the three-pairs system for hexagons, plus the
// vertex charts, toricity test and reshuffles used by the width module.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polywidth/error.hpp"
#include "polywidth/length_space.hpp"
#include "polywidth/polytope.hpp"

namespace polywidth {

enum class DiagonalSystem { Caterpillar, TriplePairs6 };

inline const char* to_string(DiagonalSystem s) {
  return s == DiagonalSystem::Caterpillar ? "caterpillar" : "triple-pairs-6";
}

struct MomentImage {
  HPolytope polytope;
  DiagonalSystem system;
  LengthVector source;
};

namespace detail {

// Affine form sum coef[k] x_k + constant over the diagonal coordinates.
struct AffineForm {
  std::vector<std::int64_t> coef;
  Rational constant;
};

inline AffineForm operator+(AffineForm a, const AffineForm& b) {
  for (std::size_t k = 0; k < a.coef.size(); ++k) a.coef[k] += b.coef[k];
  a.constant += b.constant;
  return a;
}

inline AffineForm operator-(AffineForm a, const AffineForm& b) {
  for (std::size_t k = 0; k < a.coef.size(); ++k) a.coef[k] -= b.coef[k];
  a.constant -= b.constant;
  return a;
}

// form >= 0 as a halfspace; nullopt when the form is constant.
inline std::optional<HalfSpace> nonnegative(const AffineForm& f) {
  if (gcd_of(f.coef) == 0) {
    require(f.constant >= 0, ErrorKind::Internal, "constant triangle inequality violated");
    return std::nullopt;
  }
  return HalfSpace{f.coef, -f.constant};
}

inline HPolytope prune_if_solid(HPolytope p) {
  if (p.full_dimensional()) return p.pruned();
  return p;
}

}  // namespace detail

/// Triangle inequalities for (d_i, r_{i+2}, d_{i+1}), i = 0..n-3, where
/// d_0 = r_1 and d_{n-2} = r_n are constants and d_1..d_{n-3} are coordinates.
inline std::vector<HalfSpace> caterpillar_halfspaces(const LengthVector& r) {
  const auto n = r.size();
  require_generic(r);
  const auto d = n - 3;
  auto diag = [&](std::size_t k) {
    detail::AffineForm f{std::vector<std::int64_t>(d, 0), 0};
    if (k == 0)
      f.constant = r(1);
    else if (k == n - 2)
      f.constant = r(n);
    else
      f.coef[k - 1] = 1;
    return f;
  };
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i + 3 <= n; ++i) {
    const auto a = diag(i), b = diag(i + 1);
    const detail::AffineForm edge{std::vector<std::int64_t>(d, 0), r(i + 2)};
    for (const auto& f : {a + b - edge, edge + b - a, edge + a - b})
      if (auto h = detail::nonnegative(f)) hs.push_back(*h);
  }
  return hs;
}

/// Pruned to facets when full-dimensional.
inline MomentImage caterpillar_polytope(const LengthVector& r) {
  return {detail::prune_if_solid(HPolytope(r.size() - 3, caterpillar_halfspaces(r))), DiagonalSystem::Caterpillar, r};
}

inline bool is_partially_ordered_6(const LengthVector& r) {
  return r.size() == 6 && r(1) <= r(2) && r(3) <= r(4) && r(5) <= r(6);
}

inline bool is_partially_ordered_5(const LengthVector& r) {
  return r.size() == 5 && r(1) <= r(2) && r(4) <= r(5);
}

/// Cuboid vertex v_k (k = 1..8) for a partially ordered hexagon vector.
inline Point cuboid_vertex(const LengthVector& r, std::size_t k) {
  const Rational lo1 = r(2) - r(1), hi1 = r(2) + r(1);
  const Rational lo2 = r(4) - r(3), hi2 = r(4) + r(3);
  const Rational lo3 = r(6) - r(5), hi3 = r(6) + r(5);
  switch (k) {
    case 1: return {lo1, lo2, lo3};
    case 2: return {hi1, lo2, lo3};
    case 3: return {hi1, hi2, lo3};
    case 4: return {lo1, hi2, lo3};
    case 5: return {lo1, lo2, hi3};
    case 6: return {hi1, lo2, hi3};
    case 7: return {hi1, hi2, hi3};
    case 8: return {lo1, hi2, hi3};
  }
  throw Error(ErrorKind::Usage, "cuboid vertex index must be 1..8");
}

/// Inward normal of H_j: sum d_i >= 2 d_j.
inline IntVec hyperplane_normal_6(std::size_t j) {
  IntVec w{1, 1, 1};
  w.at(j - 1) = -1;
  return w;
}

/// C intersected with H_1+, H_2+, H_3+.
inline MomentImage triple_pairs_polytope_6(const LengthVector& r) {
  require(r.size() == 6, ErrorKind::Usage, "three-pairs system needs n = 6");
  require(is_partially_ordered_6(r), ErrorKind::Precondition,
          "three-pairs system needs r1<=r2, r3<=r4, r5<=r6");
  require_generic(r);
  auto cube = box(cuboid_vertex(r, 1), cuboid_vertex(r, 7));
  auto hs = cube.halfspaces();
  for (std::size_t j = 1; j <= 3; ++j) hs.push_back({hyperplane_normal_6(j), 0});
  return {detail::prune_if_solid(HPolytope(3, std::move(hs))), DiagonalSystem::TriplePairs6, r};
}

using VertexChart6 = std::array<std::array<bool, 3>, 8>;
using RectangleChart5 = std::array<std::array<bool, 3>, 4>;

namespace detail {

// Row k, column j: the set whose shortness puts v_{k+1} in H_{j+1}+.
inline const std::array<std::array<std::vector<std::size_t>, 3>, 8>& vertex_chart_6_listing() {
  static const std::array<std::array<std::vector<std::size_t>, 3>, 8> t{{
      {{{2, 3, 5}, {1, 4, 5}, {1, 3, 6}}},
      {{{1, 2, 3, 5}, {4, 5}, {3, 6}}},
      {{{1, 2, 5}, {3, 4, 5}, {6}}},
      {{{2, 5}, {1, 3, 4, 5}, {1, 6}}},
      {{{2, 3}, {1, 4}, {1, 3, 5, 6}}},
      {{{1, 2, 3}, {4}, {3, 5, 6}}},
      {{{1, 2}, {3, 4}, {5, 6}}},
      {{{2}, {1, 3, 4}, {1, 5, 6}}},
  }};
  return t;
}

// Rectangle corners A..D against the three Omega halfplanes
// d2 >= d1 - r3, d2 >= -d1 + r3, d2 <= d1 + r3. Row B lists {1,2,4} and
// {3,4}: the complements of {3,5} and {1,2,5}, which must be long there.
inline const std::array<std::array<std::vector<std::size_t>, 3>, 4>& rectangle_chart_5_listing() {
  static const std::array<std::array<std::vector<std::size_t>, 3>, 4> t{{
      {{{2, 4}, {1, 3, 4}, {1, 5}}},
      {{{1, 2, 4}, {3, 4}, {5}}},
      {{{1, 2}, {3}, {4, 5}}},
      {{{2}, {1, 3}, {1, 4, 5}}},
  }};
  return t;
}

}  // namespace detail

/// Membership of v_1..v_8 in H_1+..H_3+, computed directly and from the
/// short-set chart; a disagreement is an internal error.
inline VertexChart6 vertex_chart_6(const LengthVector& r) {
  require(is_partially_ordered_6(r), ErrorKind::Precondition, "chart needs r1<=r2, r3<=r4, r5<=r6");
  require_generic(r);
  VertexChart6 out{};
  const auto& listing = detail::vertex_chart_6_listing();
  for (std::size_t k = 0; k < 8; ++k) {
    const auto v = cuboid_vertex(r, k + 1);
    for (std::size_t j = 0; j < 3; ++j) {
      const bool direct = dot(hyperplane_normal_6(j + 1), v) >= 0;
      const bool chart = is_short(r, IndexSet::of(6, listing[k][j]));
      ensure(direct == chart, "hexagon vertex chart disagrees with direct evaluation at v" +
                                  std::to_string(k + 1) + ", H" + std::to_string(j + 1));
      out[k][j] = direct;
    }
  }
  return out;
}

/// Rectangle corners A, B, C, D for a partially ordered pentagon vector.
inline std::array<Point, 4> rectangle_corners_5(const LengthVector& r) {
  const Rational x0 = r(2) - r(1), x1 = r(2) + r(1);
  const Rational y0 = r(5) - r(4), y1 = r(5) + r(4);
  return {Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}};
}

/// The three Omega halfplanes as inward halfspaces.
inline std::array<HalfSpace, 3> omega_halfspaces_5(const LengthVector& r) {
  return {HalfSpace{{-1, 1}, -r(3)}, HalfSpace{{1, 1}, r(3)}, HalfSpace{{1, -1}, -r(3)}};
}

inline RectangleChart5 rectangle_chart_5(const LengthVector& r) {
  require(is_partially_ordered_5(r), ErrorKind::Precondition, "chart needs r1<=r2, r4<=r5");
  require_generic(r);
  RectangleChart5 out{};
  const auto corners = rectangle_corners_5(r);
  const auto omega = omega_halfspaces_5(r);
  const auto& listing = detail::rectangle_chart_5_listing();
  static constexpr const char* names = "ABCD";
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t j = 0; j < 3; ++j) {
      const bool direct = omega[j].contains(corners[k]);
      const bool chart = is_short(r, IndexSet::of(5, listing[k][j]));
      ensure(direct == chart, std::string("pentagon rectangle chart disagrees at ") + names[k] +
                                  ", halfplane " + std::to_string(j + 1));
      out[k][j] = direct;
    }
  }
  return out;
}

struct ToricityCheck {
  bool toric = false;
  std::vector<Rational> minima;  // min of each diagonal over the image
  std::vector<Point> witness;    // a vertex attaining each minimum
};

/// The bending action is toric iff no diagonal vanishes on the image.
inline ToricityCheck is_bending_toric(const MomentImage& m) {
  const auto& p = m.polytope;
  require(!p.empty(), ErrorKind::EmptySpace, "moment image is empty");
  ToricityCheck out;
  out.toric = true;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    const Point* best = &p.vertices().front();
    for (const auto& v : p.vertices())
      if (v[k] < (*best)[k]) best = &v;
    out.minima.push_back((*best)[k]);
    out.witness.push_back(*best);
    if ((*best)[k] <= 0) out.toric = false;
  }
  return out;
}

inline MomentImage build_moment_image(const LengthVector& r, DiagonalSystem s) {
  return s == DiagonalSystem::Caterpillar ? caterpillar_polytope(r) : triple_pairs_polytope_6(r);
}

enum class Reshuffle { C2, C3, C4, C5, C6, SixGonA, SixGonBC };

inline const char* to_string(Reshuffle c) {
  switch (c) {
    case Reshuffle::C2: return "C2";
    case Reshuffle::C3: return "C3";
    case Reshuffle::C4: return "C4";
    case Reshuffle::C5: return "C5";
    case Reshuffle::C6: return "C6";
    case Reshuffle::SixGonA: return "six-gon-A";
    case Reshuffle::SixGonBC: return "six-gon-BC";
  }
  return "?";
}

/// 1-based recipe: the reshuffled vector is (r_{p_1}, ..., r_{p_n}).
inline std::vector<std::size_t> reshuffle_recipe(std::size_t n, Reshuffle c) {
  const bool six = c == Reshuffle::SixGonA || c == Reshuffle::SixGonBC;
  require(n == (six ? 6u : 5u), ErrorKind::Usage, std::string("reshuffle ") + to_string(c) + " has wrong arity");
  switch (c) {
    case Reshuffle::C2:
    case Reshuffle::C6: return {1, 2, 3, 4, 5};
    case Reshuffle::C3: return {2, 3, 4, 1, 5};
    case Reshuffle::C4: return {2, 3, 1, 4, 5};
    case Reshuffle::C5: return {3, 4, 1, 2, 5};
    case Reshuffle::SixGonA: return {1, 6, 2, 5, 3, 4};
    case Reshuffle::SixGonBC: return {1, 4, 2, 5, 3, 6};
  }
  throw Error(ErrorKind::Usage, "unknown reshuffle");
}

inline Reshuffle reshuffle_for(Chamber5 c) {
  switch (c) {
    case Chamber5::C2: return Reshuffle::C2;
    case Chamber5::C3: return Reshuffle::C3;
    case Chamber5::C4: return Reshuffle::C4;
    case Chamber5::C5: return Reshuffle::C5;
    case Chamber5::C6: return Reshuffle::C6;
    case Chamber5::C1: break;
  }
  throw Error(ErrorKind::Precondition, "projective chamber C1 has no reshuffle");
}

/// Length families along which ties are broken:
///   n = 5: (r1, r2+t, r3, r4, r5+t);   n = 6: (r1, r2, r3, r4+t, r5+t, r6+t).
inline LengthVector perturbation_family(const LengthVector& r, const Rational& t) {
  std::vector<Rational> v = r.entries();
  if (r.size() == 5) {
    v[1] += t;
    v[4] += t;
  } else if (r.size() == 6) {
    v[3] += t;
    v[4] += t;
    v[5] += t;
  } else {
    throw Error(ErrorKind::Usage, "perturbation families exist for n = 5 and n = 6 only");
  }
  return LengthVector(std::move(v));
}

struct Perturbation {
  LengthVector perturbed;  // r(t), before the recipe
  Rational t;
};

namespace detail {

inline bool same_signature(const LengthVector& a, const LengthVector& b) {
  const auto n = a.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    IndexSet I(n, m);
    if (sgn(epsilon(a, I)) != sgn(epsilon(b, I))) return false;
  }
  return true;
}

}  // namespace detail

/// r(t) is generic, has the same short sets as r, and the reshuffled r(t)
/// carries a toric action for the given system.
inline bool perturbation_valid(const LengthVector& r, const LengthVector& rt, DiagonalSystem s,
                               const std::vector<std::size_t>& recipe) {
  if (!is_generic(rt) || !detail::same_signature(r, rt)) return false;
  const auto shuffled = permute(rt, recipe);
  if (s == DiagonalSystem::TriplePairs6 && !is_partially_ordered_6(shuffled)) return false;
  return is_bending_toric(build_moment_image(shuffled, s)).toric;
}

/// Smallest-effort exact t > 0 from the family above. Returns t = 0 and r
/// itself when the reshuffled r is already toric.
inline Perturbation perturb_for_toricity(const LengthVector& r, DiagonalSystem s,
                                         const std::vector<std::size_t>& recipe) {
  require_generic(r);
  {
    const auto shuffled = permute(r, recipe);
    if (s == DiagonalSystem::Caterpillar || is_partially_ordered_6(shuffled))
      if (is_bending_toric(build_moment_image(shuffled, s)).toric) return {r, 0};
  }
  std::optional<Rational> slack;
  auto consider = [&](const Rational& x) {
    const auto a = abs(x);
    if (a > 0 && (!slack || a < *slack)) slack = a;
  };
  const auto n = r.size();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) consider(epsilon(r, IndexSet(n, m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) consider(r[i] - r[j]);
  ensure(slack.has_value(), "generic vector without positive slack");
  Rational t = *slack / 2;
  for (int attempt = 0; attempt <= 20; ++attempt, t /= 2) {
    auto rt = perturbation_family(r, t);
    if (perturbation_valid(r, rt, s, recipe)) return {std::move(rt), t};
  }
  throw Error(ErrorKind::Precondition, "no toric perturbation found after 20 halvings");
}

}  // namespace polywidth
