#pragma once

// Gromov width bounds, in units of 2*pi.
//
// Lower bounds come from axis-aligned crosses inside a moment polytope (the
// convex hull of the cross is then a diamond-like region). Upper bounds come
// from the Upsilon invariant of a Fano fan, or of a Fano fan that the actual
// fan blows up, from cuboid-facet containment for hexagons, and from the
// projective normal form.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "polywidth/bending.hpp"
#include "polywidth/error.hpp"
#include "polywidth/length_space.hpp"
#include "polywidth/lp.hpp"
#include "polywidth/polytope.hpp"

namespace polywidth {

inline constexpr std::size_t kMaxLowerBoundArity = 8;

// ---------------------------------------------------------------- crosses

/// Center c and arms c - t_minus e_j .. c + t_plus e_j, all of length a.
struct CrossFit {
  Rational a;
  Point center;
  std::vector<std::pair<Rational, Rational>> arms;  // (t_minus, t_plus)
};

/// Every arm endpoint lies in P and every arm has length a.
inline bool replay_cross(const HPolytope& p, const CrossFit& fit) {
  if (fit.center.size() != p.dim() || fit.arms.size() != p.dim()) return false;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    const auto& [lo, hi] = fit.arms[j];
    if (lo < 0 || hi < 0 || lo + hi != fit.a) return false;
    Point minus = fit.center, plus = fit.center;
    minus[j] -= lo;
    plus[j] += hi;
    if (!p.contains(minus) || !p.contains(plus)) return false;
  }
  return true;
}

inline Point vertex_centroid(const HPolytope& p) {
  require(!p.empty(), ErrorKind::Geometry, "centroid of an empty polytope");
  Point c(p.dim(), Rational(0));
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < c.size(); ++j) c[j] += v[j];
  for (auto& x : c) x /= static_cast<unsigned long>(p.vertices().size());
  return c;
}

/// Largest a such that some axis cross with all arms of length a fits in P.
///
/// Variables (y+, y-, t+, t-, a) >= 0 with center c0 + y+ - y-, where c0 is
/// the vertex centroid; every constraint then has a nonnegative right side.
inline CrossFit max_axis_cross(const HPolytope& p) {
  require(!p.empty(), ErrorKind::Geometry, "cross fitting needs a nonempty polytope");
  require(p.full_dimensional(), ErrorKind::Geometry, "cross fitting needs a full-dimensional polytope");
  const auto d = p.dim();
  const auto c0 = vertex_centroid(p);
  const std::size_t nv = 4 * d + 1, ia = 4 * d;
  auto yp = [](std::size_t j) { return j; };
  auto ym = [d](std::size_t j) { return d + j; };
  auto tp = [d](std::size_t j) { return 2 * d + j; };
  auto tm = [d](std::size_t j) { return 3 * d + j; };

  LinearProgram lp;
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  auto add_row = [&](Point row, Rational rhs) {
    if (seen.emplace(row, rhs).second) {
      lp.a.push_back(std::move(row));
      lp.b.push_back(std::move(rhs));
    }
  };
  for (const auto& h : p.halfspaces()) {
    const Rational slack = dot(h.normal, c0) - h.offset;
    for (std::size_t j = 0; j < d; ++j) {
      Point base(nv, Rational(0));
      for (std::size_t i = 0; i < d; ++i) {
        base[yp(i)] = -h.normal[i];
        base[ym(i)] = h.normal[i];
      }
      Point plus = base, minus = base;
      plus[tp(j)] = -h.normal[j];
      minus[tm(j)] = h.normal[j];
      add_row(std::move(plus), slack);
      add_row(std::move(minus), slack);
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    Point row(nv, Rational(0));
    row[ia] = 1;
    row[tp(j)] = -1;
    row[tm(j)] = -1;
    add_row(std::move(row), 0);
  }
  lp.c.assign(nv, Rational(0));
  lp.c[ia] = 1;

  auto sol = solve_lp(lp);
  ensure(sol.has_value(), "cross LP unbounded on a bounded polytope");
  CrossFit fit;
  fit.a = sol->value;
  for (std::size_t j = 0; j < d; ++j) {
    fit.center.push_back(c0[j] + sol->x[yp(j)] - sol->x[ym(j)]);
    const Rational hi = min(sol->x[tp(j)], fit.a);
    fit.arms.emplace_back(fit.a - hi, hi);
  }
  ensure(replay_cross(p, fit), "cross LP solution fails replay");
  return fit;
}

/// Point through which all axis segments of P have length >= 2 r_1.
struct CrossWitness {
  Point center;
  std::vector<Rational> lengths;  // axis segment lengths through center
};

inline CrossWitness measure_witness(const HPolytope& p, Point center) {
  CrossWitness w{std::move(center), {}};
  for (std::size_t j = 0; j < p.dim(); ++j) {
    auto seg = axis_segment(p, w.center, j);
    ensure(seg.has_value(), "witness point lies outside the moment polytope");
    w.lengths.push_back(seg->second - seg->first);
  }
  return w;
}

/// Pentagon witness: d2 from the horizontal-segment window, d1 from the
/// case split on r3 versus r1 + r2.
inline CrossWitness paper_cross_witness_5(const LengthVector& r) {
  require(r.size() == 5 && r.is_sorted(), ErrorKind::Precondition, "needs a sorted pentagon vector");
  require_generic(r);
  require(is_short(r, IndexSet(5, {1, 5})), ErrorKind::Precondition, "{1,5} must be short");
  const Rational d2lo = max(r(3) - r(2) + r(1), r(5) - r(4));
  const Rational d2hi = min(r(2) + r(3) - r(1), r(4) + r(5));
  ensure(d2lo <= d2hi, "empty window for the horizontal segment");
  Rational d1;
  if (r(3) < r(1) + r(2)) {
    const Rational lo = max(2 * r(1) - r(3) - r(4) + r(5), r(3));
    const Rational hi = min(r(5) + r(4) + r(3) - 2 * r(1), r(1) + r(2));
    ensure(lo <= hi, "empty window for the vertical segment");
    d1 = (lo + hi) / 2;
  } else {
    d1 = r(1) + r(2);
  }
  auto w = measure_witness(caterpillar_polytope(r).polytope, {d1, (d2lo + d2hi) / 2});
  for (const auto& l : w.lengths) ensure(l >= 2 * r(1), "pentagon witness arm shorter than 2 r1");
  return w;
}

/// Hexagon witness: the vertex average of the (d1, d2, d3) region on which
/// the full d1 interval [r2 - r1, r2 + r1] lies in the image and the d2, d3
/// segments through the point have length >= 2 r1, with d2, d3 >= d1 >= r1.
inline CrossWitness paper_cross_witness_6(const LengthVector& r) {
  require(r.size() == 6 && r.is_sorted(), ErrorKind::Precondition, "needs a sorted hexagon vector");
  require_generic(r);
  require(is_short(r, IndexSet(6, {1, 6})), ErrorKind::Precondition, "{1,6} must be short");
  const std::vector<HalfSpace> region{
      {{1, 0, 0}, r(1)},
      {{1, 0, 0}, r(2) - r(1)},
      {{-1, 0, 0}, -(r(1) + r(2))},
      // d2 in [A1, A2]
      {{0, 1, 0}, r(4) - r(3)},
      {{1, 1, 0}, 2 * r(1) - r(5) + r(6)},
      {{-1, 1, 0}, 0},
      {{0, -1, 0}, -(r(3) + r(4))},
      {{1, -1, 0}, 2 * r(1) - r(5) - r(6)},
      // d3 in [B1, B2]
      {{0, 0, 1}, r(6) - r(5)},
      {{1, 0, 1}, 2 * r(1) - r(3) + r(4)},
      {{-1, 0, 1}, 0},
      {{0, 0, -1}, -(r(5) + r(6))},
      {{1, 0, -1}, 2 * r(1) - r(3) - r(4)},
      // triangles (r2 - r1, d2, d3) and (r2 + r1, d2, d3)
      {{0, 1, -1}, r(1) - r(2)},
      {{0, -1, 1}, r(1) - r(2)},
      {{0, 1, 1}, r(1) + r(2)},
  };
  const HPolytope window(3, region);
  ensure(!window.empty(), "empty window for (d1, d2, d3)");
  auto w = measure_witness(triple_pairs_polytope_6(r).polytope, vertex_centroid(window));
  for (const auto& l : w.lengths) ensure(l >= 2 * r(1), "hexagon witness arm shorter than 2 r1");
  return w;
}

// --------------------------------------------------------------- upsilon

struct UpsilonCertificate {
  std::vector<IntVec> rays;
  std::vector<Rational> lambda;
  IntVec relation;  // a_k >= 0 with sum a_k u_k = 0
  Rational value;   // -sum lambda_k a_k
  std::size_t cap = 0;
  bool at_cap = false;  // minimum attained at total degree = cap
};

/// Minimum positive -sum lambda_k a_k over relations sum a_k u_k = 0 with
/// a_k >= 0 and sum a_k <= cap.
inline std::optional<UpsilonCertificate> upsilon(const Fan& fan, const SupportFunction& lambda, std::size_t cap) {
  require(lambda.lambda.size() == fan.rays.size(), ErrorKind::Usage, "support function does not match the fan");
  require(cap >= 2, ErrorKind::Usage, "Upsilon cap must be at least 2");
  const auto m = fan.rays.size();
  std::optional<UpsilonCertificate> best;
  IntVec a(m, 0);
  IntVec sum(fan.dim, 0);

  auto visit = [&](auto&& self, std::size_t k, std::size_t used) -> void {
    if (k == m) {
      if (used == 0 || std::any_of(sum.begin(), sum.end(), [](auto x) { return x != 0; })) return;
      Rational value = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (a[i] != 0) value -= lambda.lambda[i] * static_cast<long>(a[i]);
      if (value <= 0) return;
      if (!best || value < best->value)
        best = UpsilonCertificate{fan.rays, lambda.lambda, a, value, cap, used == cap};
      return;
    }
    for (std::size_t c = 0; used + c <= cap; ++c) {
      a[k] = static_cast<std::int64_t>(c);
      self(self, k + 1, used + c);
      for (std::size_t j = 0; j < fan.dim; ++j) sum[j] += fan.rays[k][j];
    }
    for (std::size_t j = 0; j < fan.dim; ++j) sum[j] -= fan.rays[k][j] * static_cast<std::int64_t>(cap - used + 1);
    a[k] = 0;
  };
  visit(visit, 0, 0);
  return best;
}

inline bool replay_upsilon(const UpsilonCertificate& c) {
  if (c.relation.size() != c.rays.size() || c.lambda.size() != c.rays.size() || c.rays.empty()) return false;
  IntVec sum(c.rays.front().size(), 0);
  Rational value = 0;
  for (std::size_t k = 0; k < c.rays.size(); ++k) {
    if (c.relation[k] < 0) return false;
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += c.relation[k] * c.rays[k][j];
    value -= c.lambda[k] * static_cast<long>(c.relation[k]);
  }
  return std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; }) && value == c.value && value > 0;
}

// ---------------------------------------------------- fano / blowup bound

struct ToricUpperBound {
  Rational value;
  UpsilonCertificate upsilon;
  bool fano = false;                // the polytope's own fan is Fano
  std::vector<HalfSpace> coarse;    // Fano polytope it blows up; empty when fano
  std::vector<BlowupStep> chain;    // star subdivisions from coarse to fine
  std::vector<HalfSpace> fine;      // facets of the polytope being bounded
};

/// Re-derives the Upsilon value and, for blowups, the chain from coarse to fine.
inline bool replay_toric_bound(const ToricUpperBound& b, std::size_t dim) {
  if (!replay_upsilon(b.upsilon) || b.upsilon.value != b.value) return false;
  const Fan fine = normal_fan(HPolytope(dim, b.fine));
  if (b.fano) return is_fano(fine) && fine.ray_set() == std::set<IntVec>(b.upsilon.rays.begin(), b.upsilon.rays.end());
  const Fan coarse = normal_fan(HPolytope(dim, b.coarse));
  return is_fano(coarse) && replay_blowup_chain(fine, coarse, b.chain);
}

/// Upsilon bound for a Delzant polytope whose fan is Fano, or else for the
/// best Fano polytope obtained by dropping up to three facets such that the
/// actual fan is an iterated blowup of the dropped-facet fan.
inline std::optional<ToricUpperBound> upper_bound_via_fano_or_blowup(const HPolytope& polytope, std::size_t cap) {
  if (polytope.empty() || !polytope.full_dimensional()) return std::nullopt;
  const auto p = polytope.pruned();
  Fan fan;
  try {
    fan = normal_fan(p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Geometry) return std::nullopt;
    throw;
  }
  if (!fan.is_smooth()) return std::nullopt;
  const auto lambda = support_function(p);

  if (is_fano(fan)) {
    auto u = upsilon(fan, lambda, cap);
    if (!u) return std::nullopt;
    return ToricUpperBound{u->value, *u, true, {}, {}, p.halfspaces()};
  }

  std::optional<ToricUpperBound> best;
  const auto m = fan.rays.size();
  for (std::size_t drop = 1; drop <= 3 && drop < m; ++drop) {
    detail::for_each_combination(m, drop, [&](const std::vector<std::size_t>& removed) {
      std::vector<HalfSpace> kept;
      for (std::size_t k = 0; k < m; ++k)
        if (!std::binary_search(removed.begin(), removed.end(), k)) kept.push_back({fan.rays[k], lambda.lambda[k]});
      if (kept.size() < p.dim() + 1) return;
      std::optional<HPolytope> coarse;
      try {
        coarse.emplace(p.dim(), kept);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Unbounded) return;
        throw;
      }
      if (coarse->empty() || !coarse->full_dimensional() || coarse->facet_indices().size() != kept.size()) return;
      Fan cfan;
      try {
        cfan = normal_fan(*coarse);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Geometry) return;
        throw;
      }
      if (!cfan.is_smooth() || !is_fano(cfan)) return;
      auto chain = blowup_chain(fan, cfan);
      if (!chain) return;
      auto u = upsilon(cfan, support_function(*coarse), cap);
      if (!u) return;
      if (!best || u->value < best->value) best = ToricUpperBound{u->value, *u, false, kept, *chain, p.halfspaces()};
    });
  }
  return best;
}

// ------------------------------------------------------ facet containment

/// Top facet of the cuboid for sigma(r) = (r1, r6, r2, r5, r3, r4) lies in
/// every H_j+, and its short edge has length 2 r1.
struct FacetWitness {
  LengthVector reshuffled;
  std::array<Point, 4> vertices;              // v5, v6, v7, v8
  std::array<std::array<bool, 3>, 4> inside;  // vertex k in H_j+
  Rational edge;                              // 2 r1
  bool toric = false;                         // r3 != r4
};

inline bool replay_facet_witness(const FacetWitness& w) {
  for (std::size_t k = 0; k < 4; ++k) {
    if (w.vertices[k] != cuboid_vertex(w.reshuffled, k + 5)) return false;
    for (std::size_t j = 0; j < 3; ++j)
      if (!w.inside[k][j] || dot(hyperplane_normal_6(j + 1), w.vertices[k]) < 0) return false;
  }
  return w.edge == 2 * w.reshuffled(1);
}

inline std::optional<FacetWitness> upper_bound_gw_hypothesis(const LengthVector& r) {
  require(r.size() == 6 && r.is_sorted(), ErrorKind::Precondition, "needs a sorted hexagon vector");
  require_generic(r);
  require(is_short(r, IndexSet(6, {1, 6})), ErrorKind::Precondition, "{1,6} must be short");
  if (!is_short(r, IndexSet(6, {1, 2, 6})) || !is_short(r, IndexSet(6, {1, 2, 3, 4}))) return std::nullopt;
  FacetWitness w{permute(r, reshuffle_recipe(6, Reshuffle::SixGonA)), {}, {}, 2 * r(1), r(3) != r(4)};
  for (std::size_t k = 0; k < 4; ++k) {
    w.vertices[k] = cuboid_vertex(w.reshuffled, k + 5);
    for (std::size_t j = 0; j < 3; ++j) w.inside[k][j] = dot(hyperplane_normal_6(j + 1), w.vertices[k]) >= 0;
  }
  for (const auto& row : w.inside)
    for (bool b : row)
      if (!b) return std::nullopt;
  return w;
}

// ------------------------------------------------------------ projective

/// The caterpillar image equals F(simplex of size gamma) for the integral
/// matrix F below (rows 1..k-1 have -1 in columns 1..row, last row e_k).
struct ProjectiveForm {
  Rational gamma;
  IntMatrix f;
  Point shift;
  bool simplex_match = false;
};

inline ProjectiveForm projective_form(const LengthVector& r) {
  const auto n = r.size();
  const auto k = n - 3;
  ProjectiveForm pf{gamma_of(r), IntMatrix(k, IntVec(k, 0)), Point(k), false};
  Rational partial = r(1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) pf.f[i][j] = -1;
    partial += r(i + 2);
    pf.shift[i] = partial;
  }
  pf.f[k - 1][k - 1] = 1;
  pf.shift[k - 1] = r(n) - r(n - 1);
  const auto image = apply_unimodular(standard_simplex(k, pf.gamma), pf.f, pf.shift);
  pf.simplex_match = same_polytope(image, caterpillar_polytope(r).polytope);
  return pf;
}

// ---------------------------------------------------------------- report

struct IntervalForm {
  Rational lo, hi;
};

using UpperCertificate = std::variant<ToricUpperBound, FacetWitness, ProjectiveForm, IntervalForm>;

struct WidthReport {
  LengthVector input;
  LengthVector sorted;
  std::vector<std::size_t> perm;
  Rational lower;
  std::optional<Rational> upper;
  std::optional<Rational> exact;
  Rational conjectured;
  std::optional<CrossFit> cross;
  std::optional<CrossWitness> witness;
  std::optional<UpperCertificate> certificate;
  std::string lower_provenance;
  std::string upper_provenance;
  std::optional<Chamber5> chamber;
  std::vector<SixGonCondition> conditions;
  std::vector<Rational> perturbation;  // t values used by the two-t protocol
  std::vector<std::string> explain;
};

inline WidthReport projective_width(const LengthVector& r) {
  require(r.is_sorted(), ErrorKind::Precondition, "needs a sorted vector");
  require(singleton_maximal_short(r).has_value(), ErrorKind::Precondition, "{1,n} is short: not projective");
  WidthReport rep;
  rep.input = rep.sorted = r;
  rep.perm.resize(r.size());
  std::iota(rep.perm.begin(), rep.perm.end(), 0);
  const auto g = gamma_of(r);
  rep.lower = g;
  rep.upper = g;
  rep.exact = g;
  rep.conjectured = width_formula(r);
  rep.lower_provenance = rep.upper_provenance = "projective-chamber";
  auto pf = projective_form(r);
  rep.explain.push_back("{1," + std::to_string(r.size()) + "} is long: the space is projective, width gamma = " +
                        to_string(g));
  rep.explain.push_back(std::string("caterpillar image ") + (pf.simplex_match ? "equals" : "DIFFERS FROM") +
                        " the unimodular image of the simplex of size gamma");
  rep.certificate = std::move(pf);
  return rep;
}

namespace detail {

struct BoundAtT {
  std::optional<Rational> value;
  std::optional<UpperCertificate> certificate;
};

// Evaluates `bound` on r, or on r(t) and r(t/2) when the reshuffled r is not
// toric; the two perturbed values must agree exactly.
template <class F>
BoundAtT with_perturbation(const LengthVector& r, DiagonalSystem s, const std::vector<std::size_t>& recipe,
                           WidthReport& rep, const std::string& label, F&& bound) {
  const auto pert = perturb_for_toricity(r, s, recipe);
  if (pert.t == 0) return bound(r);
  const Rational half = pert.t / 2;
  const auto r_half = perturbation_family(r, half);
  ensure(perturbation_valid(r, r_half, s, recipe), "perturbation invalid at t/2");
  auto first = bound(pert.perturbed);
  auto second = bound(r_half);
  rep.perturbation.push_back(pert.t);
  rep.perturbation.push_back(half);
  rep.explain.push_back(label + ": ties broken along the length family at t = " + to_string(pert.t) + " and " +
                        to_string(half));
  if (first.value != second.value) {
    rep.explain.push_back(label + ": bounds at the two t values differ, bound rejected");
    return {};
  }
  return first;
}

inline BoundAtT toric_bound(const LengthVector& shuffled, DiagonalSystem s, std::size_t cap) {
  auto ub = upper_bound_via_fano_or_blowup(build_moment_image(shuffled, s).polytope, cap);
  if (!ub) return {};
  return {ub->value, UpperCertificate{*ub}};
}

inline void finish(WidthReport& rep) {
  if (rep.upper && *rep.upper == rep.lower) rep.exact = rep.lower;
  if (rep.upper && rep.lower > *rep.upper) rep.explain.push_back("INCONSISTENT: lower bound exceeds upper bound");
}

inline void lower_from_cross(WidthReport& rep, const HPolytope& p) {
  rep.cross = max_axis_cross(p);
  rep.lower = rep.cross->a;
  rep.lower_provenance = "axis-cross-lp";
  rep.explain.push_back("lower: an axis cross with arms of length " + to_string(rep.cross->a) +
                        " fits in the moment polytope");
}

}  // namespace detail

/// Full report for any generic vector with a nonempty space.
inline WidthReport gromov_width_report(const LengthVector& input, std::size_t cap) {
  require_generic(input);
  require_nonempty(input);
  auto sorted = sort_with_permutation(input);
  const auto& r = sorted.sorted;
  const auto n = r.size();

  WidthReport rep;
  if (singleton_maximal_short(r)) {
    rep = projective_width(r);
  } else if (n == 4) {
    const auto verts = caterpillar_polytope(r).polytope.vertices();
    ensure(verts.size() == 2, "four-gon image is not an interval");
    const IntervalForm iv{verts.front()[0], verts.back()[0]};
    rep.lower = iv.hi - iv.lo;
    rep.upper = rep.lower;
    rep.certificate = iv;
    rep.lower_provenance = rep.upper_provenance = "four-gon-interval";
    rep.explain.push_back("the moment image is the interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]");
  } else if (n == 5) {
    detail::lower_from_cross(rep, caterpillar_polytope(r).polytope);
    rep.witness = paper_cross_witness_5(r);
    rep.lower = max(rep.lower, 2 * r(1));
    const auto chamber = classify_5gon_chamber(r);
    rep.chamber = chamber;
    const auto recipe = reshuffle_recipe(5, reshuffle_for(chamber));
    rep.explain.push_back(std::string("chamber ") + to_string(chamber) + ", reshuffle " +
                          to_string(reshuffle_for(chamber)));
    if (chamber != Chamber5::C6)
      ensure(perturb_for_toricity(r, DiagonalSystem::Caterpillar, recipe).t == 0,
             "reshuffled pentagon outside C6 is not toric");
    auto got = detail::with_perturbation(r, DiagonalSystem::Caterpillar, recipe, rep, "upper",
                                         [&](const LengthVector& v) {
                                           return detail::toric_bound(permute(v, recipe), DiagonalSystem::Caterpillar, cap);
                                         });
    if (got.value) {
      rep.upper = got.value;
      rep.certificate = got.certificate;
      const auto& tb = std::get<ToricUpperBound>(*got.certificate);
      rep.upper_provenance = tb.fano ? "fano-upsilon" : "blowup-upsilon";
      rep.explain.push_back("upper: Upsilon = " + to_string(tb.value) +
                            (tb.fano ? " on the Fano fan" : " on a Fano fan blown up " + std::to_string(tb.chain.size()) + " times"));
    }
  } else if (n == 6) {
    detail::lower_from_cross(rep, triple_pairs_polytope_6(r).polytope);
    rep.witness = paper_cross_witness_6(r);
    rep.lower = max(rep.lower, 2 * r(1));
    rep.conditions = six_gon_conditions(r);
    for (auto cond : rep.conditions) {
      const std::string label = std::string("condition ") + to_string(cond);
      detail::BoundAtT got;
      std::string tag;
      if (cond == SixGonCondition::A) {
        const auto recipe = reshuffle_recipe(6, Reshuffle::SixGonA);
        got = detail::with_perturbation(r, DiagonalSystem::TriplePairs6, recipe, rep, label,
                                        [](const LengthVector& v) -> detail::BoundAtT {
                                          auto w = upper_bound_gw_hypothesis(v);
                                          if (!w) return {};
                                          return {w->edge, UpperCertificate{*w}};
                                        });
        tag = "facet-containment";
      } else {
        const auto recipe = reshuffle_recipe(6, Reshuffle::SixGonBC);
        got = detail::with_perturbation(r, DiagonalSystem::TriplePairs6, recipe, rep, label,
                                        [&](const LengthVector& v) {
                                          return detail::toric_bound(permute(v, recipe), DiagonalSystem::TriplePairs6, cap);
                                        });
        if (got.certificate) tag = std::get<ToricUpperBound>(*got.certificate).fano ? "fano-upsilon" : "blowup-upsilon";
      }
      if (!got.value) {
        rep.explain.push_back(label + ": holds, but no certificate was produced");
        continue;
      }
      rep.explain.push_back(label + ": upper bound " + to_string(*got.value) + " (" + tag + ")");
      if (rep.upper && *rep.upper != *got.value) rep.explain.push_back("conditions disagree on the upper bound");
      if (!rep.upper || *got.value < *rep.upper) {
        rep.upper = got.value;
        rep.certificate = got.certificate;
        rep.upper_provenance = label + " / " + tag;
      }
    }
    if (!rep.upper) {
      rep.upper_provenance = "lower-bound-only";
      rep.explain.push_back("no upper-bound certificate applies to this chamber");
    }
  } else {
    require(n <= kMaxLowerBoundArity, ErrorKind::Capability, "cross fitting limited to n <= 8");
    detail::lower_from_cross(rep, caterpillar_polytope(r).polytope);
    rep.upper_provenance = "lower-bound-only";
  }

  rep.input = input;
  rep.sorted = r;
  rep.perm = sorted.perm;
  rep.conjectured = width_formula(r);
  detail::finish(rep);
  return rep;
}

}  // namespace polywidth
