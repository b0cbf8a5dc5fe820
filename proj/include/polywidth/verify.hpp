#pragma once

// Seeded invariant suite. Each registered invariant is evaluated once per
// sample index; failures keep the full input vector so they can be replayed.

#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polywidth/bending.hpp"
#include "polywidth/io.hpp"
#include "polywidth/length_space.hpp"
#include "polywidth/polytope.hpp"
#include "polywidth/sampling.hpp"
#include "polywidth/volume.hpp"
#include "polywidth/width.hpp"

namespace polywidth::verify {

struct Config {
  std::size_t n = 5;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t max_den = 8;
  std::size_t cap = 0;  // 0: n + 2
};

struct Outcome {
  enum class Status { Pass, Fail, Skip } status = Status::Pass;
  std::string input;  // the vector that failed, as "r1 r2 ..."
  std::string detail;

  static Outcome pass() { return {}; }
  static Outcome skip() { return {Status::Skip, {}, {}}; }
  static Outcome fail(std::string input, std::string detail) {
    return {Status::Fail, std::move(input), std::move(detail)};
  }
};

inline std::string vec_str(const LengthVector& r) {
  std::string s;
  for (const auto& x : r.entries()) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

inline std::string points_str(const std::vector<Point>& pts) {
  std::string s;
  for (const auto& p : pts) {
    s += s.empty() ? "[" : " [";
    for (std::size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + to_string(p[j]);
    s += "]";
  }
  return s;
}

inline Outcome check(bool ok, const LengthVector& r, const std::string& what) {
  return ok ? Outcome::pass() : Outcome::fail(vec_str(r), what);
}

/// Lazily built per-sample data shared by the invariants.
class Sample {
 public:
  Sample(const Config& cfg, std::uint64_t index) : cfg_(cfg), index_(index), aux_(cfg.seed ^ 0x617578ULL, index) {}

  std::uint64_t index() const { return index_; }
  const Config& config() const { return cfg_; }
  const Stream& aux() const { return aux_; }

  const LengthVector& r() {
    if (!r_) r_ = sample_generic(cfg_.n, cfg_.seed, cfg_.max_den, index_);
    return *r_;
  }
  LengthVector of_arity(std::size_t n) {
    return n == cfg_.n ? r() : sample_generic(n, cfg_.seed, cfg_.max_den, index_);
  }
  LengthVector sorted_of_arity(std::size_t n) { return sort_with_permutation(of_arity(n)).sorted; }

  /// Width report for r(), or nullopt when n is outside the supported range.
  const std::optional<WidthReport>& report() {
    if (!report_done_) {
      report_done_ = true;
      if (cfg_.n <= kMaxLowerBoundArity) report_ = gromov_width_report(r(), cap());
    }
    return report_;
  }
  std::size_t cap() const { return cfg_.cap ? cfg_.cap : cfg_.n + 2; }

  /// Fisher-Yates permutation of 0..n-1 drawn from the auxiliary stream.
  std::vector<std::size_t> permutation(std::size_t n, std::uint64_t salt) const {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[aux_.below(salt * 64 + i, i)]);
    return p;
  }

 private:
  const Config& cfg_;
  std::uint64_t index_;
  Stream aux_;
  std::optional<LengthVector> r_;
  bool report_done_ = false;
  std::optional<WidthReport> report_;
};

struct Invariant {
  std::string module;
  std::string name;
  std::function<Outcome(Sample&)> run;
};

// ------------------------------------------------------------- helpers

namespace detail {

inline LengthVector apply_perm(const LengthVector& r, const std::vector<std::size_t>& p) {
  std::vector<std::size_t> recipe;
  for (auto i : p) recipe.push_back(i + 1);
  return permute(r, recipe);
}

// Every other sample gets r2 := r1 or r4 := r5, when that stays generic and nonempty.
inline LengthVector maybe_tied(const LengthVector& r_sorted, std::uint64_t index) {
  if (index % 2 == 0) return r_sorted;
  auto v = r_sorted.entries();
  if (index % 4 == 1)
    v[1] = v[0];
  else
    v[v.size() - 2] = v.back();
  LengthVector t(std::move(v));
  if (!is_generic(t) || has_long_singleton(t)) return r_sorted;
  return t;
}

inline IntMatrix random_unimodular(std::size_t d, const Stream& s, std::uint64_t salt) {
  IntMatrix m(d, IntVec(d, 0));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  if (d < 2) {
    if (s.below(salt, 2)) m[0][0] = -1;
    return m;
  }
  for (std::uint64_t step = 0; step < 4; ++step) {
    const auto base = salt * 16 + step * 4;
    const auto i = s.below(base, d);
    auto j = s.below(base + 1, d - 1);
    if (j >= i) ++j;
    const auto c = static_cast<std::int64_t>(s.below(base + 2, 5)) - 2;
    for (std::size_t k = 0; k < d; ++k) m[i][k] += c * m[j][k];
    if (s.below(base + 3, 2)) m[i].swap(m[j]);
  }
  return m;
}

inline std::set<std::pair<IntVec, Rational>> facet_set(const std::vector<HalfSpace>& hs) {
  std::set<std::pair<IntVec, Rational>> out;
  for (const auto& h : hs) out.emplace(h.normal, h.offset);
  return out;
}

// Largest min-over-axes segment length through grid centers of step box/steps.
inline Rational grid_cross_oracle(const HPolytope& p, std::size_t steps) {
  Point lo = p.vertices().front(), hi = lo;
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < p.dim(); ++j) {
      lo[j] = min(lo[j], v[j]);
      hi[j] = max(hi[j], v[j]);
    }
  Rational best = 0;
  for (std::size_t a = 0; a <= steps; ++a)
    for (std::size_t b = 0; b <= steps; ++b) {
      Point c{lo[0] + (hi[0] - lo[0]) * frac(static_cast<long>(a), static_cast<long>(steps)),
              lo[1] + (hi[1] - lo[1]) * frac(static_cast<long>(b), static_cast<long>(steps))};
      if (!p.contains(c)) continue;
      Rational m = -1;
      for (std::size_t j = 0; j < 2; ++j) {
        auto seg = axis_segment(p, c, j);
        const Rational len = seg->second - seg->first;
        if (m < 0 || len < m) m = len;
      }
      best = max(best, m);
    }
  return best;
}

inline bool certificate_replays(const WidthReport& w) {
  if (!w.certificate) return true;
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ToricUpperBound>) {
          return replay_toric_bound(c, w.sorted.size() - 3);
        } else if constexpr (std::is_same_v<T, FacetWitness>) {
          return replay_facet_witness(c) && w.upper && *w.upper == c.edge;
        } else if constexpr (std::is_same_v<T, ProjectiveForm>) {
          return c.simplex_match && projective_form(w.sorted).simplex_match;
        } else {
          return c.hi - c.lo == w.lower;
        }
      },
      *w.certificate);
}

}  // namespace detail

// ------------------------------------------------------------ registry

inline const std::vector<Invariant>& registry() {
  using detail::apply_perm;
  static const std::vector<Invariant> all = {
      // length_space
      {"length_space", "short-long-duality",
       [](Sample& s) {
         const auto& r = s.r();
         const auto n = r.size();
         for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
           const IndexSet I(n, m);
           if (is_short(r, I) == is_long(r, I) || is_short(r, I) != is_long(r, I.complement()))
             return Outcome::fail(vec_str(r), "duality fails at " + I.str());
         }
         return Outcome::pass();
       }},
      {"length_space", "width-permutation-invariance",
       [](Sample& s) {
         const auto& r = s.r();
         return check(width_formula(apply_perm(r, s.permutation(r.size(), 1))) == width_formula(r), r,
                      "width formula changes under permutation");
       }},
      {"length_space", "sorted-width-formula",
       [](Sample& s) {
         const auto r = sort_with_permutation(s.r()).sorted;
         return check(width_formula(r) == min(2 * r(1), gamma_of(r)), r, "width formula differs from min(2 r1, gamma)");
       }},
      {"length_space", "projective-singleton",
       [](Sample& s) {
         const auto r = sort_with_permutation(s.r()).sorted;
         const auto n = r.size();
         return check(singleton_maximal_short(r).has_value() == is_long(r, IndexSet(n, {1, n})), r,
                      "singleton maximal short set disagrees with {1,n} long");
       }},
      {"length_space", "chamber-totality",
       [](Sample& s) {
         const auto r = s.sorted_of_arity(5);
         try {
           classify_5gon_chamber(r);
         } catch (const Error& e) {
           return Outcome::fail(vec_str(r), e.what());
         }
         return Outcome::pass();
       }},

      // polytope_kernel
      {"polytope_kernel", "vh-round-trip",
       [](Sample& s) {
         const std::size_t d = 2 + s.index() % 2;
         std::vector<Point> pts;
         for (std::uint64_t k = 0; k < 8; ++k) {
           Point p;
           for (std::size_t j = 0; j < d; ++j)
             p.push_back(Rational(static_cast<long>(s.aux().below(1000 + k * 4 + j, 11)) - 5));
           pts.push_back(std::move(p));
         }
         if (linalg::affine_dimension(pts) != static_cast<int>(d)) return Outcome::skip();
         const auto hs = hull_halfspaces(pts, d);
         const HPolytope p(d, hs);
         for (const auto& v : p.vertices())
           if (std::find(pts.begin(), pts.end(), v) == pts.end())
             return Outcome::fail(points_str(pts), "vertex not among the input points");
         if (detail::facet_set(hull_halfspaces(p.vertices(), d)) != detail::facet_set(hs))
           return Outcome::fail(points_str(pts), "facets differ after the round trip");
         if (detail::facet_set(p.pruned().halfspaces()) != detail::facet_set(hs))
           return Outcome::fail(points_str(pts), "pruning changed the facet set");
         return Outcome::pass();
       }},
      {"polytope_kernel", "unimodular-volume",
       [](Sample& s) {
         const auto r = s.of_arity(s.config().n <= 7 ? s.config().n : 5);
         const auto p = caterpillar_polytope(r).polytope;
         const auto d = p.dim();
         const auto m = detail::random_unimodular(d, s.aux(), 7);
         Point shift;
         for (std::size_t j = 0; j < d; ++j) shift.push_back(Rational(static_cast<long>(s.aux().below(2000 + j, 7)) - 3));
         return check(euclidean_volume(apply_unimodular(p, m, shift)) == euclidean_volume(p), r,
                      "volume changes under a unimodular map");
       }},
      {"polytope_kernel", "fano-offset-independence",
       [](Sample& s) {
         const auto r = s.of_arity(5);
         const auto p = caterpillar_polytope(r).polytope;
         if (!p.full_dimensional()) return Outcome::skip();
         const auto fan = normal_fan(p);
         if (!fan.is_smooth()) return Outcome::skip();
         const Rational scale = frac(static_cast<long>(1 + s.aux().below(3000, 5)), 2);
         std::vector<HalfSpace> hs;
         const Rational tx(static_cast<long>(s.aux().below(3001, 9)) - 4), ty(static_cast<long>(s.aux().below(3002, 9)) - 4);
         for (const auto& h : p.halfspaces()) hs.push_back({h.normal, h.offset * scale + h.normal[0] * tx + h.normal[1] * ty});
         const auto q = HPolytope(2, hs);
         const auto qfan = normal_fan(q);
         if (!same_fan(fan, qfan)) return Outcome::fail(vec_str(r), "scaling and translating changed the fan");
         return check(is_fano(fan) == is_fano(qfan), r, "Fano test depends on offsets");
       }},
      {"polytope_kernel", "blowup-chain-counts",
       [](Sample& s) {
         const auto r = s.sorted_of_arity(5);
         if (singleton_maximal_short(r)) return Outcome::skip();
         const auto recipe = reshuffle_recipe(5, reshuffle_for(classify_5gon_chamber(r)));
         const auto p = caterpillar_polytope(permute(r, recipe)).polytope;
         if (!p.full_dimensional()) return Outcome::skip();
         const auto fine = normal_fan(p);
         if (!fine.is_smooth()) return Outcome::skip();
         const auto coarse = normal_fan(box(Point{0, 0}, Point{1, 1}));
         const auto fr = fine.ray_set(), cr = coarse.ray_set();
         if (!std::includes(fr.begin(), fr.end(), cr.begin(), cr.end())) return Outcome::skip();
         const auto chain = blowup_chain(fine, coarse);
         if (!chain) return Outcome::skip();
         if (chain->size() != fr.size() - cr.size()) return Outcome::fail(vec_str(r), "step count differs from ray count");
         return check(replay_blowup_chain(fine, coarse, *chain), r, "chain does not replay");
       }},
      {"polytope_kernel", "axis-segment-concavity",
       [](Sample& s) {
         const auto r = s.of_arity(5 + s.index() % 2);
         const auto p = caterpillar_polytope(r).polytope;
         const auto& vs = p.vertices();
         auto blend = [&](std::uint64_t salt) {
           Point c(p.dim(), Rational(0));
           Rational total = 0;
           for (std::size_t k = 0; k < vs.size(); ++k) {
             const Rational w(static_cast<long>(1 + s.aux().below(salt * 32 + k, 9)));
             total += w;
             for (std::size_t j = 0; j < c.size(); ++j) c[j] += w * vs[k][j];
           }
           for (auto& x : c) x /= total;
           return c;
         };
         const auto a = blend(40), b = blend(41);
         Point mid(a.size());
         for (std::size_t j = 0; j < a.size(); ++j) mid[j] = (a[j] + b[j]) / 2;
         for (std::size_t j = 0; j < p.dim(); ++j) {
           auto len = [&](const Point& c) {
             auto seg = axis_segment(p, c, j);
             return Rational(seg->second - seg->first);
           };
           if (2 * len(mid) < len(a) + len(b)) return Outcome::fail(vec_str(r), "segment length is not concave");
         }
         return Outcome::pass();
       }},

      // bending_systems
      {"bending_systems", "nonempty-iff-no-long-singleton",
       [](Sample& s) {
         for (std::size_t n : {4, 5, 6}) {
           const auto r = sample_generic_any(n, s.config().seed, s.config().max_den, s.index());
           if (caterpillar_polytope(r).polytope.empty() != has_long_singleton(r))
             return Outcome::fail(vec_str(r), "image emptiness disagrees with the long-singleton test");
         }
         return Outcome::pass();
       }},
      {"bending_systems", "chart-consistency",
       [](Sample& s) {
         const auto r5 = partially_ordered(s.of_arity(5));
         const auto r6 = partially_ordered(s.of_arity(6));
         try {
           rectangle_chart_5(r5);
         } catch (const Error& e) {
           return Outcome::fail(vec_str(r5), e.what());
         }
         try {
           vertex_chart_6(r6);
         } catch (const Error& e) {
           return Outcome::fail(vec_str(r6), e.what());
         }
         return Outcome::pass();
       }},
      {"bending_systems", "toric-vs-pair-ties",
       [](Sample& s) {
         const auto r = partially_ordered(detail::maybe_tied(s.sorted_of_arity(5), s.index()));
         if (!is_short(r, IndexSet(5, {1, 5}))) return Outcome::skip();
         const bool toric = is_bending_toric(caterpillar_polytope(r)).toric;
         if (r(1) != r(2) && r(4) != r(5) && !toric) return Outcome::fail(vec_str(r), "distinct pairs but not toric");
         // d1 = 0 forces d2 = r3; d2 = 0 forces d1 = r3.
         const bool d1_vanishes = r(1) == r(2) && abs(r(4) - r(5)) <= r(3) && r(3) <= r(4) + r(5);
         const bool d2_vanishes = r(4) == r(5) && abs(r(1) - r(2)) <= r(3) && r(3) <= r(1) + r(2);
         return check(toric == !(d1_vanishes || d2_vanishes), r, "toricity disagrees with the vanishing-diagonal test");
       }},
      {"bending_systems", "perturbation-linear-offsets",
       [](Sample& s) {
         for (std::size_t n : {5, 6}) {
           const auto r = s.sorted_of_arity(n);
           Rational t = frac(1, static_cast<long>(16 * s.config().max_den));
           std::optional<LengthVector> rt, rh;
           for (int tries = 0; tries < 30; ++tries, t /= 2) {
             rt = perturbation_family(r, t);
             rh = perturbation_family(r, t / 2);
             if (polywidth::detail::same_signature(r, *rt) && polywidth::detail::same_signature(r, *rh)) break;
             rt.reset();
           }
           if (!rt) return Outcome::fail(vec_str(r), "no signature-preserving t found");
           const auto h0 = caterpillar_halfspaces(r), ht = caterpillar_halfspaces(*rt), hh = caterpillar_halfspaces(*rh);
           if (h0.size() != ht.size() || h0.size() != hh.size()) return Outcome::fail(vec_str(r), "halfspace count changed");
           for (std::size_t k = 0; k < h0.size(); ++k) {
             if (h0[k].normal != ht[k].normal || h0[k].normal != hh[k].normal)
               return Outcome::fail(vec_str(r), "a normal moved under perturbation");
             if (ht[k].offset - h0[k].offset != 2 * (hh[k].offset - h0[k].offset))
               return Outcome::fail(vec_str(r), "offsets are not linear in t");
           }
         }
         return Outcome::pass();
       }},
      {"bending_systems", "permutation-coherence",
       [](Sample& s) {
         const auto& w = s.report();
         if (!w) return Outcome::skip();
         const auto& r = s.r();
         const auto q = apply_perm(r, s.permutation(r.size(), 2));
         const auto sq = sort_with_permutation(q);
         if (sq.sorted != w->sorted) return Outcome::fail(vec_str(q), "sorting is not permutation invariant");
         for (std::size_t k = 0; k < r.size(); ++k)
           if (r[w->perm[k]] != w->sorted[k]) return Outcome::fail(vec_str(r), "recorded permutation is wrong");
         const auto wq = gromov_width_report(q, s.cap());
         return check(wq.lower == w->lower && wq.upper == w->upper && wq.exact == w->exact, q,
                      "width bounds depend on the input order");
       }},

      // width_bounds
      {"width_bounds", "lp-replay",
       [](Sample& s) {
         const auto& w = s.report();
         if (!w || !w->cross) return Outcome::skip();
         const auto& r = w->sorted;
         const auto p = r.size() == 6 ? triple_pairs_polytope_6(r).polytope : caterpillar_polytope(r).polytope;
         return check(replay_cross(p, *w->cross), r, "cross does not fit");
       }},
      {"width_bounds", "lp-vs-grid",
       [](Sample& s) {
         const auto r = s.sorted_of_arity(5);
         const auto p = caterpillar_polytope(r).polytope;
         const auto lp = max_axis_cross(p).a;
         const auto grid = detail::grid_cross_oracle(p, 16);
         return check(grid <= lp, r, "grid search beats the LP: " + to_string(grid) + " > " + to_string(lp));
       }},
      {"width_bounds", "lower-bound-dominance",
       [](Sample& s) {
         const auto r5 = s.sorted_of_arity(5);
         if (is_short(r5, IndexSet(5, {1, 5}))) {
           paper_cross_witness_5(r5);
           if (max_axis_cross(caterpillar_polytope(r5).polytope).a < 2 * r5(1))
             return Outcome::fail(vec_str(r5), "cross LP below 2 r1");
         }
         const auto r6 = s.sorted_of_arity(6);
         if (is_short(r6, IndexSet(6, {1, 6}))) {
           paper_cross_witness_6(r6);
           if (max_axis_cross(triple_pairs_polytope_6(r6).polytope).a < 2 * r6(1))
             return Outcome::fail(vec_str(r6), "cross LP below 2 r1");
         }
         return Outcome::pass();
       }},
      {"width_bounds", "certificate-replay",
       [](Sample& s) {
         const auto& w = s.report();
         if (!w) return Outcome::skip();
         if (w->witness)
           for (const auto& l : w->witness->lengths)
             if (l < 2 * w->sorted(1)) return Outcome::fail(vec_str(w->input), "witness arm shorter than 2 r1");
         return check(detail::certificate_replays(*w), w->input, "upper-bound certificate does not replay");
       }},
      {"width_bounds", "sandwich",
       [](Sample& s) {
         const auto& w = s.report();
         if (!w) return Outcome::skip();
         if (w->lower > w->conjectured) return Outcome::fail(vec_str(w->input), "lower bound exceeds the formula");
         if (w->upper && w->conjectured > *w->upper) return Outcome::fail(vec_str(w->input), "formula exceeds the upper bound");
         if (w->exact && (*w->exact != w->lower || *w->exact != w->conjectured))
           return Outcome::fail(vec_str(w->input), "exact value differs from the formula");
         return Outcome::pass();
       }},
      {"width_bounds", "perturbation-stability",
       [](Sample& s) {
         const auto r = detail::maybe_tied(s.sorted_of_arity(5), s.index());
         if (singleton_maximal_short(r)) return Outcome::skip();
         const auto recipe = reshuffle_recipe(5, reshuffle_for(classify_5gon_chamber(r)));
         const auto pert = perturb_for_toricity(r, DiagonalSystem::Caterpillar, recipe);
         if (pert.t == 0) return Outcome::skip();
         auto bound = [&](const LengthVector& v) {
           auto b = upper_bound_via_fano_or_blowup(caterpillar_polytope(permute(v, recipe)).polytope, 7);
           return b ? std::optional<Rational>(b->value) : std::nullopt;
         };
         const auto a = bound(pert.perturbed), b = bound(perturbation_family(r, pert.t / 2));
         return check(a && b && *a == *b, r, "upper bounds differ at t and t/2");
       }},

      // volume
      {"volume", "projective-volume",
       [](Sample& s) {
         const auto n = std::min<std::size_t>(s.config().n, kMaxVolumeArity);
         const auto r = sample_projective(n, s.config().seed, s.config().max_den, s.index());
         return check(projective_volume(r) == combinatorial_volume(r), r, "projective volume differs");
       }},
      {"volume", "volume-permutation-invariance",
       [](Sample& s) {
         const auto& r = s.r();
         if (r.size() > kMaxVolumeArity) return Outcome::skip();
         const auto v = combinatorial_volume(r);
         for (std::uint64_t k = 0; k < 10; ++k)
           if (combinatorial_volume(apply_perm(r, s.permutation(r.size(), 10 + k))) != v)
             return Outcome::fail(vec_str(r), "volume changes under permutation");
         return Outcome::pass();
       }},
      {"volume", "volume-kappa",
       [](Sample& s) {
         const auto& r = s.r();
         if (r.size() > 8) return Outcome::skip();
         const auto image = caterpillar_polytope(r);
         if (!is_bending_toric(image).toric) return Outcome::skip();
         return check(volume_ratio_check(r, image) == 1, r, "volume ratio differs from 1");
       }},

      // cli_harness
      {"cli_harness", "sample-determinism",
       [](Sample& s) {
         const auto& c = s.config();
         const auto a = sample_generic(c.n, c.seed, c.max_den, s.index());
         const auto b = sample_generic(c.n, c.seed, c.max_den, s.index());
         if (a != b || !is_generic(a) || has_long_singleton(a)) return Outcome::fail(vec_str(a), "sampler is not deterministic");
         return check(io::classify_json(a).dump() == io::classify_json(b).dump(), a, "JSON output is not deterministic");
       }},
  };
  return all;
}

// --------------------------------------------------------------- report

struct InvariantResult {
  std::string module;
  std::string name;
  std::size_t passed = 0, failed = 0, skipped = 0;
  std::vector<std::string> witnesses;  // "index i: r1 r2 ...: detail"
};

struct VerifyReport {
  Config config;
  std::vector<InvariantResult> results;
  double wall_ms = 0;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& r : results) f += r.failed;
    return f;
  }
};

inline constexpr std::size_t kMaxWitnesses = 5;

inline VerifyReport run(const Config& cfg) {
  require(cfg.n >= 4 && cfg.n <= kMaxVolumeArity, ErrorKind::Usage, "verify needs 4 <= n <= 12");
  require(cfg.samples >= 1, ErrorKind::Usage, "verify needs at least one sample");
  const auto start = std::chrono::steady_clock::now();
  const auto& inv = registry();
  VerifyReport rep{cfg, {}, 0};
  for (const auto& i : inv) rep.results.push_back({i.module, i.name, 0, 0, 0, {}});
  for (std::uint64_t idx = 0; idx < cfg.samples; ++idx) {
    Sample sample(cfg, idx);
    for (std::size_t k = 0; k < inv.size(); ++k) {
      Outcome o;
      try {
        o = inv[k].run(sample);
      } catch (const Error& e) {
        std::string input;
        try {
          input = vec_str(sample.r());
        } catch (const Error&) {
        }
        o = Outcome::fail(input, e.what());
      }
      auto& res = rep.results[k];
      switch (o.status) {
        case Outcome::Status::Pass: ++res.passed; break;
        case Outcome::Status::Skip: ++res.skipped; break;
        case Outcome::Status::Fail:
          ++res.failed;
          if (res.witnesses.size() < kMaxWitnesses)
            res.witnesses.push_back("index " + std::to_string(idx) + ": (" + o.input + "): " + o.detail);
          break;
      }
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// Wall-clock time is left out so equal configurations give equal bytes.
inline io::Json to_json(const VerifyReport& r) {
  io::Json results = io::Json::array();
  for (const auto& x : r.results)
    results.push_back(io::Json{{"module", x.module},
                               {"invariant", x.name},
                               {"passed", x.passed},
                               {"failed", x.failed},
                               {"skipped", x.skipped},
                               {"witnesses", x.witnesses}});
  return io::Json{{"schema", io::kSchema},
                  {"n", r.config.n},
                  {"samples", r.config.samples},
                  {"seed", r.config.seed},
                  {"max_denominator", r.config.max_den},
                  {"failures", r.failures()},
                  {"results", std::move(results)}};
}

}  // namespace polywidth::verify
