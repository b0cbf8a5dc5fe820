#pragma once

// Exact convex polytopes given by halfspaces <x,u> >= lambda with primitive
// integer normals, plus the fan machinery used for toric upper bounds.
//
// Everything is brute force over facet subsets: the polytopes handled here
// have at most a few dozen halfspaces in dimension <= 4.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polywidth/error.hpp"
#include "polywidth/linalg.hpp"
#include "polywidth/rational.hpp"

namespace polywidth {

struct HalfSpace {
  IntVec normal;    // primitive, inward
  Rational offset;  // {x : <x, normal> >= offset}

  bool contains(const Point& x) const { return dot(normal, x) >= offset; }
  bool tight_at(const Point& x) const { return dot(normal, x) == offset; }

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

namespace detail {

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<std::size_t>&>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline Rational factorial(std::size_t k) {
  Rational f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

}  // namespace detail

/// A polytope in H-representation with eagerly computed vertices and
/// vertex/halfspace incidences. Lower-dimensional and empty polytopes are
/// legal values; unbounded polyhedra are rejected at construction.
class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<HalfSpace> halfspaces)
      : dim_(dim), hs_(std::move(halfspaces)) {
    require(dim_ >= 1, ErrorKind::Usage, "polytope dimension must be positive");
    for (const auto& h : hs_) {
      require(h.normal.size() == dim_, ErrorKind::Usage, "halfspace normal has wrong dimension");
      require(gcd_of(h.normal) != 0, ErrorKind::Usage, "halfspace normal is zero");
      require(is_primitive(h.normal), ErrorKind::Usage, "halfspace normal is not primitive");
    }
    require(hs_.size() >= dim_ + 1, ErrorKind::Unbounded,
            "fewer than d+1 halfspaces cannot bound a polytope");
    std::vector<IntVec> normals;
    for (const auto& h : hs_) normals.push_back(h.normal);
    require(linalg::rank(linalg::from_int(normals)) == dim_, ErrorKind::Unbounded,
            "halfspace normals do not span: polyhedron has a lineality space");
    enumerate_vertices();
    if (!vertices_.empty()) check_bounded();
    tight_.assign(hs_.size(), {});
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      for (std::size_t h = 0; h < hs_.size(); ++h)
        if (hs_[h].tight_at(vertices_[v])) tight_[h].push_back(v);
    affine_dim_ = linalg::affine_dimension(vertices_);
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<HalfSpace>& halfspaces() const noexcept { return hs_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  bool empty() const noexcept { return vertices_.empty(); }
  int affine_dimension() const noexcept { return affine_dim_; }
  bool full_dimensional() const noexcept { return affine_dim_ == static_cast<int>(dim_); }

  /// Indices of vertices on which halfspace h is tight.
  const std::vector<std::size_t>& tight_vertices(std::size_t h) const { return tight_.at(h); }

  bool contains(const Point& x) const {
    return std::all_of(hs_.begin(), hs_.end(), [&](const HalfSpace& h) { return h.contains(x); });
  }

  /// True iff halfspace h is tight on a (d-1)-dimensional face.
  bool is_facet(std::size_t h) const {
    std::vector<Point> pts;
    for (auto v : tight_.at(h)) pts.push_back(vertices_[v]);
    return linalg::affine_dimension(pts) == static_cast<int>(dim_) - 1;
  }

  /// Facet halfspaces, first occurrence of duplicates only, in input order.
  std::vector<std::size_t> facet_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t h = 0; h < hs_.size(); ++h) {
      if (!is_facet(h)) continue;
      bool dup = std::any_of(out.begin(), out.end(), [&](std::size_t g) { return hs_[g] == hs_[h]; });
      if (!dup) out.push_back(h);
    }
    return out;
  }

  /// The same polytope described by its facets only.
  HPolytope pruned() const {
    require(full_dimensional(), ErrorKind::Geometry, "redundancy pruning needs a full-dimensional polytope");
    std::vector<HalfSpace> keep;
    for (auto h : facet_indices()) keep.push_back(hs_[h]);
    return HPolytope(dim_, std::move(keep));
  }

  /// Same point set (compared through vertex sets).
  friend bool same_polytope(const HPolytope& a, const HPolytope& b) {
    if (a.dim_ != b.dim_) return false;
    auto va = a.vertices_, vb = b.vertices_;
    std::sort(va.begin(), va.end());
    std::sort(vb.begin(), vb.end());
    return va == vb;
  }

 private:
  void enumerate_vertices() {
    std::set<Point> found;
    detail::for_each_combination(hs_.size(), dim_, [&](const std::vector<std::size_t>& idx) {
      linalg::Matrix a;
      Point b;
      for (auto i : idx) {
        a.push_back(to_point(hs_[i].normal));
        b.push_back(hs_[i].offset);
      }
      auto x = linalg::solve(a, b);
      if (x && contains(*x)) found.insert(std::move(*x));
    });
    vertices_.assign(found.begin(), found.end());
  }

  // A nonempty polyhedron with full-rank normals is bounded iff its
  // recession cone {x : <x,u> >= 0} has no extreme ray.
  void check_bounded() const {
    detail::for_each_combination(hs_.size(), dim_ - 1, [&](const std::vector<std::size_t>& idx) {
      linalg::Matrix a;
      for (auto i : idx) a.push_back(to_point(hs_[i].normal));
      auto ns = linalg::null_space(a, dim_);
      if (ns.size() != 1) return;
      for (int sign : {1, -1}) {
        Point dir = ns[0];
        for (auto& x : dir) x *= sign;
        bool feasible = std::all_of(hs_.begin(), hs_.end(),
                                    [&](const HalfSpace& h) { return dot(h.normal, dir) >= 0; });
        if (feasible) throw Error(ErrorKind::Unbounded, "polyhedron is unbounded");
      }
    });
  }

  std::size_t dim_;
  std::vector<HalfSpace> hs_;
  std::vector<Point> vertices_;
  std::vector<std::vector<std::size_t>> tight_;
  int affine_dim_ = -1;
};

/// {t : c + t e_axis in P} as a closed interval; axis is 0-based.
inline std::optional<std::pair<Rational, Rational>> axis_segment(const HPolytope& p, const Point& c,
                                                                 std::size_t axis) {
  require(c.size() == p.dim() && axis < p.dim(), ErrorKind::Usage, "axis_segment: dimension mismatch");
  std::optional<Rational> lo, hi;
  for (const auto& h : p.halfspaces()) {
    const Rational slack = dot(h.normal, c) - h.offset;  // need slack + t*u_axis >= 0
    const auto u = h.normal[axis];
    if (u == 0) {
      if (slack < 0) return std::nullopt;
      continue;
    }
    const Rational bound = -slack / Rational(static_cast<long>(u));
    if (u > 0) {
      if (!lo || bound > *lo) lo = bound;
    } else {
      if (!hi || bound < *hi) hi = bound;
    }
  }
  require(lo && hi, ErrorKind::Unbounded, "axis line is not bounded by the polytope");
  if (*lo > *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

/// Lebesgue volume; zero for lower-dimensional polytopes.
inline Rational euclidean_volume(const HPolytope& p) {
  if (!p.full_dimensional()) return 0;
  const auto& verts = p.vertices();
  const auto d = p.dim();
  Rational total = 0;

  // Recursive pulling triangulation: cone from the first vertex of each face
  // over the facets of that face that avoid it.
  auto triangulate = [&](auto&& self, const std::vector<std::size_t>& face, int k,
                         std::vector<std::size_t>& apexes) -> void {
    if (k == 0) {
      apexes.push_back(face.front());
      linalg::Matrix m;
      for (std::size_t i = 1; i < apexes.size(); ++i) {
        Point row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = verts[apexes[i]][j] - verts[apexes[0]][j];
        m.push_back(std::move(row));
      }
      total += abs(linalg::determinant(std::move(m)));
      apexes.pop_back();
      return;
    }
    const auto v0 = face.front();
    std::set<std::vector<std::size_t>> subfaces;
    for (std::size_t h = 0; h < p.halfspaces().size(); ++h) {
      std::vector<std::size_t> sub;
      const auto& tv = p.tight_vertices(h);
      std::set_intersection(face.begin(), face.end(), tv.begin(), tv.end(), std::back_inserter(sub));
      if (sub.empty() || std::binary_search(sub.begin(), sub.end(), v0)) continue;
      std::vector<Point> pts;
      for (auto v : sub) pts.push_back(verts[v]);
      if (linalg::affine_dimension(pts) == k - 1) subfaces.insert(std::move(sub));
    }
    apexes.push_back(v0);
    for (const auto& sub : subfaces) self(self, sub, k - 1, apexes);
    apexes.pop_back();
  };

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<std::size_t> apexes;
  triangulate(triangulate, all, static_cast<int>(d), apexes);
  return total / detail::factorial(d);
}

/// Halfspace description of conv(points), facets only. Points must span
/// their ambient space.
inline std::vector<HalfSpace> hull_halfspaces(const std::vector<Point>& pts, std::size_t d) {
  require(linalg::affine_dimension(pts) == static_cast<int>(d), ErrorKind::Geometry,
          "hull_halfspaces needs full-dimensional input");
  std::vector<HalfSpace> out;
  detail::for_each_combination(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix m;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      Point row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = pts[idx[i]][j] - pts[idx[0]][j];
      m.push_back(std::move(row));
    }
    auto ns = linalg::null_space(m, d);
    if (ns.size() != 1) return;
    for (int sign : {1, -1}) {
      Point dir = ns[0];
      for (auto& x : dir) x *= sign;
      HalfSpace h{primitive_from(dir), 0};
      h.offset = dot(h.normal, pts[idx[0]]);
      std::vector<Point> tight;
      bool ok = true;
      for (const auto& q : pts) {
        const auto s = dot(h.normal, q);
        if (s < h.offset) {
          ok = false;
          break;
        }
        if (s == h.offset) tight.push_back(q);
      }
      if (ok && linalg::affine_dimension(tight) == static_cast<int>(d) - 1 &&
          std::find(out.begin(), out.end(), h) == out.end())
        out.push_back(std::move(h));
    }
  });
  return out;
}

/// Complete fan: rays are primitive generators, maximal cones list ray indices.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> cones;

  /// Cones as sorted generator lists; independent of ray numbering.
  std::set<std::vector<IntVec>> canonical_cones() const {
    std::set<std::vector<IntVec>> out;
    for (const auto& c : cones) {
      std::vector<IntVec> g;
      for (auto i : c) g.push_back(rays.at(i));
      std::sort(g.begin(), g.end());
      out.insert(std::move(g));
    }
    return out;
  }

  std::set<IntVec> ray_set() const { return {rays.begin(), rays.end()}; }

  bool is_smooth() const {
    for (const auto& c : cones) {
      if (c.size() != dim) return false;
      linalg::Matrix m;
      for (auto i : c) m.push_back(to_point(rays[i]));
      if (abs(linalg::determinant(std::move(m))) != 1) return false;
    }
    return true;
  }

  friend bool same_fan(const Fan& a, const Fan& b) {
    return a.dim == b.dim && a.ray_set() == b.ray_set() && a.canonical_cones() == b.canonical_cones();
  }
};

/// Offsets lambda_k per ray; the support function takes phi(u_k) = -lambda_k.
struct SupportFunction {
  std::vector<Rational> lambda;
};

/// Fan of inward facet normals; one maximal cone per vertex.
inline Fan normal_fan(const HPolytope& p) {
  require(!p.empty(), ErrorKind::Geometry, "normal fan of an empty polytope");
  require(p.full_dimensional(), ErrorKind::Geometry, "normal fan needs a full-dimensional polytope");
  const auto facets = p.facet_indices();
  Fan fan;
  fan.dim = p.dim();
  for (auto h : facets) fan.rays.push_back(p.halfspaces()[h].normal);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    std::vector<std::size_t> cone;
    for (std::size_t k = 0; k < facets.size(); ++k) {
      const auto& tv = p.tight_vertices(facets[k]);
      if (std::binary_search(tv.begin(), tv.end(), v)) cone.push_back(k);
    }
    require(cone.size() == p.dim(), ErrorKind::Geometry, "polytope is not simple");
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

inline SupportFunction support_function(const HPolytope& p) {
  SupportFunction s;
  for (auto h : p.facet_indices()) s.lambda.push_back(p.halfspaces()[h].offset);
  return s;
}

/// Simple polytope whose vertex cones are lattice bases.
inline bool is_delzant(const HPolytope& p) { return normal_fan(p).is_smooth(); }

/// {x : <x, u> >= -1 for every ray}.
inline std::optional<HPolytope> monotone_polytope(const Fan& fan) {
  std::vector<HalfSpace> hs;
  for (const auto& u : fan.rays) hs.push_back({u, -1});
  try {
    return HPolytope(fan.dim, std::move(hs));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unbounded) return std::nullopt;
    throw;
  }
}

/// A smooth complete fan is Fano iff its monotone polytope has exactly this fan.
inline bool is_fano(const Fan& fan) {
  require(fan.is_smooth(), ErrorKind::Geometry, "Fano test needs a smooth fan");
  auto mono = monotone_polytope(fan);
  if (!mono || !mono->full_dimensional()) return false;
  if (mono->facet_indices().size() != fan.rays.size()) return false;
  try {
    return same_fan(normal_fan(*mono), fan);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Geometry) return false;
    throw;
  }
}

/// Blowup of a toric fixed point: the maximal cone is replaced by its star
/// subdivision through the sum of its generators.
struct BlowupStep {
  IntVec new_ray;
  std::vector<IntVec> cone;  // generators of the subdivided cone
};

/// Greedy search for a sequence of star subdivisions of maximal cones taking
/// `coarse` to `fine`. Each extra ray must equal the generator sum of some
/// current maximal cone; no backtracking.
inline std::optional<std::vector<BlowupStep>> blowup_chain(const Fan& fine, const Fan& coarse) {
  require(fine.dim == coarse.dim, ErrorKind::Usage, "fans of different dimensions");
  const auto coarse_rays = coarse.ray_set();
  const auto fine_rays = fine.ray_set();
  require(std::includes(fine_rays.begin(), fine_rays.end(), coarse_rays.begin(), coarse_rays.end()),
          ErrorKind::Precondition, "coarse rays must be a subset of fine rays");

  auto current = coarse.canonical_cones();
  std::vector<IntVec> pending;
  for (const auto& u : fine.rays)
    if (!coarse_rays.count(u)) pending.push_back(u);

  std::vector<BlowupStep> steps;
  while (!pending.empty()) {
    bool progressed = false;
    for (auto it = pending.begin(); it != pending.end() && !progressed; ++it) {
      for (const auto& cone : current) {
        IntVec sum(fine.dim, 0);
        for (const auto& g : cone)
          for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += g[j];
        if (sum != *it) continue;
        auto subdivided = cone;
        current.erase(cone);
        for (std::size_t i = 0; i < subdivided.size(); ++i) {
          auto piece = subdivided;
          piece[i] = *it;
          std::sort(piece.begin(), piece.end());
          current.insert(std::move(piece));
        }
        steps.push_back({*it, std::move(subdivided)});
        pending.erase(it);
        progressed = true;
        break;
      }
    }
    if (!progressed) return std::nullopt;
  }
  if (current != fine.canonical_cones()) return std::nullopt;
  return steps;
}

/// Replays a chain on the coarse fan and compares with the fine fan.
inline bool replay_blowup_chain(const Fan& fine, const Fan& coarse, const std::vector<BlowupStep>& steps) {
  auto current = coarse.canonical_cones();
  for (const auto& s : steps) {
    auto cone = s.cone;
    std::sort(cone.begin(), cone.end());
    if (!current.count(cone)) return false;
    IntVec sum(fine.dim, 0);
    for (const auto& g : cone)
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += g[j];
    if (sum != s.new_ray) return false;
    current.erase(cone);
    for (std::size_t i = 0; i < cone.size(); ++i) {
      auto piece = cone;
      piece[i] = s.new_ray;
      std::sort(piece.begin(), piece.end());
      current.insert(std::move(piece));
    }
  }
  return current == fine.canonical_cones();
}

using IntMatrix = std::vector<IntVec>;

/// Image {M x + v : x in P} for an integer matrix with det = +-1.
inline HPolytope apply_unimodular(const HPolytope& p, const IntMatrix& m, const Point& v) {
  const auto d = p.dim();
  require(m.size() == d && v.size() == d, ErrorKind::Usage, "apply_unimodular: dimension mismatch");
  for (const auto& row : m) require(row.size() == d, ErrorKind::Usage, "apply_unimodular: matrix not square");
  const auto mq = linalg::from_int(m);
  require(abs(linalg::determinant(mq)) == 1, ErrorKind::Precondition, "matrix is not unimodular");
  // Inverse by Gauss-Jordan on [M | I].
  linalg::Matrix aug = mq;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) aug[i].push_back(i == j ? 1 : 0);
  linalg::row_reduce(aug, d);
  std::vector<HalfSpace> out;
  for (const auto& h : p.halfspaces()) {
    // <M^{-1}(y - v), u> >= lambda  <=>  <y, M^{-T} u> >= lambda + <v, M^{-T} u>.
    Point n(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) n[i] += aug[j][d + i] * Rational(static_cast<long>(h.normal[j]));
    IntVec ni;
    for (const auto& x : n) {
      ensure(x.get_den() == 1 && x.get_num().fits_slong_p(), "unimodular image normal is not integral");
      ni.push_back(x.get_num().get_si());
    }
    Rational off = h.offset + dot(ni, v);
    const auto g = gcd_of(ni);
    if (g > 1) {
      for (auto& x : ni) x /= g;
      off /= static_cast<long>(g);
    }
    out.push_back({std::move(ni), std::move(off)});
  }
  return HPolytope(d, std::move(out));
}

/// Closed standard simplex {x >= 0, sum x <= a}.
inline HPolytope standard_simplex(std::size_t d, const Rational& a) {
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, 0);
    e[i] = 1;
    hs.push_back({e, 0});
  }
  hs.push_back({IntVec(d, -1), -a});
  return HPolytope(d, std::move(hs));
}

/// Axis-aligned box prod [lo_i, hi_i].
inline HPolytope box(const Point& lo, const Point& hi) {
  const auto d = lo.size();
  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e(d, 0);
    e[i] = 1;
    hs.push_back({e, lo[i]});
    e[i] = -1;
    hs.push_back({e, -hi[i]});
  }
  return HPolytope(d, std::move(hs));
}

}  // namespace polywidth
