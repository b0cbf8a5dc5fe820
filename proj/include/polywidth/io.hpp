#pragma once

// JSON and SVG output. Every rational is serialized as a "p/q" string.

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "polywidth/bending.hpp"
#include "polywidth/error.hpp"
#include "polywidth/length_space.hpp"
#include "polywidth/polytope.hpp"
#include "polywidth/volume.hpp"
#include "polywidth/width.hpp"

namespace polywidth::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "polywidth/1";
inline constexpr const char* kUnits = "2pi";

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const LengthVector& r) { return to_json(r.entries()); }

inline Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Json to_json(const HalfSpace& h) { return Json{{"normal", to_json(h.normal)}, {"offset", to_string(h.offset)}}; }

inline Json to_json(const HPolytope& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) hs.push_back(to_json(h));
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return Json{{"dim", p.dim()}, {"halfspaces", std::move(hs)}, {"vertices", std::move(vs)}};
}

/// Accepts {"dim": d, "halfspaces": [{"normal": [ints], "offset": "p/q"}]}.
inline HPolytope polytope_from_json(const Json& j) {
  try {
    const auto d = j.at("dim").get<std::size_t>();
    std::vector<HalfSpace> hs;
    for (const auto& h : j.at("halfspaces")) {
      HalfSpace s;
      s.normal = h.at("normal").get<IntVec>();
      require(s.normal.size() == d, ErrorKind::Usage, "halfspace normal has the wrong length");
      const auto& off = h.at("offset");
      s.offset = off.is_string() ? parse_rational(off.get<std::string>())
                                 : parse_rational(std::to_string(off.get<std::int64_t>()));
      hs.push_back(std::move(s));
    }
    return HPolytope(d, std::move(hs));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Usage, std::string("bad polytope JSON: ") + e.what());
  }
}

inline Json to_json(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(to_json(r));
  return Json{{"dim", f.dim}, {"rays", std::move(rays)}, {"cones", f.cones}};
}

inline Json to_json(const MomentImage& m) {
  Json j{{"schema", kSchema}, {"system", to_string(m.system)}, {"source", to_json(m.source)},
         {"polytope", to_json(m.polytope)}};
  if (!m.polytope.empty()) {
    const auto t = is_bending_toric(m);
    Json minima = Json::array();
    for (const auto& x : t.minima) minima.push_back(to_string(x));
    j["toric"] = t.toric;
    j["diagonal_minima"] = std::move(minima);
    if (m.polytope.full_dimensional()) j["volume"] = to_string(euclidean_volume(m.polytope));
  }
  return j;
}

inline Json to_json(const CrossFit& c) {
  Json arms = Json::array();
  for (const auto& [lo, hi] : c.arms) arms.push_back(Json{{"minus", to_string(lo)}, {"plus", to_string(hi)}});
  return Json{{"a", to_string(c.a)}, {"center", to_json(c.center)}, {"arms", std::move(arms)}};
}

inline Json to_json(const CrossWitness& w) {
  return Json{{"center", to_json(w.center)}, {"lengths", to_json(w.lengths)}};
}

inline Json to_json(const UpsilonCertificate& u) {
  Json rays = Json::array();
  for (const auto& r : u.rays) rays.push_back(to_json(r));
  return Json{{"rays", std::move(rays)},
              {"lambda", to_json(u.lambda)},
              {"relation", to_json(u.relation)},
              {"value", to_string(u.value)},
              {"cap", u.cap},
              {"at_cap", u.at_cap}};
}

inline Json to_json(const BlowupStep& s) {
  Json cone = Json::array();
  for (const auto& g : s.cone) cone.push_back(to_json(g));
  return Json{{"new_ray", to_json(s.new_ray)}, {"cone", std::move(cone)}};
}

inline Json to_json(const UpperCertificate& c) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ToricUpperBound>) {
          Json coarse = Json::array();
          for (const auto& h : x.coarse) coarse.push_back(to_json(h));
          Json chain = Json::array();
          for (const auto& s : x.chain) chain.push_back(to_json(s));
          return Json{{"kind", x.fano ? "fano-upsilon" : "blowup-upsilon"},
                      {"value", to_string(x.value)},
                      {"upsilon", to_json(x.upsilon)},
                      {"coarse_halfspaces", std::move(coarse)},
                      {"blowups", std::move(chain)}};
        } else if constexpr (std::is_same_v<T, FacetWitness>) {
          Json verts = Json::array();
          for (const auto& v : x.vertices) verts.push_back(to_json(v));
          return Json{{"kind", "facet-containment"},
                      {"reshuffled", to_json(x.reshuffled)},
                      {"facet_vertices", std::move(verts)},
                      {"inside", x.inside},
                      {"edge", to_string(x.edge)},
                      {"toric", x.toric}};
        } else if constexpr (std::is_same_v<T, ProjectiveForm>) {
          Json f = Json::array();
          for (const auto& row : x.f) f.push_back(to_json(row));
          return Json{{"kind", "projective-chamber"},
                      {"gamma", to_string(x.gamma)},
                      {"matrix", std::move(f)},
                      {"shift", to_json(x.shift)},
                      {"simplex_match", x.simplex_match}};
        } else {
          return Json{{"kind", "four-gon-interval"}, {"lo", to_string(x.lo)}, {"hi", to_string(x.hi)}};
        }
      },
      c);
}

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? to_json(*x) : Json(nullptr);
}

inline Json to_json(const WidthReport& w) {
  Json perm = Json::array();
  for (auto p : w.perm) perm.push_back(p + 1);
  Json conditions = Json::array();
  for (auto c : w.conditions) conditions.push_back(to_string(c));
  return Json{{"schema", kSchema},
              {"units", kUnits},
              {"input", to_json(w.input)},
              {"sorted", to_json(w.sorted)},
              {"perm", std::move(perm)},
              {"lower", to_string(w.lower)},
              {"upper", optional_json(w.upper)},
              {"exact", optional_json(w.exact)},
              {"conjectured", to_string(w.conjectured)},
              {"lower_provenance", w.lower_provenance},
              {"upper_provenance", w.upper_provenance},
              {"chamber", w.chamber ? Json(to_string(*w.chamber)) : Json(nullptr)},
              {"conditions", std::move(conditions)},
              {"perturbation", to_json(w.perturbation)},
              {"cross", optional_json(w.cross)},
              {"witness", optional_json(w.witness)},
              {"certificate", optional_json(w.certificate)},
              {"explain", w.explain}};
}

inline Json classify_json(const LengthVector& input) {
  require_generic(input);
  const auto s = sort_with_permutation(input);
  Json shorts = Json::array();
  for (const auto& I : maximal_short_sets(s.sorted)) shorts.push_back(I.str());
  Json j{{"schema", kSchema},
         {"input", to_json(input)},
         {"sorted", to_json(s.sorted)},
         {"nonempty", !has_long_singleton(input)},
         {"maximal_short_sets", std::move(shorts)},
         {"gamma", to_string(gamma_of(s.sorted))},
         {"projective", !has_long_singleton(input) && singleton_maximal_short(s.sorted).has_value()}};
  if (input.size() == 5 && !has_long_singleton(input)) j["chamber"] = to_string(classify_5gon_chamber(s.sorted));
  if (input.size() == 6 && !has_long_singleton(input)) {
    Json c = Json::array();
    for (auto x : six_gon_conditions(s.sorted)) c.push_back(to_string(x));
    j["conditions"] = std::move(c);
  }
  return j;
}

inline Json to_json(const VolumeValue& v) {
  return Json{{"schema", kSchema}, {"coefficient", to_string(v.coefficient)}, {"power", v.power}, {"units", kUnits}};
}

inline Json chart_json(const LengthVector& r) {
  Json rows = Json::array();
  if (r.size() == 5) {
    const auto chart = rectangle_chart_5(r);
    const auto corners = rectangle_corners_5(r);
    static constexpr const char* names = "ABCD";
    for (std::size_t k = 0; k < 4; ++k)
      rows.push_back(Json{{"vertex", std::string(1, names[k])}, {"point", to_json(corners[k])}, {"inside", chart[k]}});
  } else if (r.size() == 6) {
    const auto chart = vertex_chart_6(r);
    for (std::size_t k = 0; k < 8; ++k)
      rows.push_back(Json{{"vertex", "v" + std::to_string(k + 1)},
                          {"point", to_json(cuboid_vertex(r, k + 1))},
                          {"inside", chart[k]}});
  } else {
    throw Error(ErrorKind::Usage, "charts exist for n = 5 and n = 6 only");
  }
  return Json{{"schema", kSchema}, {"vector", to_json(r)}, {"rows", std::move(rows)}};
}

// ------------------------------------------------------------------- svg

/// Vertices of a 2D polygon in counterclockwise order, starting at the
/// lexicographically smallest one. Exact.
inline std::vector<Point> polygon_order(const HPolytope& p) {
  require(p.dim() == 2, ErrorKind::Usage, "polygon ordering needs a 2D polytope");
  std::vector<Point> v = p.vertices();
  if (v.size() < 3) return v;
  std::sort(v.begin(), v.end());
  const Point o = v.front();
  std::sort(v.begin() + 1, v.end(), [&](const Point& a, const Point& b) {
    const Rational cross = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    if (cross != 0) return cross > 0;
    return (a[0] - o[0]) * (a[0] - o[0]) + (a[1] - o[1]) * (a[1] - o[1]) <
           (b[0] - o[0]) * (b[0] - o[0]) + (b[1] - o[1]) * (b[1] - o[1]);
  });
  return v;
}

namespace detail {

inline std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x == 0.0 ? 0.0 : x);
  return buf;
}

inline std::string label_for(std::size_t k) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('A' + k % 26));
    k = k / 26;
  } while (k-- > 0);
  return s;
}

}  // namespace detail

/// SVG 1.1 drawing of a 2D moment polygon with labelled vertices and an
/// optional cross overlay. The y axis points up.
inline std::string emit_svg(const MomentImage& m, const std::optional<CrossFit>& overlay = std::nullopt) {
  const auto& p = m.polytope;
  require(p.dim() == 2, ErrorKind::Usage, "SVG output needs a 2D moment image");
  require(!p.empty(), ErrorKind::EmptySpace, "moment image is empty");
  const auto verts = polygon_order(p);
  auto x = [](const Point& q) { return q[0].get_d(); };
  auto y = [](const Point& q) { return -q[1].get_d(); };

  double x0 = x(verts[0]), x1 = x0, y0 = y(verts[0]), y1 = y0;
  for (const auto& v : verts) {
    x0 = std::min(x0, x(v));
    x1 = std::max(x1, x(v));
    y0 = std::min(y0, y(v));
    y1 = std::max(y1, y(v));
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double mx = 0.05 * std::max(x1 - x0, span * 0.2), my = 0.05 * std::max(y1 - y0, span * 0.2);
  const double vx = x0 - mx, vy = y0 - my, vw = x1 - x0 + 2 * mx, vh = y1 - y0 + 2 * my;
  const double stroke = span / 200, font = span / 25;
  using detail::fmt;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(vx) << ' ' << fmt(vy) << ' '
      << fmt(vw) << ' ' << fmt(vh) << "\">\n";
  out << "  <title>" << to_string(m.system) << " moment polygon</title>\n";
  out << "  <path d=\"";
  for (std::size_t k = 0; k < verts.size(); ++k)
    out << (k == 0 ? "M " : " L ") << fmt(x(verts[k])) << ' ' << fmt(y(verts[k]));
  out << " Z\" fill=\"#dde8f4\" stroke=\"#1f3b5c\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  if (overlay) {
    for (std::size_t j = 0; j < 2; ++j) {
      Point a = overlay->center, b = overlay->center;
      a[j] -= overlay->arms[j].first;
      b[j] += overlay->arms[j].second;
      out << "  <line x1=\"" << fmt(x(a)) << "\" y1=\"" << fmt(y(a)) << "\" x2=\"" << fmt(x(b)) << "\" y2=\""
          << fmt(y(b)) << "\" stroke=\"#b03a2e\" stroke-width=\"" << fmt(stroke * 1.5) << "\"/>\n";
    }
  }
  for (std::size_t k = 0; k < verts.size(); ++k) {
    out << "  <circle cx=\"" << fmt(x(verts[k])) << "\" cy=\"" << fmt(y(verts[k])) << "\" r=\"" << fmt(stroke * 2)
        << "\" fill=\"#1f3b5c\"/>\n";
    out << "  <text x=\"" << fmt(x(verts[k]) + stroke * 3) << "\" y=\"" << fmt(y(verts[k]) - stroke * 3)
        << "\" font-size=\"" << fmt(font) << "\">" << detail::label_for(k) << "</text>\n";
  }
  out << "  <text x=\"" << fmt(x1 + mx * 0.2) << "\" y=\"" << fmt(y1 + my * 0.8) << "\" font-size=\"" << fmt(font)
      << "\">d1</text>\n";
  out << "  <text x=\"" << fmt(x0 - mx * 0.9) << "\" y=\"" << fmt(y0 + font) << "\" font-size=\"" << fmt(font)
      << "\">d2</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace polywidth::io
