#include <gtest/gtest.h>

#include <regex>

#include "polywidth/io.hpp"

using namespace polywidth;

namespace {

LengthVector V(std::initializer_list<const char*> xs) {
  std::vector<std::string> t(xs.begin(), xs.end());
  return LengthVector::parse(t);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Json, PolytopeRoundTrip) {
  const auto p = caterpillar_polytope(V({"2", "3", "3", "4", "5"})).polytope;
  const auto j = io::to_json(p);
  const auto q = io::polytope_from_json(io::Json::parse(j.dump()));
  EXPECT_TRUE(same_polytope(p, q));
  EXPECT_EQ(io::to_json(q).dump(), j.dump());
}

TEST(Json, PolytopeAcceptsIntegerOffsets) {
  const auto j = io::Json::parse(R"({"dim": 2, "halfspaces": [
      {"normal": [1, 0], "offset": 0}, {"normal": [0, 1], "offset": "0"},
      {"normal": [-1, -1], "offset": "-3/2"}]})");
  const auto p = io::polytope_from_json(j);
  EXPECT_EQ(p.vertices().size(), 3u);
  EXPECT_EQ(euclidean_volume(p), frac(9, 8));
}

TEST(Json, PolytopeRejectsBadInput) {
  EXPECT_THROW(io::polytope_from_json(io::Json::parse(R"({"dim": 2})")), Error);
  EXPECT_THROW(io::polytope_from_json(io::Json::parse(
                   R"({"dim": 2, "halfspaces": [{"normal": [1, 0, 0], "offset": 0}]})")),
               Error);
  EXPECT_THROW(io::polytope_from_json(io::Json::parse(
                   R"({"dim": 2, "halfspaces": [{"normal": [1, 0], "offset": "x"}]})")),
               Error);
}

TEST(Json, WidthReportFields) {
  const auto rep = gromov_width_report(V({"7", "3", "1", "4", "2"}), 7);
  const auto j = io::to_json(rep);
  EXPECT_EQ(j["schema"], io::kSchema);
  EXPECT_EQ(j["units"], io::kUnits);
  EXPECT_EQ(j["exact"], "2");
  EXPECT_EQ(j["lower"], "2");
  EXPECT_EQ(j["chamber"], "C2");
  EXPECT_EQ(j["perm"], (io::Json{3, 5, 2, 4, 1}));
  EXPECT_EQ(j["sorted"], (io::Json{"1", "2", "3", "4", "7"}));
  EXPECT_EQ(j["certificate"]["kind"], "fano-upsilon");
}

TEST(Json, WidthReportNullUpper) {
  const auto j = io::to_json(gromov_width_report(V({"2", "2", "2", "2", "2", "5"}), 8));
  EXPECT_TRUE(j["upper"].is_null());
  EXPECT_TRUE(j["exact"].is_null());
  EXPECT_EQ(j["lower"], "4");
}

TEST(Json, ByteDeterministic) {
  const auto r = V({"3", "4", "5", "5", "6"});
  EXPECT_EQ(io::to_json(gromov_width_report(r, 7)).dump(2), io::to_json(gromov_width_report(r, 7)).dump(2));
  EXPECT_EQ(io::classify_json(r).dump(), io::classify_json(r).dump());
}

TEST(Json, Classify) {
  const auto j = io::classify_json(V({"3", "4", "5", "5", "6"}));
  EXPECT_EQ(j["chamber"], "C6");
  EXPECT_EQ(j["nonempty"], true);
  EXPECT_EQ(j["projective"], false);
  const auto e = io::classify_json(V({"1", "2", "3", "4", "11"}));
  EXPECT_EQ(e["nonempty"], false);
  EXPECT_FALSE(e.contains("chamber"));
  const auto six = io::classify_json(V({"3", "3", "3", "5", "5", "5"}));
  EXPECT_EQ(six["conditions"], (io::Json{"C"}));
}

TEST(Json, Volume) {
  const auto j = io::to_json(combinatorial_volume(V({"1", "1", "1", "1", "3"})));
  EXPECT_EQ(j["coefficient"], "1/2");
  EXPECT_EQ(j["power"], 2);
}

TEST(Json, Chart) {
  const auto j = io::chart_json(V({"3", "5", "3", "5", "3", "5"}));
  ASSERT_EQ(j["rows"].size(), 8u);
  EXPECT_EQ(j["rows"][1]["vertex"], "v2");
  EXPECT_THROW(io::chart_json(V({"1", "2", "3", "4"})), Error);
}

TEST(PolygonOrder, CounterClockwise) {
  const auto p = caterpillar_polytope(V({"3", "4", "5", "5", "6"})).polytope;
  const auto v = io::polygon_order(p);
  ASSERT_EQ(v.size(), 7u);
  EXPECT_EQ(v.front(), *std::min_element(v.begin(), v.end()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto& a = v[k];
    const auto& b = v[(k + 1) % v.size()];
    const auto& c = v[(k + 2) % v.size()];
    EXPECT_GT((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]), 0);
  }
}

TEST(Svg, StructureAndLabels) {
  const auto m = caterpillar_polytope(V({"3", "4", "5", "5", "6"}));
  const auto svg = io::emit_svg(m, max_axis_cross(m.polytope));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_EQ(count(svg, "<circle"), 7u);
  EXPECT_EQ(count(svg, "<line"), 2u);
  for (const char* label : {">A<", ">B<", ">G<", ">d1<", ">d2<"}) EXPECT_NE(svg.find(label), std::string::npos);
  EXPECT_TRUE(std::regex_search(svg, std::regex("d=\"M [-0-9.]+ [-0-9.]+( L [-0-9.]+ [-0-9.]+){6} Z\"")));
  EXPECT_EQ(svg, io::emit_svg(m, max_axis_cross(m.polytope)));
}

TEST(Svg, NoOverlayAndErrors) {
  const auto svg = io::emit_svg(caterpillar_polytope(V({"1", "2", "3", "4", "7"})));
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(count(svg, "<circle"), 4u);
  EXPECT_THROW(io::emit_svg(triple_pairs_polytope_6(V({"3", "5", "3", "5", "3", "5"}))), Error);
  EXPECT_THROW(io::emit_svg(caterpillar_polytope(V({"1", "2", "3", "4", "11"}))), Error);
}

TEST(Svg, LabelsPastZ) {
  EXPECT_EQ(io::detail::label_for(0), "A");
  EXPECT_EQ(io::detail::label_for(25), "Z");
  EXPECT_EQ(io::detail::label_for(26), "AA");
}
