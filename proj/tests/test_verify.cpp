#include <gtest/gtest.h>

#include <set>

#include "polywidth/verify.hpp"

using namespace polywidth;

TEST(Registry, CoversEveryModule) {
  const auto& reg = verify::registry();
  EXPECT_EQ(reg.size(), 25u);
  std::set<std::string> modules, names;
  for (const auto& i : reg) {
    modules.insert(i.module);
    EXPECT_TRUE(names.insert(i.name).second) << "duplicate " << i.name;
  }
  EXPECT_EQ(modules, (std::set<std::string>{"length_space", "polytope_kernel", "bending_systems", "width_bounds",
                                            "volume", "cli_harness"}));
}

TEST(Run, SmallPentagonRunIsClean) {
  const auto rep = verify::run({5, 40, 3, 8, 0});
  EXPECT_EQ(rep.failures(), 0u) << verify::to_json(rep).dump(2);
  std::size_t passed = 0;
  for (const auto& r : rep.results) passed += r.passed;
  EXPECT_GT(passed, 40u * 15u);
}

TEST(Run, SmallHexagonRunIsClean) {
  const auto rep = verify::run({6, 12, 5, 6, 0});
  EXPECT_EQ(rep.failures(), 0u) << verify::to_json(rep).dump(2);
}

TEST(Run, FourGonRunIsClean) {
  const auto rep = verify::run({4, 40, 2, 8, 0});
  EXPECT_EQ(rep.failures(), 0u) << verify::to_json(rep).dump(2);
}

TEST(Run, JsonIsByteDeterministic) {
  const verify::Config cfg{5, 10, 9, 8, 0};
  EXPECT_EQ(verify::to_json(verify::run(cfg)).dump(), verify::to_json(verify::run(cfg)).dump());
}

TEST(Run, RejectsBadConfig) {
  EXPECT_THROW(verify::run({3, 10, 1, 8, 0}), Error);
  EXPECT_THROW(verify::run({13, 10, 1, 8, 0}), Error);
  EXPECT_THROW(verify::run({5, 0, 1, 8, 0}), Error);
}
