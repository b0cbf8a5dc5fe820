#include <gtest/gtest.h>

#include "polywidth/sampling.hpp"
#include "polywidth/width.hpp"

using namespace polywidth;

namespace {

LengthVector V(std::initializer_list<const char*> xs) {
  std::vector<std::string> t(xs.begin(), xs.end());
  return LengthVector::parse(t);
}

// Odometer over all a in [0, cap]^m with sum a <= cap.
std::optional<Rational> upsilon_oracle(const Fan& f, const SupportFunction& s, std::size_t cap) {
  const auto m = f.rays.size();
  std::vector<std::size_t> a(m, 0);
  std::optional<Rational> best;
  while (true) {
    std::size_t used = 0;
    for (auto x : a) used += x;
    if (used > 0 && used <= cap) {
      bool zero = true;
      for (std::size_t j = 0; j < f.dim; ++j) {
        std::int64_t c = 0;
        for (std::size_t k = 0; k < m; ++k) c += static_cast<std::int64_t>(a[k]) * f.rays[k][j];
        zero = zero && c == 0;
      }
      if (zero) {
        Rational v = 0;
        for (std::size_t k = 0; k < m; ++k) v -= s.lambda[k] * static_cast<long>(a[k]);
        if (v > 0 && (!best || v < *best)) best = v;
      }
    }
    std::size_t k = 0;
    while (k < m && a[k] == cap) a[k++] = 0;
    if (k == m) break;
    ++a[k];
  }
  return best;
}

}  // namespace

TEST(Upsilon, SquareFan) {
  // [0,s]^2: lambda = (0, 0, -s, -s); the relation e1 + (-e1) gives s.
  const auto p = box(Point{0, 0}, Point{3, 3});
  const auto u = upsilon(normal_fan(p), support_function(p), 4);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->value, 3);
  EXPECT_TRUE(replay_upsilon(*u));
}

TEST(Upsilon, MatchesOdometerOracle) {
  const std::vector<LengthVector> cases{V({"1", "2", "3", "4", "7"}), V({"3", "4", "5", "5", "6"}),
                                        V({"2", "3", "3", "4", "5"})};
  for (const auto& r : cases) {
    const auto p = caterpillar_polytope(r).polytope;
    const auto f = normal_fan(p);
    const auto s = support_function(p);
    for (std::size_t cap : {2, 3, 5}) {
      const auto u = upsilon(f, s, cap);
      const auto o = upsilon_oracle(f, s, cap);
      ASSERT_EQ(u.has_value(), o.has_value());
      if (u) {
        EXPECT_EQ(u->value, *o) << r << " cap " << cap;
      }
    }
  }
}

TEST(Upsilon, C2IsTwoR1) {
  const auto r = V({"1", "2", "3", "4", "7"});
  const auto p = caterpillar_polytope(r).polytope;
  const auto u = upsilon(normal_fan(p), support_function(p), 7);
  ASSERT_TRUE(u);
  EXPECT_EQ(u->value, 2 * r(1));
}

TEST(Upsilon, TamperedCertificateFailsReplay) {
  const auto p = box(Point{0, 0}, Point{2, 5});
  auto u = upsilon(normal_fan(p), support_function(p), 4);
  ASSERT_TRUE(u);
  u->value += 1;
  EXPECT_FALSE(replay_upsilon(*u));
  u->value -= 1;
  u->relation[0] += 1;
  EXPECT_FALSE(replay_upsilon(*u));
}

TEST(Upsilon, CapTooSmall) {
  const auto p = box(Point{0, 0}, Point{1, 1});
  EXPECT_THROW(upsilon(normal_fan(p), support_function(p), 1), Error);
}

TEST(Witness, PentagonExamples) {
  for (const auto& r : {V({"1", "2", "3", "4", "7"}), V({"1", "2", "5", "6", "7"}), V({"2", "3", "4", "6", "8"}),
                        V({"2", "3", "3", "4", "5"}), V({"3", "4", "5", "5", "6"})}) {
    const auto w = paper_cross_witness_5(r);
    ASSERT_EQ(w.lengths.size(), 2u);
    for (const auto& len : w.lengths) EXPECT_GE(len, 2 * r(1)) << r;
  }
}

TEST(Witness, HexagonExamples) {
  for (const auto& r : {V({"1", "2", "3", "4", "5", "6"}), V({"1", "2", "2", "3", "4", "7"}),
                        V({"3", "3", "3", "5", "5", "5"}), V({"2", "2", "2", "2", "2", "5"}),
                        LengthVector({1, 2, frac(7, 3), frac(5, 2), frac(23, 8), frac(69, 8)})}) {
    const auto w = paper_cross_witness_6(r);
    ASSERT_EQ(w.lengths.size(), 3u);
    for (const auto& len : w.lengths) EXPECT_GE(len, 2 * r(1)) << r;
  }
}

TEST(Cross, LpAtLeastWitness) {
  const auto r = V({"2", "3", "3", "4", "5"});
  const auto p = caterpillar_polytope(r).polytope;
  const auto fit = max_axis_cross(p);
  EXPECT_TRUE(replay_cross(p, fit));
  EXPECT_GE(fit.a, 2 * r(1));
}

TEST(GwHypothesis, ConditionAExample) {
  const auto w = upper_bound_gw_hypothesis(V({"1", "2", "3", "4", "5", "6"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->reshuffled, V({"1", "6", "2", "5", "3", "4"}));
  EXPECT_EQ(w->edge, 2);
  EXPECT_TRUE(w->toric);
  EXPECT_TRUE(replay_facet_witness(*w));
  auto bad = *w;
  bad.edge = 1;
  EXPECT_FALSE(replay_facet_witness(bad));
}

TEST(GwHypothesis, FailsOutsideConditionA) {
  EXPECT_FALSE(upper_bound_gw_hypothesis(V({"3", "3", "3", "5", "5", "5"})));
  EXPECT_THROW(upper_bound_gw_hypothesis(V({"6", "5", "4", "3", "2", "1"})), Error);
}

TEST(Projective, FormMatchesSimplex) {
  for (const auto& r : {V({"1", "1", "1", "2"}), V({"1", "1", "1", "1", "3"}), V({"1", "1", "1", "1", "1", "4"}),
                        V({"1", "1", "1", "1", "1", "1", "5"})}) {
    const auto pf = projective_form(r);
    EXPECT_TRUE(pf.simplex_match) << r;
    EXPECT_EQ(pf.gamma, gamma_of(r));
  }
}

TEST(Report, PentagonChambers) {
  struct Case {
    LengthVector r;
    Rational exact;
    const char* provenance;
  };
  const std::vector<Case> cases{
      {V({"1", "2", "3", "4", "7"}), 2, "fano-upsilon"},   {V({"1", "2", "5", "6", "7"}), 2, "fano-upsilon"},
      {V({"2", "3", "4", "6", "8"}), 4, "fano-upsilon"},   {V({"2", "3", "3", "4", "5"}), 4, "fano-upsilon"},
      {V({"3", "4", "5", "5", "6"}), 6, "blowup-upsilon"},
  };
  for (const auto& c : cases) {
    const auto rep = gromov_width_report(c.r, 7);
    ASSERT_TRUE(rep.exact) << c.r;
    EXPECT_EQ(*rep.exact, c.exact);
    EXPECT_EQ(*rep.exact, rep.conjectured);
    EXPECT_EQ(rep.upper_provenance, c.provenance);
    EXPECT_TRUE(rep.perturbation.empty());
  }
}

TEST(Report, PentagonTiesUseTwoPerturbations) {
  for (const auto& [r, w] : std::vector<std::pair<LengthVector, Rational>>{{V({"2", "2", "2", "2", "3"}), 4},
                                                                            {V({"1", "1", "1", "1", "1"}), 2}}) {
    const auto rep = gromov_width_report(r, 7);
    ASSERT_TRUE(rep.exact) << r;
    EXPECT_EQ(*rep.exact, w);
    EXPECT_EQ(rep.chamber, Chamber5::C6);
    EXPECT_EQ(rep.perturbation.size(), 2u);
  }
}

TEST(Report, Hexagons) {
  const auto a = gromov_width_report(V({"1", "2", "3", "4", "5", "6"}), 8);
  ASSERT_TRUE(a.exact);
  EXPECT_EQ(*a.exact, 2);
  EXPECT_TRUE(std::holds_alternative<FacetWitness>(*a.certificate));

  const auto b = gromov_width_report(V({"1", "2", "2", "3", "4", "7"}), 8);
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(*b.exact, 2);

  // Condition C: Upsilon equals 2 r1 = 6 here.
  const auto c = gromov_width_report(V({"3", "3", "3", "5", "5", "5"}), 8);
  ASSERT_TRUE(c.exact);
  EXPECT_EQ(*c.exact, 6);
  const auto& tb = std::get<ToricUpperBound>(*c.certificate);
  EXPECT_FALSE(tb.fano);
  EXPECT_EQ(tb.chain.size(), 3u);
  EXPECT_TRUE(replay_toric_bound(tb, 3));

  const auto d = gromov_width_report(V({"2", "2", "2", "2", "2", "5"}), 8);
  EXPECT_EQ(d.lower, 4);
  EXPECT_FALSE(d.upper);
  EXPECT_EQ(d.upper_provenance, "lower-bound-only");
}

TEST(Report, ProjectiveAndFourGon) {
  const auto p = gromov_width_report(V({"1", "1", "1", "2"}), 6);
  EXPECT_EQ(*p.exact, 1);
  EXPECT_EQ(p.upper_provenance, "projective-chamber");
  const auto q = gromov_width_report(V({"2", "3", "4", "6"}), 6);
  EXPECT_EQ(*q.exact, 3);
  EXPECT_EQ(*q.exact, q.conjectured);
}

TEST(Report, UnsortedInputRecordsPermutation) {
  const auto rep = gromov_width_report(V({"7", "3", "1", "4", "2"}), 7);
  EXPECT_EQ(rep.sorted, V({"1", "2", "3", "4", "7"}));
  EXPECT_EQ(rep.perm, (std::vector<std::size_t>{2, 4, 1, 3, 0}));
  EXPECT_EQ(*rep.exact, 2);
}

TEST(Report, Errors) {
  EXPECT_THROW(gromov_width_report(V({"1", "1", "1", "3"}), 6), Error);
  EXPECT_THROW(gromov_width_report(V({"1", "2", "3", "4", "11"}), 7), Error);
  std::vector<Rational> nine;
  for (long i = 1; i <= 9; ++i) nine.push_back(frac(i * i + 7, i + 1));
  const LengthVector r9(nine);
  if (is_generic(r9) && !has_long_singleton(r9)) {
    try {
      gromov_width_report(r9, 11);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Capability);
    }
  }
}

TEST(Report, SandwichOnSamples) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto rep = gromov_width_report(sample_generic(5, 41, 6, i), 7);
    EXPECT_LE(rep.lower, rep.conjectured);
    if (rep.upper) {
      EXPECT_GE(*rep.upper, rep.conjectured);
    }
  }
}
