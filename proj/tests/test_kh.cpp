#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <variant>

#include "fri/benchmark.hpp"
#include "fri/errors.hpp"
#include "fri/kh.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace fri;

namespace {

constexpr int kTrials = 1000;

Rule rule1d(std::array<double, 4> a, std::array<double, 4> b) { return Rule({TrapezoidSet(a)}, TrapezoidSet(b)); }
Observation obs1d(std::array<double, 4> x) { return {{TrapezoidSet(x)}}; }

void expect_points(const ConclusionPoints& p, std::array<double, 4> want, double tol) {
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(p[j], want[j], tol) << "point " << j + 1;
}

gen::Config random_config(gen::Rng& rng, int t) { return t % 2 ? gen::interleaved(rng) : gen::separated(rng); }

std::array<double, 4> mirror(const std::array<double, 4>& p) { return {-p[3], -p[2], -p[1], -p[0]}; }

}  // namespace

TEST(Rule, RequiresAntecedents) { EXPECT_THROW(Rule({}, TrapezoidSet::singleton(0)), DimensionError); }

TEST(RuleBase, Validation) {
  EXPECT_THROW(RuleBase({}), DimensionError);
  const Rule one = rule1d({1, 2, 3, 4}, {1, 2, 3, 4});
  const Rule two({TrapezoidSet(1, 2, 3, 4), TrapezoidSet(1, 2, 3, 4)}, TrapezoidSet(1, 2, 3, 4));
  EXPECT_THROW(RuleBase({one, two}), DimensionError);
  // [1,2,3,4] and [0,3,4,5] are not ordered either way.
  EXPECT_THROW(RuleBase({one, rule1d({0, 3, 4, 5}, {1, 2, 3, 4})}), OrderingViolation);
  EXPECT_NO_THROW(RuleBase({one, rule1d({6, 7, 8, 9}, {6, 7, 8, 9})}));
}

TEST(LowerUpperDistance, Examples) {
  auto d = lower_upper_distance(make_set(1, 2, 3, 4), make_set(6, 7, 8, 9), 0);
  EXPECT_DOUBLE_EQ(d.lower, 5);
  EXPECT_DOUBLE_EQ(d.upper, 5);
  d = lower_upper_distance(make_set(2, 2, 2, 2), make_set(4.5, 5, 5, 5.5), 0);
  EXPECT_DOUBLE_EQ(d.lower, 2.5);
  EXPECT_DOUBLE_EQ(d.upper, 3.5);
  d = lower_upper_distance(make_set(1, 2, 3, 4), make_set(4.2, 5.2, 5.2, 6.7), 1);
  EXPECT_NEAR(d.lower, 3.2, 1e-12);
  EXPECT_NEAR(d.upper, 2.2, 1e-12);
  EXPECT_THROW(lower_upper_distance(make_set(6, 7, 8, 9), make_set(1, 2, 3, 4), 0.5), OrderingViolation);
}

TEST(SelectFlanking, TwoRuleBase) {
  const RuleBase rb({rule1d({1, 2, 2, 3}, {2, 2, 2, 2}), rule1d({7, 8, 8, 9}, {8, 8, 8, 8})});
  const auto f = select_flanking(rb, obs1d({4, 5, 5, 6}));
  EXPECT_EQ(f.lower_index, 0u);
  EXPECT_EQ(f.upper_index, 1u);
  EXPECT_EQ(f.lower, &rb[0]);
}

TEST(SelectFlanking, PicksNearestPair) {
  const RuleBase rb({rule1d({11, 12, 13, 14}, {0, 0, 0, 0}), rule1d({1, 2, 3, 4}, {0, 0, 0, 0}),
                     rule1d({6, 7, 8, 9}, {0, 0, 0, 0})});
  const auto f = select_flanking(rb, obs1d({4.5, 5, 5, 5.5}));
  EXPECT_EQ(f.lower_index, 1u);
  EXPECT_EQ(f.upper_index, 2u);

  const auto g = select_flanking(rb, obs1d({9.5, 10, 10, 10.5}));
  EXPECT_EQ(g.lower_index, 2u);
  EXPECT_EQ(g.upper_index, 0u);
}

TEST(SelectFlanking, NotFlanked) {
  const RuleBase rb({rule1d({1, 2, 3, 4}, {0, 0, 0, 0}), rule1d({6, 7, 8, 9}, {0, 0, 0, 0})});
  EXPECT_THROW(select_flanking(rb, obs1d({-3, -2, -2, -1})), NotFlanked);
  EXPECT_THROW(select_flanking(rb, obs1d({10, 11, 11, 12})), NotFlanked);
  try {
    select_flanking(rb, obs1d({-3, -2, -2, -1}));
  } catch (const NotFlanked& e) {
    EXPECT_NE(std::string(e.what()).find("observation not flanked"), std::string::npos);
  }
  EXPECT_THROW(select_flanking(rb, Observation{{make_set(4, 5, 5, 6), make_set(4, 5, 5, 6)}}), DimensionError);
}

TEST(KhPoints, BenchmarkExamples) {
  expect_points(kh_characteristic_points(rule1d({1, 2, 3, 4}, {1.5, 2.5, 2.5, 3.8}),
                                         rule1d({6, 7, 8, 9}, {6.5, 7.5, 7.5, 9}), obs1d({4.2, 5.2, 5.2, 6.7})),
                {4.7, 5.7, 4.7, 6.608}, 1e-9);
  expect_points(kh_characteristic_points(rule1d({1, 2.5, 2.5, 4}, {1, 2.5, 2.5, 4}),
                                         rule1d({6, 7.5, 7.5, 9}, {6, 7.5, 7.5, 9}), obs1d({4.5, 5, 5, 5.5})),
                {4.5, 5, 5, 5.5}, 1e-9);
  expect_points(kh_characteristic_points(rule1d({2, 2, 2, 2}, {1, 2, 3, 4}), rule1d({8, 8, 8, 8}, {6, 7, 8, 9}),
                                         obs1d({4.5, 5, 5, 5.5})),
                {37.0 / 12, 4.5, 5.5, 83.0 / 12}, 1e-9);
  expect_points(kh_characteristic_points(rule1d({0, 1, 2, 3}, {0, 1, 2, 3}), rule1d({10, 11, 12, 13}, {10, 11, 12, 13}),
                                         obs1d({5, 6, 7, 8})),
                {5, 6, 7, 8}, 1e-12);
}

TEST(KhPoints, OutputIsNotSorted) {
  const auto p = kh_characteristic_points(rule1d({1, 2, 3, 4}, {1.5, 2.5, 2.5, 3.8}),
                                          rule1d({6, 7, 8, 9}, {6.5, 7.5, 7.5, 9}), obs1d({4.2, 5.2, 5.2, 6.7}));
  EXPECT_FALSE(p.is_monotone());
  EXPECT_GT(p[1], p[2]);
}

TEST(KhPoints, ZeroDistanceTakesTheConsequentPoint) {
  // Support infima coincide, so y1 is B1's left support exactly.
  const auto p = kh_characteristic_points(rule1d({2, 2, 2, 2}, {1, 2, 3, 4}), rule1d({6, 7, 8, 9}, {6, 7, 8, 9}),
                                          obs1d({2, 4, 4, 5}));
  EXPECT_EQ(p[0], 1.0);
}

TEST(KhPoints, ZeroSpanWhenAntecedentPointsCoincide) {
  EXPECT_THROW(kh_characteristic_points(rule1d({0, 1, 2, 3}, {0, 1, 2, 3}), rule1d({0, 2, 3, 4}, {5, 6, 7, 8}),
                                        obs1d({0, 1.5, 2.5, 3.5})),
               ZeroSpan);
}

TEST(KhPoints, RejectsUnflankedObservation) {
  const auto lo = rule1d({1, 2, 3, 4}, {1, 2, 3, 4});
  const auto hi = rule1d({6, 7, 8, 9}, {6, 7, 8, 9});
  EXPECT_THROW(kh_characteristic_points(lo, hi, obs1d({0, 1, 1, 2})), OrderingViolation);
  EXPECT_THROW(kh_characteristic_points(hi, lo, obs1d({4.5, 5, 5, 5.5})), OrderingViolation);
  EXPECT_THROW(kh_characteristic_points(lo, hi, Observation{}), DimensionError);
}

TEST(KhPoints, MatchesOracleOnRandomConfigurations) {
  gen::Rng rng(21);
  for (int t = 0; t < kTrials; ++t) {
    const auto c = random_config(rng, t);
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    const auto ref = oracle::kh_points(c.oracle());
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(p[j], static_cast<double>(ref[j]), 1e-9) << "trial " << t;
  }
}

TEST(KhPoints, MultiDimensionalDistances) {
  gen::Rng rng(22);
  for (double order : {1.0, 2.0, 3.5}) {
    for (int t = 0; t < 200; ++t) {
      const auto c1 = gen::separated(rng);
      const auto c2 = gen::separated(rng);
      const Rule lo({TrapezoidSet(c1.a1), TrapezoidSet(c2.a1)}, TrapezoidSet(c1.b1));
      const Rule hi({TrapezoidSet(c1.a2), TrapezoidSet(c2.a2)}, TrapezoidSet(c1.b2));
      const Observation obs{{TrapezoidSet(c1.x), TrapezoidSet(c2.x)}};
      const auto p = kh_characteristic_points(lo, hi, obs, {order});
      for (int j = 0; j < 4; ++j) {
        const long double d1 = oracle::norm({c1.x[j] - c1.a1[j], c2.x[j] - c2.a1[j]}, order);
        const long double d2 = oracle::norm({c1.a2[j] - c1.x[j], c2.a2[j] - c2.x[j]}, order);
        ASSERT_NEAR(p[j], static_cast<double>(oracle::divide(c1.b1[j], c1.b2[j], d1, d2)), 1e-9);
      }
    }
  }
  const auto c = gen::separated(rng);
  EXPECT_THROW(kh_characteristic_points(c.lower(), c.upper(), c.observation(), {0.5}), DomainError);
}

TEST(AlphaProfile, LevelsAndInversion) {
  const auto lo = rule1d({1, 2, 3, 4}, {1.5, 2.5, 2.5, 3.8});
  const auto hi = rule1d({6, 7, 8, 9}, {6.5, 7.5, 7.5, 9});
  const auto prof = kh_alpha_profile(lo, hi, obs1d({4.2, 5.2, 5.2, 6.7}), 11);
  ASSERT_EQ(prof.size(), 11u);
  EXPECT_EQ(prof.front().level, 0.0);
  EXPECT_EQ(prof.back().level, 1.0);
  for (std::size_t i = 1; i < prof.size(); ++i) EXPECT_GT(prof[i].level, prof[i - 1].level);
  EXPECT_NEAR(prof.back().inf, 5.7, 1e-9);
  EXPECT_NEAR(prof.back().sup, 4.7, 1e-9);
  EXPECT_NEAR(prof.back().gap(), -1.0, 1e-9);
  EXPECT_THROW(kh_alpha_profile(lo, hi, obs1d({4.2, 5.2, 5.2, 6.7}), 1), DomainError);
}

TEST(AlphaProfile, MatchesBisectionOracle) {
  gen::Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto c = random_config(rng, t);
    const auto prof = kh_alpha_profile(c.lower(), c.upper(), c.observation(), 17);
    for (const auto& lv : prof) {
      const auto ref = oracle::kh_level(c.oracle(), lv.level);
      ASSERT_NEAR(lv.inf, static_cast<double>(ref[0]), 1e-9);
      ASSERT_NEAR(lv.sup, static_cast<double>(ref[1]), 1e-9);
    }
  }
}

TEST(KhStab, TwoRuleBaseEqualsKh) {
  for (int id : {6, 9}) {
    const auto& c = bench::builtin_case(id);
    const auto stab = khstab_points(RuleBase({c.lower, c.upper}), c.observation, 1.0);
    const auto kh = kh_characteristic_points(c.lower, c.upper, c.observation);
    expect_points(stab, kh.y, 1e-9);
  }
  expect_points(khstab_points(RuleBase({bench::builtin_case(9).lower, bench::builtin_case(9).upper}),
                              bench::builtin_case(9).observation),
                {6.5, 58.0 / 11, 52.0 / 11, 4.4}, 1e-9);
}

TEST(KhStab, SingleRuleAndExtraRules) {
  const RuleBase single({rule1d({1, 2, 3, 4}, {10, 11, 12, 13})});
  expect_points(khstab_points(single, obs1d({5, 6, 6, 7})), {10, 11, 12, 13}, 1e-12);

  // Third rule at distance 5 on every point joins with weight 1/5.
  const RuleBase three({rule1d({0, 1, 2, 3}, {0, 0, 0, 0}), rule1d({10, 11, 12, 13}, {10, 10, 10, 10}),
                        rule1d({20, 21, 22, 23}, {30, 30, 30, 30})});
  const auto p = khstab_points(three, obs1d({15, 16, 17, 18}));
  const double want = (10.0 / 5 + 30.0 / 5) / (1.0 / 15 + 1.0 / 5 + 1.0 / 5);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(p[j], want, 1e-12);

  EXPECT_THROW(khstab_points(single, obs1d({5, 6, 6, 7}), 0.0), DomainError);
}

TEST(KhStab, ExponentSharpensTowardsNearestRule) {
  const RuleBase rb({rule1d({0, 1, 2, 3}, {0, 0, 0, 0}), rule1d({10, 11, 12, 13}, {10, 10, 10, 10})});
  const auto p1 = khstab_points(rb, obs1d({2, 3, 4, 5}), 1.0);
  const auto p2 = khstab_points(rb, obs1d({2, 3, 4, 5}), 2.0);
  EXPECT_NEAR(p1[0], 2.0, 1e-12);
  EXPECT_NEAR(p2[0], 10.0 / (64.0 / 4 + 1), 1e-12);
}

TEST(AssembleConclusion, NormalAbnormalSingleton) {
  const auto n = assemble_conclusion({{4, 4.5, 5.5, 6}});
  ASSERT_TRUE(std::holds_alternative<NormalConclusion>(n));
  EXPECT_EQ(std::get<NormalConclusion>(n).set, make_set(4, 4.5, 5.5, 6));

  const auto a = assemble_conclusion({{4.7, 5.7, 4.7, 6.6}});
  ASSERT_TRUE(std::holds_alternative<AbnormalConclusion>(a));
  const GradedPointList raw = {{4.7, 0}, {5.7, 1}, {4.7, 1}, {6.6, 0}};
  EXPECT_EQ(std::get<AbnormalConclusion>(a).points, raw);

  const auto s = assemble_conclusion({{5, 5, 5, 5}});
  ASSERT_TRUE(std::holds_alternative<NormalConclusion>(s));
  EXPECT_TRUE(std::get<NormalConclusion>(s).set.is_singleton());
}

TEST(AssembleConclusion, ToleratesRoundingInversions) {
  const auto c = assemble_conclusion({{1, 2, 2 - 1e-12, 3}});
  ASSERT_TRUE(std::holds_alternative<NormalConclusion>(c));
}

TEST(Property, EndpointConsistency) {
  gen::Rng rng(31);
  for (int t = 0; t < kTrials; ++t) {
    const auto c = random_config(rng, t);
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    const auto prof = kh_alpha_profile(c.lower(), c.upper(), c.observation(), 2);
    ASSERT_NEAR(prof[0].inf, p[0], 1e-9);
    ASSERT_NEAR(prof[0].sup, p[3], 1e-9);
    ASSERT_NEAR(prof[1].inf, p[1], 1e-9);
    ASSERT_NEAR(prof[1].sup, p[2], 1e-9);
  }
}

TEST(Property, FundamentalEquationRatio) {
  gen::Rng rng(32);
  for (int t = 0; t < kTrials; ++t) {
    const auto c = random_config(rng, t);
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    for (int j = 0; j < 4; ++j) {
      if (p[j] == c.b2[j]) continue;
      const double lhs = (p[j] - c.b1[j]) / (c.b2[j] - p[j]);
      const double rhs = (c.x[j] - c.a1[j]) / (c.a2[j] - c.x[j]);
      ASSERT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(rhs))) << "trial " << t << " point " << j + 1;
    }
  }
}

TEST(Property, BoundaryCollapse) {
  gen::Rng rng(33);
  for (int t = 0; t < kTrials; ++t) {
    auto c = gen::separated(rng);
    const double eps = 1e-10;
    for (int j = 0; j < 4; ++j) c.x[j] = c.a1[j] + eps * (c.x[j] - c.a1[j]) + (j + 1) * 1e-12;
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(p[j], c.b1[j], 1e-8);
  }
}

TEST(Property, TranslationEquivariance) {
  gen::Rng rng(34);
  for (int t = 0; t < kTrials; ++t) {
    const auto c = random_config(rng, t);
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    const double shift = gen::uniform(rng, -20, 20);

    auto moved_inputs = c;
    for (auto* s : {&moved_inputs.a1, &moved_inputs.a2, &moved_inputs.x})
      for (double& v : *s) v += shift;
    const auto q = kh_characteristic_points(moved_inputs.lower(), moved_inputs.upper(), moved_inputs.observation());
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(q[j], p[j], 1e-9);

    auto moved_outputs = c;
    for (auto* s : {&moved_outputs.b1, &moved_outputs.b2})
      for (double& v : *s) v += shift;
    const auto r = kh_characteristic_points(moved_outputs.lower(), moved_outputs.upper(), moved_outputs.observation());
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(r[j], p[j] + shift, 1e-9);
  }
}

TEST(Property, ScaleEquivariance) {
  gen::Rng rng(35);
  for (int t = 0; t < kTrials; ++t) {
    const auto c = random_config(rng, t);
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    const double s = gen::uniform(rng, 0.1, 10);
    auto scaled = c;
    for (auto* set : {&scaled.a1, &scaled.a2, &scaled.b1, &scaled.b2, &scaled.x})
      for (double& v : *set) v *= s;
    const auto q = kh_characteristic_points(scaled.lower(), scaled.upper(), scaled.observation());
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(q[j], s * p[j], 1e-9 * std::max(1.0, std::abs(s * p[j])));
  }
}

TEST(Property, MirrorSymmetry) {
  gen::Rng rng(36);
  for (int t = 0; t < kTrials; ++t) {
    const auto c = random_config(rng, t);
    const auto p = kh_characteristic_points(c.lower(), c.upper(), c.observation());
    // Mirroring swaps which rule lies below the observation.
    gen::Config m{mirror(c.a2), mirror(c.a1), mirror(c.b2), mirror(c.b1), mirror(c.x)};
    const auto q = kh_characteristic_points(m.lower(), m.upper(), m.observation());
    for (int j = 0; j < 4; ++j) ASSERT_NEAR(q[j], -p[3 - j], 1e-9);
  }
}

TEST(Property, NormalBenchmarkProfilesAreNested) {
  for (const auto& c : bench::builtin_cases()) {
    if (full_report(c.lower, c.upper, c.observation).overall != Verdict::Normal) continue;
    const auto prof = kh_alpha_profile(c.lower, c.upper, c.observation);
    for (std::size_t i = 1; i < prof.size(); ++i) {
      ASSERT_GE(prof[i].inf, prof[i - 1].inf - 1e-9) << "case " << c.id;
      ASSERT_LE(prof[i].sup, prof[i - 1].sup + 1e-9) << "case " << c.id;
      ASSERT_GE(prof[i].gap(), -1e-9) << "case " << c.id;
    }
  }
}
