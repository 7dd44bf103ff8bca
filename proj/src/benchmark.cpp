#include "fri/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fri::bench {

namespace {

using Set = TrapezoidSet;

ExpectedValue printed(double v) { return {v, Provenance::Printed}; }

ExpectedSegment seg(double l1, double l2, double r1, double r2, LengthPath path, Verdict verdict) {
  return {printed(l1), printed(l2), printed(r1), printed(r2), path, verdict};
}

std::array<ExpectedValue, 4> points(double y1, double y2, double y3, double y4) {
  return {printed(y1), printed(y2), printed(y3), printed(y4)};
}

Rule rule(const Set& antecedent, const Set& consequent) { return Rule({antecedent}, consequent); }

constexpr auto N = Verdict::Normal;
constexpr auto P = Verdict::Problem;
constexpr auto GEN = LengthPath::General;
constexpr auto UNZ = LengthPath::UniformNonzero;
constexpr auto UZ = LengthPath::UniformZero;

std::vector<BenchmarkCase> make_cases() {
  std::vector<BenchmarkCase> cases;

  cases.push_back({
      1,
      "Case 1: observation at least as wide as uniform antecedents",
      rule(Set(1, 2, 2, 3), Set(2, 2, 2, 2)),
      rule(Set(7, 8, 8, 9), Set(8, 8, 8, 8)),
      Observation{{Set(4, 5, 5, 6)}},
      points(5, 5, 5, 5),
      {5.0, 5.0, 5.0, 5.0},
      {seg(0, 0, 1.20, 1.25, UNZ, N), seg(0, 0, 1, 1, UZ, N), seg(0, 0, 1.20, 1.25, UNZ, N)},
      N,
      {},
      "Printed verbatim (Example 1). Triangles [1 2 3], [7 8 9] and singleton-valued triangles [2 2 2], "
      "[8 8 8] widened to 4-point form; the printed conclusion [5 5 5] is the singleton at 5.",
  });

  cases.push_back({
      2,
      "Case 2: equal antecedent and consequent lengths (triangles)",
      rule(Set(1, 2.5, 2.5, 4), Set(1, 2.5, 2.5, 4)),
      rule(Set(6, 7.5, 7.5, 9), Set(6, 7.5, 7.5, 9)),
      Observation{{Set(4.5, 5, 5, 5.5)}},
      points(4.5, 5, 5, 5.5),
      {9.0 / 2.0, 5.0, 5.0, 11.0 / 2.0},
      {seg(3.5, 6, 1, 1.16, UNZ, N), seg(0, 0, 1, 1, UZ, N), seg(3.5, 6, 1, 1.16, UNZ, N)},
      N,
      {},
      "Printed verbatim (Example 2). Observation [4.5 5 5.5] is a triangle.",
  });

  cases.push_back({
      3,
      "Case 2: equal antecedent and consequent lengths (trapezoids)",
      rule(Set(1, 2, 3, 4), Set(1, 2, 3, 4)),
      rule(Set(6, 7, 8, 9), Set(6, 7, 8, 9)),
      Observation{{Set(4, 4.8, 5.2, 6)}},
      points(4, 4.8, 5.2, 6),
      {4.0, 24.0 / 5.0, 26.0 / 5.0, 6.0},
      {seg(0.8, 4.8, 1, 1.25, UNZ, N), seg(2.4, 4.4, 1, 1.11, UNZ, N), seg(0.8, 4.8, 1, 1.25, UNZ, N)},
      N,
      {},
      "Printed verbatim (Example 3).",
  });

  cases.push_back({
      4,
      "Case 3: consequents wider than antecedents, singleton observation",
      rule(Set(1.5, 2, 2, 2.5), Set(1, 2, 3, 4)),
      rule(Set(6.5, 7, 7, 7.5), Set(6, 7, 8, 9)),
      Observation{{Set(4.5, 4.5, 4.5, 4.5)}},
      points(4, 4.5, 5.5, 6),
      {4.0, 9.0 / 2.0, 11.0 / 2.0, 6.0},
      {seg(2, 4.5, 0.88, 1, UZ, N), seg(0, 5, 0.80, 1, UZ, N), seg(2, 4.5, 0.88, 1, UZ, N)},
      N,
      {},
      "Printed verbatim (Example 4).",
  });

  cases.push_back({
      5,
      "Case 3: singleton antecedents, trapezoid consequents",
      rule(Set(2, 2, 2, 2), Set(1, 2, 3, 4)),
      rule(Set(8, 8, 8, 8), Set(6, 7, 8, 9)),
      Observation{{Set(4.5, 5, 5, 5.5)}},
      points(3.08, 4.5, 5.5, 6.916),
      {37.0 / 12.0, 9.0 / 2.0, 11.0 / 2.0, 83.0 / 12.0},
      {seg(-2, 6.5, 0.66, 1.09, UNZ, N), seg(0, 6, 0.66, 1, UZ, N), seg(-2, 6.5, 0.66, 1.09, UNZ, N)},
      N,
      {},
      "Reconstructed observation (Example 5). Printed A*=[4.5 5 5 5] contradicts the printed "
      "conclusion 6.916; the right support 5.5 is the unique value reproducing it, and also reproduces all "
      "printed diagnostics (-2, 6.5, 0, 6, -2, 6.5).",
  });

  cases.push_back({
      6,
      "Abnormal core",
      rule(Set(1, 2, 3, 4), Set(1.5, 2.5, 2.5, 3.8)),
      rule(Set(6, 7, 8, 9), Set(6.5, 7.5, 7.5, 9)),
      Observation{{Set(4.2, 5.2, 5.2, 6.7)}},
      points(4.7, 5.7, 4.7, 6.6),
      {47.0 / 10.0, 57.0 / 10.0, 47.0 / 10.0, 826.0 / 125.0},
      {seg(0, 5, 1, 1.33, UNZ, N), seg(5, 0, 1.25, 1, UZ, P), seg(-9.25, 17.28, 0.92, 1.6, GEN, N)},
      P,
      {
          {"KH", "Abnormality [4.7 5.7 4.7 6.6]", std::array{4.7, 5.7, 4.7, 6.6}},
          {"KHstab", "Abnormality [4.7 5.7 4.7 6.6]", std::array{4.7, 5.7, 4.7, 6.6}},
          {"MACI", "Normal [4.2 5.2 5.2 6.6]", std::nullopt},
          {"VKK", "Normal [4.6 5.2 5.2 6.66]", std::nullopt},
          {"CRF", "Normal [3.9 5.25 5.25 6.75]", std::nullopt},
      },
      "Printed verbatim (Example 6).",
  });

  cases.push_back({
      7,
      "Abnormal left boundary",
      rule(Set(1, 2.5, 2.5, 4), Set(1, 2, 3, 4.5)),
      rule(Set(5.5, 7.5, 7.5, 9), Set(6.5, 7, 8, 9.5)),
      Observation{{Set(4.5, 4.9, 5.1, 5.5)}},
      points(5.27, 4.4, 5.6, 6.0),
      {95.0 / 18.0, 22.0 / 5.0, 28.0 / 5.0, 6.0},
      {seg(30.15, 6.80, 1.5, 1.15, GEN, P), seg(-0.8, 5.2, 0.8, 1.04, UNZ, N), seg(3.85, 5.85, 1, 1.12, UNZ, N)},
      P,
      {
          {"KH", "Abnormality [5.27 4.4 5.6 6.0]", std::array{5.27, 4.4, 5.6, 6.0}},
          {"KHstab", "Abnormality [5.27 4.4 5.6 6.0]", std::array{5.27, 4.4, 5.6, 6.0}},
          {"MACI", "Normal [3.8 4.5 5.5 7]", std::nullopt},
          {"VKK", "Abnormality [out range]", std::nullopt},
          {"CRF", "Normal [4.5 4.9 5.0 5.1]", std::nullopt},
      },
      "Printed verbatim (Example 7).",
  });

  cases.push_back({
      8,
      "Abnormal right boundary",
      rule(Set(1.5, 2.5, 2.5, 4.3), Set(1, 2, 3, 3.5)),
      rule(Set(6.5, 7.5, 7.5, 8.8), Set(6, 7, 8, 8.9)),
      Observation{{Set(4.5, 4.9, 5.1, 5.5)}},
      points(4, 4.4, 5.6, 4.94),
      {4.0, 22.0 / 5.0, 28.0 / 5.0, 247.0 / 50.0},
      {seg(2.4, 4.4, 1, 1.11, UNZ, N), seg(-0.8, 5.2, 0.80, 1.04, UNZ, N), seg(25.65, 6.76, 1.40, 1.14, GEN, P)},
      P,
      {},
      "Printed verbatim (Example 8).",
  });

  cases.push_back({
      9,
      "Abnormal core and both boundaries",
      rule(Set(2, 2, 2.5, 3), Set(2, 2, 2, 2)),
      rule(Set(6, 7.5, 8, 8), Set(8, 8, 8, 8)),
      Observation{{Set(5, 5, 5, 5)}},
      points(6.5, 5.27, 4.72, 4.4),
      {13.0 / 2.0, 58.0 / 11.0, 52.0 / 11.0, 22.0 / 5.0},
      {seg(27, 0, 1.5, 1, GEN, P), seg(3, 0, 1.2, 1, UZ, P), seg(9, 0, 1.2, 1, GEN, P)},
      P,
      {
          {"KH", "Abnormality [6.5 5.27 4.72 4.4]", std::array{6.5, 5.27, 4.72, 4.4}},
          {"KHstab", "Abnormality [6.5 5.27 4.72 4.4]", std::array{6.5, 5.27, 4.72, 4.4}},
          {"MACI", "Normal [5 5 5]", std::nullopt},
          {"VKK", "Abnormality [5.3 5.5 5.3]", std::nullopt},
          {"CRF", "Normal [5 5 5]", std::nullopt},
      },
      "Reconstructed antecedents (Example 9). Printed rows A1=[2 2 2 5 3], A2=[6 7 5 8 8] are "
      "garbled; A1=[2 2 2.5 3], A2=[6 7.5 8 8] reproduce all four printed conclusion points and all six "
      "printed length values (27, 0, 3, 0, 9, 0).",
  });

  return cases;
}

Check numeric(std::string segment, std::string metric, double computed, double expected, double tolerance) {
  const double deviation = std::abs(computed - expected);
  return {std::move(segment), std::move(metric), computed, expected, deviation, tolerance, deviation <= tolerance};
}

Check numeric(std::string segment, std::string metric, std::optional<double> computed, const ExpectedValue& expected) {
  if (!computed) {
    return {std::move(segment), std::move(metric), std::string("UNDEFINED"), expected.value, std::nullopt,
            expected.tolerance(), false};
  }
  return numeric(std::move(segment), std::move(metric), *computed, expected.value, expected.tolerance());
}

Check label(std::string segment, std::string metric, std::string_view computed, std::string_view expected) {
  return {std::move(segment), std::move(metric), std::string(computed), std::string(expected), std::nullopt, 0.0,
          computed == expected};
}

}  // namespace

const std::vector<BenchmarkCase>& builtin_cases() {
  static const std::vector<BenchmarkCase> cases = make_cases();
  return cases;
}

const BenchmarkCase& builtin_case(int id) {
  for (const auto& c : builtin_cases()) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no benchmark case " + std::to_string(id));
}

std::size_t CaseReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::size_t BenchmarkReport::passed() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) { return c.passed(); }));
}

CaseReport run_case(const BenchmarkCase& c, const Engine& engine) {
  CaseReport out;
  out.id = c.id;
  out.name = c.name;

  const ConclusionPoints pts = engine.points(c.lower, c.upper, c.observation);
  out.report = make_report(c.lower, c.upper, c.observation, pts, engine.length);

  static constexpr const char* kPointNames[] = {"y1", "y2", "y3", "y4"};
  for (std::size_t j = 0; j < 4; ++j) {
    out.checks.push_back(numeric("POINTS", kPointNames[j], pts[j], c.expected_points[j].value,
                                 c.expected_points[j].tolerance()));
  }
  for (std::size_t j = 0; j < 4; ++j) {
    out.checks.push_back(
        numeric("POINTS", std::string(kPointNames[j]) + "_exact", pts[j], c.exact_points[j], kExactTolerance));
  }

  for (Segment s : kSegments) {
    const auto& got = out.report.at(s);
    const auto& want = c.expected_segments[index_of(s)];
    const std::string name(to_string(s));
    out.checks.push_back(numeric(name, "length1", got.length.length1, want.length1));
    out.checks.push_back(numeric(name, "length2", got.length.length2, want.length2));
    out.checks.push_back(numeric(name, "ratio1", got.ratio.ratio1, want.ratio1));
    out.checks.push_back(numeric(name, "ratio2", got.ratio.ratio2, want.ratio2));
    out.checks.push_back(label(name, "path", to_string(got.length.path), to_string(want.path)));
    out.checks.push_back(label(name, "verdict", to_string(got.length.verdict), to_string(want.verdict)));
    out.checks.push_back(label(name, "direct_verdict", to_string(got.direct), to_string(want.verdict)));
  }
  out.checks.push_back(label("OVERALL", "verdict", to_string(out.report.overall), to_string(c.expected_overall)));
  return out;
}

BenchmarkReport run_cases(std::span<const BenchmarkCase> cases, const Engine& engine) {
  BenchmarkReport report;
  report.cases.reserve(cases.size());
  for (const auto& c : cases) report.cases.push_back(run_case(c, engine));
  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseReport& a, const CaseReport& b) { return a.id < b.id; });
  return report;
}

BenchmarkReport run_all(const Engine& engine) { return run_cases(builtin_cases(), engine); }

SweepOracleResult sweep_oracle(const Rule& r1, const Rule& r2, const Observation& obs, int n_levels) {
  const AlphaProfile profile = kh_alpha_profile(r1, r2, obs, n_levels);

  SweepOracleResult out;
  out.min_gap = profile.front().gap();
  for (const auto& level : profile) out.min_gap = std::min(out.min_gap, level.gap());
  // Near-ties resolve to the highest level so an exactly degenerate kernel reports alpha = 1.
  for (const auto& level : profile) {
    if (level.gap() <= out.min_gap + kTolerance) out.gap_argmin = level.level;
    if (level.gap() < -kTolerance) out.abnormal_levels.push_back(level.level);
  }
  for (std::size_t i = 1; i < profile.size(); ++i) {
    if (profile[i].inf < profile[i - 1].inf - kTolerance) out.inf_monotone = false;
    if (profile[i].sup > profile[i - 1].sup + kTolerance) out.sup_monotone = false;
  }
  return out;
}

std::vector<ReferenceComparison> compare_reference(const BenchmarkCase& c) {
  std::vector<ReferenceComparison> out;
  for (const auto& row : c.reference_rows) {
    ReferenceComparison cmp{row.method, row.verbatim, ReferenceStatus::ReferenceOnly, std::nullopt, 0.0};
    if (row.points) {
      if (row.method == "KH") {
        cmp.computed = kh_characteristic_points(c.lower, c.upper, c.observation);
      } else if (row.method == "KHstab") {
        cmp.computed = khstab_points(RuleBase({c.lower, c.upper}), c.observation, 1.0);
      }
    }
    if (cmp.computed) {
      for (std::size_t j = 0; j < 4; ++j) {
        cmp.max_deviation = std::max(cmp.max_deviation, std::abs((*cmp.computed)[j] - (*row.points)[j]));
      }
      cmp.status = cmp.max_deviation <= kPrintedTolerance ? ReferenceStatus::Match : ReferenceStatus::Mismatch;
    }
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace fri::bench
