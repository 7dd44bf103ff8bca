#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fri/cnf.hpp"
#include "fri/kh.hpp"

namespace fri::bench {

/// Tolerance against values printed with 2-3 decimals.
inline constexpr double kPrintedTolerance = 0.011;
/// Tolerance against exact values reconstructed from the inputs.
inline constexpr double kExactTolerance = 1e-9;

enum class Provenance { Printed, Reconstructed };

struct ExpectedValue {
  double value = 0.0;
  Provenance provenance = Provenance::Printed;

  double tolerance() const noexcept {
    return provenance == Provenance::Printed ? kPrintedTolerance : kExactTolerance;
  }
};

struct ExpectedSegment {
  ExpectedValue length1;
  ExpectedValue length2;
  ExpectedValue ratio1;
  ExpectedValue ratio2;
  LengthPath path = LengthPath::General;
  Verdict verdict = Verdict::Normal;
};

/// One row of the method comparison table. Only rows with points are
/// checked against the engine; the rest are rendered verbatim.
struct ReferenceRow {
  std::string method;
  std::string verbatim;
  std::optional<std::array<double, 4>> points;
};

struct BenchmarkCase {
  int id = 0;
  std::string name;
  Rule lower;
  Rule upper;
  Observation observation;
  /// Conclusion as printed (rounded).
  std::array<ExpectedValue, 4> expected_points;
  /// Exact conclusion of the fixture inputs.
  std::array<double, 4> exact_points{};
  std::array<ExpectedSegment, 3> expected_segments;
  Verdict expected_overall = Verdict::Normal;
  std::vector<ReferenceRow> reference_rows;
  std::string provenance_note;
};

/// The nine benchmark cases ordered by id.
const std::vector<BenchmarkCase>& builtin_cases();
/// Throws std::out_of_range for an unknown id.
const BenchmarkCase& builtin_case(int id);

using CheckValue = std::variant<double, std::string>;

struct Check {
  /// "LTB", "CORE", "RTB", "POINTS" or "OVERALL".
  std::string segment;
  std::string metric;
  CheckValue computed;
  CheckValue expected;
  /// Absolute deviation for numeric checks.
  std::optional<double> deviation;
  double tolerance = 0.0;
  bool pass = false;
};

struct CaseReport {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  NormalityReport report;

  std::size_t failures() const noexcept;
  bool passed() const noexcept { return failures() == 0; }
};

struct BenchmarkReport {
  std::vector<CaseReport> cases;

  std::size_t passed() const noexcept;
  std::size_t failed() const noexcept { return cases.size() - passed(); }
  bool all_passed() const noexcept { return passed() == cases.size(); }
};

/// Pluggable pieces of the pipeline, so alternative engines can be scored
/// against the same expectations.
struct Engine {
  std::function<ConclusionPoints(const Rule&, const Rule&, const Observation&)> points =
      [](const Rule& a, const Rule& b, const Observation& o) { return kh_characteristic_points(a, b, o); };
  LengthRule length = length_condition;
};

CaseReport run_case(const BenchmarkCase& c, const Engine& engine = {});
BenchmarkReport run_cases(std::span<const BenchmarkCase> cases, const Engine& engine = {});
BenchmarkReport run_all(const Engine& engine = {});

struct SweepOracleResult {
  double min_gap = 0.0;
  double gap_argmin = 0.0;
  bool inf_monotone = true;
  bool sup_monotone = true;
  /// Levels whose interval is inverted by more than the tolerance.
  std::vector<double> abnormal_levels;

  bool has_inverted_level() const noexcept { return !abnormal_levels.empty(); }
};

SweepOracleResult sweep_oracle(const Rule& r1, const Rule& r2, const Observation& obs,
                               int n_levels = kDefaultAlphaLevels);

enum class ReferenceStatus { Match, Mismatch, ReferenceOnly };

struct ReferenceComparison {
  std::string method;
  std::string verbatim;
  ReferenceStatus status = ReferenceStatus::ReferenceOnly;
  std::optional<ConclusionPoints> computed;
  double max_deviation = 0.0;
};

std::vector<ReferenceComparison> compare_reference(const BenchmarkCase& c);

}  // namespace fri::bench
