#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string_view>

#include "fri/kh.hpp"

namespace fri {

/// Region of a trapezoid over which a length condition is stated: left
/// boundary (points 1-2), core (2-3), right boundary (3-4).
enum class Segment { LeftBoundary, Core, RightBoundary };

inline constexpr std::array<Segment, 3> kSegments = {Segment::LeftBoundary, Segment::Core, Segment::RightBoundary};

std::size_t index_of(Segment seg) noexcept;
/// "LTB", "CORE", "RTB".
std::string_view to_string(Segment seg) noexcept;
/// Name used in the tabular report: "LFBound", "Core", "RFBound".
std::string_view table_name(Segment seg) noexcept;

enum class Verdict { Normal, Problem };
enum class RatioVerdict { Normal, Problem, Undefined };
enum class LengthPath { General, UniformNonzero, UniformZero };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(RatioVerdict v) noexcept;
std::string_view to_string(LengthPath p) noexcept;

/// Length symbols of one segment. For the core:
///   ka1 = a13 - a12, ka2 = a23 - a22, kb1 = b13 - b12, kb2 = b23 - b22,
///   kastar = x3 - x2, da1 = x2 - a13, da2 = a22 - x3, db = b22 - b13,
///   da = a22 - a13.
/// The boundaries use point pairs (1,2) and (3,4) in the same pattern.
struct SegmentParams {
  Segment segment = Segment::Core;
  double ka1 = 0.0;
  double ka2 = 0.0;
  double kb1 = 0.0;
  double kb2 = 0.0;
  double kastar = 0.0;
  double da1 = 0.0;
  double da2 = 0.0;
  double db = 0.0;
  double da = 0.0;
  bool uniform_a = false;
  bool uniform_b = false;
};

struct LengthDiagnostics {
  double length1 = 0.0;
  double length2 = 0.0;
  LengthPath path = LengthPath::General;
  Verdict verdict = Verdict::Normal;
};

struct RatioDiagnostics {
  std::optional<double> ratio1;
  std::optional<double> ratio2;
  RatioVerdict verdict = RatioVerdict::Undefined;
};

struct CaseTags {
  bool case1 = false;
  bool case2 = false;
  bool case3 = false;
  bool corollary4 = false;

  bool empty() const noexcept { return !(case1 || case2 || case3 || corollary4); }
  friend bool operator==(const CaseTags&, const CaseTags&) = default;
};

struct SegmentReport {
  SegmentParams params;
  LengthDiagnostics length;
  RatioDiagnostics ratio;
  /// Verdict read straight off the characteristic points.
  Verdict direct = Verdict::Normal;
};

struct NormalityReport {
  ConclusionPoints points;
  std::array<SegmentReport, 3> segments;
  CaseTags cases;
  /// Conjunction of the three length-condition verdicts.
  Verdict overall = Verdict::Normal;

  const SegmentReport& at(Segment seg) const { return segments[index_of(seg)]; }
};

/// 1-D only; throws DimensionError otherwise and OrderingViolation when the
/// observation is not between the antecedents.
SegmentParams extract_segment_params(const Rule& r1, const Rule& r2, const Observation& obs, Segment seg);

/// Uniform shortcut when both antecedent and consequent lengths agree on the
/// segment, otherwise the general product form. NORMAL iff length1 <= length2.
LengthDiagnostics length_condition(const SegmentParams& p);

/// ratio1 = db / da, ratio2 = da / (da1 + da2). UNDEFINED on a zero denominator.
RatioDiagnostics ratio_condition(const Rule& r1, const Rule& r2, const Observation& obs, Segment seg);

CaseTags classify_case(const Rule& r1, const Rule& r2, const Observation& obs);

/// LTB: y1 <= y2, CORE: y2 <= y3, RTB: y3 <= y4.
std::array<Verdict, 3> direct_normality(const ConclusionPoints& p);

using LengthRule = std::function<LengthDiagnostics(const SegmentParams&)>;

/// Assembles a report around precomputed conclusion points.
NormalityReport make_report(const Rule& r1, const Rule& r2, const Observation& obs, const ConclusionPoints& points,
                            const LengthRule& length_rule = length_condition);

NormalityReport full_report(const Rule& r1, const Rule& r2, const Observation& obs);

}  // namespace fri
