#include "fri/cnf.hpp"

#include <cmath>

#include "fri/errors.hpp"

namespace fri {

namespace {

bool nearly_equal(double a, double b) { return std::abs(a - b) <= kTolerance; }

Verdict verdict_of(double lhs, double rhs) { return lhs <= rhs + kTolerance ? Verdict::Normal : Verdict::Problem; }

void check_one_dimensional(const Rule& r1, const Rule& r2, const Observation& obs) {
  if (r1.dimension() != 1 || r2.dimension() != 1 || obs.dimension() != 1) {
    throw DimensionError("normality conditions are defined for 1-D rules only");
  }
  if (!precedes(r1.antecedent(0), obs[0]) || !precedes(obs[0], r2.antecedent(0))) {
    throw OrderingViolation("observation is not strictly between the flanking antecedents");
  }
}

// Characteristic-point indices (first, second) bounding a segment.
std::pair<std::size_t, std::size_t> bounds(Segment seg) {
  const std::size_t i = index_of(seg);
  return {i, i + 1};
}

}  // namespace

std::size_t index_of(Segment seg) noexcept { return static_cast<std::size_t>(seg); }

std::string_view to_string(Segment seg) noexcept {
  switch (seg) {
    case Segment::LeftBoundary:
      return "LTB";
    case Segment::Core:
      return "CORE";
    case Segment::RightBoundary:
      return "RTB";
  }
  return "?";
}

std::string_view table_name(Segment seg) noexcept {
  switch (seg) {
    case Segment::LeftBoundary:
      return "LFBound";
    case Segment::Core:
      return "Core";
    case Segment::RightBoundary:
      return "RFBound";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept { return v == Verdict::Normal ? "NORMAL" : "PROBLEM"; }

std::string_view to_string(RatioVerdict v) noexcept {
  switch (v) {
    case RatioVerdict::Normal:
      return "NORMAL";
    case RatioVerdict::Problem:
      return "PROBLEM";
    case RatioVerdict::Undefined:
      return "UNDEFINED";
  }
  return "?";
}

std::string_view to_string(LengthPath p) noexcept {
  switch (p) {
    case LengthPath::General:
      return "GENERAL";
    case LengthPath::UniformNonzero:
      return "UNIFORM_NONZERO";
    case LengthPath::UniformZero:
      return "UNIFORM_ZERO";
  }
  return "?";
}

SegmentParams extract_segment_params(const Rule& r1, const Rule& r2, const Observation& obs, Segment seg) {
  check_one_dimensional(r1, r2, obs);
  const auto& a1 = r1.antecedent(0);
  const auto& a2 = r2.antecedent(0);
  const auto& b1 = r1.consequent();
  const auto& b2 = r2.consequent();
  const auto& x = obs[0];
  const auto [s, e] = bounds(seg);

  SegmentParams p;
  p.segment = seg;
  p.ka1 = a1[e] - a1[s];
  p.ka2 = a2[e] - a2[s];
  p.kb1 = b1[e] - b1[s];
  p.kb2 = b2[e] - b2[s];
  p.kastar = x[e] - x[s];
  p.da1 = x[s] - a1[e];
  p.da2 = a2[s] - x[e];
  p.db = b2[s] - b1[e];
  p.da = a2[s] - a1[e];
  p.uniform_a = nearly_equal(p.ka1, p.ka2);
  p.uniform_b = nearly_equal(p.kb1, p.kb2);
  return p;
}

LengthDiagnostics length_condition(const SegmentParams& p) {
  LengthDiagnostics out;
  if (p.uniform_a && p.uniform_b) {
    const double ka = p.ka1;
    const double kb = p.kb1;
    out.length1 = p.db * (ka - p.kastar);
    if (std::abs(p.kastar) > kTolerance) {
      out.path = LengthPath::UniformNonzero;
      out.length2 = kb * (p.da1 + p.da2 + 2.0 * p.kastar);
    } else {
      out.path = LengthPath::UniformZero;
      out.length2 = kb * p.da;
    }
  } else {
    out.path = LengthPath::General;
    const double left = p.ka1 + p.da1;
    const double right = p.ka2 + p.da2;
    out.length1 = p.db * (left * right - (p.kastar + p.da1) * (p.kastar + p.da2));
    out.length2 = left * (p.da1 + p.kastar) * p.kb2 + right * (p.da2 + p.kastar) * p.kb1;
  }
  out.verdict = verdict_of(out.length1, out.length2);
  return out;
}

RatioDiagnostics ratio_condition(const Rule& r1, const Rule& r2, const Observation& obs, Segment seg) {
  const SegmentParams p = extract_segment_params(r1, r2, obs, seg);
  RatioDiagnostics out;
  if (p.da != 0.0) out.ratio1 = p.db / p.da;
  const double gaps = p.da1 + p.da2;
  if (gaps != 0.0) out.ratio2 = p.da / gaps;
  if (out.ratio1 && out.ratio2) {
    out.verdict = *out.ratio1 <= *out.ratio2 + kTolerance ? RatioVerdict::Normal : RatioVerdict::Problem;
  }
  return out;
}

CaseTags classify_case(const Rule& r1, const Rule& r2, const Observation& obs) {
  std::array<SegmentParams, 3> ps;
  for (Segment seg : kSegments) ps[index_of(seg)] = extract_segment_params(r1, r2, obs, seg);

  auto all = [&ps](auto pred) {
    for (const auto& p : ps) {
      if (!pred(p)) return false;
    }
    return true;
  };

  const bool uniform_a = all([](const SegmentParams& p) { return p.uniform_a; });
  const bool uniform_ab = all([](const SegmentParams& p) { return p.uniform_a && p.uniform_b; });
  const SegmentParams& core = ps[index_of(Segment::Core)];

  CaseTags tags;
  tags.case1 = uniform_a && all([](const SegmentParams& p) { return p.kastar >= p.ka1 - kTolerance; });
  tags.case2 = uniform_ab && all([](const SegmentParams& p) { return nearly_equal(p.ka1, p.kb1); });
  tags.case3 = uniform_ab && all([](const SegmentParams& p) { return p.kb1 > p.ka1 + kTolerance; });
  // Uniform cores, and consequents at least as wide as antecedents everywhere.
  tags.corollary4 = core.uniform_a && core.uniform_b && all([](const SegmentParams& p) {
                      return p.kb1 >= p.ka1 - kTolerance && p.kb2 >= p.ka2 - kTolerance;
                    });
  return tags;
}

std::array<Verdict, 3> direct_normality(const ConclusionPoints& p) {
  return {verdict_of(p[0], p[1]), verdict_of(p[1], p[2]), verdict_of(p[2], p[3])};
}

NormalityReport make_report(const Rule& r1, const Rule& r2, const Observation& obs, const ConclusionPoints& points,
                            const LengthRule& length_rule) {
  NormalityReport report;
  report.points = points;
  const auto direct = direct_normality(points);
  report.overall = Verdict::Normal;
  for (Segment seg : kSegments) {
    auto& s = report.segments[index_of(seg)];
    s.params = extract_segment_params(r1, r2, obs, seg);
    s.length = length_rule(s.params);
    s.ratio = ratio_condition(r1, r2, obs, seg);
    s.direct = direct[index_of(seg)];
    if (s.length.verdict == Verdict::Problem) report.overall = Verdict::Problem;
  }
  report.cases = classify_case(r1, r2, obs);
  return report;
}

NormalityReport full_report(const Rule& r1, const Rule& r2, const Observation& obs) {
  return make_report(r1, r2, obs, kh_characteristic_points(r1, r2, obs));
}

}  // namespace fri
