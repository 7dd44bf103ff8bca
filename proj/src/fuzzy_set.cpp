#include "fri/fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fri/errors.hpp"

namespace fri {

namespace {

constexpr const char* kPointNames[] = {"a1", "a2", "a3", "a4"};

void check_chain(const std::array<double, 4>& p) {
  for (std::size_t j = 0; j < 4; ++j) {
    if (!std::isfinite(p[j])) {
      std::ostringstream msg;
      msg << "characteristic point " << kPointNames[j] << " is not finite";
      throw OrderingViolation(msg.str());
    }
  }
  for (std::size_t j = 0; j + 1 < 4; ++j) {
    if (p[j] > p[j + 1]) {
      std::ostringstream msg;
      msg.precision(17);
      msg << kPointNames[j] << " (" << p[j] << ") > " << kPointNames[j + 1] << " (" << p[j + 1] << ")";
      throw OrderingViolation(msg.str());
    }
  }
}

// f(alpha) = lo + alpha * (hi - lo) is positive on (0,1] iff f(1) > 0 and f(0) >= 0.
bool positive_on_half_open_unit(double at_zero, double at_one) { return at_one > 0.0 && at_zero >= 0.0; }

}  // namespace

TrapezoidSet::TrapezoidSet(double a1, double a2, double a3, double a4) : p_{a1, a2, a3, a4} { check_chain(p_); }

TrapezoidSet::TrapezoidSet(const std::array<double, 4>& points) : p_(points) { check_chain(p_); }

TrapezoidSet TrapezoidSet::triangle(double left, double peak, double right) {
  return TrapezoidSet(left, peak, peak, right);
}

TrapezoidSet TrapezoidSet::singleton(double x) { return TrapezoidSet(x, x, x, x); }

double TrapezoidSet::grade(double x) const noexcept {
  if (x < p_[0] || x > p_[3]) return 0.0;
  if (x >= p_[1] && x <= p_[2]) return 1.0;
  if (x < p_[1]) return (x - p_[0]) / (p_[1] - p_[0]);
  return (p_[3] - x) / (p_[3] - p_[2]);
}

Interval TrapezoidSet::alpha_cut(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "alpha level " << alpha << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (alpha == 0.0) return support();
  if (alpha == 1.0) return kernel();
  return {p_[0] + alpha * (p_[1] - p_[0]), p_[3] - alpha * (p_[3] - p_[2])};
}

TrapezoidSet TrapezoidSet::translated(double offset) const {
  return TrapezoidSet(p_[0] + offset, p_[1] + offset, p_[2] + offset, p_[3] + offset);
}

TrapezoidSet TrapezoidSet::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  return TrapezoidSet(p_[0] * factor, p_[1] * factor, p_[2] * factor, p_[3] * factor);
}

TrapezoidSet TrapezoidSet::mirrored() const { return TrapezoidSet(-p_[3], -p_[2], -p_[1], -p_[0]); }

TrapezoidSet make_set(double a1, double a2, double a3, double a4) { return TrapezoidSet(a1, a2, a3, a4); }

double membership_grade(const TrapezoidSet& s, double x) { return s.grade(x); }

Interval alpha_cut(const TrapezoidSet& s, double alpha) { return s.alpha_cut(alpha); }

SetFeatures set_features(const TrapezoidSet& s) { return {s.support(), s.kernel(), s.width(), s.height()}; }

ShapeCheck check_convex_normal(std::span<const GradedPoint> points) {
  if (points.empty()) return {};

  double peak = 0.0;
  for (const auto& p : points) peak = std::max(peak, p.grade);

  // Unimodal grade sequence: once the curve starts descending it may not rise again.
  bool convex = true;
  bool descending = false;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double step = points[i].grade - points[i - 1].grade;
    if (step < -kTolerance) {
      descending = true;
    } else if (step > kTolerance && descending) {
      convex = false;
      break;
    }
  }

  bool ordered = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x < points[i - 1].x - kTolerance) {
      ordered = false;
      break;
    }
  }

  return {convex, ordered && std::abs(peak - 1.0) <= kTolerance};
}

GradedPointList to_graded_points(const TrapezoidSet& s) {
  return {{s.a1(), 0.0}, {s.a2(), 1.0}, {s.a3(), 1.0}, {s.a4(), 0.0}};
}

bool precedes(const TrapezoidSet& a, const TrapezoidSet& b) {
  // inf and sup of the alpha-cuts are linear in alpha on each flank, so
  // checking the flank endpoints (alpha = 0 closed, alpha = 1 strict) decides
  // the inequality for every alpha in (0, 1].
  const bool lower = positive_on_half_open_unit(b.a1() - a.a1(), b.a2() - a.a2());
  const bool upper = positive_on_half_open_unit(b.a4() - a.a4(), b.a3() - a.a3());
  return lower && upper;
}

}  // namespace fri
