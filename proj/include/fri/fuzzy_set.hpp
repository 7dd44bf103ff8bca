#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace fri {

/// Absolute tolerance for monotonicity, equality and verdict comparisons.
inline constexpr double kTolerance = 1e-9;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const noexcept { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Convex normal fuzzy set with piecewise-linear flanks, stored as the four
/// characteristic abscissas a1 <= a2 <= a3 <= a4. Triangles (a2 == a3) and
/// singletons (all equal) are degenerate trapezoids.
class TrapezoidSet {
 public:
  /// Throws OrderingViolation naming the first violating pair.
  TrapezoidSet(double a1, double a2, double a3, double a4);
  explicit TrapezoidSet(const std::array<double, 4>& points);

  static TrapezoidSet triangle(double left, double peak, double right);
  static TrapezoidSet singleton(double x);

  double a1() const noexcept { return p_[0]; }
  double a2() const noexcept { return p_[1]; }
  double a3() const noexcept { return p_[2]; }
  double a4() const noexcept { return p_[3]; }
  /// Characteristic point j in 0..3 (left support, left core, right core, right support).
  double operator[](std::size_t j) const { return p_[j]; }
  const std::array<double, 4>& points() const noexcept { return p_; }

  bool is_triangle() const noexcept { return p_[1] == p_[2]; }
  bool is_singleton() const noexcept { return p_[0] == p_[3]; }

  double grade(double x) const noexcept;
  /// Closed alpha-cut; alpha = 0 yields the closed support. Throws DomainError outside [0,1].
  Interval alpha_cut(double alpha) const;
  Interval support() const noexcept { return {p_[0], p_[3]}; }
  Interval kernel() const noexcept { return {p_[1], p_[2]}; }
  double width() const noexcept { return p_[3] - p_[0]; }
  double height() const noexcept { return 1.0; }

  TrapezoidSet translated(double offset) const;
  /// Requires factor > 0.
  TrapezoidSet scaled(double factor) const;
  /// x -> -x; the point order reverses.
  TrapezoidSet mirrored() const;

  friend bool operator==(const TrapezoidSet&, const TrapezoidSet&) = default;

 private:
  std::array<double, 4> p_;
};

TrapezoidSet make_set(double a1, double a2, double a3, double a4);
double membership_grade(const TrapezoidSet& s, double x);
Interval alpha_cut(const TrapezoidSet& s, double alpha);

struct AlphaCut {
  double level = 1.0;
  Interval cut;
};

struct SetFeatures {
  Interval support;
  Interval kernel;
  double width = 0.0;
  double height = 1.0;
};

SetFeatures set_features(const TrapezoidSet& s);

/// Vertex of a piecewise-linear membership curve. Abscissas along a list need
/// not be monotone: an abnormal interpolated conclusion folds back on itself.
struct GradedPoint {
  double x = 0.0;
  double grade = 0.0;

  friend bool operator==(const GradedPoint&, const GradedPoint&) = default;
};

using GradedPointList = std::vector<GradedPoint>;

struct ShapeCheck {
  bool convex = false;
  bool normal = false;
};

/// convex: grades rise then fall along the traversal, so each alpha-level is
/// bounded by one crossing on each side. normal: peak grade is 1 and the
/// abscissas never step backwards.
ShapeCheck check_convex_normal(std::span<const GradedPoint> points);

GradedPointList to_graded_points(const TrapezoidSet& s);

/// Strict precedence: inf and sup of every alpha-cut, alpha in (0,1], are
/// strictly ordered.
bool precedes(const TrapezoidSet& a, const TrapezoidSet& b);

}  // namespace fri
