#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "fri/fuzzy_set.hpp"

namespace fri {

/// If x_1 is A_1 and ... and x_k is A_k then y is B.
class Rule {
 public:
  /// Throws DimensionError when no antecedent is given.
  Rule(std::vector<TrapezoidSet> antecedents, TrapezoidSet consequent);

  const std::vector<TrapezoidSet>& antecedents() const noexcept { return antecedents_; }
  const TrapezoidSet& antecedent(std::size_t dim) const { return antecedents_.at(dim); }
  const TrapezoidSet& consequent() const noexcept { return consequent_; }
  std::size_t dimension() const noexcept { return antecedents_.size(); }

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  std::vector<TrapezoidSet> antecedents_;
  TrapezoidSet consequent_;
};

/// Sparse rule base. All rules share one dimension, and within each dimension
/// any two antecedents are either identical or ordered by precedes().
class RuleBase {
 public:
  /// Throws DimensionError on empty input or mixed dimensions, OrderingViolation
  /// on incomparable antecedents.
  explicit RuleBase(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const Rule& operator[](std::size_t i) const { return rules_.at(i); }
  std::size_t size() const noexcept { return rules_.size(); }
  std::size_t dimension() const noexcept { return rules_.front().dimension(); }

 private:
  std::vector<Rule> rules_;
};

struct Observation {
  std::vector<TrapezoidSet> sets;

  std::size_t dimension() const noexcept { return sets.size(); }
  const TrapezoidSet& operator[](std::size_t dim) const { return sets.at(dim); }

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Raw interpolated abscissas: left support, left core, right core, right
/// support. Not necessarily monotone.
struct ConclusionPoints {
  std::array<double, 4> y{};

  double operator[](std::size_t j) const { return y[j]; }
  double& operator[](std::size_t j) { return y[j]; }
  bool is_monotone(double tolerance = kTolerance) const noexcept;

  friend bool operator==(const ConclusionPoints&, const ConclusionPoints&) = default;
};

struct AlphaLevel {
  double level = 0.0;
  double inf = 0.0;
  double sup = 0.0;

  /// Negative when the level's interval is inverted.
  double gap() const noexcept { return sup - inf; }
};

using AlphaProfile = std::vector<AlphaLevel>;

struct FuzzyDistance {
  double lower = 0.0;
  double upper = 0.0;
};

struct InterpolationOptions {
  /// Order of the Minkowski norm aggregating per-dimension differences.
  double minkowski_order = 2.0;
};

inline constexpr int kDefaultAlphaLevels = 1001;

/// Lower and upper distance of the alpha-cuts of a and b (1-D Euclidean).
/// Throws OrderingViolation unless precedes(a, b).
FuzzyDistance lower_upper_distance(const TrapezoidSet& a, const TrapezoidSet& b, double alpha);

struct FlankingRules {
  std::size_t lower_index = 0;
  std::size_t upper_index = 0;
  const Rule* lower = nullptr;
  const Rule* upper = nullptr;
};

/// The nearest rules whose antecedents precede / succeed the observation in
/// every dimension. Pointers refer into rb. Throws NotFlanked.
FlankingRules select_flanking(const RuleBase& rb, const Observation& obs, const InterpolationOptions& options = {});

/// Inverse-distance interpolation of each characteristic point:
///   y_j = (d2_j * b1_j + d1_j * b2_j) / (d1_j + d2_j)
/// where d1_j is the distance from the lower antecedent to the observation and
/// d2_j from the observation to the upper antecedent. A zero distance yields
/// the corresponding consequent point; both zero raises ZeroSpan.
ConclusionPoints kh_characteristic_points(const Rule& lower, const Rule& upper, const Observation& obs,
                                          const InterpolationOptions& options = {});

/// The same interpolation applied to the inf and sup of every sampled alpha-cut.
/// Levels are i / (n_levels - 1); n_levels >= 2.
AlphaProfile kh_alpha_profile(const Rule& lower, const Rule& upper, const Observation& obs,
                              int n_levels = kDefaultAlphaLevels, const InterpolationOptions& options = {});

/// Stabilized variant: every rule contributes with weight 1 / d^exponent.
/// With two flanking rules and exponent 1 this equals kh_characteristic_points.
ConclusionPoints khstab_points(const RuleBase& rb, const Observation& obs, double exponent = 1.0,
                               const InterpolationOptions& options = {});

struct NormalConclusion {
  TrapezoidSet set;
};

struct AbnormalConclusion {
  GradedPointList points;
};

using Conclusion = std::variant<NormalConclusion, AbnormalConclusion>;

Conclusion assemble_conclusion(const ConclusionPoints& p);

}  // namespace fri
