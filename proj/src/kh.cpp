#include "fri/kh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fri/errors.hpp"

namespace fri {

namespace {

double minkowski(std::span<const double> diffs, double order) {
  if (diffs.size() == 1) return std::abs(diffs[0]);
  if (order == 2.0) {
    double sum = 0.0;
    for (double d : diffs) sum += d * d;
    return std::sqrt(sum);
  }
  double sum = 0.0;
  for (double d : diffs) sum += std::pow(std::abs(d), order);
  return std::pow(sum, 1.0 / order);
}

void check_order(const InterpolationOptions& options) {
  if (!(options.minkowski_order >= 1.0) || !std::isfinite(options.minkowski_order)) {
    throw DomainError("Minkowski order must be a finite value >= 1");
  }
}

// Weighted mean with the zero-distance limit: a vanishing distance to one side
// pins the result to that side's consequent value.
double interpolate(double d1, double d2, double b1, double b2) {
  if (d1 == 0.0 && d2 == 0.0) throw ZeroSpan("observation coincides with both antecedent points");
  if (d1 == 0.0) return b1;
  if (d2 == 0.0) return b2;
  return (d2 * b1 + d1 * b2) / (d1 + d2);
}

void check_flanked(const Rule& lower, const Rule& upper, const Observation& obs) {
  const std::size_t k = obs.dimension();
  if (k == 0 || lower.dimension() != k || upper.dimension() != k) {
    std::ostringstream msg;
    msg << "dimension mismatch: lower rule " << lower.dimension() << ", upper rule " << upper.dimension()
        << ", observation " << k;
    throw DimensionError(msg.str());
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!precedes(lower.antecedent(i), obs[i]) || !precedes(obs[i], upper.antecedent(i))) {
      std::ostringstream msg;
      msg << "observation is not strictly between the flanking antecedents in dimension " << i;
      throw OrderingViolation(msg.str());
    }
  }
}

bool comparable(const TrapezoidSet& a, const TrapezoidSet& b) { return precedes(a, b) || precedes(b, a); }

}  // namespace

Rule::Rule(std::vector<TrapezoidSet> antecedents, TrapezoidSet consequent)
    : antecedents_(std::move(antecedents)), consequent_(consequent) {
  if (antecedents_.empty()) throw DimensionError("a rule needs at least one antecedent");
}

RuleBase::RuleBase(std::vector<Rule> rules) : rules_(std::move(rules)) {
  if (rules_.empty()) throw DimensionError("rule base is empty");
  const std::size_t k = rules_.front().dimension();
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (rules_[r].dimension() != k) {
      std::ostringstream msg;
      msg << "rule " << r << " has dimension " << rules_[r].dimension() << ", expected " << k;
      throw DimensionError(msg.str());
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      for (std::size_t s = r + 1; s < rules_.size(); ++s) {
        const auto& a = rules_[r].antecedent(i);
        const auto& b = rules_[s].antecedent(i);
        if (a != b && !comparable(a, b)) {
          std::ostringstream msg;
          msg << "antecedents of rules " << r << " and " << s << " are not ordered in dimension " << i;
          throw OrderingViolation(msg.str());
        }
      }
    }
  }
}

bool ConclusionPoints::is_monotone(double tolerance) const noexcept {
  return y[0] <= y[1] + tolerance && y[1] <= y[2] + tolerance && y[2] <= y[3] + tolerance;
}

FuzzyDistance lower_upper_distance(const TrapezoidSet& a, const TrapezoidSet& b, double alpha) {
  if (!precedes(a, b)) throw OrderingViolation("lower/upper distance requires the first set to precede the second");
  const Interval ca = a.alpha_cut(alpha);
  const Interval cb = b.alpha_cut(alpha);
  return {cb.lo - ca.lo, cb.hi - ca.hi};
}

FlankingRules select_flanking(const RuleBase& rb, const Observation& obs, const InterpolationOptions& options) {
  check_order(options);
  const std::size_t k = rb.dimension();
  if (obs.dimension() != k) {
    std::ostringstream msg;
    msg << "observation has dimension " << obs.dimension() << ", rule base " << k;
    throw DimensionError(msg.str());
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  double best_lower = kInf;
  double best_upper = kInf;
  FlankingRules out;
  std::vector<double> diffs(k);

  for (std::size_t r = 0; r < rb.size(); ++r) {
    const Rule& rule = rb[r];
    bool below = true;
    bool above = true;
    for (std::size_t i = 0; i < k; ++i) {
      below = below && precedes(rule.antecedent(i), obs[i]);
      above = above && precedes(obs[i], rule.antecedent(i));
      const auto& a = rule.antecedent(i);
      diffs[i] = 0.5 * (std::abs(obs[i].a1() - a.a1()) + std::abs(obs[i].a4() - a.a4()));
    }
    if (!below && !above) continue;
    const double d = minkowski(diffs, options.minkowski_order);
    if (below && d < best_lower) {
      best_lower = d;
      out.lower_index = r;
      out.lower = &rule;
    }
    if (above && d < best_upper) {
      best_upper = d;
      out.upper_index = r;
      out.upper = &rule;
    }
  }

  if (out.lower == nullptr || out.upper == nullptr) {
    throw NotFlanked(out.lower == nullptr ? "observation not flanked: no rule antecedent precedes the observation"
                                          : "observation not flanked: no rule antecedent succeeds the observation");
  }
  return out;
}

ConclusionPoints kh_characteristic_points(const Rule& lower, const Rule& upper, const Observation& obs,
                                          const InterpolationOptions& options) {
  check_order(options);
  check_flanked(lower, upper, obs);
  const std::size_t k = obs.dimension();
  std::vector<double> to_lower(k);
  std::vector<double> to_upper(k);

  ConclusionPoints out;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      to_lower[i] = obs[i][j] - lower.antecedent(i)[j];
      to_upper[i] = upper.antecedent(i)[j] - obs[i][j];
    }
    const double d1 = minkowski(to_lower, options.minkowski_order);
    const double d2 = minkowski(to_upper, options.minkowski_order);
    out[j] = interpolate(d1, d2, lower.consequent()[j], upper.consequent()[j]);
  }
  return out;
}

AlphaProfile kh_alpha_profile(const Rule& lower, const Rule& upper, const Observation& obs, int n_levels,
                              const InterpolationOptions& options) {
  if (n_levels < 2) throw DomainError("an alpha profile needs at least 2 levels");
  check_order(options);
  check_flanked(lower, upper, obs);
  const std::size_t k = obs.dimension();
  std::vector<double> lo1(k), lo2(k), hi1(k), hi2(k);

  AlphaProfile profile;
  profile.reserve(static_cast<std::size_t>(n_levels));
  for (int i = 0; i < n_levels; ++i) {
    const double alpha = i == n_levels - 1 ? 1.0 : static_cast<double>(i) / (n_levels - 1);
    for (std::size_t d = 0; d < k; ++d) {
      const Interval a1 = lower.antecedent(d).alpha_cut(alpha);
      const Interval a2 = upper.antecedent(d).alpha_cut(alpha);
      const Interval x = obs[d].alpha_cut(alpha);
      lo1[d] = x.lo - a1.lo;
      lo2[d] = a2.lo - x.lo;
      hi1[d] = x.hi - a1.hi;
      hi2[d] = a2.hi - x.hi;
    }
    const Interval b1 = lower.consequent().alpha_cut(alpha);
    const Interval b2 = upper.consequent().alpha_cut(alpha);
    const double inf = interpolate(minkowski(lo1, options.minkowski_order), minkowski(lo2, options.minkowski_order),
                                   b1.lo, b2.lo);
    const double sup = interpolate(minkowski(hi1, options.minkowski_order), minkowski(hi2, options.minkowski_order),
                                   b1.hi, b2.hi);
    profile.push_back({alpha, inf, sup});
  }
  return profile;
}

ConclusionPoints khstab_points(const RuleBase& rb, const Observation& obs, double exponent,
                               const InterpolationOptions& options) {
  if (!(exponent > 0.0) || !std::isfinite(exponent)) throw DomainError("KHstab exponent must be positive");
  check_order(options);
  const std::size_t k = rb.dimension();
  if (obs.dimension() != k) {
    std::ostringstream msg;
    msg << "observation has dimension " << obs.dimension() << ", rule base " << k;
    throw DimensionError(msg.str());
  }
  for (std::size_t r = 0; r < rb.size(); ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!comparable(rb[r].antecedent(i), obs[i])) {
        std::ostringstream msg;
        msg << "antecedent of rule " << r << " is not ordered against the observation in dimension " << i;
        throw OrderingViolation(msg.str());
      }
    }
  }

  std::vector<double> diffs(k);
  ConclusionPoints out;
  for (std::size_t j = 0; j < 4; ++j) {
    double weight_sum = 0.0;
    double weighted = 0.0;
    bool pinned = false;
    for (std::size_t r = 0; r < rb.size() && !pinned; ++r) {
      for (std::size_t i = 0; i < k; ++i) diffs[i] = obs[i][j] - rb[r].antecedent(i)[j];
      const double d = minkowski(diffs, options.minkowski_order);
      if (d == 0.0) {
        out[j] = rb[r].consequent()[j];
        pinned = true;
        break;
      }
      const double w = exponent == 1.0 ? 1.0 / d : std::pow(d, -exponent);
      weight_sum += w;
      weighted += w * rb[r].consequent()[j];
    }
    if (!pinned) out[j] = weighted / weight_sum;
  }
  return out;
}

Conclusion assemble_conclusion(const ConclusionPoints& p) {
  if (!p.is_monotone()) {
    return AbnormalConclusion{{{p[0], 0.0}, {p[1], 1.0}, {p[2], 1.0}, {p[3], 0.0}}};
  }
  // Inversions below the tolerance are flattened so the set invariant holds.
  std::array<double, 4> q = p.y;
  for (std::size_t j = 1; j < 4; ++j) q[j] = std::max(q[j], q[j - 1]);
  return NormalConclusion{TrapezoidSet(q)};
}

}  // namespace fri
