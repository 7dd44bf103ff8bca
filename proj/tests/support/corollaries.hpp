#pragma once

// Random configurations satisfying the hypotheses of the uniform-length
// normality results, shared by the unit and acceptance suites.

#include <array>
#include <cmath>

#include "fri/cnf.hpp"
#include "generators.hpp"

namespace gen {

/// Every set shares the same left, core and right lengths.
inline Config corollary1(Rng& rng) {
  const Pieces p = random_pieces(rng);
  return with_pieces(rng, p, p, p, p, p);
}

/// Uniform antecedent lengths and uniform consequent lengths; free observation.
inline Config corollary2(Rng& rng) {
  const Pieces a = random_pieces(rng), b = random_pieces(rng);
  return with_pieces(rng, a, a, b, b, random_pieces(rng));
}

/// Observation shaped like the antecedents; uniform consequents.
inline Config corollary3(Rng& rng) {
  const Pieces a = random_pieces(rng), b = random_pieces(rng);
  return with_pieces(rng, a, a, b, b, a);
}

/// Uniform cores, consequent pieces at least as long as the antecedent ones.
/// Boundaries may differ between the two rules.
inline Config corollary4_candidate(Rng& rng) {
  const double ka = uniform(rng, 0, 2);
  const double kb = ka + uniform(rng, 0, 2);
  const Pieces a1 = {uniform(rng, 0, 2), ka, uniform(rng, 0, 2)};
  const Pieces a2 = {uniform(rng, 0, 2), ka, uniform(rng, 0, 2)};
  const Pieces b1 = {a1[0] + uniform(rng, 0, 2), kb, a1[2] + uniform(rng, 0, 2)};
  const Pieces b2 = {a2[0] + uniform(rng, 0, 2), kb, a2[2] + uniform(rng, 0, 2)};
  return with_pieces(rng, a1, a2, b1, b2, random_pieces(rng));
}

/// Ratio condition on all three segments, computed from raw points.
inline bool ratio_holds_everywhere(const Config& c) {
  for (int s = 0; s < 3; ++s) {
    const double db = c.b2[s] - c.b1[s + 1];
    const double da = c.a2[s] - c.a1[s + 1];
    const double gaps = (c.x[s] - c.a1[s + 1]) + (c.a2[s] - c.x[s + 1]);
    if (da == 0 || gaps == 0) return false;
    if (db / da > da / gaps + 1e-9) return false;
  }
  return true;
}

inline Config corollary4(Rng& rng) {
  for (;;) {
    Config c = corollary4_candidate(rng);
    if (ratio_holds_everywhere(c)) return c;
  }
}

/// Uniform-length inequality for one segment, written out from the raw points.
/// Returns {length1, length2}.
inline std::array<double, 2> uniform_lengths(const Config& c, int s) {
  const double ka = c.a1[s + 1] - c.a1[s];
  const double kb = c.b1[s + 1] - c.b1[s];
  const double ks = c.x[s + 1] - c.x[s];
  const double db = c.b2[s] - c.b1[s + 1];
  const double da1 = c.x[s] - c.a1[s + 1];
  const double da2 = c.a2[s] - c.x[s + 1];
  const double l1 = db * (ka - ks);
  const double l2 = std::abs(ks) > 1e-9 ? kb * (da1 + da2 + 2 * ks) : kb * (c.a2[s] - c.a1[s + 1]);
  return {l1, l2};
}

}  // namespace gen
