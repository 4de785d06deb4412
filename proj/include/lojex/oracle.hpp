#pragma once

#include "lojex/bipoly.hpp"
#include "lojex/rat.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace lojex {

/// Numeric sampling setup. Every path into the origin (quasi-random rays,
/// monomial arcs x = +-c|y|^k and y = +-c|x|^k, and the explicit arcs) is
/// sampled once per radius.
struct SamplePlan {
  /// Positive and strictly decreasing.
  std::vector<Rat> radii;
  /// Paths per radius, at least 100.
  int points_per_radius = 10000;
  /// Extra arcs x = sum c y^e as (exponent, coefficient), sampled for y > 0 and y < 0.
  std::vector<std::vector<std::pair<Rat, Rat>>> arc_set;
  std::uint32_t seed = 20240601;
  /// Relative tolerance on the growth rate of log|f| and log|g| against log r
  /// between the last two radius steps, for a path to count.
  double power_law_tolerance = 0.01;

  /// Radii 1/10 down to 1/10000 with 10000 paths each.
  static SamplePlan standard();
  /// Throws std::invalid_argument when the invariants fail.
  void check() const;
};

/// Max over paths of min(log|f| / log|g| at the innermost radius, slope of
/// log|f| against log|g| between the two innermost radii). With three or more
/// radii a path only counts when |f| and |g| each grow like a power of r over
/// the three innermost radii, to within power_law_tolerance. Both |f| and |g|
/// must lie in (0, 1) at the innermost radius. Throws std::domain_error when no path qualifies.
double estimate_exponent(const BiPoly &f, const BiPoly &g, const SamplePlan &plan = SamplePlan::standard());

struct LimitEstimate {
  /// Mean of g/f at the innermost radius over the paths.
  double value = 0;
  /// Largest minus smallest of those values.
  double spread = 0;
  std::size_t paths = 0;
};

/// g/f at the innermost radius along every path where f does not vanish.
LimitEstimate estimate_limit(const BiPoly &g, const BiPoly &f, const SamplePlan &plan = SamplePlan::standard());

} // namespace lojex
