#pragma once

#include "lojex/bipoly.hpp"
#include "lojex/puiseux.hpp"
#include "lojex/rat.hpp"

#include <optional>
#include <string>

namespace lojex {

/// ord_generic(f, arc) / ord_generic(g, arc). Throws std::domain_error when
/// the generic order of g is zero.
Rat ell(const BiPoly &f, const BiPoly &g, const GenericArc &arc);

/// Where a maximum came from: ell along an arc, or a ratio m/n of
/// multiplicities of a common real root.
struct Witness {
  enum class Kind { arc, ratio };
  Kind kind = Kind::ratio;
  GenericArc arc;
  int m = 0;
  int n = 0;
  /// +1 for y > 0, -1 for y < 0 (the arc then lives in the bar coordinates).
  int direction = 1;

  [[nodiscard]] std::string str() const;
};

struct DirectedValue {
  Rat value;
  Witness witness;
};

/// A real root of f that g does not share.
struct InclusionFailure {
  int direction = 1;
  TruncatedPuiseux branch;
};

/// Every real root of f (both y-directions) is a root of g. f, g x-regular
/// and vanishing at the origin. Also runs the count test and the
/// mod-rho membership test and throws std::logic_error if they disagree.
bool zero_set_inclusion(const BiPoly &f, const BiPoly &g);
std::optional<InclusionFailure> find_inclusion_failure(const BiPoly &f, const BiPoly &g);

/// y > 0 value from real approximations of non-real roots of f and the
/// common-root ratios. Throws std::domain_error if inclusion fails.
DirectedValue L_plus_roots(const BiPoly &f, const BiPoly &g);
/// y > 0 value from approximations of pairs of distinct roots of f*g (real
/// prefixes only) and the common-root ratios.
DirectedValue L_plus_pairs(const BiPoly &f, const BiPoly &g);

struct ExponentResult {
  bool defined = false;
  Rat value;
  Witness witness;
  RegularizationReport regularization;
  std::optional<InclusionFailure> violation;
  /// Per direction, root formula.
  Rat plus;
  Rat minus;
  /// The pair formula result when validation ran.
  std::optional<Rat> pair_value;
};

struct ExponentOptions {
  /// Also evaluate the pair formula and fail hard if it disagrees.
  bool validate = true;
};

/// Decides {f = 0} within {g = 0} near the origin and computes the
/// exponent. Throws std::invalid_argument for zero input or input not
/// vanishing at the origin, std::logic_error when the two formulas disagree.
ExponentResult lojasiewicz_exponent(const BiPoly &f, const BiPoly &g, const ExponentOptions &opts = {});

} // namespace lojex
