#pragma once

#include "lojex/bipoly.hpp"
#include "lojex/puiseux.hpp"
#include "lojex/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lojex {

/// A path into the origin and what g/f does along it.
struct LimitEvidence {
  std::string path;
  /// Limit of g/f along the path; absent when it is unbounded or depends on
  /// the generic coefficient of the path.
  std::optional<Rat> value;
  std::string note;
};

struct LimitVerdict {
  enum class Kind { exists_equal, does_not_exist };
  Kind kind = Kind::does_not_exist;
  Rat value;
  std::vector<LimitEvidence> evidence;
};

/// No real root of f for y > 0 or y < 0. f x-regular; true when f(0,0) != 0.
bool has_isolated_real_zero(const BiPoly &f);

/// lim g/f = 0 at the origin. f, g x-regular without common factor;
/// throws std::invalid_argument when they share one.
bool limit_is_zero(const BiPoly &g, const BiPoly &f);

enum class Shortcut { limit_zero, no_limit, inconclusive };

/// Decision from the exponent of f with respect to g alone.
Shortcut exponent_shortcut(const BiPoly &g, const BiPoly &f);

/// lim_{(x,y) -> 0} g/f. Throws std::invalid_argument when f is zero.
LimitVerdict limit(const BiPoly &g, const BiPoly &f);

} // namespace lojex
