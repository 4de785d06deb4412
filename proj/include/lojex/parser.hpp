#pragma once

#include "lojex/bipoly.hpp"
#include "lojex/rat.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lojex {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Expands an arithmetic expression over two variables with integer or
/// rational literals, + - * / ^ and parentheses. Exponents must be
/// non-negative integer constants; division only by nonzero constants.
BiPoly parse_poly(std::string_view text, const std::string &xvar = "x", const std::string &yvar = "y");

/// A finite Puiseux sum such as "y^(5/3) - 2*y^2": rational coefficients,
/// positive rational exponents; "0" is the zero arc. Returns (exponent, coefficient) sorted by
/// exponent with like terms merged and zero terms dropped.
std::vector<std::pair<Rat, Rat>> parse_arc(std::string_view text, const std::string &yvar = "y");

} // namespace lojex
