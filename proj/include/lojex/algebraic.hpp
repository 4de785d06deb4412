#pragma once

#include "lojex/box.hpp"
#include "lojex/rat.hpp"
#include "lojex/upoly.hpp"

#include <complex>
#include <functional>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace lojex {

/// Exact complex algebraic number: its minimal polynomial (irreducible,
/// primitive, positive leading coefficient) and a rectangle isolating exactly
/// one of its roots. A rational value is always stored with a degree-1
/// polynomial and a point box. Values are immutable; refinement produces a
/// new value.
class AlgebraicNumber {
public:
  AlgebraicNumber() : AlgebraicNumber(Rat(0)) {}
  AlgebraicNumber(const Rat &value); // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long value) : AlgebraicNumber(Rat(value)) {} // NOLINT

  /// The root of `poly` isolated by `box`. `poly` need not be squarefree or
  /// irreducible; `box` must isolate a single distinct root of it.
  static AlgebraicNumber from_root(const QPoly &poly, const Box &box);
  /// Same, for a polynomial already known to be irreducible over Q.
  static AlgebraicNumber from_irreducible(const QPoly &poly, const Box &box);
  /// Every distinct complex root of `poly`.
  static std::vector<AlgebraicNumber> roots_of(const QPoly &poly);

  [[nodiscard]] const QPoly &poly() const { return poly_; }
  [[nodiscard]] const Box &box() const { return box_; }
  [[nodiscard]] int degree() const { return poly_.degree(); }
  [[nodiscard]] bool is_rational() const { return poly_.degree() == 1; }
  /// Requires is_rational().
  [[nodiscard]] Rat rational_value() const;

  [[nodiscard]] bool is_zero() const { return is_rational() && rational_value().is_zero(); }
  [[nodiscard]] bool is_real() const;
  [[nodiscard]] AlgebraicNumber conjugate() const;
  [[nodiscard]] AlgebraicNumber refined(const Rat &eps) const;
  /// Enclosing box of width below eps.
  [[nodiscard]] Box enclosure(const Rat &eps) const { return refined(eps).box_; }
  [[nodiscard]] std::complex<double> approx() const;
  /// Decimal rendering such as "1.4142135624" or "-0.5+0.8660254038*i".
  [[nodiscard]] std::string decimal(int digits = 10) const;
  /// "value" for rationals, otherwise "decimal [root of poly]".
  [[nodiscard]] std::string str() const;

  friend AlgebraicNumber operator+(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend AlgebraicNumber operator-(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend AlgebraicNumber operator*(const AlgebraicNumber &a, const AlgebraicNumber &b);
  /// Throws std::domain_error when b is zero.
  friend AlgebraicNumber operator/(const AlgebraicNumber &a, const AlgebraicNumber &b);
  friend AlgebraicNumber operator-(const AlgebraicNumber &a);
  friend bool operator==(const AlgebraicNumber &a, const AlgebraicNumber &b);

private:
  AlgebraicNumber(QPoly poly, Box box) : poly_(std::move(poly)), box_(std::move(box)) {}
  AlgebraicNumber inverse() const;

  QPoly poly_;
  Box box_;
};

enum class ArithOp { add, sub, mul, div };

AlgebraicNumber alg_arith(const AlgebraicNumber &a, const AlgebraicNumber &b, ArithOp op);
bool alg_is_zero(const AlgebraicNumber &a);
bool alg_is_real(const AlgebraicNumber &a);
AlgebraicNumber alg_conjugate(const AlgebraicNumber &a);
/// Orders two real algebraic numbers; throws std::domain_error otherwise.
std::strong_ordering alg_cmp_real(const AlgebraicNumber &a, const AlgebraicNumber &b);

/// Identifies which root of `poly` (any nonzero polynomial) is enclosed by
/// successively tighter enclosures. `enclose(eps)` must return a box of
/// width below eps containing the target value, which must be a root.
template <class Enclose>
AlgebraicNumber identify_root(const QPoly &poly, Enclose enclose);

namespace detail {
AlgebraicNumber identify_root_impl(const QPoly &poly, const std::function<Box(const Rat &)> &enclose);
} // namespace detail

template <class Enclose>
AlgebraicNumber identify_root(const QPoly &poly, Enclose enclose) {
  return detail::identify_root_impl(poly, std::function<Box(const Rat &)>(enclose));
}

} // namespace lojex
