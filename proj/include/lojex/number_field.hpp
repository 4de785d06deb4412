#pragma once

#include "lojex/algebraic.hpp"
#include "lojex/box.hpp"
#include "lojex/upoly.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace lojex {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(theta) for an algebraic theta with known minimal polynomial. Elements are
/// polynomials in theta of degree below the field degree.
class NumberField {
public:
  static FieldPtr rationals();
  static FieldPtr generated_by(const AlgebraicNumber &theta);

  [[nodiscard]] int degree() const { return modulus_.degree(); }
  [[nodiscard]] bool is_rationals() const { return degree() == 1; }
  /// Monic minimal polynomial of theta.
  [[nodiscard]] const QPoly &modulus() const { return modulus_; }
  [[nodiscard]] const AlgebraicNumber &generator() const { return theta_; }

  [[nodiscard]] QPoly reduce(const QPoly &a) const;
  [[nodiscard]] QPoly mul(const QPoly &a, const QPoly &b) const;
  /// Throws std::domain_error on zero.
  [[nodiscard]] QPoly inv(const QPoly &a) const;
  [[nodiscard]] QPoly div(const QPoly &a, const QPoly &b) const { return mul(a, inv(b)); }
  [[nodiscard]] QPoly pow(const QPoly &a, unsigned long e) const;

  /// Rectangle of width below eps containing the value of a.
  [[nodiscard]] Box enclose(const QPoly &a, const Rat &eps) const;
  [[nodiscard]] AlgebraicNumber value(const QPoly &a) const;

private:
  NumberField(QPoly modulus, AlgebraicNumber theta) : modulus_(std::move(modulus)), theta_(std::move(theta)) {}

  QPoly modulus_;
  AlgebraicNumber theta_;
};

/// Univariate polynomial with coefficients in a number field, low to high.
using KPoly = std::vector<QPoly>;

void kp_trim(KPoly &a);
[[nodiscard]] int kp_degree(const KPoly &a);
[[nodiscard]] KPoly kp_mul(const NumberField &K, const KPoly &a, const KPoly &b);
[[nodiscard]] KPoly kp_sub(const KPoly &a, const KPoly &b);
[[nodiscard]] KPoly kp_monic(const NumberField &K, const KPoly &a);
[[nodiscard]] std::pair<KPoly, KPoly> kp_divmod(const NumberField &K, const KPoly &a, const KPoly &b);
[[nodiscard]] KPoly kp_derivative(const KPoly &a);
/// Monic gcd.
[[nodiscard]] KPoly kp_gcd(const NumberField &K, KPoly a, KPoly b);
/// Yun decomposition: entry k-1 is the monic product of roots of multiplicity k.
[[nodiscard]] std::vector<KPoly> kp_squarefree_decomposition(const NumberField &K, const KPoly &a);

/// A larger field L, the image in L of the generator of the field it extends,
/// and one root of the adjoined polynomial as an element of L.
struct Extension {
  FieldPtr field;
  QPoly embed;
  QPoly root;

  /// Image in L of an element of the smaller field.
  [[nodiscard]] QPoly map(const QPoly &a) const;
};

/// One extension per distinct complex root of the squarefree polynomial s.
/// Roots already in K keep K itself as the field.
std::vector<Extension> roots_in_extensions(const FieldPtr &K, const KPoly &s);

/// Extension of K by the specific algebraic number alpha.
Extension adjoin(const FieldPtr &K, const AlgebraicNumber &alpha);

/// Roots of a polynomial over AlgebraicNumber coefficients, with
/// multiplicities summing to its degree.
std::vector<std::pair<AlgebraicNumber, int>> roots_with_multiplicity(const std::vector<AlgebraicNumber> &coeffs);

} // namespace lojex
