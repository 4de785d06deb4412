#pragma once

#include "lojex/rat.hpp"
#include "lojex/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lojex {

/// Polynomial in x, y over Q. Terms are keyed by (x exponent, y exponent) and
/// never store a zero coefficient.
class BiPoly {
public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const Rat &c); // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(Rat(c)) {} // NOLINT(google-explicit-constructor)
  static BiPoly monomial(const Rat &c, int i, int j);
  static BiPoly x() { return monomial(Rat(1), 1, 0); }
  static BiPoly y() { return monomial(Rat(1), 0, 1); }
  /// sum_i coeffs[i](y) x^i
  static BiPoly from_x_poly(const std::vector<QPoly> &coeffs);

  [[nodiscard]] const std::map<Key, Rat> &terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rat coeff(int i, int j) const;
  [[nodiscard]] int x_degree() const;
  [[nodiscard]] int y_degree() const;
  [[nodiscard]] int total_degree() const;
  /// Lowest total degree of a term; throws std::domain_error on zero.
  [[nodiscard]] int order() const;
  [[nodiscard]] BiPoly homogeneous_part(int k) const;
  /// The order-m homogeneous part has a nonzero x^m coefficient.
  [[nodiscard]] bool is_x_regular() const;
  [[nodiscard]] Rat value_at_origin() const { return coeff(0, 0); }

  [[nodiscard]] BiPoly derivative_x() const;
  /// f(x, -y).
  [[nodiscard]] BiPoly bar() const;
  /// f(x, y + c x).
  [[nodiscard]] BiPoly shear(const Rat &c) const;
  [[nodiscard]] BiPoly pow(unsigned k) const;
  [[nodiscard]] Rat eval(const Rat &x, const Rat &y) const;
  /// Coefficients of x^i as polynomials in y.
  [[nodiscard]] std::vector<QPoly> as_x_poly() const;
  /// f(t, 0).
  [[nodiscard]] QPoly on_x_axis() const;
  /// Integer multiple with coprime integer coefficients whose leading term
  /// (highest x power, then highest y power) is positive.
  [[nodiscard]] BiPoly primitive() const;
  [[nodiscard]] bool is_integral() const;
  [[nodiscard]] std::string str() const;

  BiPoly &operator+=(const BiPoly &o);
  BiPoly &operator-=(const BiPoly &o);
  friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
  friend BiPoly operator-(const BiPoly &a);
  friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
  friend bool operator==(const BiPoly &a, const BiPoly &b) { return a.terms_ == b.terms_; }

private:
  void add_term(const Key &k, const Rat &c);

  std::map<Key, Rat> terms_;
};

/// Quotient when b divides a exactly; throws std::logic_error otherwise.
BiPoly exact_div(const BiPoly &a, const BiPoly &b);
/// Primitive gcd over Q (normalized as BiPoly::primitive); gcd(0, 0) = 0.
BiPoly gcd(const BiPoly &a, const BiPoly &b);
/// Product of the distinct irreducible factors that involve x.
BiPoly squarefree_part(const BiPoly &f);

struct RegularizationReport {
  long shear_c = 0;
  BiPoly transformed_f;
  BiPoly transformed_g;
  int order_f = 0;
  int order_g = 0;
};

/// First shear c = 0, 1, -1, 2, -2, ... making both polynomials x-regular.
RegularizationReport make_regular(const BiPoly &f, const BiPoly &g);

} // namespace lojex
