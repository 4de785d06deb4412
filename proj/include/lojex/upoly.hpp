#pragma once

#include "lojex/rat.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lojex {

/// Dense univariate polynomial over Q. Coefficients are stored lowest degree
/// first and the leading coefficient is never zero.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  QPoly(std::initializer_list<Rat> coeffs) : QPoly(std::vector<Rat>(coeffs)) {}

  static QPoly constant(const Rat &c);
  static QPoly monomial(const Rat &c, int degree);
  /// The polynomial x.
  static QPoly identity();

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const Rat &lead() const { return c_.back(); }
  [[nodiscard]] Rat coeff(int k) const;
  [[nodiscard]] const std::vector<Rat> &coeffs() const { return c_; }

  [[nodiscard]] Rat eval(const Rat &x) const;
  [[nodiscard]] QPoly derivative() const;
  [[nodiscard]] QPoly monic() const;
  /// p(q(x)).
  [[nodiscard]] QPoly compose(const QPoly &q) const;
  /// Scaled to coprime integer coefficients with positive leading coefficient.
  [[nodiscard]] QPoly primitive() const;
  [[nodiscard]] std::vector<Integer> integer_coeffs() const;
  /// x^deg p(1/x).
  [[nodiscard]] QPoly reversed() const;
  /// p(-x).
  [[nodiscard]] QPoly negated_arg() const;

  QPoly &operator+=(const QPoly &o);
  QPoly &operator-=(const QPoly &o);
  QPoly &operator*=(const QPoly &o);
  QPoly &operator*=(const Rat &s);

  friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly &b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rat &s) { return a *= s; }
  friend QPoly operator-(const QPoly &a) { return a * Rat(-1); }
  friend bool operator==(const QPoly &a, const QPoly &b) { return a.c_ == b.c_; }

  [[nodiscard]] std::string str(const std::string &var = "z") const;

private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b);
QPoly operator%(const QPoly &a, const QPoly &b);
/// Exact quotient; throws std::logic_error when the remainder is nonzero.
QPoly exact_div(const QPoly &a, const QPoly &b);

/// Monic gcd (zero only if both inputs are zero).
QPoly gcd(const QPoly &a, const QPoly &b);

/// Returns g = gcd(a, b) (monic) together with s, t such that s a + t b = g.
struct ExtendedGcd {
  QPoly g;
  QPoly s;
  QPoly t;
};
ExtendedGcd extended_gcd(const QPoly &a, const QPoly &b);

QPoly squarefree_part(const QPoly &p);

/// Yun decomposition: p = lc * prod_k s_k^k with pairwise coprime squarefree
/// s_k. Entry k-1 of the result holds s_k (possibly constant 1).
std::vector<QPoly> squarefree_decomposition(const QPoly &p);

Rat resultant(const QPoly &a, const QPoly &b);

/// Polynomial in t whose coefficients are polynomials in x.
using QPolyX = std::vector<QPoly>;

/// Res_t(a(x, t), b(x, t)) as a polynomial in x, by evaluation and
/// interpolation.
QPoly resultant_t(const QPolyX &a, const QPolyX &b);

/// Newton interpolation through (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rat> &xs, const std::vector<Rat> &ys);

} // namespace lojex
