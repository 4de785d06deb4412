#include "lojex/algebraic.hpp"

#include "lojex/factor.hpp"
#include "lojex/roots.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace lojex {

namespace {

Rat pow2_inv(long bits) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return Rat(Integer(1), p);
}

/// The irreducible factor of squarefree d that vanishes at the root d has in
/// box; the box is refined until every other factor is bounded away from 0.
QPoly vanishing_factor(const QPoly &d, const Box &box) {
  std::vector<QPoly> factors = irreducible_factors(d);
  Box current = box;
  for (long bits = 32; factors.size() > 1; bits *= 2) {
    current = refine_root(d, current, pow2_inv(bits));
    std::vector<QPoly> keep;
    for (const auto &q : factors) {
      if (eval(q, current).contains_zero()) {
        keep.push_back(q);
      }
    }
    factors = std::move(keep);
    if (bits > (1L << 16)) {
      throw std::runtime_error("could not separate irreducible factors");
    }
  }
  return factors.at(0);
}

QPolyX shifted_sum_poly(const QPoly &a) {
  // a(x - t) as a polynomial in t with coefficients in Q[x].
  const int m = a.degree();
  QPolyX out(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    std::vector<Rat> cx(static_cast<std::size_t>(m - j) + 1);
    Integer binom = 1; // C(k, j) for k = j
    for (int k = j; k <= m; ++k) {
      if (k > j) {
        binom = binom * k / (k - j);
      }
      Rat term = a.coeff(k) * Rat(binom);
      if (j % 2 == 1) {
        term = -term;
      }
      cx[static_cast<std::size_t>(k - j)] = term;
    }
    out[static_cast<std::size_t>(j)] = QPoly(std::move(cx));
  }
  return out;
}

QPolyX scaled_product_poly(const QPoly &a) {
  // t^m a(x / t) as a polynomial in t with coefficients in Q[x].
  const int m = a.degree();
  QPolyX out(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    out[static_cast<std::size_t>(m - k)] = QPoly::monomial(a.coeff(k), k);
  }
  return out;
}

QPolyX constant_in_x(const QPoly &b) {
  QPolyX out;
  for (const auto &c : b.coeffs()) {
    out.push_back(QPoly::constant(c));
  }
  return out;
}

} // namespace

AlgebraicNumber::AlgebraicNumber(const Rat &value)
    : poly_(QPoly{-value, Rat(1)}.primitive()), box_(Box::point(value)) {}

Rat AlgebraicNumber::rational_value() const {
  if (!is_rational()) {
    throw std::logic_error("rational_value of an irrational algebraic number");
  }
  return -poly_.coeff(0) / poly_.coeff(1);
}

AlgebraicNumber AlgebraicNumber::from_root(const QPoly &poly, const Box &box) {
  if (poly.degree() < 1) {
    throw std::domain_error("algebraic number from a constant polynomial");
  }
  const QPoly d = squarefree_part(poly).primitive();
  QPoly m = d.degree() == 1 ? d : vanishing_factor(d, box);
  if (m.degree() == 1) {
    return AlgebraicNumber(-m.coeff(0) / m.coeff(1));
  }
  // Roots of m are roots of d, so the box still isolates a single one.
  return AlgebraicNumber(std::move(m), box);
}

AlgebraicNumber AlgebraicNumber::from_irreducible(const QPoly &poly, const Box &box) {
  QPoly m = poly.primitive();
  if (m.degree() == 1) {
    return AlgebraicNumber(-m.coeff(0) / m.coeff(1));
  }
  return AlgebraicNumber(std::move(m), box);
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const QPoly &poly) {
  std::vector<AlgebraicNumber> out;
  for (const QPoly &m : irreducible_factors(poly)) {
    if (m.degree() == 1) {
      out.emplace_back(-m.coeff(0) / m.coeff(1));
      continue;
    }
    for (const Box &b : isolate_roots(m, 64)) {
      out.push_back(AlgebraicNumber(m, b));
    }
  }
  return out;
}

bool AlgebraicNumber::is_real() const {
  if (is_rational() || (box_.im.lo.sign() == 0 && box_.im.hi.sign() == 0)) {
    return true;
  }
  Box current = box_;
  for (long bits = 64; bits < (1L << 20); bits *= 2) {
    if (!current.meets_real_axis()) {
      return false;
    }
    const std::vector<Box> boxes = isolate_roots(poly_, bits);
    const int idx = locate(boxes, current);
    if (idx < 0) {
      continue;
    }
    current = boxes[static_cast<std::size_t>(idx)];
    if (!current.meets_real_axis()) {
      return false;
    }
    // The conjugate root lies in the mirrored box; if that box meets no other
    // isolating box the conjugate is this very root.
    const Box mirror = current.conjugate();
    bool clash = false;
    for (std::size_t j = 0; j < boxes.size(); ++j) {
      if (static_cast<int>(j) != idx && boxes[j].intersects(mirror)) {
        clash = true;
        break;
      }
    }
    if (!clash) {
      return true;
    }
  }
  throw std::runtime_error("realness test did not converge");
}

AlgebraicNumber AlgebraicNumber::conjugate() const {
  return AlgebraicNumber(poly_, box_.conjugate());
}

AlgebraicNumber AlgebraicNumber::refined(const Rat &eps) const {
  if (box_.width() < eps) {
    return *this;
  }
  return AlgebraicNumber(poly_, refine_root(poly_, box_, eps));
}

std::complex<double> AlgebraicNumber::approx() const {
  const Box b = enclosure(Rat(Integer(1), Integer(1) << 60));
  return {b.re.mid().to_double(), b.im.mid().to_double()};
}

std::string AlgebraicNumber::decimal(int digits) const {
  std::ostringstream os;
  os << std::setprecision(digits);
  if (is_rational()) {
    os << rational_value().to_double();
    return os.str();
  }
  const std::complex<double> z = approx();
  const bool real = std::abs(z.imag()) < 1e-300 || is_real();
  if (real) {
    os << z.real();
    return os.str();
  }
  if (std::abs(z.real()) > 1e-300) {
    os << z.real() << (z.imag() < 0 ? "-" : "+");
  } else if (z.imag() < 0) {
    os << "-";
  }
  os << std::abs(z.imag()) << "*i";
  return os.str();
}

std::string AlgebraicNumber::str() const {
  if (is_rational()) {
    return rational_value().str();
  }
  return decimal() + " [root of " + poly_.str() + "]";
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) {
    throw std::domain_error("division by zero algebraic number");
  }
  if (is_rational()) {
    return AlgebraicNumber(rational_value().inverse());
  }
  const QPoly rev = poly_.reversed();
  const AlgebraicNumber self = *this;
  return identify_root(rev, [self](const Rat &eps) {
    // 1/z over a box of width w around z moves by about w / |z|^2.
    Rat w = eps;
    for (int i = 0; i < 64; ++i) {
      const Box b = self.enclosure(w);
      if (!b.contains_zero()) {
        const Box r = reciprocal(b);
        if (r.width() < eps) {
          return r;
        }
      }
      w /= Rat(16);
    }
    throw std::runtime_error("reciprocal enclosure did not converge");
  });
}

namespace detail {

AlgebraicNumber identify_root_impl(const QPoly &poly, const std::function<Box(const Rat &)> &enclose) {
  const QPoly d = squarefree_part(poly).primitive();
  if (d.degree() == 1) {
    return AlgebraicNumber(-d.coeff(0) / d.coeff(1));
  }
  long bits = 64;
  Rat eps = pow2_inv(16);
  for (int attempt = 0; attempt < 24; ++attempt) {
    const std::vector<Box> boxes = isolate_roots(d, bits);
    const Box e = enclose(eps);
    const int idx = locate(boxes, e);
    if (idx >= 0) {
      return AlgebraicNumber::from_root(d, boxes[static_cast<std::size_t>(idx)]);
    }
    bits *= 2;
    eps *= pow2_inv(bits / 2);
  }
  throw std::runtime_error("could not identify root");
}

} // namespace detail

namespace {

enum class Combine { add, mul };

AlgebraicNumber combine(const AlgebraicNumber &a, const AlgebraicNumber &b, Combine op) {
  if (a.is_rational() && b.is_rational()) {
    return AlgebraicNumber(op == Combine::add ? a.rational_value() + b.rational_value()
                                              : a.rational_value() * b.rational_value());
  }
  if (op == Combine::mul && (a.is_zero() || b.is_zero())) {
    return AlgebraicNumber(Rat(0));
  }
  const QPolyX lhs = op == Combine::add ? shifted_sum_poly(a.poly()) : scaled_product_poly(a.poly());
  const QPoly res = resultant_t(lhs, constant_in_x(b.poly()));
  return identify_root(res, [&a, &b, op](const Rat &eps) {
    Rat w = eps;
    for (int i = 0; i < 64; ++i) {
      const Box ea = a.enclosure(w);
      const Box eb = b.enclosure(w);
      const Box r = op == Combine::add ? ea + eb : ea * eb;
      if (r.width() < eps) {
        return r;
      }
      w /= Rat(16);
    }
    throw std::runtime_error("enclosure did not converge");
  });
}

} // namespace

AlgebraicNumber operator+(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  return combine(a, b, Combine::add);
}

AlgebraicNumber operator-(const AlgebraicNumber &a) {
  if (a.is_rational()) {
    return AlgebraicNumber(-a.rational_value());
  }
  return AlgebraicNumber(a.poly_.negated_arg().primitive(), a.box_.negated());
}

AlgebraicNumber operator-(const AlgebraicNumber &a, const AlgebraicNumber &b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  return combine(a, b, Combine::mul);
}

AlgebraicNumber operator/(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  return a * b.inverse();
}

bool operator==(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  if (a.is_rational() || b.is_rational()) {
    return a.is_rational() && b.is_rational() && a.rational_value() == b.rational_value();
  }
  // Minimal polynomials: equal values share the polynomial.
  if (!(a.poly_ == b.poly_)) {
    return false;
  }
  if (a.box_ == b.box_) {
    return true;
  }
  if (!a.box_.intersects(b.box_)) {
    return false;
  }
  const std::vector<Box> boxes = isolate_roots(a.poly_, 64);
  Rat eps = pow2_inv(20);
  for (int i = 0; i < 30; ++i, eps *= pow2_inv(20)) {
    const int ia = locate(boxes, a.enclosure(eps));
    const int ib = locate(boxes, b.enclosure(eps));
    if (ia >= 0 && ib >= 0) {
      return ia == ib;
    }
  }
  throw std::runtime_error("equality test did not converge");
}

AlgebraicNumber alg_arith(const AlgebraicNumber &a, const AlgebraicNumber &b, ArithOp op) {
  switch (op) {
  case ArithOp::add:
    return a + b;
  case ArithOp::sub:
    return a - b;
  case ArithOp::mul:
    return a * b;
  case ArithOp::div:
    return a / b;
  }
  throw std::logic_error("unknown arithmetic op");
}

bool alg_is_zero(const AlgebraicNumber &a) { return a.is_zero(); }

bool alg_is_real(const AlgebraicNumber &a) { return a.is_real(); }

AlgebraicNumber alg_conjugate(const AlgebraicNumber &a) { return a.conjugate(); }

std::strong_ordering alg_cmp_real(const AlgebraicNumber &a, const AlgebraicNumber &b) {
  if (!a.is_real() || !b.is_real()) {
    throw std::domain_error("alg_cmp_real on a non-real number");
  }
  if (a.is_rational() && b.is_rational()) {
    return a.rational_value() <=> b.rational_value();
  }
  Rat eps = pow2_inv(20);
  for (int i = 0; i < 4; ++i, eps *= pow2_inv(20)) {
    const Box ea = a.enclosure(eps);
    const Box eb = b.enclosure(eps);
    if (ea.re.hi < eb.re.lo) {
      return std::strong_ordering::less;
    }
    if (eb.re.hi < ea.re.lo) {
      return std::strong_ordering::greater;
    }
  }
  if (a == b) {
    return std::strong_ordering::equal;
  }
  for (;; eps *= pow2_inv(20)) {
    const Box ea = a.enclosure(eps);
    const Box eb = b.enclosure(eps);
    if (ea.re.hi < eb.re.lo) {
      return std::strong_ordering::less;
    }
    if (eb.re.hi < ea.re.lo) {
      return std::strong_ordering::greater;
    }
  }
}

} // namespace lojex
