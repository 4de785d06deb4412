#include "lojex/box.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace lojex {

namespace {

Rat scale_pow2(long bits) {
  Integer p = 1;
  if (bits > 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  }
  return Rat(p);
}

Rat min_abs(const Interval &i) {
  if (i.contains_zero()) {
    return Rat(0);
  }
  return std::min(i.lo.abs(), i.hi.abs());
}

Rat max_abs(const Interval &i) { return std::max(i.lo.abs(), i.hi.abs()); }

} // namespace

Interval Interval::rounded(long bits) const {
  if (bits <= 0) {
    return *this;
  }
  const Rat s = scale_pow2(bits);
  return {Rat((lo * s).floor()) / s, Rat((hi * s).ceil()) / s};
}

Interval operator+(const Interval &a, const Interval &b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval &a, const Interval &b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval &a, const Interval &b) {
  if (a.lo == a.hi && b.lo == b.hi) {
    return Interval::point(a.lo * b.lo);
  }
  const std::array<Rat, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p.begin(), p.end()), *std::max_element(p.begin(), p.end())};
}

Rat Box::width() const { return std::max(re.width(), im.width()); }

std::string Box::str() const {
  std::ostringstream os;
  os << "[" << re.lo << ", " << re.hi << "] x i[" << im.lo << ", " << im.hi << "]";
  return os.str();
}

Box operator+(const Box &a, const Box &b) { return {a.re + b.re, a.im + b.im}; }

Box operator-(const Box &a, const Box &b) { return {a.re - b.re, a.im - b.im}; }

Box operator*(const Box &a, const Box &b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Box reciprocal(const Box &b) {
  if (b.contains_zero()) {
    throw std::domain_error("reciprocal of a box containing zero");
  }
  const Rat mn = min_abs(b.re) * min_abs(b.re) + min_abs(b.im) * min_abs(b.im);
  const Rat mx = max_abs(b.re) * max_abs(b.re) + max_abs(b.im) * max_abs(b.im);
  const Interval inv_norm{mx.inverse(), mn.inverse()};
  return {b.re * inv_norm, (b.im * inv_norm).negated()};
}

Box eval(const QPoly &p, const Box &z, long round_bits) {
  Box acc = Box::point(Rat(0));
  const auto &c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * z + Box::point(*it);
    if (round_bits > 0) {
      acc = acc.rounded(round_bits);
    }
  }
  return acc;
}

} // namespace lojex
