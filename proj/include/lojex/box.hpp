#pragma once

#include "lojex/rat.hpp"
#include "lojex/upoly.hpp"

#include <string>

namespace lojex {

/// Closed real interval with rational end points.
struct Interval {
  Rat lo;
  Rat hi;

  static Interval point(const Rat &v) { return {v, v}; }
  [[nodiscard]] bool contains(const Rat &v) const { return lo <= v && v <= hi; }
  [[nodiscard]] bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  [[nodiscard]] Rat width() const { return hi - lo; }
  [[nodiscard]] Rat mid() const { return (lo + hi) / Rat(2); }
  [[nodiscard]] bool intersects(const Interval &o) const { return !(hi < o.lo || o.hi < lo); }
  [[nodiscard]] Interval negated() const { return {-hi, -lo}; }
  /// Outward rounding onto the grid 2^-bits.
  [[nodiscard]] Interval rounded(long bits) const;

  friend bool operator==(const Interval &, const Interval &) = default;
};

Interval operator+(const Interval &a, const Interval &b);
Interval operator-(const Interval &a, const Interval &b);
Interval operator*(const Interval &a, const Interval &b);

/// Axis-aligned closed rectangle in the complex plane; also used as a complex
/// interval.
struct Box {
  Interval re;
  Interval im;

  static Box point(const Rat &re, const Rat &im = Rat(0)) {
    return {Interval::point(re), Interval::point(im)};
  }
  [[nodiscard]] bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  [[nodiscard]] bool intersects(const Box &o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  [[nodiscard]] bool meets_real_axis() const { return im.contains_zero(); }
  [[nodiscard]] bool is_point() const { return re.lo == re.hi && im.lo == im.hi; }
  [[nodiscard]] Rat width() const;
  [[nodiscard]] Box conjugate() const { return {re, im.negated()}; }
  [[nodiscard]] Box negated() const { return {re.negated(), im.negated()}; }
  [[nodiscard]] Box rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Box &, const Box &) = default;
};

Box operator+(const Box &a, const Box &b);
Box operator-(const Box &a, const Box &b);
Box operator*(const Box &a, const Box &b);
/// Enclosure of 1/z for every z in the box; the box must exclude zero.
Box reciprocal(const Box &b);

/// Interval Horner evaluation of p over the box.
Box eval(const QPoly &p, const Box &z, long round_bits = 0);

} // namespace lojex
