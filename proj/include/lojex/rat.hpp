#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace lojex {

using Integer = mpz_class;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rat {
public:
  Rat() = default;
  Rat(long v) : q_(v) {}                       // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}                        // NOLINT(google-explicit-constructor)
  Rat(const Integer &v) : q_(v) {}             // NOLINT(google-explicit-constructor)
  explicit Rat(const mpq_class &v) : q_(v) { q_.canonicalize(); }
  Rat(const Integer &num, const Integer &den);
  Rat(long num, long den) : Rat(Integer(num), Integer(den)) {}

  /// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  [[nodiscard]] Integer num() const { return q_.get_num(); }
  [[nodiscard]] Integer den() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class &raw() const { return q_; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] std::string str() const { return q_.get_str(); }

  [[nodiscard]] Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  [[nodiscard]] Rat inverse() const;
  /// Largest integer not exceeding the value.
  [[nodiscard]] Integer floor() const;
  [[nodiscard]] Integer ceil() const;

  Rat &operator+=(const Rat &o) { q_ += o.q_; return *this; }
  Rat &operator-=(const Rat &o) { q_ -= o.q_; return *this; }
  Rat &operator*=(const Rat &o) { q_ *= o.q_; return *this; }
  Rat &operator/=(const Rat &o);

  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
  friend Rat operator-(const Rat &a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat &a, const Rat &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

/// a^e for integer e (negative e inverts; 0^negative throws).
Rat pow(const Rat &a, long e);

Integer lcm(const Integer &a, const Integer &b);
Integer gcd(const Integer &a, const Integer &b);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rat simplest_between(const Rat &lo, const Rat &hi);

struct RatHash {
  std::size_t operator()(const Rat &r) const;
};

} // namespace lojex
