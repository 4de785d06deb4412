#include "lojex/rat.hpp"

#include <stdexcept>
#include <utility>

namespace lojex {

Rat::Rat(const Integer &num, const Integer &den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Integer(s, 10));
    }
    return Rat(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument &) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

Rat Rat::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  return Rat(num() < 0 ? Integer(-den()) : den(), num() < 0 ? Integer(-num()) : num());
}

Integer Rat::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rat::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat &Rat::operator/=(const Rat &o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero");
  }
  q_ /= o.q_;
  return *this;
}

Rat pow(const Rat &a, long e) {
  if (e < 0) {
    return pow(a.inverse(), -e);
  }
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), a.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), a.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

Integer gcd(const Integer &a, const Integer &b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer &a, const Integer &b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat simplest_between(const Rat &lo, const Rat &hi) {
  if (hi < lo) {
    return simplest_between(hi, lo);
  }
  if (lo.sign() <= 0 && hi.sign() >= 0) {
    return Rat(0);
  }
  if (hi.sign() < 0) {
    return -simplest_between(-hi, -lo);
  }
  // 0 < lo <= hi
  const Integer c = lo.ceil();
  if (Rat(c) <= hi) {
    return Rat(c);
  }
  const Integer n = lo.floor();
  const Rat frac = simplest_between((hi - Rat(n)).inverse(), (lo - Rat(n)).inverse());
  return Rat(n) + frac.inverse();
}

std::size_t RatHash::operator()(const Rat &r) const {
  return std::hash<std::string>{}(r.str());
}

} // namespace lojex
