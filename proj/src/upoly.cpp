#include "lojex/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lojex {

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat &c) { return QPoly(std::vector<Rat>{c}); }

QPoly QPoly::monomial(const Rat &c, int degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::identity() { return monomial(Rat(1), 1); }

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) {
    c_.pop_back();
  }
}

Rat QPoly::coeff(int k) const {
  if (k < 0 || k > degree()) {
    return Rat(0);
  }
  return c_[static_cast<std::size_t>(k)];
}

Rat QPoly::eval(const Rat &x) const {
  Rat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) {
    return {};
  }
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d[k - 1] = c_[k] * Rat(static_cast<long>(k));
  }
  return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
  if (is_zero()) {
    return {};
  }
  return *this * lead().inverse();
}

QPoly QPoly::compose(const QPoly &q) const {
  QPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

std::vector<Integer> QPoly::integer_coeffs() const {
  Integer den = 1;
  for (const auto &c : c_) {
    den = lcm(den, c.den());
  }
  Integer g = 0;
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto &c : c_) {
    out.push_back(c.num() * (den / c.den()));
    g = gcd(g, out.back());
  }
  if (g == 0) {
    return out;
  }
  if (out.back() < 0) {
    g = -g;
  }
  for (auto &v : out) {
    v /= g;
  }
  return out;
}

QPoly QPoly::primitive() const {
  std::vector<Rat> v;
  for (const auto &z : integer_coeffs()) {
    v.emplace_back(z);
  }
  return QPoly(std::move(v));
}

QPoly QPoly::reversed() const {
  std::vector<Rat> v(c_.rbegin(), c_.rend());
  return QPoly(std::move(v));
}

QPoly QPoly::negated_arg() const {
  std::vector<Rat> v = c_;
  for (std::size_t k = 1; k < v.size(); k += 2) {
    v[k] = -v[k];
  }
  return QPoly(std::move(v));
}

QPoly &QPoly::operator+=(const QPoly &o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    c_[k] += o.c_[k];
  }
  trim();
  return *this;
}

QPoly &QPoly::operator-=(const QPoly &o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    c_[k] -= o.c_[k];
  }
  trim();
  return *this;
}

QPoly &QPoly::operator*=(const QPoly &o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

QPoly &QPoly::operator*=(const Rat &s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto &c : c_) {
    c *= s;
  }
  return *this;
}

std::string QPoly::str(const std::string &var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat &c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) {
      continue;
    }
    Rat a = c.abs();
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (k == 0 || a != Rat(1)) {
      os << a;
      if (k > 0) {
        os << "*";
      }
    }
    if (k > 0) {
      os << var;
      if (k > 1) {
        os << "^" << k;
      }
    }
    first = false;
  }
  return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly &a, const QPoly &b) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    return {QPoly(), a};
  }
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rat inv = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Rat c = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) {
      continue;
    }
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly operator%(const QPoly &a, const QPoly &b) { return divmod(a, b).second; }

QPoly exact_div(const QPoly &a, const QPoly &b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw std::logic_error("inexact polynomial division");
  }
  return q;
}

QPoly gcd(const QPoly &a, const QPoly &b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const QPoly &a, const QPoly &b) {
  QPoly r0 = a;
  QPoly r1 = b;
  QPoly s0 = QPoly::constant(1);
  QPoly s1;
  QPoly t0;
  QPoly t1 = QPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = s0 - q * s1;
    QPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    return {QPoly(), QPoly(), QPoly()};
  }
  const Rat inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

QPoly squarefree_part(const QPoly &p) {
  if (p.degree() <= 0) {
    return p.is_zero() ? p : QPoly::constant(1);
  }
  return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly &p) {
  if (p.is_zero()) {
    throw std::domain_error("squarefree decomposition of zero");
  }
  std::vector<QPoly> out;
  if (p.degree() == 0) {
    return out;
  }
  const QPoly dp = p.derivative();
  QPoly a = gcd(p, dp);
  QPoly b = exact_div(p, a);
  QPoly c = exact_div(dp, a);
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g.monic());
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) {
    out.pop_back();
  }
  return out;
}

Rat resultant(const QPoly &a, const QPoly &b) {
  if (a.is_zero() || b.is_zero()) {
    return Rat(0);
  }
  QPoly x = a;
  QPoly y = b;
  Rat acc(1);
  for (;;) {
    const int m = x.degree();
    const int n = y.degree();
    if (n == 0) {
      return acc * pow(y.lead(), m);
    }
    if (m == 0) {
      return acc * pow(x.lead(), n);
    }
    QPoly r = x % y;
    if (r.is_zero()) {
      return Rat(0);
    }
    // res(x, y) = (-1)^{mn} lc(y)^{m - deg r} res(y, r)
    if ((m % 2 == 1) && (n % 2 == 1)) {
      acc = -acc;
    }
    acc *= pow(y.lead(), m - r.degree());
    x = std::move(y);
    y = std::move(r);
  }
}

QPoly interpolate(const std::vector<Rat> &xs, const std::vector<Rat> &ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
    }
  }
  QPoly acc;
  for (std::size_t k = n; k-- > 0;) {
    acc *= QPoly{-xs[k], Rat(1)};
    acc += QPoly::constant(dd[k]);
  }
  return acc;
}

namespace {

int max_degree(const QPolyX &p) {
  int d = -1;
  for (const auto &c : p) {
    d = std::max(d, c.degree());
  }
  return d;
}

QPolyX trimmed(QPolyX p) {
  while (!p.empty() && p.back().is_zero()) {
    p.pop_back();
  }
  return p;
}

QPoly specialize(const QPolyX &p, const Rat &x0) {
  std::vector<Rat> v;
  v.reserve(p.size());
  for (const auto &c : p) {
    v.push_back(c.eval(x0));
  }
  return QPoly(std::move(v));
}

} // namespace

QPoly resultant_t(const QPolyX &a_in, const QPolyX &b_in) {
  const QPolyX a = trimmed(a_in);
  const QPolyX b = trimmed(b_in);
  if (a.empty() || b.empty()) {
    return {};
  }
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  const int bound = db * std::max(0, max_degree(a)) + da * std::max(0, max_degree(b));
  std::vector<Rat> xs;
  std::vector<Rat> ys;
  long probe = 0;
  while (static_cast<int>(xs.size()) <= bound) {
    const Rat x0(probe % 2 == 0 ? probe / 2 : -(probe + 1) / 2);
    ++probe;
    if (a.back().eval(x0).is_zero() || b.back().eval(x0).is_zero()) {
      continue;
    }
    xs.push_back(x0);
    ys.push_back(resultant(specialize(a, x0), specialize(b, x0)));
  }
  return interpolate(xs, ys);
}

} // namespace lojex
