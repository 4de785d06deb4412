#include "lojex/bipoly.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace lojex {

BiPoly::BiPoly(const Rat &c) {
  if (!c.is_zero()) {
    terms_[{0, 0}] = c;
  }
}

BiPoly BiPoly::monomial(const Rat &c, int i, int j) {
  if (i < 0 || j < 0) {
    throw std::domain_error("negative exponent in monomial");
  }
  BiPoly p;
  p.add_term({i, j}, c);
  return p;
}

BiPoly BiPoly::from_x_poly(const std::vector<QPoly> &coeffs) {
  BiPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto &c = coeffs[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      p.add_term({static_cast<int>(i), static_cast<int>(j)}, c[j]);
    }
  }
  return p;
}

void BiPoly::add_term(const Key &k, const Rat &c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

Rat BiPoly::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::x_degree() const {
  int d = -1;
  for (const auto &[k, c] : terms_) {
    d = std::max(d, k.first);
  }
  return d;
}

int BiPoly::y_degree() const {
  int d = -1;
  for (const auto &[k, c] : terms_) {
    d = std::max(d, k.second);
  }
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto &[k, c] : terms_) {
    d = std::max(d, k.first + k.second);
  }
  return d;
}

int BiPoly::order() const {
  if (is_zero()) {
    throw std::domain_error("order of the zero polynomial");
  }
  int m = -1;
  for (const auto &[k, c] : terms_) {
    const int d = k.first + k.second;
    if (m < 0 || d < m) {
      m = d;
    }
  }
  return m;
}

BiPoly BiPoly::homogeneous_part(int k) const {
  BiPoly p;
  for (const auto &[key, c] : terms_) {
    if (key.first + key.second == k) {
      p.terms_.emplace(key, c);
    }
  }
  return p;
}

bool BiPoly::is_x_regular() const {
  if (is_zero()) {
    return false;
  }
  const int m = order();
  return !coeff(m, 0).is_zero();
}

BiPoly BiPoly::derivative_x() const {
  BiPoly p;
  for (const auto &[k, c] : terms_) {
    if (k.first > 0) {
      p.add_term({k.first - 1, k.second}, c * Rat(k.first));
    }
  }
  return p;
}

BiPoly BiPoly::bar() const {
  BiPoly p;
  for (const auto &[k, c] : terms_) {
    p.terms_.emplace(k, k.second % 2 == 1 ? -c : c);
  }
  return p;
}

BiPoly BiPoly::shear(const Rat &c) const {
  if (c.is_zero()) {
    return *this;
  }
  // (y + c x)^j expanded once per power.
  const BiPoly lin = y() + monomial(c, 1, 0);
  std::vector<BiPoly> powers{BiPoly(1)};
  BiPoly out;
  for (const auto &[k, a] : terms_) {
    while (static_cast<int>(powers.size()) <= k.second) {
      powers.push_back(powers.back() * lin);
    }
    out += monomial(a, k.first, 0) * powers[static_cast<std::size_t>(k.second)];
  }
  return out;
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly r(1);
  BiPoly b = *this;
  while (k > 0) {
    if (k & 1U) {
      r = r * b;
    }
    k >>= 1U;
    if (k > 0) {
      b = b * b;
    }
  }
  return r;
}

Rat BiPoly::eval(const Rat &x, const Rat &y) const {
  Rat s(0);
  for (const auto &[k, c] : terms_) {
    s += c * lojex::pow(x, k.first) * lojex::pow(y, k.second);
  }
  return s;
}

std::vector<QPoly> BiPoly::as_x_poly() const {
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(std::max(0, x_degree() + 1)));
  for (const auto &[k, c] : terms_) {
    auto &row = rows[static_cast<std::size_t>(k.first)];
    if (static_cast<int>(row.size()) <= k.second) {
      row.resize(static_cast<std::size_t>(k.second) + 1, Rat(0));
    }
    row[static_cast<std::size_t>(k.second)] = c;
  }
  std::vector<QPoly> out;
  out.reserve(rows.size());
  for (auto &r : rows) {
    out.emplace_back(std::move(r));
  }
  return out;
}

QPoly BiPoly::on_x_axis() const {
  std::vector<Rat> v(static_cast<std::size_t>(std::max(0, x_degree() + 1)), Rat(0));
  for (const auto &[k, c] : terms_) {
    if (k.second == 0) {
      v[static_cast<std::size_t>(k.first)] = c;
    }
  }
  return QPoly(std::move(v));
}

BiPoly BiPoly::primitive() const {
  if (is_zero()) {
    return *this;
  }
  Integer den = 1;
  for (const auto &[k, c] : terms_) {
    den = lcm(den, c.den());
  }
  Integer g = 0;
  for (const auto &[k, c] : terms_) {
    g = gcd(g, c.num() * (den / c.den()));
  }
  // Leading term: highest x power, then highest y power = last map entry.
  if (terms_.rbegin()->second.sign() < 0) {
    g = -g;
  }
  const Rat scale(den, g);
  BiPoly p;
  for (const auto &[k, c] : terms_) {
    p.terms_.emplace(k, c * scale);
  }
  return p;
}

bool BiPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.second.is_integer(); });
}

std::string BiPoly::str() const {
  if (is_zero()) {
    return "0";
  }
  // Highest total degree first, then by x power.
  std::vector<std::pair<Key, Rat>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto &a, const auto &b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) {
      return da < db;
    }
    return a.first.first > b.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : v) {
    const bool neg = c.sign() < 0;
    const Rat a = c.abs();
    if (first) {
      os << (neg ? "-" : "");
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = a == Rat(1);
    bool wrote = false;
    if (!unit || (k.first == 0 && k.second == 0)) {
      os << (a.is_integer() ? a.str() : "(" + a.str() + ")");
      wrote = true;
    }
    auto var = [&](const char *name, int e) {
      if (e == 0) {
        return;
      }
      if (wrote) {
        os << "*";
      }
      os << name;
      if (e > 1) {
        os << "^" << e;
      }
      wrote = true;
    };
    var("x", k.first);
    var("y", k.second);
  }
  return os.str();
}

BiPoly &BiPoly::operator+=(const BiPoly &o) {
  for (const auto &[k, c] : o.terms_) {
    add_term(k, c);
  }
  return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &o) {
  for (const auto &[k, c] : o.terms_) {
    add_term(k, -c);
  }
  return *this;
}

BiPoly operator-(const BiPoly &a) {
  BiPoly p;
  for (const auto &[k, c] : a.terms_) {
    p.terms_.emplace(k, -c);
  }
  return p;
}

BiPoly operator*(const BiPoly &a, const BiPoly &b) {
  BiPoly p;
  for (const auto &[ka, ca] : a.terms_) {
    for (const auto &[kb, cb] : b.terms_) {
      p.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return p;
}

namespace {

using XPoly = std::vector<QPoly>; // coefficients of x^i in Q[y]

void xtrim(XPoly &a) {
  while (!a.empty() && a.back().is_zero()) {
    a.pop_back();
  }
}

QPoly content(const XPoly &a) {
  QPoly g;
  for (const auto &c : a) {
    g = gcd(g, c);
    if (g.degree() == 0) {
      break;
    }
  }
  return g;
}

XPoly divide_coeffs(const XPoly &a, const QPoly &c) {
  XPoly r;
  r.reserve(a.size());
  for (const auto &v : a) {
    r.push_back(exact_div(v, c));
  }
  return r;
}

XPoly primitive_part(const XPoly &a) {
  const QPoly c = content(a);
  return c.is_zero() ? a : divide_coeffs(a, c);
}

// lc(b)^(deg a - deg b + 1) a mod b.
XPoly pseudo_remainder(XPoly a, const XPoly &b) {
  const QPoly &lb = b.back();
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const QPoly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto &c : a) {
      c *= lb;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] -= la * b[j];
    }
    xtrim(a);
  }
  return a;
}

} // namespace

BiPoly exact_div(const BiPoly &a, const BiPoly &b) {
  if (b.is_zero()) {
    throw std::domain_error("division by the zero polynomial");
  }
  XPoly r = a.as_x_poly();
  XPoly d = b.as_x_poly();
  xtrim(r);
  xtrim(d);
  if (r.empty()) {
    return {};
  }
  if (r.size() < d.size()) {
    throw std::logic_error("bivariate division is not exact");
  }
  XPoly q(r.size() - d.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const QPoly &top = r[k + d.size() - 1];
    if (top.is_zero()) {
      continue;
    }
    QPoly c;
    try {
      c = exact_div(top, d.back());
    } catch (const std::logic_error &) {
      throw std::logic_error("bivariate division is not exact");
    }
    q[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) {
      r[k + j] -= c * d[j];
    }
  }
  xtrim(r);
  if (!r.empty()) {
    throw std::logic_error("bivariate division is not exact");
  }
  return BiPoly::from_x_poly(q);
}

namespace {

int y_degree(const XPoly &a) {
  int d = 0;
  for (const auto &c : a) {
    d = std::max(d, c.degree());
  }
  return d;
}

QPoly at_y(const XPoly &a, const Rat &y0) {
  std::vector<Rat> v;
  v.reserve(a.size());
  for (const auto &c : a) {
    v.push_back(c.eval(y0));
  }
  return QPoly(std::move(v));
}

bool divides(const XPoly &d, const XPoly &a) {
  try {
    (void)exact_div(BiPoly::from_x_poly(a), BiPoly::from_x_poly(d));
    return true;
  } catch (const std::logic_error &) {
    return false;
  }
}

// Both primitive in x, degree >= 1. The gcd's leading coefficient divides
// gamma = gcd(lc A, lc B), so gamma(y0) * monic gcd(A(x,y0), B(x,y0)) has
// coefficients that are polynomials in y of degree <= deg gamma + min deg_y.
std::optional<XPoly> interpolated_gcd(const XPoly &A, const XPoly &B) {
  const QPoly gamma = gcd(A.back(), B.back());
  const int bound = gamma.degree() + std::min(y_degree(A), y_degree(B)) + 1;
  std::vector<Rat> ys;
  std::vector<QPoly> images;
  int best = std::numeric_limits<int>::max();
  long next = 0;
  for (int tries = 0; tries < 4 * bound + 40; ++tries) {
    const Rat y0(next >= 0 ? next + 1 : next);
    next = next >= 0 ? -next - 1 : -next;
    if (A.back().eval(y0).is_zero() || B.back().eval(y0).is_zero()) {
      continue;
    }
    const QPoly h = gcd(at_y(A, y0), at_y(B, y0));
    if (h.degree() > best) {
      continue;
    }
    if (h.degree() < best) {
      best = h.degree();
      ys.clear();
      images.clear();
    }
    if (best == 0) {
      return XPoly{QPoly::constant(1)};
    }
    ys.push_back(y0);
    images.push_back(h * gamma.eval(y0));
    if (static_cast<int>(ys.size()) < bound) {
      continue;
    }
    XPoly G(static_cast<std::size_t>(best) + 1);
    for (int k = 0; k <= best; ++k) {
      std::vector<Rat> vals;
      for (const auto &im : images) {
        vals.push_back(im.coeff(k));
      }
      G[static_cast<std::size_t>(k)] = interpolate(ys, vals);
    }
    G = primitive_part(G);
    if (divides(G, A) && divides(G, B)) {
      return G;
    }
  }
  return std::nullopt;
}

XPoly prs_gcd(XPoly A, XPoly B) {
  if (A.size() < B.size()) {
    std::swap(A, B);
  }
  while (!B.empty() && B.size() > 1) {
    XPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    B = R.empty() ? R : primitive_part(R);
  }
  // B constant in x and nonzero: the x-parts are coprime.
  return B.empty() ? A : XPoly{QPoly::constant(1)};
}

} // namespace

BiPoly gcd(const BiPoly &a, const BiPoly &b) {
  if (a.is_zero()) {
    return b.primitive();
  }
  if (b.is_zero()) {
    return a.primitive();
  }
  XPoly A = a.as_x_poly();
  XPoly B = b.as_x_poly();
  const QPoly c = gcd(content(A), content(B));
  A = primitive_part(A);
  B = primitive_part(B);
  XPoly G;
  if (A.size() == 1 || B.size() == 1) {
    G = XPoly{QPoly::constant(1)};
  } else if (auto fast = interpolated_gcd(A, B)) {
    G = std::move(*fast);
  } else {
    G = prs_gcd(std::move(A), std::move(B));
  }
  for (auto &v : G) {
    v *= c;
  }
  return BiPoly::from_x_poly(G).primitive();
}

BiPoly squarefree_part(const BiPoly &f) {
  if (f.x_degree() <= 0) {
    return BiPoly(1);
  }
  return exact_div(f, gcd(f, f.derivative_x())).primitive();
}

RegularizationReport make_regular(const BiPoly &f, const BiPoly &g) {
  if (f.is_zero() || g.is_zero()) {
    throw std::domain_error("make_regular on the zero polynomial");
  }
  for (long step = 0;; ++step) {
    const long c = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    BiPoly tf = f.shear(Rat(c));
    BiPoly tg = g.shear(Rat(c));
    if (tf.is_x_regular() && tg.is_x_regular()) {
      RegularizationReport r;
      r.shear_c = c;
      r.order_f = tf.order();
      r.order_g = tg.order();
      r.transformed_f = std::move(tf);
      r.transformed_g = std::move(tg);
      return r;
    }
  }
}

} // namespace lojex
