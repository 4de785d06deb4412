#include "lojex/number_field.hpp"

#include "lojex/factor.hpp"
#include "lojex/roots.hpp"

#include <stdexcept>

namespace lojex {

namespace {

Rat pow2_inv(long bits) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return Rat(Integer(1), p);
}

long bits_for(const Rat &eps) {
  // Smallest k with 2^-k <= eps, plus a margin for rounding.
  long k = 0;
  Rat v(1);
  while (v > eps) {
    v /= Rat(2);
    ++k;
  }
  return k + 8;
}

bool is_constant(const QPoly &a) { return a.degree() <= 0; }

/// Index of the isolating box holding a.
int root_index(const std::vector<Box> &boxes, const AlgebraicNumber &a) {
  Rat eps = pow2_inv(16);
  for (int i = 0; i < 40; ++i, eps *= pow2_inv(8)) {
    const int idx = locate(boxes, a.enclosure(eps));
    if (idx >= 0) {
      return idx;
    }
  }
  throw std::runtime_error("could not locate root among isolating boxes");
}

/// Index among boxes of the value of an element of field L.
int element_index(const NumberField &L, const QPoly &a, const std::vector<Box> &boxes) {
  Rat eps = pow2_inv(16);
  for (int i = 0; i < 40; ++i, eps *= pow2_inv(8)) {
    const int idx = locate(boxes, L.enclose(a, eps));
    if (idx >= 0) {
      return idx;
    }
  }
  throw std::runtime_error("could not locate field element among isolating boxes");
}

QPolyX mul_x(const QPolyX &a, const QPolyX &b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  QPolyX r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

FieldPtr make_field(const QPoly &irreducible, const Box &box);

} // namespace

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(QPoly::identity(), AlgebraicNumber(0)));
  return q;
}

FieldPtr NumberField::generated_by(const AlgebraicNumber &theta) {
  if (theta.is_rational()) {
    return rationals();
  }
  return FieldPtr(new NumberField(theta.poly().monic(), theta));
}

namespace {
FieldPtr make_field(const QPoly &irreducible, const Box &box) {
  return NumberField::generated_by(AlgebraicNumber::from_irreducible(irreducible, box));
}
} // namespace

QPoly NumberField::reduce(const QPoly &a) const {
  if (a.degree() < degree()) {
    return a;
  }
  return a % modulus_;
}

QPoly NumberField::mul(const QPoly &a, const QPoly &b) const { return reduce(a * b); }

QPoly NumberField::inv(const QPoly &a) const {
  const QPoly r = reduce(a);
  if (r.is_zero()) {
    throw std::domain_error("inverse of zero field element");
  }
  if (is_constant(r)) {
    return QPoly::constant(r.coeff(0).inverse());
  }
  const ExtendedGcd e = extended_gcd(r, modulus_);
  if (e.g.degree() != 0) {
    throw std::logic_error("field modulus is not irreducible");
  }
  return reduce(e.s);
}

QPoly NumberField::pow(const QPoly &a, unsigned long e) const {
  QPoly r = QPoly::constant(1);
  QPoly b = reduce(a);
  while (e > 0) {
    if (e & 1UL) {
      r = mul(r, b);
    }
    b = mul(b, b);
    e >>= 1UL;
  }
  return r;
}

Box NumberField::enclose(const QPoly &a, const Rat &eps) const {
  const QPoly r = reduce(a);
  if (is_constant(r)) {
    return Box::point(r.is_zero() ? Rat(0) : r.coeff(0));
  }
  const long bits = bits_for(eps);
  Rat w = eps;
  for (int i = 0; i < 200; ++i) {
    // Rounding error is amplified by |theta|^deg, so the grid tightens too.
    const Box b = eval(r, theta_.enclosure(w), bits + 8 + 16L * i);
    if (b.width() < eps) {
      return b;
    }
    w /= Rat(16);
  }
  throw std::runtime_error("field element enclosure did not converge");
}

AlgebraicNumber NumberField::value(const QPoly &a) const {
  const QPoly r = reduce(a);
  if (is_constant(r)) {
    return AlgebraicNumber(r.is_zero() ? Rat(0) : r.coeff(0));
  }
  if (r.degree() == 1 && r.coeff(0).is_zero() && r.coeff(1) == Rat(1)) {
    return theta_;
  }
  // Characteristic polynomial Res_t(x - r(t), P(t)) is a power of the
  // minimal polynomial of r(theta).
  QPolyX lhs;
  for (int j = 0; j <= r.degree(); ++j) {
    lhs.push_back(j == 0 ? QPoly{-r.coeff(0), Rat(1)} : QPoly::constant(-r.coeff(j)));
  }
  QPolyX rhs;
  for (const auto &c : modulus_.coeffs()) {
    rhs.push_back(QPoly::constant(c));
  }
  const QPoly charpoly = resultant_t(lhs, rhs);
  return identify_root(charpoly, [this, &r](const Rat &eps) { return enclose(r, eps); });
}

void kp_trim(KPoly &a) {
  while (!a.empty() && a.back().is_zero()) {
    a.pop_back();
  }
}

int kp_degree(const KPoly &a) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!a[i].is_zero()) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

KPoly kp_mul(const NumberField &K, const KPoly &a, const KPoly &b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  KPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  for (auto &c : r) {
    c = K.reduce(c);
  }
  kp_trim(r);
  return r;
}

KPoly kp_sub(const KPoly &a, const KPoly &b) {
  KPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) {
      r[i] += a[i];
    }
    if (i < b.size()) {
      r[i] -= b[i];
    }
  }
  kp_trim(r);
  return r;
}

KPoly kp_monic(const NumberField &K, const KPoly &a) {
  KPoly r = a;
  kp_trim(r);
  if (r.empty()) {
    return r;
  }
  const QPoly li = K.inv(r.back());
  for (auto &c : r) {
    c = K.mul(c, li);
  }
  return r;
}

std::pair<KPoly, KPoly> kp_divmod(const NumberField &K, const KPoly &a, const KPoly &b) {
  KPoly bb = b;
  kp_trim(bb);
  if (bb.empty()) {
    throw std::domain_error("polynomial division by zero");
  }
  KPoly r = a;
  kp_trim(r);
  if (r.size() < bb.size()) {
    return {{}, r};
  }
  const QPoly li = K.inv(bb.back());
  KPoly q(r.size() - bb.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    const QPoly c = K.mul(r[k + bb.size() - 1], li);
    q[k] = c;
    if (c.is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < bb.size(); ++j) {
      r[k + j] = K.reduce(r[k + j] - c * bb[j]);
    }
  }
  kp_trim(r);
  kp_trim(q);
  return {q, r};
}

KPoly kp_derivative(const KPoly &a) {
  KPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) {
    r.push_back(a[i] * Rat(static_cast<long>(i)));
  }
  kp_trim(r);
  return r;
}

KPoly kp_gcd(const NumberField &K, KPoly a, KPoly b) {
  kp_trim(a);
  kp_trim(b);
  while (!b.empty()) {
    KPoly r = kp_divmod(K, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return kp_monic(K, a);
}

std::vector<KPoly> kp_squarefree_decomposition(const NumberField &K, const KPoly &a) {
  const KPoly f = kp_monic(K, a);
  if (kp_degree(f) < 1) {
    return {};
  }
  const KPoly fp = kp_derivative(f);
  const KPoly c = kp_gcd(K, f, fp);
  KPoly w = kp_divmod(K, f, c).first;
  KPoly y = kp_divmod(K, fp, c).first;
  KPoly z = kp_sub(y, kp_derivative(w));
  std::vector<KPoly> out;
  while (kp_degree(w) > 0) {
    const KPoly g = kp_gcd(K, w, z);
    out.push_back(g);
    w = kp_divmod(K, w, g).first;
    y = kp_divmod(K, z, g).first;
    z = kp_sub(y, kp_derivative(w));
  }
  return out;
}

QPoly Extension::map(const QPoly &a) const {
  if (a.degree() <= 0) {
    return a;
  }
  // Horner in the image of the old generator.
  QPoly r;
  for (int i = a.degree(); i >= 0; --i) {
    r = field->reduce(r * embed);
    r += QPoly::constant(a.coeff(i));
  }
  return field->reduce(r);
}

namespace {

std::vector<Extension> trager(const FieldPtr &K, const KPoly &s) {
  const int n = kp_degree(s);
  const QPoly &P = K->modulus();
  const std::vector<Box> pboxes = isolate_roots(P, 64);
  const int theta_idx = root_index(pboxes, K->generator());
  QPolyX PX;
  for (const auto &c : P.coeffs()) {
    PX.push_back(QPoly::constant(c));
  }
  for (long step = 0; step < 64; ++step) {
    const long k = step == 0 ? 0 : (step % 2 == 1 ? (step + 1) / 2 : -(step / 2));
    // s(x - k t, t) as a polynomial in t over Q[x].
    const QPolyX lin{QPoly{Rat(0), Rat(1)}, QPoly::constant(Rat(-k))};
    QPolyX acc;
    QPolyX power{QPoly::constant(1)};
    for (int j = 0; j <= n; ++j) {
      QPolyX sj;
      for (const auto &c : s[static_cast<std::size_t>(j)].coeffs()) {
        sj.push_back(QPoly::constant(c));
      }
      const QPolyX term = mul_x(sj, power);
      if (acc.size() < term.size()) {
        acc.resize(term.size());
      }
      for (std::size_t i = 0; i < term.size(); ++i) {
        acc[i] += term[i];
      }
      power = mul_x(power, lin);
    }
    while (!acc.empty() && acc.back().is_zero()) {
      acc.pop_back();
    }
    const QPoly norm = resultant_t(acc, PX);
    if (norm.degree() < 1 || gcd(norm, norm.derivative()).degree() > 0) {
      continue;
    }
    std::vector<Extension> out;
    for (const QPoly &ni : irreducible_factors(norm)) {
      const std::vector<Box> eboxes = isolate_roots(ni, 64);
      const FieldPtr L0 = make_field(ni, eboxes.front());
      // Over Q(eta): gcd of P(t) and s(eta - k t, t) is t - theta'.
      KPoly pk;
      for (const auto &c : P.coeffs()) {
        pk.push_back(QPoly::constant(c));
      }
      const KPoly eta_lin{QPoly::identity(), QPoly::constant(Rat(-k))};
      KPoly sk;
      KPoly pw{QPoly::constant(1)};
      for (int j = 0; j <= n; ++j) {
        KPoly sj;
        for (const auto &c : s[static_cast<std::size_t>(j)].coeffs()) {
          sj.push_back(QPoly::constant(c));
        }
        const KPoly term = kp_mul(*L0, sj, pw);
        if (sk.size() < term.size()) {
          sk.resize(term.size());
        }
        for (std::size_t i = 0; i < term.size(); ++i) {
          sk[i] = L0->reduce(sk[i] + term[i]);
        }
        pw = kp_mul(*L0, pw, eta_lin);
      }
      kp_trim(sk);
      const KPoly g = kp_gcd(*L0, pk, sk);
      if (kp_degree(g) != 1) {
        throw std::logic_error("norm factor does not determine the base generator");
      }
      const QPoly theta_image = L0->reduce(-g[0]);
      for (const Box &eb : eboxes) {
        const FieldPtr L = make_field(ni, eb);
        if (element_index(*L, theta_image, pboxes) != theta_idx) {
          continue;
        }
        const QPoly root = L->reduce(QPoly::identity() - theta_image * Rat(k));
        out.push_back(Extension{L, theta_image, root});
      }
    }
    if (static_cast<int>(out.size()) != n) {
      throw std::logic_error("root count mismatch while adjoining roots");
    }
    return out;
  }
  throw std::runtime_error("no separating shift found for the norm");
}

} // namespace

std::vector<Extension> roots_in_extensions(const FieldPtr &K, const KPoly &s_in) {
  const KPoly s = kp_monic(*K, s_in);
  const int n = kp_degree(s);
  if (n < 1) {
    throw std::domain_error("roots of a constant polynomial");
  }
  const QPoly identity = QPoly::identity();
  if (n == 1) {
    return {Extension{K, identity, K->reduce(-s[0])}};
  }
  bool rational = true;
  for (const auto &c : s) {
    rational = rational && c.degree() <= 0;
  }
  if (!rational) {
    return trager(K, s);
  }
  std::vector<Rat> qc;
  for (const auto &c : s) {
    qc.push_back(c.is_zero() ? Rat(0) : c.coeff(0));
  }
  std::vector<Extension> out;
  for (const QPoly &q : irreducible_factors(QPoly(qc))) {
    if (q.degree() == 1) {
      out.push_back(Extension{K, identity, QPoly::constant(-q.coeff(0) / q.coeff(1))});
      continue;
    }
    if (K->is_rationals()) {
      for (const Box &b : isolate_roots(q, 64)) {
        out.push_back(Extension{make_field(q, b), QPoly(), identity});
      }
      continue;
    }
    KPoly qk;
    for (const auto &c : q.coeffs()) {
      qk.push_back(QPoly::constant(c));
    }
    auto more = trager(K, qk);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

Extension adjoin(const FieldPtr &K, const AlgebraicNumber &alpha) {
  if (alpha.is_rational()) {
    return Extension{K, QPoly::identity(), QPoly::constant(alpha.rational_value())};
  }
  if (K->is_rationals()) {
    return Extension{NumberField::generated_by(alpha), QPoly(), QPoly::identity()};
  }
  KPoly s;
  for (const auto &c : alpha.poly().coeffs()) {
    s.push_back(QPoly::constant(c));
  }
  const std::vector<Box> aboxes = isolate_roots(alpha.poly(), 64);
  const int target = root_index(aboxes, alpha);
  for (const Extension &e : roots_in_extensions(K, s)) {
    if (element_index(*e.field, e.root, aboxes) == target) {
      return e;
    }
  }
  throw std::logic_error("adjoined number not found among roots");
}

std::vector<std::pair<AlgebraicNumber, int>> roots_with_multiplicity(const std::vector<AlgebraicNumber> &coeffs) {
  std::vector<AlgebraicNumber> c = coeffs;
  while (!c.empty() && c.back().is_zero()) {
    c.pop_back();
  }
  if (c.size() < 2) {
    throw std::domain_error("roots_with_multiplicity needs degree at least 1");
  }
  FieldPtr K = NumberField::rationals();
  KPoly elems;
  for (const auto &a : c) {
    if (a.is_rational()) {
      elems.push_back(QPoly::constant(a.rational_value()));
      continue;
    }
    const Extension e = adjoin(K, a);
    for (auto &prev : elems) {
      prev = e.map(prev);
    }
    elems.push_back(e.root);
    K = e.field;
  }
  std::vector<std::pair<AlgebraicNumber, int>> out;
  const auto parts = kp_squarefree_decomposition(*K, elems);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (kp_degree(parts[k]) < 1) {
      continue;
    }
    for (const Extension &e : roots_in_extensions(K, parts[k])) {
      out.emplace_back(e.field->value(e.root), static_cast<int>(k) + 1);
    }
  }
  return out;
}

} // namespace lojex
