#include "lojex/roots.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <utility>

namespace lojex {

namespace {

/// Minimal RAII wrapper over an mpfr_t; every value carries its own precision.
class Real {
public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real &o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real &operator=(const Real &o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

private:
  mpfr_t v_;
};

struct Cx {
  Real re;
  Real im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

// All helpers write into `out`, which may alias neither input unless noted.
void cx_mul(Cx &out, const Cx &a, const Cx &b, Real &t1, Real &t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_fma(out.im.get(), a.im.get(), b.re.get(), t2.get(), MPFR_RNDN);
  mpfr_set(out.re.get(), t1.get(), MPFR_RNDN);
}

void cx_div(Cx &out, const Cx &a, const Cx &b, Real &t1, Real &t2, Real &t3) {
  // (a.re + i a.im)(b.re - i b.im) / |b|^2
  mpfr_sqr(t3.get(), b.re.get(), MPFR_RNDN);
  mpfr_fma(t3.get(), b.im.get(), b.im.get(), t3.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_fma(t1.get(), a.im.get(), b.im.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(out.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), t2.get(), out.im.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), t3.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), t1.get(), t3.get(), MPFR_RNDN);
}

bool cx_is_zero(const Cx &a) { return mpfr_zero_p(a.re.get()) && mpfr_zero_p(a.im.get()); }

Rat to_rat(const Real &r) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), r.get());
  return Rat(q);
}

/// Aberth-Ehrlich iteration for all roots of p at the given precision.
std::vector<Cx> aberth(const QPoly &p, mpfr_prec_t prec) {
  const int n = p.degree();
  std::vector<Real> a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  for (const auto &c : p.coeffs()) {
    a.emplace_back(prec);
    mpfr_set_q(a.back().get(), c.raw().get_mpq_t(), MPFR_RNDN);
  }

  // Starting points on a circle whose radius is the Fujiwara-style bound
  // divided by two, rotated off the axes.
  double radius = 0.0;
  const double lead = std::abs(p.lead().to_double());
  for (int k = 0; k < n; ++k) {
    const double ak = std::abs(p.coeffs()[static_cast<std::size_t>(k)].to_double());
    if (ak > 0.0 && lead > 0.0) {
      radius = std::max(radius, std::pow(ak / lead, 1.0 / (n - k)));
    }
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    radius = 1.0;
  }
  std::vector<Cx> z;
  z.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double ang = 2.0 * M_PI * k / n + 0.7;
    z.emplace_back(prec);
    mpfr_set_d(z.back().re.get(), radius * std::cos(ang), MPFR_RNDN);
    mpfr_set_d(z.back().im.get(), radius * std::sin(ang), MPFR_RNDN);
  }

  Real t1(prec), t2(prec), t3(prec), tol(prec), mag(prec);
  Cx pv(prec), dv(prec), w(prec), s(prec), d(prec), tmp(prec), corr(prec);
  mpfr_set_ui_2exp(tol.get(), 1, -static_cast<long>(prec) + 4, MPFR_RNDN);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  const int max_iter = 200 + 20 * n;
  for (int it = 0; it < max_iter; ++it) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[static_cast<std::size_t>(k)]) {
        continue;
      }
      Cx &zk = z[static_cast<std::size_t>(k)];
      // Horner for p and p'.
      mpfr_set(pv.re.get(), a[static_cast<std::size_t>(n)].get(), MPFR_RNDN);
      mpfr_set_zero(pv.im.get(), 1);
      mpfr_set_zero(dv.re.get(), 1);
      mpfr_set_zero(dv.im.get(), 1);
      for (int j = n - 1; j >= 0; --j) {
        cx_mul(tmp, dv, zk, t1, t2);
        mpfr_add(dv.re.get(), tmp.re.get(), pv.re.get(), MPFR_RNDN);
        mpfr_set(dv.im.get(), tmp.im.get(), MPFR_RNDN);
        mpfr_add(dv.im.get(), dv.im.get(), pv.im.get(), MPFR_RNDN);
        cx_mul(tmp, pv, zk, t1, t2);
        mpfr_add(pv.re.get(), tmp.re.get(), a[static_cast<std::size_t>(j)].get(), MPFR_RNDN);
        mpfr_set(pv.im.get(), tmp.im.get(), MPFR_RNDN);
      }
      if (cx_is_zero(pv)) {
        done[static_cast<std::size_t>(k)] = true;
        continue;
      }
      all_done = false;
      if (cx_is_zero(dv)) {
        mpfr_mul_d(zk.re.get(), zk.re.get(), 1.0 + 1e-3, MPFR_RNDN);
        mpfr_add_d(zk.im.get(), zk.im.get(), 1e-3, MPFR_RNDN);
        continue;
      }
      cx_div(w, pv, dv, t1, t2, t3);
      mpfr_set_zero(s.re.get(), 1);
      mpfr_set_zero(s.im.get(), 1);
      Cx one(prec);
      mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
      for (int j = 0; j < n; ++j) {
        if (j == k) {
          continue;
        }
        mpfr_sub(d.re.get(), zk.re.get(), z[static_cast<std::size_t>(j)].re.get(), MPFR_RNDN);
        mpfr_sub(d.im.get(), zk.im.get(), z[static_cast<std::size_t>(j)].im.get(), MPFR_RNDN);
        if (cx_is_zero(d)) {
          continue;
        }
        cx_div(tmp, one, d, t1, t2, t3);
        mpfr_add(s.re.get(), s.re.get(), tmp.re.get(), MPFR_RNDN);
        mpfr_add(s.im.get(), s.im.get(), tmp.im.get(), MPFR_RNDN);
      }
      // corr = w / (1 - w s)
      cx_mul(tmp, w, s, t1, t2);
      mpfr_ui_sub(d.re.get(), 1, tmp.re.get(), MPFR_RNDN);
      mpfr_neg(d.im.get(), tmp.im.get(), MPFR_RNDN);
      if (cx_is_zero(d)) {
        mpfr_set(corr.re.get(), w.re.get(), MPFR_RNDN);
        mpfr_set(corr.im.get(), w.im.get(), MPFR_RNDN);
      } else {
        cx_div(corr, w, d, t1, t2, t3);
      }
      mpfr_sub(zk.re.get(), zk.re.get(), corr.re.get(), MPFR_RNDN);
      mpfr_sub(zk.im.get(), zk.im.get(), corr.im.get(), MPFR_RNDN);
      // Converged once the step is below tol * max(1, |z|).
      mpfr_hypot(mag.get(), zk.re.get(), zk.im.get(), MPFR_RNDN);
      if (mpfr_cmp_ui(mag.get(), 1) < 0) {
        mpfr_set_ui(mag.get(), 1, MPFR_RNDN);
      }
      mpfr_mul(mag.get(), mag.get(), tol.get(), MPFR_RNDN);
      mpfr_hypot(t1.get(), corr.re.get(), corr.im.get(), MPFR_RNDN);
      if (mpfr_cmp(t1.get(), mag.get()) <= 0) {
        done[static_cast<std::size_t>(k)] = true;
      }
    }
    if (all_done) {
      break;
    }
  }
  return z;
}

/// Smallest dyadic-friendly rational upper bound for sqrt(v), v >= 0.
Rat sqrt_upper(const Rat &v) {
  if (v.is_zero()) {
    return Rat(0);
  }
  Real r(80);
  mpfr_set_q(r.get(), v.raw().get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
  return to_rat(r);
}

struct ExactComplex {
  Rat re;
  Rat im;
};

ExactComplex eval_exact(const QPoly &p, const ExactComplex &z) {
  ExactComplex acc{Rat(0), Rat(0)};
  const auto &c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rat re = acc.re * z.re - acc.im * z.im + *it;
    Rat im = acc.re * z.im + acc.im * z.re;
    acc = {std::move(re), std::move(im)};
  }
  return acc;
}

/// Attempts certification; returns empty on failure.
std::vector<Box> certify(const QPoly &p, const std::vector<ExactComplex> &z) {
  const int n = p.degree();
  std::vector<Box> boxes;
  boxes.reserve(z.size());
  const Rat lead2 = p.lead() * p.lead();
  const Rat n2(static_cast<long>(n) * n);
  for (std::size_t k = 0; k < z.size(); ++k) {
    Rat prod(1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == k) {
        continue;
      }
      const Rat dr = z[k].re - z[j].re;
      const Rat di = z[k].im - z[j].im;
      const Rat d2 = dr * dr + di * di;
      if (d2.is_zero()) {
        return {};
      }
      prod *= d2;
    }
    const ExactComplex v = eval_exact(p, z[k]);
    const Rat w2 = (v.re * v.re + v.im * v.im) / (lead2 * prod);
    const Rat r = sqrt_upper(n2 * w2);
    boxes.push_back({{z[k].re - r, z[k].re + r}, {z[k].im - r, z[k].im + r}});
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes[i].intersects(boxes[j])) {
        return {};
      }
    }
  }
  return boxes;
}

} // namespace

std::vector<Box> isolate_roots(const QPoly &p, long bits) {
  if (p.degree() < 1) {
    throw std::domain_error("root isolation of a constant polynomial");
  }
  if (p.degree() == 1) {
    return {Box::point(-p.coeff(0) / p.coeff(1))};
  }
  long prec = std::max(64L, bits + 16);
  for (int attempt = 0; attempt < 14; ++attempt, prec *= 2) {
    const std::vector<Cx> approx = aberth(p, static_cast<mpfr_prec_t>(prec));
    std::vector<ExactComplex> z;
    z.reserve(approx.size());
    for (const auto &c : approx) {
      z.push_back({to_rat(c.re), to_rat(c.im)});
    }
    std::vector<Box> boxes = certify(p, z);
    if (!boxes.empty()) {
      return boxes;
    }
  }
  throw std::runtime_error("root isolation failed to certify (is the polynomial squarefree?)");
}

int locate(const std::vector<Box> &boxes, const Box &enclosure) {
  int found = -1;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].intersects(enclosure)) {
      if (found >= 0) {
        return -1;
      }
      found = static_cast<int>(i);
    }
  }
  return found;
}

Box refine_root(const QPoly &p, const Box &box, const Rat &eps) {
  if (box.width() < eps || box.is_point()) {
    return box;
  }
  if (p.degree() == 1) {
    return Box::point(-p.coeff(0) / p.coeff(1));
  }
  // bits ~ log2(1/eps), plus the scale of the box.
  long bits = 64;
  {
    const double e = eps.to_double();
    if (e > 0.0 && std::isfinite(std::log2(e))) {
      bits = std::max(bits, static_cast<long>(-std::log2(e)) + 16);
    } else {
      bits = std::max(bits, static_cast<long>(eps.den().get_str(2).size()) + 16);
    }
  }
  for (int attempt = 0; attempt < 16; ++attempt, bits *= 2) {
    const std::vector<Box> boxes = isolate_roots(p, bits);
    const int idx = locate(boxes, box);
    if (idx >= 0 && boxes[static_cast<std::size_t>(idx)].width() < eps) {
      return boxes[static_cast<std::size_t>(idx)];
    }
  }
  throw std::runtime_error("root refinement did not converge");
}

} // namespace lojex
