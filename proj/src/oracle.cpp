#include "lojex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>

namespace lojex {

namespace {

using Path = std::function<std::pair<double, double>(double)>;

double abs_pow(double base, double e) { return std::pow(std::abs(base), e); }

std::vector<Path> build_paths(const SamplePlan &plan) {
  std::vector<Path> paths;
  for (const auto &arc : plan.arc_set) {
    for (double s : {1.0, -1.0}) {
      paths.push_back([arc, s](double r) {
        double x = 0;
        for (const auto &[e, c] : arc) {
          // |y|^e below the axis unless e is an odd integer
          const bool flip = s < 0 && e.is_integer() && e.num() % 2 != 0;
          x += (flip ? -1.0 : 1.0) * c.to_double() * std::pow(r, e.to_double());
        }
        return std::pair{x, s * r};
      });
    }
  }
  // Fractional and integer exponents up to 32; high ones reach deep into cusps.
  std::vector<double> ks{1, 4.0 / 3, 3.0 / 2, 5.0 / 3, 2, 5.0 / 2, 3, 7.0 / 2};
  for (int k = 4; k <= 32; ++k) {
    ks.push_back(k);
  }
  for (double k : ks) {
    for (double c : {1.0 / 3, 1.0, 3.0}) {
      for (double sc : {1.0, -1.0}) {
        for (double sr : {1.0, -1.0}) {
          paths.push_back([=](double r) { return std::pair{sc * c * abs_pow(r, k), sr * r}; });
          paths.push_back([=](double r) { return std::pair{sr * r, sc * c * abs_pow(r, k)}; });
        }
      }
    }
  }
  const auto total = static_cast<std::size_t>(plan.points_per_radius);
  if (paths.size() > total) {
    paths.resize(total);
  }
  std::mt19937 rng(plan.seed);
  const double start = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const double step = std::numbers::phi - 1.0;
  for (std::size_t j = 0; paths.size() < total; ++j) {
    const double u = std::fmod(start + static_cast<double>(j) * step, 1.0);
    const double theta = 2 * std::numbers::pi * u;
    paths.push_back([theta](double r) { return std::pair{r * std::cos(theta), r * std::sin(theta)}; });
  }
  return paths;
}

// Natural log of |q|, fine for values far below the double range.
double log_abs(const Rat &q) {
  auto log_z = [](const Integer &z) {
    long e = 0;
    const double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log(std::abs(d)) + static_cast<double>(e) * std::numbers::ln2;
  };
  return log_z(q.num()) - log_z(q.den());
}

Rat exact(double v) { return Rat(mpq_class(v)); }

// Growth rates of log|h| against log r over the two radius steps agree.
bool settled(const std::vector<double> &lh, const std::vector<double> &logr, double tol) {
  const double a = (lh[0] - lh[1]) / (logr[0] - logr[1]);
  const double b = (lh[1] - lh[2]) / (logr[1] - logr[2]);
  return std::abs(a - b) <= tol * std::abs(b);
}

} // namespace

SamplePlan SamplePlan::standard() {
  SamplePlan p;
  p.radii = {Rat(1, 10), Rat(1, 100), Rat(1, 1000), Rat(1, 10000)};
  return p;
}

void SamplePlan::check() const {
  if (radii.size() < 2) {
    throw std::invalid_argument("sample plan needs at least two radii");
  }
  for (std::size_t k = 0; k < radii.size(); ++k) {
    if (radii[k].sign() <= 0 || (k > 0 && radii[k] >= radii[k - 1])) {
      throw std::invalid_argument("radii must be positive and decreasing");
    }
  }
  if (points_per_radius < 100) {
    throw std::invalid_argument("at least 100 points per radius");
  }
  if (!(power_law_tolerance > 0)) {
    throw std::invalid_argument("power_law_tolerance must be positive");
  }
}

double estimate_exponent(const BiPoly &f, const BiPoly &g, const SamplePlan &plan) {
  plan.check();
  const std::size_t n = plan.radii.size();
  const std::size_t first = n >= 3 ? n - 3 : n - 2;
  std::vector<Rat> radii(plan.radii.begin() + static_cast<std::ptrdiff_t>(first), plan.radii.end());
  std::vector<double> logr;
  for (const Rat &r : radii) {
    logr.push_back(log_abs(r));
  }
  std::optional<double> best;
  for (const auto &path : build_paths(plan)) {
    std::vector<double> lf;
    std::vector<double> lg;
    for (const Rat &r : radii) {
      const auto [x, y] = path(r.to_double());
      const Rat X = exact(x);
      const Rat Y = exact(y);
      const Rat fv = f.eval(X, Y);
      const Rat gv = g.eval(X, Y);
      if (fv.is_zero() || gv.is_zero()) {
        break;
      }
      lf.push_back(log_abs(fv));
      lg.push_back(log_abs(gv));
    }
    if (lf.size() != radii.size() || lf.back() >= 0 || lg.back() >= 0) {
      continue;
    }
    const std::size_t last = lf.size() - 1;
    const double dg = lg[last - 1] - lg[last];
    if (!(dg > 1e-9)) {
      continue;
    }
    const double slope = (lf[last - 1] - lf[last]) / dg;
    // both |f| and |g| must already behave like powers of r
    if (lf.size() == 3 && !(settled(lf, logr, plan.power_law_tolerance) && settled(lg, logr, plan.power_law_tolerance))) {
      continue;
    }
    const double v = std::min(lf.back() / lg.back(), slope);
    best = best ? std::max(*best, v) : v;
  }
  if (!best) {
    throw std::domain_error("no sampled path where 0 < |f|, |g| < 1 in a settled regime");
  }
  return *best;
}

LimitEstimate estimate_limit(const BiPoly &g, const BiPoly &f, const SamplePlan &plan) {
  plan.check();
  const double r = plan.radii.back().to_double();
  LimitEstimate out;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0;
  for (const auto &path : build_paths(plan)) {
    const auto [x, y] = path(r);
    const Rat X = exact(x);
    const Rat Y = exact(y);
    const Rat fv = f.eval(X, Y);
    if (fv.is_zero()) {
      continue;
    }
    const double q = (g.eval(X, Y) / fv).to_double();
    lo = std::min(lo, q);
    hi = std::max(hi, q);
    sum += q;
    ++out.paths;
  }
  if (out.paths > 0) {
    out.value = sum / static_cast<double>(out.paths);
    out.spread = hi - lo;
  }
  return out;
}

} // namespace lojex
