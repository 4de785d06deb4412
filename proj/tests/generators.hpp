#pragma once

#include "lojex/bipoly.hpp"

#include <algorithm>
#include <random>

namespace gen {

using lojex::BiPoly;
using lojex::Rat;

inline int uniform(std::mt19937 &rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Terms of total degree in [min_order, max_deg], coefficients in [-5, 5].
inline BiPoly random_poly(std::mt19937 &rng, int min_order, int max_deg, int keep_one_in = 3) {
  BiPoly p;
  for (int i = 0; i <= max_deg; ++i) {
    for (int j = 0; i + j <= max_deg; ++j) {
      if (i + j < min_order || uniform(rng, 1, keep_one_in) != 1) {
        continue;
      }
      p += BiPoly::monomial(Rat(uniform(rng, -5, 5)), i, j);
    }
  }
  return p;
}

/// x-regular of order exactly m, degree at most max_deg.
inline BiPoly random_regular(std::mt19937 &rng, int m, int max_deg) {
  BiPoly p = random_poly(rng, m, max_deg);
  if (p.coeff(m, 0).is_zero()) {
    p += BiPoly::monomial(Rat(uniform(rng, 1, 3) * (uniform(rng, 0, 1) * 2 - 1)), m, 0);
  }
  return p;
}

/// x-regular of order m, terms of degree m..max_deg.
inline BiPoly regular_part(std::mt19937 &rng, int m, int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> keep(0, 3);
  BiPoly p;
  for (int i = 0; i <= max_deg; ++i) {
    for (int j = 0; i + j <= max_deg; ++j) {
      if (i + j < m || keep(rng) != 0) {
        continue;
      }
      p += BiPoly::monomial(Rat(coef(rng)), i, j);
    }
  }
  if (p.coeff(m, 0).is_zero()) {
    p += BiPoly::monomial(Rat(1 + static_cast<long>(rng() % 3)), m, 0);
  }
  return p;
}

/// x-regular of order m; half the time a product of smaller pieces, which
/// gives clustered roots and deep trees.
inline BiPoly clustered_regular(std::mt19937 &rng, int m) {
  if (m >= 2 && rng() % 2 == 0) {
    const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    BiPoly p = regular_part(rng, a, a + 2);
    BiPoly q = rng() % 3 == 0 ? p.pow(static_cast<unsigned>((m - a) / a)) : regular_part(rng, m - a, m - a + 2);
    BiPoly prod = p * q;
    while (prod.order() < m) {
      prod = prod * regular_part(rng, m - prod.order(), m - prod.order() + 1);
    }
    return prod;
  }
  return regular_part(rng, m, std::min(m + 3, 7));
}

/// Vanishes only at the origin near it (sum of even powers shapes).
inline BiPoly isolated_zero(std::mt19937 &rng) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const Rat a(uniform(rng, 1, 4));
  const Rat b(uniform(rng, -2, 2));
  switch (uniform(rng, 0, 3)) {
  case 0:
    return x * x + BiPoly(a) * y * y;
  case 1:
    return x * x + BiPoly(a) * y.pow(4);
  case 2:
    return (x - BiPoly(b) * y).pow(2) + BiPoly(a) * y.pow(4);
  default:
    return (x - BiPoly(b) * y * y).pow(2) + BiPoly(a) * y.pow(2);
  }
}

struct Pair {
  BiPoly f;
  BiPoly g;
};

/// Pairs shaped so that inclusion often holds: shared factors, g = f*u + v*h,
/// isolated zeros, plus some unrelated pairs. Total degrees stay at most 6.
inline Pair random_pair(std::mt19937 &rng) {
  for (;;) {
    Pair p;
    const BiPoly h = random_regular(rng, 1, 2);
    switch (uniform(rng, 0, 4)) {
    case 0: // shared factor, definite cofactor
      p.f = h * isolated_zero(rng);
      p.g = h.pow(static_cast<unsigned>(uniform(rng, 1, 2))) * random_poly(rng, 0, 2);
      break;
    case 1: // g = f*u + v*h
    {
      p.f = uniform(rng, 0, 1) == 0 ? h * isolated_zero(rng) : h.pow(static_cast<unsigned>(uniform(rng, 1, 3)));
      const BiPoly u = random_poly(rng, 0, 1);
      const BiPoly v = random_poly(rng, 0, 2);
      p.g = p.f * u + v * h;
      break;
    }
    case 2: // isolated zero of f, anything for g
      p.f = isolated_zero(rng) * (uniform(rng, 0, 1) == 0 ? BiPoly(1) : isolated_zero(rng));
      p.g = random_regular(rng, uniform(rng, 1, 3), 5);
      break;
    case 3: // powers of a common factor
      p.f = h.pow(static_cast<unsigned>(uniform(rng, 1, 4)));
      p.g = h.pow(static_cast<unsigned>(uniform(rng, 1, 3))) * random_poly(rng, 0, 1);
      break;
    default: // unrelated
      p.f = random_regular(rng, uniform(rng, 1, 3), 6);
      p.g = random_regular(rng, uniform(rng, 1, 3), 6);
      break;
    }
    if (p.f.is_zero() || p.g.is_zero() || p.f.total_degree() > 6 || p.g.total_degree() > 6 ||
        !p.f.value_at_origin().is_zero() || !p.g.value_at_origin().is_zero()) {
      continue;
    }
    return p;
  }
}

} // namespace gen
