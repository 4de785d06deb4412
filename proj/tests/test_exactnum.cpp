#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lojex/algebraic.hpp"
#include "lojex/factor.hpp"
#include "lojex/number_field.hpp"
#include "lojex/roots.hpp"

#include <random>

using namespace lojex;

namespace {

AlgebraicNumber root_near(const QPoly &p, double re, double im = 0.0) {
  for (const auto &a : AlgebraicNumber::roots_of(p)) {
    const auto z = a.approx();
    if (std::abs(z.real() - re) < 1e-6 && std::abs(z.imag() - im) < 1e-6) {
      return a;
    }
  }
  FAIL("no root near requested point");
  return {};
}

const QPoly kSqrt2Poly{Rat(-2), 0, 1};
const QPoly kIPoly{Rat(1), 0, 1};
const QPoly kOmegaPoly{Rat(1), 1, 1};

Rat random_rat(std::mt19937 &rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Rat(Integer(num(rng)), Integer(den(rng)));
}

} // namespace

TEST_CASE("rat is always reduced") {
  const Rat r(Integer(6), Integer(-4));
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rat(0).den() == 1);
  CHECK(Rat::parse("10/4") == Rat(Integer(5), Integer(2)));
  CHECK_THROWS_AS(Rat(Integer(1), Integer(0)), std::domain_error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("simplest rational between bounds") {
  CHECK(simplest_between(Rat::parse("3/10"), Rat::parse("2/5")) == Rat::parse("1/3"));
  CHECK(simplest_between(Rat::parse("-7/5"), Rat::parse("-13/10")) == Rat::parse("-4/3"));
  CHECK(simplest_between(Rat(-1), Rat(1)) == Rat(0));
}

TEST_CASE("isolate cube roots of unity") {
  const auto boxes = isolate_roots(QPoly{Rat(-1), 0, 0, 1}, 64);
  REQUIRE(boxes.size() == 3);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      CHECK_FALSE(boxes[i].intersects(boxes[j]));
    }
  }
}

TEST_CASE("box refinement reaches any width") {
  const QPoly p{Rat(-2), 0, 0, 1};
  for (const auto &a : AlgebraicNumber::roots_of(p)) {
    for (long k : {10L, 40L, 120L}) {
      const Rat eps(Integer(1), Integer(1) << k);
      CHECK(a.enclosure(eps).width() < eps);
    }
  }
}

TEST_CASE("arithmetic examples") {
  const auto s2 = root_near(kSqrt2Poly, 1.41421356);
  const auto i = root_near(kIPoly, 0, 1);

  const auto zero = alg_arith(s2, -s2, ArithOp::add);
  CHECK(alg_is_zero(zero));
  CHECK(zero.poly() == QPoly{Rat(0), Rat(1)});

  const auto two = alg_arith(s2, s2, ArithOp::mul);
  REQUIRE(two.is_rational());
  CHECK(two.rational_value() == Rat(2));

  const auto m1 = alg_arith(i, i, ArithOp::mul);
  REQUIRE(m1.is_rational());
  CHECK(m1.rational_value() == Rat(-1));

  CHECK(alg_is_zero(alg_arith(s2, s2, ArithOp::sub)));
  CHECK_THROWS_AS(alg_arith(s2, zero, ArithOp::div), std::domain_error);
  CHECK(alg_arith(two, s2, ArithOp::div) == s2);
}

TEST_CASE("zero test") {
  CHECK(alg_is_zero(AlgebraicNumber(0)));
  const auto c = root_near(QPoly{Rat(-2), 0, 0, 1}, 1.25992105);
  CHECK_FALSE(alg_is_zero(c));
}

TEST_CASE("realness") {
  CHECK(alg_is_real(root_near(kSqrt2Poly, 1.41421356)));
  CHECK_FALSE(alg_is_real(root_near(kIPoly, 0, 1)));
  CHECK_FALSE(alg_is_real(root_near(kOmegaPoly, -0.5, 0.8660254)));
  // Real root of a polynomial that also has a nearby complex pair.
  const QPoly close{Rat(-1), Rat(3), Rat(-3), Rat(1)};
  const QPoly tight = close * QPoly{Rat(1), 0, 1} + QPoly{Rat::parse("1/1000000")};
  for (const auto &a : AlgebraicNumber::roots_of(tight)) {
    CHECK(alg_is_real(a) == (std::abs(a.approx().imag()) < 1e-12));
  }
}

TEST_CASE("conjugate and comparison") {
  const auto i = root_near(kIPoly, 0, 1);
  CHECK(alg_conjugate(i) == -i);
  const auto s2 = root_near(kSqrt2Poly, 1.41421356);
  CHECK(alg_cmp_real(s2, AlgebraicNumber(Rat::parse("3/2"))) == std::strong_ordering::less);
  CHECK(alg_cmp_real(AlgebraicNumber(1), AlgebraicNumber(1)) == std::strong_ordering::equal);
  CHECK(alg_cmp_real(s2 * s2, AlgebraicNumber(2)) == std::strong_ordering::equal);
  CHECK_THROWS_AS(alg_cmp_real(i, s2), std::domain_error);
}

TEST_CASE("property: rational embedding agrees with Rat arithmetic") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat a = random_rat(rng);
    const Rat b = random_rat(rng);
    const AlgebraicNumber A(a), B(b);
    CHECK(alg_arith(A, B, ArithOp::add).rational_value() == a + b);
    CHECK(alg_arith(A, B, ArithOp::sub).rational_value() == a - b);
    CHECK(alg_arith(A, B, ArithOp::mul).rational_value() == a * b);
    if (!b.is_zero()) {
      CHECK(alg_arith(A, B, ArithOp::div).rational_value() == a / b);
    }
  }
}

TEST_CASE("property: a + conj(a) real, a * conj(a) real and non-negative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rat> c;
    for (int k = 0; k < 3; ++k) {
      c.emplace_back(coef(rng));
    }
    c.emplace_back(1);
    const QPoly p(c);
    if (squarefree_part(p).degree() < 1) {
      continue;
    }
    for (const auto &a : AlgebraicNumber::roots_of(p)) {
      const auto s = alg_arith(a, alg_conjugate(a), ArithOp::add);
      CHECK(alg_is_real(s));
      const auto m = alg_arith(a, alg_conjugate(a), ArithOp::mul);
      REQUIRE(alg_is_real(m));
      CHECK(alg_cmp_real(m, AlgebraicNumber(0)) != std::strong_ordering::less);
    }
  }
}

TEST_CASE("property: minpoly canonical form") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> c;
    for (int k = 0; k < 4; ++k) {
      c.emplace_back(coef(rng));
    }
    c.emplace_back(2);
    const QPoly p = QPoly(c) * QPoly(c);
    for (const auto &a : AlgebraicNumber::roots_of(p)) {
      CHECK(a.poly().lead() > Rat(0));
      CHECK(gcd(a.poly(), a.poly().derivative()).degree() == 0);
      CHECK(a.poly() == a.poly().primitive());
      if (a.is_rational()) {
        CHECK(a.box().is_point());
      }
    }
  }
}

TEST_CASE("factorization over the integers") {
  const QPoly x = QPoly::identity();
  const QPoly a = x * x - QPoly{Rat(2)};
  const QPoly b = x * x * x + x + QPoly{Rat(1)};
  const QPoly c = QPoly{Rat(-1), Rat(3)};
  const auto f = irreducible_factors(a * b * c * c);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == QPoly{Rat(-1), Rat(3)});
  CHECK(f[1] == a);
  CHECK(f[2] == b);
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime.
  CHECK(irreducible_factors(QPoly{Rat(1), 0, Rat(-10), 0, Rat(1)}).size() == 1);
  // Cyclotomic split of x^12 - 1 into six factors.
  CHECK(irreducible_factors(QPoly::monomial(Rat(1), 12) - QPoly{Rat(1)}).size() == 6);
}

TEST_CASE("property: factors multiply back") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (int trial = 0; trial < 40; ++trial) {
    QPoly p{Rat(1)};
    const int parts = 1 + trial % 3;
    for (int k = 0; k < parts; ++k) {
      std::vector<Rat> c;
      for (int i = 0; i < 1 + (trial + k) % 4; ++i) {
        c.emplace_back(coef(rng));
      }
      c.emplace_back(1 + trial % 3);
      p *= QPoly(c);
    }
    if (p.degree() < 1) {
      continue;
    }
    const auto fs = irreducible_factors(p);
    QPoly prod{Rat(1)};
    for (const auto &q : fs) {
      prod *= q;
    }
    CHECK(prod.primitive() == squarefree_part(p).primitive());
  }
}

namespace {

std::vector<AlgebraicNumber> rat_coeffs(std::initializer_list<long> cs) {
  std::vector<AlgebraicNumber> out;
  for (long c : cs) {
    out.emplace_back(c);
  }
  return out;
}

AlgebraicNumber horner(const std::vector<AlgebraicNumber> &p, const AlgebraicNumber &z) {
  AlgebraicNumber acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

int total_multiplicity(const std::vector<std::pair<AlgebraicNumber, int>> &roots) {
  int n = 0;
  for (const auto &r : roots) {
    n += r.second;
  }
  return n;
}

} // namespace

TEST_CASE("roots with multiplicity: examples") {
  const auto cube = roots_with_multiplicity(rat_coeffs({-1, 0, 0, 1}));
  REQUIRE(cube.size() == 3);
  int real_count = 0;
  for (const auto &[r, m] : cube) {
    CHECK(m == 1);
    real_count += alg_is_real(r) ? 1 : 0;
    CHECK(alg_is_zero(horner(rat_coeffs({-1, 0, 0, 1}), r)));
  }
  CHECK(real_count == 1);

  const auto dbl = roots_with_multiplicity(rat_coeffs({1, -2, 1}));
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].first == AlgebraicNumber(1));
  CHECK(dbl[0].second == 2);

  const auto s2 = roots_with_multiplicity(rat_coeffs({-2, 0, 1}));
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].first == -s2[1].first);
  CHECK_THROWS_AS(roots_with_multiplicity(rat_coeffs({0, 0})), std::domain_error);
}

TEST_CASE("roots with multiplicity: algebraic coefficients") {
  const auto s2 = root_near(kSqrt2Poly, 1.41421356);
  const auto i = root_near(kIPoly, 0, 1);
  // (z - sqrt2)^2 (z - i) (z + 1)
  std::vector<AlgebraicNumber> p{AlgebraicNumber(1)};
  auto mul_linear = [](const std::vector<AlgebraicNumber> &a, const AlgebraicNumber &r) {
    std::vector<AlgebraicNumber> out(a.size() + 1, AlgebraicNumber(0));
    for (std::size_t k = 0; k < a.size(); ++k) {
      out[k + 1] = out[k + 1] + a[k];
      out[k] = out[k] - a[k] * r;
    }
    return out;
  };
  p = mul_linear(p, s2);
  p = mul_linear(p, s2);
  p = mul_linear(p, i);
  p = mul_linear(p, AlgebraicNumber(-1));
  const auto roots = roots_with_multiplicity(p);
  CHECK(total_multiplicity(roots) == 4);
  REQUIRE(roots.size() == 3);
  for (const auto &[r, m] : roots) {
    CHECK(alg_is_zero(horner(p, r)));
    if (r == s2) {
      CHECK(m == 2);
    } else {
      CHECK(m == 1);
      CHECK((r == i || r == AlgebraicNumber(-1)));
    }
  }
}

TEST_CASE("property: roots with multiplicity sum to degree and vanish") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Rat> c;
    for (int k = 0; k < 2; ++k) {
      c.emplace_back(coef(rng));
    }
    c.emplace_back(1);
    const QPoly q(c);
    const QPoly p = q * q * QPoly{Rat(coef(rng)), Rat(1)};
    std::vector<AlgebraicNumber> pc;
    for (const auto &v : p.coeffs()) {
      pc.emplace_back(v);
    }
    const auto roots = roots_with_multiplicity(pc);
    CHECK(total_multiplicity(roots) == p.degree());
    for (const auto &[r, m] : roots) {
      CHECK(alg_is_zero(horner(pc, r)));
    }
  }
}
