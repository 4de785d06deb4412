#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "lojex/exponent.hpp"
#include "lojex/parser.hpp"

using namespace lojex;

namespace {

BiPoly P(const char *s) { return parse_poly(s); }
TruncatedPuiseux A(const char *s) { return TruncatedPuiseux::rational(parse_arc(s)); }
GenericArc tail(const Rat &rho) { return GenericArc{TruncatedPuiseux(), rho}; }

} // namespace

TEST_CASE("ell examples") {
  const BiPoly f = P("x^2");
  const BiPoly g = P("x*(x^2 + y^2)");
  for (long k = 1; k <= 8; ++k) {
    CHECK(ell(f, g, tail(Rat(k))) == Rat(2 * k, k + 2));
  }
  CHECK(ell(P("x^3 - y^5"), P("x^3 - y^5"), GenericArc{A("y^(5/3)"), Rat(3)}) == Rat(1));
  CHECK(ell(P("x^2 + y^4"), P("x"), tail(Rat(2))) == Rat(2));
  CHECK_THROWS_AS((void)ell(P("x"), P("1 + x"), tail(Rat(1))), std::domain_error);
}

TEST_CASE("zero_set_inclusion examples") {
  CHECK(zero_set_inclusion(P("x^2 + y^2"), P("x + y")));
  CHECK(zero_set_inclusion(P("x^2 + y^2"), P("x*y^3 - x^2")));
  CHECK(zero_set_inclusion(P("x"), P("x^2")));
  CHECK_FALSE(zero_set_inclusion(P("x"), P("x + y^2 + y")));
  // real only for y < 0
  const auto fail = find_inclusion_failure(P("x^2 + y^3"), P("x^2 + y^4"));
  REQUIRE(fail.has_value());
  CHECK(fail->direction == -1);
}

TEST_CASE("L_plus_roots examples") {
  const auto a = L_plus_roots(P("x^2"), P("x*(x^2 + y^2)"));
  CHECK(a.value == Rat(2));
  CHECK(a.witness.kind == Witness::Kind::ratio);
  CHECK(a.witness.m == 2);
  CHECK(a.witness.n == 1);
  CHECK(L_plus_roots(P("x^2 + y^2"), P("x")).value == Rat(2));
  CHECK(L_plus_roots(P("x"), P("x^2")).value == Rat(1, 2));
  CHECK_THROWS_AS((void)L_plus_roots(P("x - y"), P("x + y")), std::domain_error);
}

TEST_CASE("L_plus_pairs examples") {
  CHECK(L_plus_pairs(P("x^2"), P("x*(x^2 + y^2)")).value == Rat(2));
  CHECK(L_plus_pairs(P("x^2 - y^3"), P("x^2 - y^3")).value == Rat(1));
  const BiPoly f = P("x^3 - y^5 + y^6");
  CHECK(L_plus_pairs(f, P("x") * f).value == Rat(1));
  CHECK(L_plus_roots(f, P("x") * f).value == Rat(1));
}

TEST_CASE("lojasiewicz_exponent examples") {
  const auto r = lojasiewicz_exponent(P("x^2"), P("x*(x^2 + y^2)"));
  REQUIRE(r.defined);
  CHECK(r.value == Rat(2));
  CHECK(r.witness.kind == Witness::Kind::ratio);
  CHECK(r.witness.m == 2);
  CHECK(r.witness.n == 1);
  CHECK(r.pair_value == Rat(2));

  const auto u = lojasiewicz_exponent(P("x"), P("y"));
  CHECK_FALSE(u.defined);
  REQUIRE(u.violation.has_value());

  const auto v = lojasiewicz_exponent(P("x^2 + y^2"), P("x*y"));
  REQUIRE(v.defined);
  CHECK(v.value == Rat(1));

  // shear needed: y^2 is not x-regular
  const auto w = lojasiewicz_exponent(P("y^2"), P("y"));
  REQUIRE(w.defined);
  CHECK(w.regularization.shear_c != 0);
  CHECK(w.value == Rat(2));

  CHECK_THROWS_AS((void)lojasiewicz_exponent(P("0"), P("x")), std::invalid_argument);
  CHECK_THROWS_AS((void)lojasiewicz_exponent(P("1 + x"), P("x")), std::invalid_argument);
}

TEST_CASE("witness re-evaluates to the value") {
  const BiPoly f = P("x^2 + y^4");
  const BiPoly g = P("x*y");
  const auto r = lojasiewicz_exponent(f, g);
  REQUIRE(r.defined);
  REQUIRE(r.witness.kind == Witness::Kind::arc);
  const BiPoly &ff = r.regularization.transformed_f;
  const BiPoly &gg = r.regularization.transformed_g;
  const Rat v = r.witness.direction > 0 ? ell(ff, gg, r.witness.arc) : ell(ff.bar(), gg.bar(), r.witness.arc);
  CHECK(v == r.value);
}

TEST_CASE("property: exact laws on random pairs") {
  std::mt19937 rng(31337);
  int defined = 0;
  for (int n = 0; n < 60 && defined < 15; ++n) {
    const auto pr = gen::random_pair(rng);
    CAPTURE(pr.f.str());
    CAPTURE(pr.g.str());
    const auto r = lojasiewicz_exponent(pr.f, pr.g);
    if (!r.defined) {
      continue;
    }
    ++defined;
    CHECK(r.value.sign() > 0);
    CHECK(lojasiewicz_exponent(pr.f, pr.f).value == Rat(1));
    CHECK(lojasiewicz_exponent(pr.f.pow(2), pr.g).value == Rat(2) * r.value);
    CHECK(lojasiewicz_exponent(pr.f, pr.g.pow(2)).value == r.value / Rat(2));
    CHECK(lojasiewicz_exponent(pr.f.shear(Rat(1)), pr.g.shear(Rat(1))).value == r.value);
    CHECK(lojasiewicz_exponent(pr.f.bar(), pr.g.bar()).value == r.value);
  }
  CHECK(defined >= 10);
}
