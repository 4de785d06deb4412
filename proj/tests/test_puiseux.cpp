#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "lojex/parser.hpp"
#include "lojex/puiseux.hpp"

#include <random>

using namespace lojex;

namespace {

BiPoly P(const char *s) { return parse_poly(s); }
TruncatedPuiseux A(const char *s) { return TruncatedPuiseux::rational(parse_arc(s)); }

std::vector<NewtonDot> dots(std::initializer_list<std::pair<int, Rat>> l) {
  std::vector<NewtonDot> out;
  for (const auto &[i, q] : l) {
    out.push_back({i, q});
  }
  return out;
}

std::vector<Rat> compact_slopes(const NewtonPolygon &p) {
  std::vector<Rat> out;
  for (const auto &e : p.edges) {
    if (!e.infinite) {
      out.push_back(e.slope);
    }
  }
  return out;
}

AlgebraicNumber omega() {
  for (const auto &r : AlgebraicNumber::roots_of(QPoly{1, 1, 1})) {
    if (r.approx().imag() > 0) {
      return r;
    }
  }
  throw std::logic_error("no omega");
}

AlgebraicNumber I() {
  for (const auto &r : AlgebraicNumber::roots_of(QPoly{1, 0, 1})) {
    if (r.approx().imag() > 0) {
      return r;
    }
  }
  throw std::logic_error("no i");
}

int total_mult(const std::vector<RootBranch> &bs) {
  int s = 0;
  for (const auto &b : bs) {
    s += b.mult_f;
  }
  return s;
}

bool has_conjugate(const RootBranch &b, const std::vector<RootBranch> &all) {
  for (const auto &o : all) {
    if (o.contact_order != b.contact_order || o.mult_f != b.mult_f ||
        o.truncation.terms().size() != b.truncation.terms().size()) {
      continue;
    }
    bool same = true;
    for (std::size_t k = 0; k < o.truncation.terms().size() && same; ++k) {
      same = o.truncation.terms()[k].exponent == b.truncation.terms()[k].exponent &&
             o.truncation.terms()[k].coeff == b.truncation.terms()[k].coeff.conjugate();
    }
    if (same) {
      return true;
    }
  }
  return false;
}

} // namespace

TEST_CASE("series basics") {
  const auto s = A("y^(5/3) - 2*y^2 + (1/2)*y^(7/2)");
  CHECK(s.terms().size() == 3);
  CHECK(s.ramification() == 6);
  CHECK(s.str() == "y^(5/3) - 2*y^2 + (1/2)*y^(7/2)");
  CHECK(s.below(Rat(2)).terms().size() == 1);
  CHECK(s.up_to(Rat(2)).terms().size() == 2);
  CHECK(A("y + y - 2*y").empty());
  CHECK(ord_difference(A("y^2"), A("y^2 + y^3")) == Rat(3));
  CHECK_THROWS_AS((void)ord_difference(A("y^2"), A("y^2")), std::domain_error);
}

TEST_CASE("newton_polygon examples") {
  const auto p = newton_polygon(P("x^3 - y^5 + y^6"), A("y^(5/3)"));
  CHECK(p.dots == dots({{0, Rat(6)}, {1, Rat(10, 3)}, {2, Rat(5, 3)}, {3, Rat(0)}}));
  CHECK(compact_slopes(p) == std::vector<Rat>{Rat(8, 3), Rat(5, 3)});
  CHECK_FALSE(p.arc_is_root);

  const auto q = newton_polygon(P("x^3 - y^5 + y^6"), TruncatedPuiseux());
  REQUIRE(q.edges.size() == 1);
  CHECK(q.edges[0].slope == Rat(5, 3));
  CHECK(q.edges[0].left == NewtonDot{0, Rat(5)});
  CHECK(q.edges[0].right == NewtonDot{3, Rat(0)});
  REQUIRE(q.edges[0].assoc.size() == 4);
  CHECK(q.edges[0].assoc[0] == AlgebraicNumber(-1));
  CHECK(q.edges[0].assoc[1].is_zero());
  CHECK(q.edges[0].assoc[2].is_zero());
  CHECK(q.edges[0].assoc[3] == AlgebraicNumber(1));

  const auto r = newton_polygon(P("x^2 - y^3"), A("y^(3/2)"));
  CHECK(r.dots == dots({{1, Rat(3, 2)}, {2, Rat(0)}}));
  CHECK(r.arc_is_root);
  REQUIRE(!r.edges.empty());
  CHECK(r.edges[0].infinite);
}

TEST_CASE("ord_along examples") {
  CHECK(ord_along(P("x^3 - y^5 + y^6"), A("y^(5/3)")) == Rat(6));
  CHECK(ord_along(P("x"), A("y^2")) == Rat(2));
  CHECK_FALSE(ord_along(P("x^2 - y^3"), A("y^(3/2)")).has_value());
}

TEST_CASE("ord_generic examples") {
  CHECK(ord_generic(P("x^3 - y^5 + y^6"), GenericArc{A("y^(5/3)"), Rat(2)}) == Rat(16, 3));
  CHECK(ord_generic(P("x"), GenericArc{TruncatedPuiseux(), Rat(1)}) == Rat(1));
  CHECK(ord_generic(P("x^2 + y^2"), GenericArc{TruncatedPuiseux(), Rat(1)}) == Rat(2));
}

TEST_CASE("sliding_step examples") {
  const auto a = sliding_step(P("x^3 - y^5 + y^6"), TruncatedPuiseux());
  REQUIRE(a.size() == 3);
  const AlgebraicNumber w = omega();
  int found = 0;
  for (const auto &[s, mult] : a) {
    CHECK(mult == 1);
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].exponent == Rat(5, 3));
    const auto &c = s.terms()[0].coeff;
    found += (c == AlgebraicNumber(1)) + (c == w) + (c == w.conjugate());
  }
  CHECK(found == 3);

  const auto b = sliding_step(P("x^2 - y^3"), TruncatedPuiseux());
  REQUIRE(b.size() == 2);
  CHECK((b[0].first == A("-y^(3/2)") || b[0].first == A("y^(3/2)")));
  CHECK_FALSE(b[0].first == b[1].first);

  const auto c = sliding_step(P("(x - y)^2"), TruncatedPuiseux());
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == A("y"));
  CHECK(c[0].second == 2);

  CHECK_THROWS_AS((void)sliding_step(P("x^2 - y^3"), A("y^(3/2)")), std::domain_error);
}

TEST_CASE("sliding onto an existing exponent") {
  // x - y - 2y^2 relative to y: slide adds 2y^2.
  const auto s = sliding_step(P("x - y - 2*y^2"), A("y"));
  REQUIRE(s.size() == 1);
  CHECK(s[0].first == A("y + 2*y^2"));
  // and one that lands on an exponent already present
  const auto t = sliding_step(P("x - y^2"), A("y + 3*y^2"));
  REQUIRE(t.size() == 1);
  CHECK(t[0].first == A("y + 3*y^2 - y"));
}

TEST_CASE("root_tree examples") {
  const auto a = root_tree(P("x^3 - y^5 + y^6"));
  REQUIRE(a.size() == 3);
  int real = 0;
  for (const auto &b : a) {
    CHECK(b.contact_order == Rat(5, 3));
    CHECK(b.mult_f == 1);
    REQUIRE(b.truncation.terms().size() == 1);
    CHECK(b.truncation.terms()[0].exponent == Rat(5, 3));
    real += b.is_real ? 1 : 0;
  }
  CHECK(real == 1);

  const auto b = root_tree(P("(x - y^2)*(x - y^2 - y^3)"));
  REQUIRE(b.size() == 2);
  CHECK(b[0].is_real);
  CHECK(b[1].is_real);
  CHECK(b[0].contact_order == Rat(3));
  CHECK(b[0].truncation == A("y^2"));
  CHECK(b[1].truncation == A("y^2 + y^3"));

  const auto c = root_tree(P("x^2 + y^2"));
  REQUIRE(c.size() == 2);
  for (const auto &br : c) {
    CHECK_FALSE(br.is_real);
    CHECK(br.contact_order == Rat(1));
  }
  CHECK(c[0].truncation.terms()[0].coeff == -I());
  CHECK(c[1].truncation.terms()[0].coeff == I());

  CHECK_THROWS_AS((void)root_tree(P("y^2 + x*y")), std::domain_error);
}

TEST_CASE("root_tree lone root") {
  const auto a = root_tree(P("x^2"));
  REQUIRE(a.size() == 1);
  CHECK_FALSE(a[0].contact_order.has_value());
  CHECK(a[0].mult_f == 2);
  CHECK(a[0].is_real);
  const auto b = root_tree(P("(x - y^2 - y^3)^3"));
  REQUIRE(b.size() == 1);
  CHECK(b[0].mult_f == 3);
}

TEST_CASE("multiplicity examples") {
  const auto t = root_tree(P("(x - y^2)^3*(x + y)"));
  REQUIRE(t.size() == 2);
  // truncated at contact order 1: the y^2 branch shows an empty truncation
  CHECK(t[0].truncation.empty());
  CHECK(t[0].mult_f == 3);
  CHECK(t[1].truncation == A("-y"));
  CHECK(t[1].mult_f == 1);

  const auto u = root_tree(P("x^2 - y^3"));
  REQUIRE(u.size() == 2);
  CHECK(multiplicity(P("x^2 - y^3"), u[0]) == 1);
  CHECK(multiplicity(P("x^2 - y^3"), u[1]) == 1);

  const auto v = root_tree(P("x^2"));
  CHECK(multiplicity(P("x^2"), v[0]) == 2);
}

TEST_CASE("joint tree multiplicities") {
  const auto t = joint_root_tree(P("x^2"), P("x*(x^2 + y^2)"));
  REQUIRE(t.size() == 3);
  int real = 0;
  for (const auto &b : t) {
    if (b.is_real) {
      ++real;
      CHECK(b.truncation.empty());
      CHECK(b.mult_f == 2);
      CHECK(b.mult_g == 1);
    } else {
      CHECK(b.mult_f == 0);
      CHECK(b.mult_g == 1);
    }
  }
  CHECK(real == 1);
}

TEST_CASE("real_approximation examples") {
  const auto c = root_tree(P("x^2 + y^2"));
  const auto ra = real_approximation(c[1]);
  REQUIRE(ra.has_value());
  CHECK(ra->prefix.empty());
  CHECK(ra->tail_exponent == Rat(1));

  for (const auto &b : root_tree(P("x^3 - y^5 + y^6"))) {
    const auto r = real_approximation(b);
    if (b.is_real) {
      CHECK_FALSE(r.has_value());
    } else {
      REQUIRE(r.has_value());
      CHECK(r->prefix.empty());
      CHECK(r->tail_exponent == Rat(5, 3));
    }
  }

  const auto d = root_tree(P("(x - y^2)^2 + y^6"));
  REQUIRE(d.size() == 2);
  for (const auto &b : d) {
    CHECK(b.contact_order == Rat(3));
    const auto r = real_approximation(b);
    REQUIRE(r.has_value());
    CHECK(r->prefix == A("y^2"));
    CHECK(r->tail_exponent == Rat(3));
  }
}

TEST_CASE("pair_approximation examples") {
  const auto a = pair_approximation(A("y^2"), A("y^2 + y^3"));
  CHECK(a.prefix == A("y^2"));
  CHECK(a.tail_exponent == Rat(3));
  const auto b = pair_approximation(A("y"), A("-y"));
  CHECK(b.prefix.empty());
  CHECK(b.tail_exponent == Rat(1));
  const auto c = pair_approximation(A("y^(3/2)"), A("y^2"));
  CHECK(c.prefix.empty());
  CHECK(c.tail_exponent == Rat(3, 2));
  CHECK_THROWS_AS((void)pair_approximation(A("y"), A("y")), std::domain_error);
}

TEST_CASE("property: root tree invariants") {
  std::mt19937 rng(20261018);
  for (int n = 0; n < 40; ++n) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const BiPoly F = gen::clustered_regular(rng, m);
    REQUIRE(F.is_x_regular());
    CAPTURE(F.str());
    TreeTrace trace;
    const auto tree = root_tree(F, &trace);
    CHECK(total_mult(tree) == F.order());
    for (const auto &[before, after] : trace.slides) {
      CHECK((!after || *after > before));
    }
    for (const auto &b : tree) {
      CHECK(b.mult_f >= 1);
      if (!b.is_real) {
        CHECK(has_conjugate(b, tree));
      }
    }
  }
}

TEST_CASE("property: sliding raises the order") {
  std::mt19937 rng(77);
  for (int n = 0; n < 30; ++n) {
    const BiPoly F = gen::clustered_regular(rng, 1 + static_cast<int>(rng() % 4));
    CAPTURE(F.str());
    TruncatedPuiseux phi;
    // follow the first child a few levels
    for (int depth = 0; depth < 3; ++depth) {
      const auto before = ord_along(F, phi);
      if (!before) {
        break;
      }
      const auto kids = sliding_step(F, phi);
      REQUIRE(!kids.empty());
      for (const auto &[k, mult] : kids) {
        const auto after = ord_along(F, k);
        CHECK((!after || *after > *before));
      }
      phi = kids.front().first;
    }
  }
}

TEST_CASE("property: generic order bounds and instantiation") {
  std::mt19937 rng(4242);
  // large height keeps clear of the finitely many special coefficients
  std::uniform_int_distribution<int> num(-1000000, 1000000);
  std::uniform_int_distribution<int> den(1, 1000000);
  for (int n = 0; n < 25; ++n) {
    const BiPoly f = gen::clustered_regular(rng, 1 + static_cast<int>(rng() % 4));
    std::vector<std::pair<Rat, Rat>> pre;
    Rat e(0);
    const int len = static_cast<int>(rng() % 3);
    for (int k = 0; k < len; ++k) {
      e += Rat(1 + static_cast<long>(rng() % 4), 2);
      pre.emplace_back(e, Rat(num(rng) == 0 ? 1 : num(rng) % 4 + 5));
    }
    const Rat tail = e + Rat(1 + static_cast<long>(rng() % 3), 3);
    const GenericArc arc{TruncatedPuiseux::rational(pre), tail};
    const Rat g = ord_generic(f, arc);
    if (const auto along = ord_along(f, arc.prefix)) {
      CHECK(g <= *along);
    }
    std::optional<Rat> best;
    bool infinite = false;
    for (int k = 0; k < 50; ++k) {
      Rat c(num(rng), den(rng));
      if (c.is_zero()) {
        c = Rat(1, 3);
      }
      auto terms = pre;
      terms.emplace_back(tail, c);
      const auto o = ord_along(f, TruncatedPuiseux::rational(terms));
      if (!o) {
        infinite = true;
        continue;
      }
      best = best ? std::max(*best, *o) : *o;
    }
    CAPTURE(f.str());
    CHECK_FALSE(infinite);
    REQUIRE(best.has_value());
    CHECK(*best == g);
  }
}
