#include "lojex/limits.hpp"

#include "lojex/exponent.hpp"

#include <algorithm>
#include <stdexcept>

namespace lojex {

namespace {

bool any_real(const BiPoly &f) {
  for (const auto &b : root_tree(f)) {
    if (b.is_real) {
      return true;
    }
  }
  return false;
}

// Lowest-order coefficient index of a univariate polynomial.
int low_order(const QPoly &p) {
  for (int k = 0; k <= p.degree(); ++k) {
    if (!p.coeff(k).is_zero()) {
      return k;
    }
  }
  return -1;
}

struct ZeroTest {
  bool zero = true;
  std::vector<LimitEvidence> evidence;
};

// Zero test on both half planes, collecting the paths that fail.
ZeroTest zero_test(const BiPoly &g, const BiPoly &f) {
  ZeroTest out;
  for (int dir : {1, -1}) {
    const BiPoly ff = dir > 0 ? f : f.bar();
    const BiPoly gg = dir > 0 ? g : g.bar();
    const std::string side = dir > 0 ? " (y>0)" : " (y<0)";
    for (const auto &b : root_tree(ff)) {
      if (b.is_real) {
        out.zero = false;
        out.evidence.push_back({"near the real zero curve x = " + b.truncation.str() + " + ..." + side,
                                std::nullopt, "f vanishes on a curve where g does not"});
        continue;
      }
      const GenericArc arc = *real_approximation(b);
      const Rat og = ord_generic(gg, arc);
      const Rat of = ord_generic(ff, arc);
      if (og <= of) {
        out.zero = false;
        const std::string path = "x = " + arc.str() + side;
        // conjugate branches share their real approximation
        const bool seen = std::any_of(out.evidence.begin(), out.evidence.end(),
                                      [&](const LimitEvidence &e) { return e.path == path; });
        if (!seen) {
          out.evidence.push_back({path, std::nullopt, og < of ? "ratio unbounded" : "ratio tends to a nonzero value"});
        }
      }
    }
  }
  return out;
}

} // namespace

bool has_isolated_real_zero(const BiPoly &f) {
  if (!f.value_at_origin().is_zero()) {
    return true;
  }
  return !any_real(f) && !any_real(f.bar());
}

bool limit_is_zero(const BiPoly &g, const BiPoly &f) {
  if (gcd(g, f).total_degree() > 0) {
    throw std::invalid_argument("g and f share a factor; divide it out first");
  }
  if (!f.value_at_origin().is_zero()) {
    return g.value_at_origin().is_zero();
  }
  return zero_test(g, f).zero;
}

Shortcut exponent_shortcut(const BiPoly &g, const BiPoly &f) {
  if (f.is_zero() || g.is_zero() || !f.value_at_origin().is_zero() || !g.value_at_origin().is_zero()) {
    return Shortcut::inconclusive;
  }
  const ExponentResult r = lojasiewicz_exponent(f, g);
  if (!r.defined || r.value == Rat(1)) {
    return Shortcut::inconclusive;
  }
  return r.value < Rat(1) ? Shortcut::limit_zero : Shortcut::no_limit;
}

LimitVerdict limit(const BiPoly &g_in, const BiPoly &f_in) {
  if (f_in.is_zero()) {
    throw std::invalid_argument("denominator is the zero polynomial");
  }
  LimitVerdict v;
  if (g_in.is_zero()) {
    v.kind = LimitVerdict::Kind::exists_equal;
    v.evidence.push_back({"everywhere", Rat(0), "numerator is zero"});
    return v;
  }
  const BiPoly d = gcd(g_in, f_in);
  BiPoly g = exact_div(g_in, d);
  BiPoly f = exact_div(f_in, d);
  if (!f.value_at_origin().is_zero()) {
    v.kind = LimitVerdict::Kind::exists_equal;
    v.value = g.value_at_origin() / f.value_at_origin();
    v.evidence.push_back({"origin", v.value, "denominator nonzero at the origin after cancelling"});
    return v;
  }
  const RegularizationReport reg = make_regular(f, g);
  f = reg.transformed_f;
  g = reg.transformed_g;
  const std::string ray =
      reg.shear_c == 0 ? "ray y = 0" : "ray y = 0 after the shear y -> y + " + std::to_string(reg.shear_c) + "*x";

  const QPoly a = g.on_x_axis();
  const QPoly b = f.on_x_axis();
  const int ob = low_order(b);
  const int oa = low_order(a);
  Rat L(0);
  if (oa >= 0 && oa < ob) {
    v.kind = LimitVerdict::Kind::does_not_exist;
    v.evidence.push_back({ray, std::nullopt, "ratio unbounded"});
    return v;
  }
  if (oa == ob) {
    L = a.coeff(oa) / b.coeff(ob);
  }
  v.evidence.push_back({ray, L, "limit along the ray"});

  BiPoly rest = g - BiPoly(L) * f;
  if (rest.is_zero()) {
    v.kind = LimitVerdict::Kind::exists_equal;
    v.value = L;
    return v;
  }
  const BiPoly d2 = gcd(rest, f);
  rest = exact_div(rest, d2);
  const BiPoly f2 = exact_div(f, d2);
  if (!f2.value_at_origin().is_zero()) {
    v.kind = LimitVerdict::Kind::exists_equal;
    v.value = L + rest.value_at_origin() / f2.value_at_origin();
    return v;
  }
  const ZeroTest z = zero_test(rest, f2);
  v.evidence.insert(v.evidence.end(), z.evidence.begin(), z.evidence.end());
  v.kind = z.zero ? LimitVerdict::Kind::exists_equal : LimitVerdict::Kind::does_not_exist;
  v.value = z.zero ? L : Rat(0);
  return v;
}

} // namespace lojex
