#include "lojex/exponent.hpp"

#include <stdexcept>

namespace lojex {

namespace {

void consider(std::optional<DirectedValue> &best, const Rat &v, const Witness &w) {
  if (!best || v > best->value) {
    best = DirectedValue{v, w};
  }
}

Witness ratio_witness(int m, int n) {
  Witness w;
  w.kind = Witness::Kind::ratio;
  w.m = m;
  w.n = n;
  return w;
}

Witness arc_witness(const GenericArc &arc) {
  Witness w;
  w.kind = Witness::Kind::arc;
  w.arc = arc;
  return w;
}

// Common real roots contribute m/n; a real root of f missing from g is an error.
void add_ratios(const std::vector<RootBranch> &tree, std::optional<DirectedValue> &best) {
  for (const auto &b : tree) {
    if (!b.is_real || b.mult_f == 0) {
      continue;
    }
    if (b.mult_g == 0) {
      throw std::domain_error("zero set of f is not contained in that of g");
    }
    consider(best, Rat(b.mult_f, b.mult_g), ratio_witness(b.mult_f, b.mult_g));
  }
}

DirectedValue finish(std::optional<DirectedValue> best) {
  if (!best) {
    throw std::logic_error("no contribution to the exponent");
  }
  return *best;
}

int real_count(const std::vector<RootBranch> &tree) {
  int n = 0;
  for (const auto &b : tree) {
    n += b.is_real ? 1 : 0;
  }
  return n;
}

std::optional<TruncatedPuiseux> one_direction_failure(const BiPoly &f, const BiPoly &g) {
  std::optional<TruncatedPuiseux> fail;
  for (const auto &b : joint_root_tree(f, g)) {
    if (b.is_real && b.mult_f >= 1 && b.mult_g == 0) {
      fail = b.truncation;
      break;
    }
  }
  // Count test and membership mod rho+ on the roots of f alone.
  const BiPoly h = gcd(f, g);
  const auto ftree = root_tree(f);
  const bool h_vanishes = h.total_degree() > 0 && h.value_at_origin().is_zero();
  const int h_real = h_vanishes ? real_count(root_tree(h)) : 0;
  const bool by_count = real_count(ftree) <= h_real;
  bool by_membership = true;
  for (const auto &b : ftree) {
    if (b.is_real && (!h_vanishes || multiplicity(h, b) == 0)) {
      by_membership = false;
    }
  }
  if (by_count != !fail.has_value() || by_membership != !fail.has_value()) {
    throw std::logic_error("inclusion tests disagree");
  }
  return fail;
}

} // namespace

Rat ell(const BiPoly &f, const BiPoly &g, const GenericArc &arc) {
  const Rat d = ord_generic(g, arc);
  if (d.sign() <= 0) {
    throw std::domain_error("g does not vanish along the arc");
  }
  return ord_generic(f, arc) / d;
}

std::string Witness::str() const {
  const std::string dir = direction > 0 ? "y>0" : "y<0";
  if (kind == Kind::ratio) {
    return "common root multiplicity ratio " + std::to_string(m) + "/" + std::to_string(n) + " (" + dir + ")";
  }
  return "arc x = " + arc.str() + " (" + dir + ")";
}

std::optional<InclusionFailure> find_inclusion_failure(const BiPoly &f, const BiPoly &g) {
  if (!f.is_x_regular() || !g.is_x_regular()) {
    throw std::domain_error("inclusion test needs x-regular polynomials");
  }
  if (auto t = one_direction_failure(f, g)) {
    return InclusionFailure{1, *t};
  }
  if (auto t = one_direction_failure(f.bar(), g.bar())) {
    return InclusionFailure{-1, *t};
  }
  return std::nullopt;
}

bool zero_set_inclusion(const BiPoly &f, const BiPoly &g) { return !find_inclusion_failure(f, g).has_value(); }

DirectedValue L_plus_roots(const BiPoly &f, const BiPoly &g) {
  const auto tree = joint_root_tree(f, g);
  std::optional<DirectedValue> best;
  add_ratios(tree, best);
  for (const auto &b : tree) {
    if (b.mult_f == 0) {
      continue;
    }
    if (auto arc = real_approximation(b)) {
      consider(best, ell(f, g, *arc), arc_witness(*arc));
    }
  }
  return finish(best);
}

DirectedValue L_plus_pairs(const BiPoly &f, const BiPoly &g) {
  const auto tree = joint_root_tree(f, g);
  std::optional<DirectedValue> best;
  add_ratios(tree, best);
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t j = 0; j < tree.size(); ++j) {
      if (i == j) {
        continue;
      }
      const GenericArc arc = pair_approximation(tree[i].truncation, tree[j].truncation);
      if (arc.prefix.is_real()) {
        consider(best, ell(f, g, arc), arc_witness(arc));
      }
    }
  }
  return finish(best);
}

ExponentResult lojasiewicz_exponent(const BiPoly &f_in, const BiPoly &g_in, const ExponentOptions &opts) {
  if (f_in.is_zero() || g_in.is_zero()) {
    throw std::invalid_argument("polynomials must be nonzero");
  }
  if (!f_in.value_at_origin().is_zero() || !g_in.value_at_origin().is_zero()) {
    throw std::invalid_argument("polynomials must vanish at the origin");
  }
  ExponentResult r;
  r.regularization = make_regular(f_in, g_in);
  const BiPoly &f = r.regularization.transformed_f;
  const BiPoly &g = r.regularization.transformed_g;

  r.violation = find_inclusion_failure(f, g);
  if (r.violation) {
    return r;
  }
  r.defined = true;
  const DirectedValue up = L_plus_roots(f, g);
  DirectedValue down = L_plus_roots(f.bar(), g.bar());
  down.witness.direction = -1;
  r.plus = up.value;
  r.minus = down.value;
  const DirectedValue &top = up.value >= down.value ? up : down;
  r.value = top.value;
  r.witness = top.witness;

  if (opts.validate) {
    const Rat pairs = std::max(L_plus_pairs(f, g).value, L_plus_pairs(f.bar(), g.bar()).value);
    r.pair_value = pairs;
    if (pairs != r.value) {
      throw std::logic_error("pair formula gives " + pairs.str() + " but root formula gives " + r.value.str());
    }
  }
  return r;
}

} // namespace lojex
