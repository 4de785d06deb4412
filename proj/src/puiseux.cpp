#include "lojex/puiseux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace lojex {

namespace {

using Row = std::map<Rat, QPoly>;
using Rows = std::vector<Row>;

void add_into(Row &row, const Rat &q, const QPoly &v) {
  if (v.is_zero()) {
    return;
  }
  auto [it, fresh] = row.try_emplace(q, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) {
      row.erase(it);
    }
  }
}

void trim_rows(Rows &rows) {
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
  }
}

Rat exponent_gcd_den(const Rat &acc, const Rat &e) { return Rat(lcm(acc.num(), e.den())); }

std::string exponent_str(const Rat &e) {
  if (e == Rat(1)) {
    return "y";
  }
  if (e.is_integer()) {
    return "y^" + e.str();
  }
  return "y^(" + e.str() + ")";
}

// Coefficient rendering for c*y^e; returns the sign separately.
std::pair<bool, std::string> coeff_str(const AlgebraicNumber &c) {
  if (c.is_rational()) {
    const Rat v = c.rational_value();
    const bool neg = v.sign() < 0;
    const Rat a = v.abs();
    if (a == Rat(1)) {
      return {neg, ""};
    }
    if (a.is_integer()) {
      return {neg, a.str() + "*"};
    }
    return {neg, "(" + a.str() + ")*"};
  }
  return {false, "(" + c.decimal() + ")*"};
}

std::string series_str(const std::vector<PuiseuxTerm> &terms) {
  if (terms.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto &t : terms) {
    const auto [neg, c] = coeff_str(t.coeff);
    if (first) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += c + exponent_str(t.exponent);
    first = false;
  }
  return out;
}

// Exact series data built by adjoining coefficients one at a time.
std::shared_ptr<const SeriesField> build_exact(const std::vector<PuiseuxTerm> &terms) {
  FieldPtr K = NumberField::rationals();
  std::vector<QPoly> coeffs;
  for (const auto &t : terms) {
    if (t.coeff.is_rational()) {
      coeffs.push_back(QPoly::constant(t.coeff.rational_value()));
      continue;
    }
    const Extension ext = adjoin(K, t.coeff);
    if (ext.field != K) {
      for (auto &c : coeffs) {
        c = ext.map(c);
      }
      K = ext.field;
    }
    coeffs.push_back(ext.root);
  }
  return std::make_shared<const SeriesField>(SeriesField{K, std::move(coeffs)});
}

Rows map_rows(const Extension &ext, const FieldPtr &K, const Rows &rows) {
  if (ext.field == K) {
    return rows;
  }
  Rows out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto &[q, a] : rows[i]) {
      out[i].emplace(q, ext.map(a));
    }
  }
  return out;
}

// F(X + c Y^s, Y).
Rows shift_rows(const NumberField &K, const Rows &F, const QPoly &c, const Rat &s) {
  Rows out(F.size());
  std::vector<QPoly> cpow{QPoly::constant(Rat(1))};
  for (std::size_t k = 1; k < F.size(); ++k) {
    cpow.push_back(K.mul(cpow.back(), c));
  }
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (const auto &[q, a] : F[i]) {
      for (std::size_t k = 0; k <= i; ++k) {
        Integer b;
        mpz_bin_uiui(b.get_mpz_t(), i, k);
        const auto d = static_cast<long>(i - k);
        add_into(out[k], q + Rat(d) * s, K.mul(a, cpow[i - k]) * Rat(b));
      }
    }
  }
  trim_rows(out);
  return out;
}

Rows rows_of(const BiPoly &f) {
  Rows rows(static_cast<std::size_t>(std::max(f.x_degree() + 1, 0)));
  for (const auto &[k, c] : f.terms()) {
    rows[static_cast<std::size_t>(k.first)].emplace(Rat(k.second), QPoly::constant(c));
  }
  return rows;
}

Rows substitute_rows(const BiPoly &f, const SeriesField &sf, const std::vector<Rat> &exps) {
  const NumberField &K = *sf.field;
  const Rows a = rows_of(f);
  Rows acc;
  for (std::size_t idx = a.size(); idx-- > 0;) {
    // acc = acc * (X + phi) + a_idx
    Rows next(acc.size() + 1);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      for (const auto &[q, v] : acc[k]) {
        add_into(next[k + 1], q, v);
        for (std::size_t t = 0; t < exps.size(); ++t) {
          add_into(next[k], q + exps[t], K.mul(v, sf.coeffs[t]));
        }
      }
    }
    for (const auto &[q, v] : a[idx]) {
      add_into(next[0], q, v);
    }
    trim_rows(next);
    acc = std::move(next);
  }
  return acc;
}

std::vector<Rat> exponents_of(const TruncatedPuiseux &phi) {
  std::vector<Rat> out;
  for (const auto &t : phi.terms()) {
    out.push_back(t.exponent);
  }
  return out;
}

struct HullEdge {
  int left;
  int right;
  Rat slope;
};

std::optional<Rat> row_min(const Rows &F, std::size_t i) {
  if (i >= F.size() || F[i].empty()) {
    return std::nullopt;
  }
  return F[i].begin()->first;
}

int lowest_row(const Rows &F) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (!F[i].empty()) {
      return static_cast<int>(i);
    }
  }
  throw std::domain_error("zero polynomial has no Newton polygon");
}

// Compact lower edges from the leftmost vertex down to the lowest dot.
std::vector<HullEdge> hull(const Rows &F) {
  std::vector<HullEdge> edges;
  int cur = lowest_row(F);
  Rat low = *row_min(F, static_cast<std::size_t>(cur));
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (auto m = row_min(F, i)) {
      low = std::min(low, *m);
    }
  }
  while (*row_min(F, static_cast<std::size_t>(cur)) > low) {
    const Rat qc = *row_min(F, static_cast<std::size_t>(cur));
    std::optional<Rat> best;
    int at = -1;
    for (std::size_t j = static_cast<std::size_t>(cur) + 1; j < F.size(); ++j) {
      if (auto m = row_min(F, j)) {
        const Rat s = (qc - *m) / Rat(static_cast<long>(j) - cur);
        if (!best || s >= *best) {
          best = s;
          at = static_cast<int>(j);
        }
      }
    }
    edges.push_back({cur, at, *best});
    cur = at;
  }
  return edges;
}

// Associated polynomial of an edge divided by z^left.
KPoly edge_poly(const Rows &F, const HullEdge &e) {
  const Rat level = *row_min(F, static_cast<std::size_t>(e.left)) + e.slope * Rat(e.left);
  KPoly out;
  for (int k = e.left; k <= e.right; ++k) {
    const auto &row = F[static_cast<std::size_t>(k)];
    auto it = row.find(level - e.slope * Rat(k));
    out.push_back(it == row.end() ? QPoly() : it->second);
  }
  return out;
}

struct EdgeRoot {
  Rat slope;
  Extension ext;
  int mult;
  bool highest;
};

std::vector<EdgeRoot> edge_roots(const FieldPtr &K, const Rows &F, const HullEdge &e, bool highest) {
  std::vector<EdgeRoot> out;
  const auto parts = kp_squarefree_decomposition(*K, edge_poly(F, e));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (kp_degree(parts[k]) < 1) {
      continue;
    }
    for (auto &ext : roots_in_extensions(K, parts[k])) {
      out.push_back({e.slope, std::move(ext), static_cast<int>(k + 1), highest});
    }
  }
  return out;
}

struct Prefix {
  FieldPtr field;
  std::vector<Rat> exps;
  std::vector<QPoly> coeffs;

  [[nodiscard]] Prefix extended(const Extension &ext, const Rat &s) const {
    Prefix p{ext.field, exps, {}};
    for (const auto &c : coeffs) {
      p.coeffs.push_back(ext.field == field ? c : ext.map(c));
    }
    p.exps.push_back(s);
    p.coeffs.push_back(ext.root);
    return p;
  }
};

struct Leaf {
  Prefix series;
  std::optional<Rat> rho;
};

void expand(const Prefix &node, const Rows &F, const Rat &e, std::vector<Leaf> &leaves, TreeTrace *trace) {
  const int i0 = lowest_row(F);
  if (i0 > 1) {
    throw std::logic_error("root tree needs a squarefree polynomial");
  }
  const bool exact = i0 == 1;
  const auto edges = hull(F);
  std::vector<EdgeRoot> kids;
  for (std::size_t k = 0; k < edges.size() && edges[k].slope > e; ++k) {
    auto r = edge_roots(node.field, F, edges[k], k == 0 && !exact);
    kids.insert(kids.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  for (std::size_t j = 0; j < kids.size(); ++j) {
    const EdgeRoot &kid = kids[j];
    std::optional<Rat> other_max;
    bool close = exact;
    for (std::size_t o = 0; o < kids.size(); ++o) {
      if (o == j) {
        continue;
      }
      close = close || kids[o].slope >= kid.slope;
      other_max = other_max ? std::max(*other_max, kids[o].slope) : kids[o].slope;
    }
    Prefix child = node.extended(kid.ext, kid.slope);
    const bool need_rows = kid.mult > 1 || (trace != nullptr && kid.highest);
    Rows G;
    if (need_rows) {
      G = shift_rows(*kid.ext.field, map_rows(kid.ext, node.field, F), kid.ext.root, kid.slope);
      if (trace != nullptr && kid.highest) {
        trace->slides.emplace_back(*row_min(F, 0), row_min(G, 0));
      }
    }
    if (kid.mult == 1) {
      leaves.push_back({std::move(child), close ? std::optional<Rat>(kid.slope) : other_max});
    } else {
      expand(child, G, kid.slope, leaves, trace);
    }
  }
  if (exact) {
    std::optional<Rat> rho;
    for (const auto &k : kids) {
      rho = rho ? std::max(*rho, k.slope) : k.slope;
    }
    leaves.push_back({node, rho});
  }
}

RootBranch branch_of(const Leaf &leaf) {
  RootBranch b;
  b.contact_order = leaf.rho;
  std::vector<Rat> exps;
  std::vector<QPoly> coeffs;
  if (leaf.rho) {
    for (std::size_t t = 0; t < leaf.series.exps.size(); ++t) {
      if (leaf.series.exps[t] <= *leaf.rho) {
        exps.push_back(leaf.series.exps[t]);
        coeffs.push_back(leaf.series.coeffs[t]);
      }
    }
  }
  b.truncation = TruncatedPuiseux::from_field(leaf.series.field, exps, coeffs);
  b.is_real = b.truncation.is_real();
  return b;
}

bool canonical_less(const RootBranch &a, const RootBranch &b) {
  const auto &ta = a.truncation.terms();
  const auto &tb = b.truncation.terms();
  const auto ea = exponents_of(a.truncation);
  const auto eb = exponents_of(b.truncation);
  if (ea != eb) {
    return ea < eb;
  }
  for (std::size_t k = 0; k < ta.size(); ++k) {
    const auto ca = ta[k].coeff.approx();
    const auto cb = tb[k].coeff.approx();
    if (ca.real() != cb.real()) {
      return ca.real() < cb.real();
    }
    if (ca.imag() != cb.imag()) {
      return ca.imag() < cb.imag();
    }
  }
  return false;
}

std::vector<Leaf> tree_leaves(const BiPoly &F, TreeTrace *trace) {
  if (F.is_zero() || !F.value_at_origin().is_zero()) {
    return {};
  }
  if (!F.is_x_regular()) {
    throw std::domain_error("root tree needs an x-regular polynomial");
  }
  const BiPoly S = squarefree_part(F);
  std::vector<Leaf> leaves;
  expand(Prefix{NumberField::rationals(), {}, {}}, rows_of(S), Rat(0), leaves, trace);
  return leaves;
}

} // namespace

// ---- TruncatedPuiseux ----

TruncatedPuiseux::TruncatedPuiseux(std::vector<PuiseuxTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PuiseuxTerm &a, const PuiseuxTerm &b) { return a.exponent < b.exponent; });
  for (auto &t : terms) {
    if (t.exponent.sign() <= 0) {
      throw std::invalid_argument("Puiseux exponents must be positive");
    }
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff = terms_.back().coeff + t.coeff;
      if (terms_.back().coeff.is_zero()) {
        terms_.pop_back();
      }
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

TruncatedPuiseux TruncatedPuiseux::rational(const std::vector<std::pair<Rat, Rat>> &terms) {
  std::vector<PuiseuxTerm> t;
  for (const auto &[e, c] : terms) {
    t.push_back({e, AlgebraicNumber(c)});
  }
  return TruncatedPuiseux(std::move(t));
}

TruncatedPuiseux TruncatedPuiseux::from_field(const FieldPtr &field, const std::vector<Rat> &exponents,
                                              const std::vector<QPoly> &coeffs) {
  TruncatedPuiseux out;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k].sign() <= 0 || (k > 0 && exponents[k] <= exponents[k - 1])) {
      throw std::invalid_argument("exponents must be positive and increasing");
    }
    const QPoly c = field->reduce(coeffs[k]);
    if (c.is_zero()) {
      throw std::invalid_argument("zero coefficient in series");
    }
    out.terms_.push_back({exponents[k], field->value(c)});
  }
  out.exact_ = std::make_shared<const SeriesField>(SeriesField{field, coeffs});
  return out;
}

long TruncatedPuiseux::ramification() const {
  Rat acc(1);
  for (const auto &t : terms_) {
    acc = exponent_gcd_den(acc, t.exponent);
  }
  return acc.num().get_si();
}

bool TruncatedPuiseux::is_real() const { return !first_nonreal_exponent().has_value(); }

std::optional<Rat> TruncatedPuiseux::first_nonreal_exponent() const {
  for (const auto &t : terms_) {
    if (!t.coeff.is_real()) {
      return t.exponent;
    }
  }
  return std::nullopt;
}

TruncatedPuiseux TruncatedPuiseux::below(const Rat &bound) const {
  TruncatedPuiseux out;
  for (const auto &t : terms_) {
    if (t.exponent < bound) {
      out.terms_.push_back(t);
    }
  }
  if (exact_ && out.terms_.size() == terms_.size()) {
    out.exact_ = exact_;
  } else if (exact_) {
    const auto n = out.terms_.size();
    out.exact_ = std::make_shared<const SeriesField>(
        SeriesField{exact_->field, std::vector<QPoly>(exact_->coeffs.begin(), exact_->coeffs.begin() + static_cast<long>(n))});
  }
  return out;
}

TruncatedPuiseux TruncatedPuiseux::up_to(const Rat &bound) const {
  std::size_t n = 0;
  while (n < terms_.size() && terms_[n].exponent <= bound) {
    ++n;
  }
  return below(n < terms_.size() ? terms_[n].exponent : bound + Rat(1));
}

AlgebraicNumber TruncatedPuiseux::coeff_at(const Rat &e) const {
  for (const auto &t : terms_) {
    if (t.exponent == e) {
      return t.coeff;
    }
  }
  return AlgebraicNumber(0);
}

const SeriesField &TruncatedPuiseux::exact() const {
  if (!exact_) {
    exact_ = build_exact(terms_);
  }
  return *exact_;
}

std::string TruncatedPuiseux::str() const { return series_str(terms_); }

bool operator==(const TruncatedPuiseux &a, const TruncatedPuiseux &b) {
  if (a.terms_.size() != b.terms_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exponent != b.terms_[k].exponent || !(a.terms_[k].coeff == b.terms_[k].coeff)) {
      return false;
    }
  }
  return true;
}

Rat ord_difference(const TruncatedPuiseux &a, const TruncatedPuiseux &b) {
  std::vector<Rat> exps = exponents_of(a);
  for (const auto &t : b.terms()) {
    exps.push_back(t.exponent);
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (const auto &e : exps) {
    if (!(a.coeff_at(e) == b.coeff_at(e))) {
      return e;
    }
  }
  throw std::domain_error("ord of a zero difference");
}

std::string GenericArc::str() const {
  const std::string tail = "c*" + exponent_str(tail_exponent);
  return prefix.empty() ? tail : prefix.str() + " + " + tail;
}

// ---- ArcExpansion ----

bool ArcExpansion::is_zero() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row &r) { return r.empty(); });
}

long ArcExpansion::ramification() const {
  Rat acc(1);
  for (const auto &row : rows) {
    for (const auto &[q, c] : row) {
      acc = exponent_gcd_den(acc, q);
    }
  }
  return acc.num().get_si();
}

std::vector<std::tuple<int, Rat, AlgebraicNumber>> ArcExpansion::terms() const {
  std::vector<std::tuple<int, Rat, AlgebraicNumber>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto &[q, c] : rows[i]) {
      out.emplace_back(static_cast<int>(i), q, field->value(c));
    }
  }
  return out;
}

std::string ArcExpansion::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto &[i, q, c] : terms()) {
    os << (first ? "" : " + ") << "(" << c.decimal() << ")";
    if (i > 0) {
      os << "*X" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (q.sign() != 0) {
      os << "*" << exponent_str(q).replace(0, 1, "Y");
    }
    first = false;
  }
  return first ? "0" : os.str();
}

ArcExpansion substitute_arc(const BiPoly &f, const TruncatedPuiseux &phi) {
  const SeriesField &sf = phi.exact();
  return ArcExpansion{sf.field, substitute_rows(f, sf, exponents_of(phi))};
}

// ---- polygon and sliding ----

NewtonPolygon newton_polygon(const BiPoly &f, const TruncatedPuiseux &phi) {
  const ArcExpansion E = substitute_arc(f, phi);
  if (E.is_zero()) {
    throw std::domain_error("zero polynomial has no Newton polygon");
  }
  const NumberField &K = *E.field;
  NewtonPolygon P;
  for (std::size_t i = 0; i < E.rows.size(); ++i) {
    for (const auto &[q, c] : E.rows[i]) {
      P.dots.push_back({static_cast<int>(i), q});
    }
  }
  const int i0 = lowest_row(E.rows);
  P.arc_is_root = i0 > 0;
  if (P.arc_is_root) {
    NewtonEdge v;
    v.infinite = true;
    v.left = v.right = {i0, *row_min(E.rows, static_cast<std::size_t>(i0))};
    P.edges.push_back(v);
  }
  for (const auto &h : hull(E.rows)) {
    NewtonEdge edge;
    edge.slope = h.slope;
    edge.left = {h.left, *row_min(E.rows, static_cast<std::size_t>(h.left))};
    edge.right = {h.right, *row_min(E.rows, static_cast<std::size_t>(h.right))};
    edge.assoc.assign(static_cast<std::size_t>(h.left), AlgebraicNumber(0));
    for (const auto &c : edge_poly(E.rows, h)) {
      edge.assoc.push_back(c.is_zero() ? AlgebraicNumber(0) : K.value(c));
    }
    P.edges.push_back(std::move(edge));
  }
  return P;
}

std::optional<Rat> ord_along(const BiPoly &f, const TruncatedPuiseux &phi) {
  if (f.is_zero()) {
    return std::nullopt;
  }
  return row_min(substitute_arc(f, phi).rows, 0);
}

Rat ord_generic(const BiPoly &f, const GenericArc &arc) {
  const ArcExpansion E = substitute_arc(f, arc.prefix);
  std::optional<Rat> best;
  for (std::size_t i = 0; i < E.rows.size(); ++i) {
    if (auto m = row_min(E.rows, i)) {
      const Rat v = Rat(static_cast<long>(i)) * arc.tail_exponent + *m;
      best = best ? std::min(*best, v) : v;
    }
  }
  if (!best) {
    throw std::domain_error("ord of the zero polynomial");
  }
  return *best;
}

std::vector<std::pair<TruncatedPuiseux, int>> sliding_step(const BiPoly &f, const TruncatedPuiseux &phi) {
  const ArcExpansion E = substitute_arc(f, phi);
  if (E.is_zero() || lowest_row(E.rows) > 0) {
    throw std::domain_error("cannot slide along a root");
  }
  const auto edges = hull(E.rows);
  if (edges.empty()) {
    return {};
  }
  const SeriesField &sf = phi.exact();
  const auto exps = exponents_of(phi);
  std::vector<std::pair<TruncatedPuiseux, int>> out;
  for (const auto &r : edge_roots(E.field, E.rows, edges.front(), true)) {
    std::vector<Rat> ne;
    std::vector<QPoly> nc;
    bool placed = false;
    for (std::size_t t = 0; t <= exps.size(); ++t) {
      if (!placed && (t == exps.size() || exps[t] >= r.slope)) {
        placed = true;
        QPoly c = r.ext.root;
        if (t < exps.size() && exps[t] == r.slope) {
          c = r.ext.field->reduce(c + r.ext.map(sf.coeffs[t]));
          ++t;
        }
        if (!c.is_zero()) {
          ne.push_back(r.slope);
          nc.push_back(c);
        }
      }
      if (t < exps.size()) {
        ne.push_back(exps[t]);
        nc.push_back(r.ext.map(sf.coeffs[t]));
      }
    }
    out.emplace_back(TruncatedPuiseux::from_field(r.ext.field, ne, nc), r.mult);
  }
  return out;
}

// ---- root tree ----

std::vector<RootBranch> root_tree(const BiPoly &F, TreeTrace *trace) {
  std::vector<RootBranch> out;
  for (const auto &leaf : tree_leaves(F, trace)) {
    RootBranch b = branch_of(leaf);
    b.mult_f = multiplicity(F, b);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<RootBranch> joint_root_tree(const BiPoly &f, const BiPoly &g, TreeTrace *trace) {
  std::vector<RootBranch> out;
  for (const auto &leaf : tree_leaves(f * g, trace)) {
    RootBranch b = branch_of(leaf);
    b.mult_f = multiplicity(f, b);
    b.mult_g = multiplicity(g, b);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int multiplicity(const BiPoly &F, const RootBranch &branch) {
  if (F.is_zero()) {
    throw std::domain_error("multiplicity in the zero polynomial");
  }
  if (!branch.contact_order) {
    return F.value_at_origin().is_zero() ? F.order() : 0;
  }
  const Rat rho = *branch.contact_order;
  const ArcExpansion E = substitute_arc(F, branch.truncation);
  std::optional<Rat> best;
  int at = 0;
  for (std::size_t i = 0; i < E.rows.size(); ++i) {
    if (auto m = row_min(E.rows, i)) {
      const Rat v = Rat(static_cast<long>(i)) * rho + *m;
      if (!best || v < *best) {
        best = v;
        at = static_cast<int>(i);
      }
    }
  }
  return at;
}

std::optional<GenericArc> real_approximation(const RootBranch &branch) {
  const auto alpha = branch.truncation.first_nonreal_exponent();
  if (!alpha) {
    return std::nullopt;
  }
  return GenericArc{branch.truncation.below(*alpha), *alpha};
}

GenericArc pair_approximation(const TruncatedPuiseux &a, const TruncatedPuiseux &b) {
  const Rat rho = ord_difference(a, b);
  return GenericArc{a.below(rho), rho};
}

} // namespace lojex
