#pragma once

#include "lojex/algebraic.hpp"
#include "lojex/bipoly.hpp"
#include "lojex/number_field.hpp"
#include "lojex/rat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lojex {

struct PuiseuxTerm {
  Rat exponent;
  AlgebraicNumber coeff;
};

/// Coefficients of a series as elements of one number field, parallel to its
/// terms.
struct SeriesField {
  FieldPtr field;
  std::vector<QPoly> coeffs;
};

/// Finite Puiseux series sum c_k y^(e_k): exponents positive and strictly
/// increasing, coefficients nonzero.
class TruncatedPuiseux {
public:
  TruncatedPuiseux() = default;
  /// Sorts by exponent, merges equal exponents, drops zero coefficients.
  explicit TruncatedPuiseux(std::vector<PuiseuxTerm> terms);
  /// Terms with rational coefficients, as (exponent, coefficient).
  static TruncatedPuiseux rational(const std::vector<std::pair<Rat, Rat>> &terms);
  /// Terms given exactly in a field; exponents strictly increasing.
  static TruncatedPuiseux from_field(const FieldPtr &field, const std::vector<Rat> &exponents,
                                     const std::vector<QPoly> &coeffs);

  [[nodiscard]] const std::vector<PuiseuxTerm> &terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  /// Least N with every exponent in (1/N)Z.
  [[nodiscard]] long ramification() const;
  [[nodiscard]] bool is_real() const;
  /// Smallest exponent carrying a non-real coefficient.
  [[nodiscard]] std::optional<Rat> first_nonreal_exponent() const;
  /// Terms with exponent < bound.
  [[nodiscard]] TruncatedPuiseux below(const Rat &bound) const;
  /// Terms with exponent <= bound.
  [[nodiscard]] TruncatedPuiseux up_to(const Rat &bound) const;
  /// Coefficient of y^e (zero if absent).
  [[nodiscard]] AlgebraicNumber coeff_at(const Rat &e) const;
  /// The series with coefficients in one number field; built on first use.
  [[nodiscard]] const SeriesField &exact() const;
  /// Human-readable, e.g. "y^(5/3)" or "(-0.5+0.8660254038*i)*y^(5/3)".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const TruncatedPuiseux &a, const TruncatedPuiseux &b);

private:
  std::vector<PuiseuxTerm> terms_;
  mutable std::shared_ptr<const SeriesField> exact_;
};

/// ord(a - b); throws std::domain_error when a == b.
Rat ord_difference(const TruncatedPuiseux &a, const TruncatedPuiseux &b);

/// prefix + c y^tail_exponent with a symbolic generic coefficient c.
struct GenericArc {
  TruncatedPuiseux prefix;
  Rat tail_exponent;

  [[nodiscard]] std::string str() const;
};

/// F(X, Y) = f(X + phi(Y), Y) with coefficients in a number field and
/// rational Y exponents. rows[i] maps a Y exponent to the coefficient of X^i.
struct ArcExpansion {
  FieldPtr field;
  std::vector<std::map<Rat, QPoly>> rows;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] long ramification() const;
  /// Terms as (i, q, coefficient).
  [[nodiscard]] std::vector<std::tuple<int, Rat, AlgebraicNumber>> terms() const;
  [[nodiscard]] std::string str() const;
};

ArcExpansion substitute_arc(const BiPoly &f, const TruncatedPuiseux &phi);

struct NewtonDot {
  int i;
  Rat q;
  friend bool operator==(const NewtonDot &, const NewtonDot &) = default;
};

struct NewtonEdge {
  /// The non-compact vertical edge at the leftmost dot when the arc is a root.
  bool infinite = false;
  Rat slope;
  NewtonDot left;
  NewtonDot right;
  /// Associated polynomial sum c_iq z^i over the dots on the edge, low to high.
  std::vector<AlgebraicNumber> assoc;
};

struct NewtonPolygon {
  /// Support, sorted by (i, q).
  std::vector<NewtonDot> dots;
  /// Highest (steepest) edge first; slopes strictly decrease.
  std::vector<NewtonEdge> edges;
  bool arc_is_root = false;
};

NewtonPolygon newton_polygon(const BiPoly &f, const TruncatedPuiseux &phi);
/// ord f(phi(y), y); nullopt when phi is a root of f.
std::optional<Rat> ord_along(const BiPoly &f, const TruncatedPuiseux &phi);
/// min over dots (a, b) of P(f, prefix) of a * tail + b.
Rat ord_generic(const BiPoly &f, const GenericArc &arc);
/// One child phi + c y^slope per distinct nonzero root c of the highest-edge
/// polynomial, with its multiplicity. Throws std::domain_error if phi is a root.
std::vector<std::pair<TruncatedPuiseux, int>> sliding_step(const BiPoly &f, const TruncatedPuiseux &phi);

struct RootBranch {
  TruncatedPuiseux truncation;
  /// Absent when the polynomial has a single distinct root.
  std::optional<Rat> contact_order;
  int mult_f = 0;
  int mult_g = 0;
  bool is_real = false;
};

/// ord_along before and after each highest-edge slide made while expanding.
struct TreeTrace {
  std::vector<std::pair<Rat, std::optional<Rat>>> slides;
};

/// Truncated Newton-Puiseux roots of an x-regular F, one per distinct root,
/// with mult_f = multiplicity in F. Canonically sorted.
std::vector<RootBranch> root_tree(const BiPoly &F, TreeTrace *trace = nullptr);
/// Tree of the distinct roots of f*g; each branch carries its multiplicity
/// in f and in g. Both inputs x-regular.
std::vector<RootBranch> joint_root_tree(const BiPoly &f, const BiPoly &g, TreeTrace *trace = nullptr);
/// Multiplicity of the branch as a root of F (0 if it is not one), read off
/// the polygon of F relative to the truncation at weight contact_order.
int multiplicity(const BiPoly &F, const RootBranch &branch);
/// Generic arc at the first non-real exponent; nullopt for a real branch.
std::optional<GenericArc> real_approximation(const RootBranch &branch);
/// prefix of a below ord(a - b), generic tail at ord(a - b).
GenericArc pair_approximation(const TruncatedPuiseux &a, const TruncatedPuiseux &b);

} // namespace lojex
