#include "lojex/cli.hpp"

#include "lojex/exponent.hpp"
#include "lojex/limits.hpp"
#include "lojex/oracle.hpp"
#include "lojex/parser.hpp"
#include "lojex/puiseux.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace lojex {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer &z) {
  if (z.fits_slong_p()) {
    return z.get_si();
  }
  return z.get_str();
}

Json rat_json(const Rat &r) { return Json{{"num", integer_json(r.num())}, {"den", integer_json(r.den())}}; }

std::string decimal(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string rat_text(const Rat &r) {
  return decimal(r.to_double()) + " (= " + r.num().get_str() + "/" + r.den().get_str() + ")";
}

std::string dot_text(const NewtonDot &d) { return "(" + std::to_string(d.i) + "," + d.q.str() + ")"; }

std::string side_text(int direction) { return direction > 0 ? "y>0" : "y<0"; }

std::string assoc_text(const std::vector<AlgebraicNumber> &assoc) {
  std::string s;
  for (std::size_t k = 0; k < assoc.size(); ++k) {
    if (assoc[k].is_zero()) {
      continue;
    }
    const std::string z = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string c = assoc[k].str();
    if (!assoc[k].is_rational()) {
      c = "(" + c + ")";
    } else if (k > 0 && (c == "1" || c == "-1")) {
      c.pop_back();
    }
    if (!s.empty()) {
      s += c.starts_with("-") ? " - " : " + ";
      if (c.starts_with("-")) {
        c.erase(0, 1);
      }
    }
    s += c;
    if (!z.empty()) {
      s += (c.empty() || c == "-") ? z : "*" + z;
    }
  }
  return s.empty() ? "0" : s;
}

struct Vars {
  std::string x = "x";
  std::string y = "y";
};

Vars split_vars(const std::string &names) {
  const auto comma = names.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == names.size()) {
    throw std::invalid_argument("--vars expects two names like \"x,y\"");
  }
  Vars v{names.substr(0, comma), names.substr(comma + 1)};
  if (v.x == v.y) {
    throw std::invalid_argument("--vars needs two different names");
  }
  return v;
}

struct ExponentArgs {
  std::string f, g, vars = "x,y";
  bool json = false;
  bool validate = false;
  std::uint32_t seed = SamplePlan{}.seed;
};

int exponent_cmd(const ExponentArgs &a, std::ostream &out) {
  const Vars v = split_vars(a.vars);
  const BiPoly f = parse_poly(a.f, v.x, v.y);
  const BiPoly g = parse_poly(a.g, v.x, v.y);
  ExponentOptions opts;
  opts.validate = a.validate;
  const ExponentResult r = lojasiewicz_exponent(f, g, opts);
  std::optional<double> estimate;
  if (a.validate && r.defined) {
    SamplePlan plan = SamplePlan::standard();
    plan.seed = a.seed;
    estimate = estimate_exponent(f, g, plan);
  }
  const long c = r.regularization.shear_c;
  if (a.json) {
    Json j;
    if (r.defined) {
      j["defined"] = true;
      j["exponent"] = rat_json(r.value);
      j["decimal"] = r.value.to_double();
      j["witness"] = r.witness.str();
      j["witness_kind"] = r.witness.kind == Witness::Kind::arc ? "arc" : "ratio";
      j["shear_c"] = c;
      j["direction"] = r.witness.direction;
      j["plus"] = rat_json(r.plus);
      j["minus"] = rat_json(r.minus);
      if (a.validate) {
        j["validation"] = Json{{"pair_formula", rat_json(*r.pair_value)}, {"oracle_estimate", *estimate}};
      }
    } else {
      j["defined"] = false;
      j["reason"] = "inclusion_fails";
      j["violating_branch"] = "x = " + r.violation->branch.str();
      j["shear_c"] = c;
      j["direction"] = r.violation->direction;
    }
    out << j.dump(2) << "\n";
    return r.defined ? exit_ok : exit_undefined;
  }
  const std::string sheared = c == 0 ? "" : " after the shear y -> y + " + std::to_string(c) + "*x";
  if (!r.defined) {
    out << "undefined; {f=0} is not contained in {g=0}\n";
    out << "real root of f not shared by g: x = " << r.violation->branch.str() << " + ... ("
        << side_text(r.violation->direction) << ")" << sheared << "\n";
    return exit_undefined;
  }
  out << "defined; L = " << rat_text(r.value) << "\n";
  out << "witness: " << r.witness.str() << sheared << "\n";
  out << "y>0: " << r.plus.str() << ", y<0: " << r.minus.str() << "\n";
  if (a.validate) {
    out << "pair formula: " << r.pair_value->str() << " (agrees)\n";
    out << "oracle estimate: " << decimal(*estimate) << "\n";
  }
  return exit_ok;
}

struct LimitArgs {
  std::string num, den, vars = "x,y";
  bool json = false;
};

int limit_cmd(const LimitArgs &a, std::ostream &out) {
  const Vars v = split_vars(a.vars);
  const BiPoly g = parse_poly(a.num, v.x, v.y);
  const BiPoly f = parse_poly(a.den, v.x, v.y);
  const LimitVerdict r = limit(g, f);
  const bool exists = r.kind == LimitVerdict::Kind::exists_equal;
  if (a.json) {
    Json j;
    j["verdict"] = exists ? "exists_equal" : "does_not_exist";
    if (exists) {
      j["value"] = rat_json(r.value);
    }
    Json ev = Json::array();
    for (const auto &e : r.evidence) {
      Json item{{"path", e.path}, {"note", e.note}};
      item["value"] = e.value ? rat_json(*e.value) : Json(nullptr);
      ev.push_back(item);
    }
    j["evidence"] = ev;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << (exists ? "exists; limit = " + r.value.str() : std::string("does not exist")) << "\n";
  for (const auto &e : r.evidence) {
    out << "  " << e.path << ": " << (e.value ? e.value->str() + ", " : "") << e.note << "\n";
  }
  return exit_ok;
}

struct RootsArgs {
  std::string f, vars = "x,y";
  bool json = false;
};

int roots_cmd(const RootsArgs &a, std::ostream &out) {
  const Vars v = split_vars(a.vars);
  const BiPoly f = parse_poly(a.f, v.x, v.y);
  if (f.is_zero()) {
    throw std::invalid_argument("f is the zero polynomial");
  }
  const RegularizationReport reg = make_regular(f, f);
  const BiPoly &F = reg.transformed_f;
  Json j;
  j["shear_c"] = reg.shear_c;
  j["directions"] = Json::array();
  if (reg.shear_c != 0 && !a.json) {
    out << "roots after the shear y -> y + " << reg.shear_c << "*x\n";
  }
  for (int dir : {1, -1}) {
    const auto tree = root_tree(dir > 0 ? F : F.bar());
    Json branches = Json::array();
    if (!a.json) {
      out << side_text(dir) << ": " << tree.size() << " distinct root" << (tree.size() == 1 ? "" : "s") << "\n";
    }
    for (const auto &b : tree) {
      const std::string t = b.truncation.empty() ? "0" : b.truncation.str();
      branches.push_back(Json{{"truncation", t},
                              {"contact_order", b.contact_order ? rat_json(*b.contact_order) : Json(nullptr)},
                              {"multiplicity", b.mult_f},
                              {"real", b.is_real}});
      if (!a.json) {
        out << "  x = " << t << " + ...  contact " << (b.contact_order ? b.contact_order->str() : "-")
            << "  multiplicity " << b.mult_f << "  " << (b.is_real ? "real" : "non-real") << "\n";
      }
    }
    j["directions"].push_back(Json{{"direction", dir}, {"branches", branches}});
  }
  if (a.json) {
    out << j.dump(2) << "\n";
  }
  return exit_ok;
}

struct PolygonArgs {
  std::string f, arc = "0", vars = "x,y";
  bool json = false;
};

int polygon_cmd(const PolygonArgs &a, std::ostream &out) {
  const Vars v = split_vars(a.vars);
  const BiPoly f = parse_poly(a.f, v.x, v.y);
  const TruncatedPuiseux phi = TruncatedPuiseux::rational(parse_arc(a.arc, v.y));
  const NewtonPolygon p = newton_polygon(f, phi);
  if (a.json) {
    Json j;
    j["arc"] = phi.empty() ? "0" : phi.str();
    j["dots"] = Json::array();
    for (const auto &d : p.dots) {
      j["dots"].push_back(Json{{"i", d.i}, {"q", rat_json(d.q)}});
    }
    j["edges"] = Json::array();
    for (const auto &e : p.edges) {
      Json item{{"infinite", e.infinite}};
      item["slope"] = e.infinite ? Json(nullptr) : rat_json(e.slope);
      item["left"] = Json{{"i", e.left.i}, {"q", rat_json(e.left.q)}};
      item["right"] = Json{{"i", e.right.i}, {"q", rat_json(e.right.q)}};
      item["associated"] = e.infinite ? Json(nullptr) : Json(assoc_text(e.assoc));
      j["edges"].push_back(item);
    }
    j["arc_is_root"] = p.arc_is_root;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "dots:";
  for (const auto &d : p.dots) {
    out << " " << dot_text(d);
  }
  out << "\n";
  for (const auto &e : p.edges) {
    if (e.infinite) {
      out << "vertical edge at " << dot_text(e.left) << "\n";
      continue;
    }
    out << "edge " << dot_text(e.left) << " - " << dot_text(e.right) << ": slope " << e.slope.str()
        << ", associated polynomial " << assoc_text(e.assoc) << "\n";
  }
  if (p.arc_is_root) {
    out << "the arc is a root of f\n";
  }
  return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact Lojasiewicz exponents and limits of bivariate polynomials at the origin", "lojex"};
  app.require_subcommand(1);
  const std::string vars_help = "Variable names as \"x,y\"";

  ExponentArgs ea;
  auto *exp = app.add_subcommand("exponent", "Decide {f=0} in {g=0} and compute the exponent of f with respect to g");
  exp->add_option("-f", ea.f, "Polynomial f")->required();
  exp->add_option("-g", ea.g, "Polynomial g")->required();
  exp->add_flag("--json", ea.json, "JSON output");
  exp->add_flag("--validate", ea.validate, "Cross-check with the pair formula and the numeric oracle");
  exp->add_option("--seed", ea.seed, "Seed of the oracle's sampling plan");
  exp->add_option("--vars", ea.vars, vars_help);

  LimitArgs la;
  auto *lim = app.add_subcommand("limit", "Limit of n/d at the origin");
  lim->add_option("-n", la.num, "Numerator")->required();
  lim->add_option("-d", la.den, "Denominator")->required();
  lim->add_flag("--json", la.json, "JSON output");
  lim->add_option("--vars", la.vars, vars_help);

  RootsArgs ra;
  auto *roots = app.add_subcommand("roots", "Truncated Newton-Puiseux roots of f through the origin");
  roots->add_option("-f", ra.f, "Polynomial f")->required();
  roots->add_flag("--json", ra.json, "JSON output");
  roots->add_option("--vars", ra.vars, vars_help);

  PolygonArgs pa;
  auto *poly = app.add_subcommand("polygon", "Newton polygon of f relative to an arc x = phi(y)");
  poly->add_option("-f", pa.f, "Polynomial f")->required();
  poly->add_option("--arc", pa.arc, "Arc such as \"y^(5/3) - 2*y^2\"");
  poly->add_flag("--json", pa.json, "JSON output");
  poly->add_option("--vars", pa.vars, vars_help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_input;
  }

  try {
    if (*exp) {
      return exponent_cmd(ea, out);
    }
    if (*lim) {
      return limit_cmd(la, out);
    }
    if (*roots) {
      return roots_cmd(ra, out);
    }
    return polygon_cmd(pa, out);
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument &e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::domain_error &e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

} // namespace lojex
