#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "json.hpp"
#include "lojex/cli.hpp"
#include "lojex/exponent.hpp"

#include <sstream>

using namespace lojex;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string &s, const std::string &part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("exponent subcommand") {
  const auto r = call({"exponent", "-f", "x^2", "-g", "x*(x^2+y^2)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "defined; L = 2 (= 2/1)"));
  CHECK(contains(r.out, "ratio 2/1"));

  const auto j = call({"exponent", "-f", "x^2", "-g", "x*(x^2+y^2)", "--json"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["defined"] == true);
  CHECK(doc["exponent"]["num"] == 2);
  CHECK(doc["exponent"]["den"] == 1);
  CHECK(doc["shear_c"] == 0);
  CHECK(doc["direction"] == 1);
  CHECK(doc.contains("witness"));

  const auto v = call({"exponent", "-f", "x^2", "-g", "x*(x^2+y^2)", "--validate", "--json"});
  REQUIRE(v.code == 0);
  const json vd = json::parse(v.out);
  CHECK(vd["validation"]["pair_formula"]["num"] == 2);
  const double est = vd["validation"]["oracle_estimate"];
  CHECK(est >= 1.85);
  CHECK(est <= 2.0);
}

TEST_CASE("undefined exponent exits with 2") {
  const auto r = call({"exponent", "-f", "x", "-g", "x + y^2 + y"});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "undefined"));
  const auto j = call({"exponent", "-f", "x", "-g", "x + y^2 + y", "--json"});
  CHECK(j.code == 2);
  const json doc = json::parse(j.out);
  CHECK(doc["defined"] == false);
  CHECK(doc["reason"] == "inclusion_fails");
  CHECK(doc.contains("violating_branch"));
}

TEST_CASE("input errors exit with 3") {
  CHECK(call({"exponent", "-f", "x^y", "-g", "x"}).code == 3);
  CHECK(contains(call({"exponent", "-f", "x^y", "-g", "x"}).err, "position"));
  CHECK(call({"exponent", "-f", "1 + x", "-g", "x"}).code == 3);
  CHECK(call({"exponent", "-f", "x"}).code == 3);
  CHECK(call({"frobnicate"}).code == 3);
  CHECK(call({}).code == 3);
  CHECK(call({"limit", "-n", "x", "-d", "0"}).code == 3);
  CHECK(call({"polygon", "-f", "x", "--arc", "x^2"}).code == 3);
  CHECK(call({"roots", "-f", "x", "--vars", "x"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("limit subcommand") {
  const auto a = call({"limit", "-n", "x*y^2", "-d", "x^2+y^4"});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "does not exist"));
  const auto b = call({"limit", "-n", "x^3*y", "-d", "x^2+y^2", "--json"});
  CHECK(b.code == 0);
  const json doc = json::parse(b.out);
  CHECK(doc["verdict"] == "exists_equal");
  CHECK(doc["value"]["num"] == 0);
  const auto c = call({"limit", "-n", "x^2 + 2*y^2", "-d", "x^2 + 2*y^2"});
  CHECK(contains(c.out, "exists; limit = 1"));
}

TEST_CASE("polygon subcommand") {
  const auto r = call({"polygon", "-f", "x^3 - y^5 + y^6", "--arc", "y^(5/3)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dots: (0,6) (1,10/3) (2,5/3) (3,0)"));
  CHECK(contains(r.out, "slope 8/3"));
  CHECK(contains(r.out, "slope 5/3"));
  const json doc = json::parse(call({"polygon", "-f", "x^3 - y^5 + y^6", "--arc", "y^(5/3)", "--json"}).out);
  REQUIRE(doc["edges"].size() == 2);
  CHECK(doc["edges"][0]["slope"]["num"] == 8);
  CHECK(doc["edges"][0]["slope"]["den"] == 3);
  CHECK(doc["edges"][1]["slope"]["num"] == 5);
  CHECK(doc["dots"].size() == 4);
  const auto root = call({"polygon", "-f", "x^3 - y^3", "--arc", "y"});
  CHECK(contains(root.out, "the arc is a root of f"));
}

TEST_CASE("roots subcommand") {
  const auto r = call({"roots", "-f", "(x - y^2)^3*(x + y)", "--json"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc["directions"].size() == 2);
  int total = 0;
  for (const auto &b : doc["directions"][0]["branches"]) {
    total += b["multiplicity"].get<int>();
    CHECK(b["real"] == true);
  }
  CHECK(total == 4);
  const auto t = call({"roots", "-f", "u^2 + v^3", "--vars", "u,v"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "non-real"));
}

TEST_CASE("property: output is deterministic and JSON matches the library") {
  std::mt19937 rng(777);
  for (int n = 0; n < 12; ++n) {
    const auto pr = gen::random_pair(rng);
    const std::vector<std::string> args{"exponent", "-f", pr.f.str(), "-g", pr.g.str(), "--json"};
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.out == b.out);
    const auto r = lojasiewicz_exponent(pr.f, pr.g);
    const json doc = json::parse(a.out);
    CHECK(a.code == (r.defined ? 0 : 2));
    CHECK(doc["defined"] == r.defined);
    if (r.defined) {
      CHECK(doc["exponent"]["num"].get<long>() == r.value.num().get_si());
      CHECK(doc["exponent"]["den"].get<long>() == r.value.den().get_si());
    }
  }
}
