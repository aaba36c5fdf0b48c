#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "skewcat/cli.hpp"
#include "skewcat/skewcat.hpp"

using namespace skew;
using nlohmann::json;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  int code = run_cli(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> v;
  std::istringstream s(text);
  for (std::string l; std::getline(s, l);)
    if (!l.empty()) v.push_back(json::parse(l));
  return v;
}

const char* kEq8 = "X * (I * Y) |- X * (I * Y)";
const char* kId = "(id \"X * (I * Y)\")";
const char* kOther = "(comp (alpha \"X\" \"I\" \"Y\") (tensor (rho \"X\") (lam \"Y\")))";
}  // namespace

TEST_CASE("count and enumerate") {
  Run c = run({"count", kEq8});
  CHECK(c.code == 0);
  CHECK(c.out == "2\n");
  CHECK(run({"count", "--ln", kEq8}).out == "1\n");
  CHECK(run({"count", "X |- Y"}).out == "0\n");

  Run e = run({"enumerate", kEq8});
  CHECK(e.code == 0);
  // One derivation per line; each parses back to a derivation of the root.
  std::istringstream s(e.out);
  std::size_t n = 0;
  for (std::string l; std::getline(s, l);) {
    if (l.rfind("count: ", 0) == 0) {
      CHECK(l == "count: 2");
      continue;
    }
    FocDeriv d = parse_foc_deriv(l);
    CHECK(check_foc(d, Flags::none()) == root_sequent(parse_sequent(kEq8)));
    ++n;
  }
  CHECK(n == 2);
  CHECK(run({"enumerate", "--pretty", kEq8}).code == 0);
}

TEST_CASE("json agrees with the human output") {
  auto c = lines(run({"count", "--json", kEq8}).out);
  REQUIRE(c.size() == 1);
  CHECK(c[0]["count"] == 2);
  CHECK(c[0]["flags"] == "skew");

  auto e = lines(run({"enumerate", "--json", kEq8}).out);
  REQUIRE(e.size() == 3);
  CHECK(e.back()["count"] == 2);
  std::istringstream human(run({"enumerate", kEq8}).out);
  for (std::size_t i = 0; i < 2; ++i) {
    std::string l;
    std::getline(human, l);
    CHECK(e[i]["derivation"] == l);
  }

  auto h = lines(run({"hom", "--json", "X * (I * Y)", "X * (I * Y)"}).out);
  REQUIRE(h.size() == 3);
  CHECK(h.back()["count"] == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CatDeriv m = parse_cat_deriv(h[i]["map"].get<std::string>());
    CHECK(check_cat(m, Flags::none()).source == parse_formula("X * (I * Y)"));
  }
  CHECK(run({"hom", "X", "Y"}).code == 0);
}

TEST_CASE("equal exit codes") {
  Run ne = run({"equal", kId, kOther});
  CHECK(ne.code == 1);
  CHECK(ne.out == "not-equal\n");
  Run eq = run({"equal", "--ln", kId, kOther});
  CHECK(eq.code == 0);
  CHECK(lines(run({"equal", "--ln", "--json", kId, kOther}).out)[0]["equal"] == true);
}

TEST_CASE("normalize") {
  Run r = run({"normalize", "(otr 0 (ax \"X\") (ir))"});
  CHECK(r.code == 0);
  CHECK(r.out.find("focused: (swlc (swrl (otr 0 (ax \"X\") (swrl (ir)))))") != std::string::npos);
  CHECK(r.out.find("rewrite: (otr 0 (ax \"X\") (ir))") != std::string::npos);
}

TEST_CASE("errors exit with 2") {
  Run p = run({"count", "X |-"});
  CHECK(p.code == 2);
  CHECK(p.err.find("parse error") != std::string::npos);
  Run t = run({"normalize", "--json", "(otr 1 (ax \"X\") (ir))"});
  CHECK(t.code == 2);
  CHECK(lines(t.out)[0]["error"] == "type");
  CHECK(run({"frob"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--bogus", kEq8}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("stdin") {
  CHECK(run({"count", "-"}, std::string(kEq8) + "\n").out == "2\n");
  Run e = run({"equal", "-", kOther}, kId);
  CHECK(e.code == 1);
}

TEST_CASE("coherence audit is deterministic") {
  Run a = run({"coherence", "--json", "--trials", "20", "--max-atoms", "3", "--seed", "7"});
  Run b = run({"coherence", "--json", "--trials", "20", "--max-atoms", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = lines(a.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["seed"] == 7);
  CHECK(run({"enumerate", "--threads", "3", kEq8}).out == run({"enumerate", kEq8}).out);
}
