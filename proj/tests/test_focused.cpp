#include <set>

#include "doctest.h"
#include "skewcat/skewcat.hpp"
#include "support/support.hpp"

using namespace skew;
using F = FocDeriv;
using S = SeqDeriv;

namespace {
Formula P(const char* s) { return parse_formula(s); }
const Flags kOff{};
const Flags kLn{true, false, false};
const Flags kRn{false, true, false};

std::size_t count(const Flags& fl, const char* text) {
  return count_derivations(fl, parse_sequent(text));
}
}  // namespace

TEST_CASE("check_foc examples") {
  F d = F::swlc(F::swrl(F::ax(P("X"))));
  FocSequent c = check_foc(d, kOff);
  CHECK(c.phase == Phase::C);
  CHECK(print_foc_sequent(c) == "C[X | : |- X]");
  CHECK(c == root_sequent(parse_sequent("X |- X")));

  // otrem needs ln.
  F e = F::swlc(F::swrl(F::otrem(F::ir(), F::ax(P("A")))));
  CHECK_THROWS_AS(check_foc(e, kOff), FlagError);
  CHECK_NOTHROW(check_foc(e, kLn));

  // act may not move a unit into the passive context under rn.
  F a = F::act(F::swlc(F::pass(F::il(F::swrl(F::ir())))));
  CHECK_NOTHROW(check_foc(a, kOff));
  CHECK_THROWS_AS(check_foc(a, kRn), FlagError);
}

TEST_CASE("search examples") {
  CHECK(count(kOff, "X * (I * Y) |- X * (I * Y)") == 2);
  CHECK(count(kLn, "X * (I * Y) |- X * (I * Y)") == 1);
  CHECK(count(kOff, "(X * I) * Y |- (X * I) * Y") == 2);
  CHECK(count(kRn, "(X * I) * Y |- (X * I) * Y") == 1);
  CHECK(count(Flags::all(), "X |- Y") == 0);
  CHECK(count(kOff, "I * X |- X") == 1);
  CHECK(count(kOff, "X |- I * X") == 0);
  CHECK(count(kLn, "X |- I * X") == 1);
  CHECK(count(kOff, "X * Y |- Y * X") == 0);

  auto two = search(kOff, root_sequent(parse_sequent("X * (I * Y) |- X * (I * Y)")));
  REQUIRE(two.size() == 2);
  CHECK(two[0] != two[1]);
  for (const auto& d : two) CHECK(check_foc(d, kOff) == two[0].conclusion());
}

TEST_CASE("focus examples") {
  Formula x = P("X");
  CHECK(focus(S::ax(Formula::unit()), kOff) == focus(S::il(S::ir()), kOff));
  S f = S::ax(x);
  S g = S::pass(S::ax(P("Y")));
  // fp : - | I, X |- X
  S fp = S::pass(S::il(S::pass(f)));
  CHECK(focus(S::otr(fp, g), kOff) == focus(S::pass(S::otr(S::il(S::pass(f)), g)), kOff));
  F once = focus(S::otr(fp, g), kOff);
  CHECK(focus(emb(once, kOff), kOff) == once);
  // swrl erases.
  S top = emb(F::swlc(F::swrl(F::ax(x))), kOff);
  CHECK(top == S::ax(x));
}

TEST_CASE("emb is a section of focus up to the congruence") {
  for (const auto& fl : Flags::every()) {
    testing::DerivabilityOracle oracle(fl);
    testing::Gen gen(51);
    for (int t = 0; t < 60; ++t) {
      S d = gen.seq(fl, oracle);
      F n = focus(d, fl);
      CHECK(check_foc(n, fl) == root_sequent(d.conclusion()));
      S back = emb(n, fl);
      CHECK(back.conclusion() == d.conclusion());
      CHECK(seq_equal(back, d, fl));
      CHECK(focus(back, fl) == n);
    }
  }
  CHECK_THROWS_AS(seq_equal(S::ax(P("X")), S::ax(P("Y")), kOff), TypeError);
}

TEST_CASE("search is deterministic and thread independent") {
  Sequent s = parse_sequent("(X * I) * (I * Y) |- X * (I * (I * Y))");
  for (const auto& fl : Flags::every()) {
    auto a = search(fl, root_sequent(s));
    auto b = search(fl, root_sequent(s));
    SearchOptions par;
    par.threads = 4;
    auto c = search(fl, root_sequent(s), par);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(count_derivations(fl, s, par) == a.size());
    std::set<std::string> uniq;
    for (const auto& d : a) uniq.insert(to_sexpr(d));
    CHECK(uniq.size() == a.size());
  }
}

TEST_CASE("pruning does not change results") {
  auto corpus = testing::corpus(2, 2);
  SearchOptions raw;
  raw.prune = false;
  for (const auto& fl : Flags::every()) {
    for (std::size_t i = 0; i < corpus.size(); i += 3) {
      for (std::size_t j = 0; j < corpus.size(); j += 5) {
        FocSequent root = root_sequent(Sequent{corpus[i], {}, corpus[j]});
        auto a = search(fl, root);
        auto b = search(fl, root, raw);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("serialization roundtrip") {
  F d = parse_foc_deriv("(swlc (swrl (otr 0 (ax \"A\") (swrl (ir)))))");
  CHECK(d == F::swlc(F::swrl(F::otr(F::ax(P("A")), F::swrl(F::ir())))));
  CHECK(to_sexpr(d) == "(swlc (swrl (otr 0 (ax \"A\") (swrl (ir)))))");
  CHECK_THROWS(parse_foc_deriv("(swlc (swrl (otr 1 (ax \"A\") (swrl (ir)))))"));
  CHECK_THROWS_AS(parse_foc_deriv("(swlc"), ParseError);
  CHECK_FALSE(pretty(d).empty());
  testing::Gen gen(52);
  for (const auto& fl : Flags::every()) {
    testing::DerivabilityOracle oracle(fl);
    for (int t = 0; t < 30; ++t) {
      F n = focus(gen.seq(fl, oracle), fl);
      CHECK(parse_foc_deriv(to_sexpr(n)) == n);
    }
  }
}

namespace {
void audit(const F& d, const Flags& fl, std::size_t& bad) {
  const FocSequent& c = d.conclusion();
  for (const auto& g : c.context)
    if ((fl.rn && g.is_closed()) || (fl.an && g.is_tensor())) ++bad;
  if (!fl.ln && !fl.rn && !fl.an && c.anteroom.size() > 1) ++bad;
  for (const auto& p : d.premises()) audit(p, fl, bad);
}
}  // namespace

TEST_CASE("passive contexts stay pure") {
  auto corpus = testing::corpus(3, 2);
  for (const auto& fl : Flags::every()) {
    std::size_t bad = 0, seen = 0;
    for (std::size_t i = 0; i < corpus.size(); i += 7) {
      for (std::size_t j = 0; j < corpus.size(); j += 11) {
        for (const auto& d : search(fl, root_sequent(Sequent{corpus[i], {}, corpus[j]}))) {
          audit(d, fl, bad);
          ++seen;
        }
      }
    }
    INFO(to_string(fl) << ": " << seen << " derivations");
    CHECK(bad == 0);
  }
}
