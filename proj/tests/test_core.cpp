#include "doctest.h"
#include "skewcat/skewcat.hpp"
#include "support/support.hpp"

using namespace skew;

namespace {
Formula X() { return Formula::atom("X"); }
Formula Y() { return Formula::atom("Y"); }
Formula I() { return Formula::unit(); }
Formula ot(Formula a, Formula b) { return Formula::tensor(std::move(a), std::move(b)); }
}  // namespace

TEST_CASE("parse_formula literals") {
  CHECK(parse_formula("I") == I());
  CHECK(parse_formula("(X * I) * Y") == ot(ot(X(), I()), Y()));
  CHECK(parse_formula("X * I * Y") == ot(ot(X(), I()), Y()));
  CHECK(parse_formula("X (x) (I ⊗ Y)") == ot(X(), ot(I(), Y())));
  CHECK(parse_formula("  X  ") == X());
}

TEST_CASE("print_formula") {
  CHECK(print_formula(I()) == "I");
  CHECK(print_formula(ot(X(), ot(I(), Y()))) == "X * (I * Y)");
  CHECK(print_formula(X()) == "X");
  CHECK(print_formula(ot(ot(X(), I()), Y())) == "(X * I) * Y");
}

TEST_CASE("parse errors carry positions") {
  auto pos = [](const char* text) {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("X *") == 3);
  CHECK(pos("(X * Y") == 6);
  CHECK(pos("X $ Y") == 2);
  CHECK(pos("") == 0);
  CHECK_THROWS_AS(parse_sequent("X | Y"), ParseError);
}

TEST_CASE("sequent syntax") {
  Sequent s = parse_sequent("X | I * Y , Z |- C");
  REQUIRE(s.stoup);
  CHECK(*s.stoup == X());
  CHECK(s.context.size() == 2);
  CHECK(print_sequent(s) == "X | I * Y, Z |- C");
  Sequent e = parse_sequent("- | |- I");
  CHECK(!e.stoup);
  CHECK(e.context.empty());
  Sequent sugar = parse_sequent("X * (I * Y) |- X * (I * Y)");
  CHECK(sugar == parse_sequent("X * (I * Y) | |- X * (I * Y)"));
}

TEST_CASE("frontier and closedness") {
  CHECK(frontier_names(frontier(ot(ot(X(), I()), Y()))) == std::vector<std::string>{"X", "Y"});
  CHECK(frontier(I()).empty());
  Context g{X(), ot(Y(), Formula::atom("Z"))};
  CHECK(frontier_names(frontier(g)) == std::vector<std::string>{"X", "Y", "Z"});
  CHECK(frontier(Stoup{}).empty());
  CHECK(is_closed(I()));
  CHECK(is_closed(ot(I(), I())));
  CHECK_FALSE(is_closed(ot(X(), I())));
}

TEST_CASE("interp_antecedent") {
  Formula a = Formula::atom("A"), b = Formula::atom("B"), c = Formula::atom("C");
  CHECK(interp_antecedent(std::nullopt, {}) == I());
  CHECK(interp_antecedent(a, {b, c}) == ot(ot(a, b), c));
  CHECK(interp_antecedent(std::nullopt, {a}) == ot(I(), a));
}

TEST_CASE("core properties on a generated corpus") {
  testing::Gen gen(1);
  for (int t = 0; t < 300; ++t) {
    Stoup s;
    if (gen.coin()) s = gen.formula(3);
    Context g1, g2;
    for (int i = gen.pick(0, 2); i > 0; --i) g1.push_back(gen.formula(3));
    for (int i = gen.pick(0, 2); i > 0; --i) g2.push_back(gen.formula(3));
    Context both = g1;
    both.insert(both.end(), g2.begin(), g2.end());
    CHECK(interp_antecedent(interp_antecedent(s, g1), g2) == interp_antecedent(s, both));
    Formula whole = interp_antecedent(s, both);
    CHECK(frontier(whole) == frontier(s, both));
    CHECK(is_closed(whole) == frontier(whole).empty());
  }
}

TEST_CASE("print/parse round trip up to depth 8") {
  testing::Gen gen(2);
  for (int t = 0; t < 500; ++t) {
    Formula f = gen.formula(9);  // at most 8 tensor levels
    CHECK(parse_formula(print_formula(f)) == f);
    CHECK(frontier_names(frontier(f)) == testing::printed_atoms(f));
  }
}

TEST_CASE("flags") {
  CHECK(Flags::every().size() == 8);
  CHECK(to_string(Flags::none()) == "skew");
  CHECK(to_string(Flags::all()) == "ln rn an");
}
