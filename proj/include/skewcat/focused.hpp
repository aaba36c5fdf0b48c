#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skewcat/formula.hpp"
#include "skewcat/seqcalc.hpp"

namespace skew {

enum class Phase : std::uint8_t { C, L, R };

const char* phase_name(Phase p);

// S | O : G |- C in phase C (anteroom O, passive context G); the anteroom is
// empty in phases L and R, and R-phase stoups are irreducible.
struct FocSequent {
  Phase phase = Phase::L;
  Stoup stoup;
  Context anteroom;
  Context context;
  Formula succedent = Formula::unit();

  friend bool operator==(const FocSequent&, const FocSequent&) = default;
};

std::string print_foc_sequent(const FocSequent& s);

// Root C-phase sequent with the whole antecedent context in the anteroom.
FocSequent root_sequent(const Sequent& s);

class FocDeriv {
 public:
  enum class Rule : std::uint8_t {
    IC,      // C: drop a trailing unit from the anteroom
    OtLctx,  // C: split a trailing tensor of the anteroom
    Act,     // C: move the trailing anteroom formula into the passive context
    SwLC,    // C: empty anteroom, continue in phase L
    Pass,
    IL,
    OtL,   // premise is a C-phase sequent with a one-formula anteroom
    SwRL,  // L to R
    Ax,
    IR,
    OtR,    // pos = length of the first premise's context
    OtRem,  // ln
  };

  static FocDeriv ic(FocDeriv f);
  static FocDeriv otlctx(FocDeriv f);
  static FocDeriv act(FocDeriv f);
  static FocDeriv swlc(FocDeriv f);
  static FocDeriv pass(FocDeriv f);
  static FocDeriv il(FocDeriv f);
  static FocDeriv otl(FocDeriv f);
  static FocDeriv swrl(FocDeriv f);
  static FocDeriv ax(Formula atom);
  static FocDeriv ir();
  static FocDeriv otr(FocDeriv r, FocDeriv g);
  static FocDeriv otrem(FocDeriv r, FocDeriv r2);

  Rule rule() const { return node_->rule; }
  const FocSequent& conclusion() const { return node_->concl; }
  const std::vector<FocDeriv>& premises() const { return node_->premises; }
  const FocDeriv& premise(std::size_t i) const { return node_->premises[i]; }
  std::size_t pos() const { return node_->pos; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const FocDeriv& a, const FocDeriv& b);
  friend bool operator!=(const FocDeriv& a, const FocDeriv& b) { return !(a == b); }

 private:
  struct Node {
    Rule rule;
    FocSequent concl;
    std::vector<FocDeriv> premises;
    std::size_t pos = 0;
    std::size_t size = 1;
  };
  explicit FocDeriv(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static FocDeriv make(Rule r, FocSequent concl, std::vector<FocDeriv> ps, std::size_t pos);
  std::shared_ptr<const Node> node_;
};

const char* rule_name(FocDeriv::Rule r);

// Checks all side conditions under `flags` and returns the conclusion.
// Violations throw FlagError naming the condition.
FocSequent check_foc(const FocDeriv& d, const Flags& flags);

// ---- proof search -------------------------------------------------------

struct SearchOptions {
  // Cut branches whose antecedent and succedent frontiers disagree.
  bool prune = true;
  // Worker threads for the top-level choice points; results are merged in
  // the canonical order, so output does not depend on this value.
  unsigned threads = 1;
};

// All focused derivations of `seq`, duplicate-free, in the canonical order.
std::vector<FocDeriv> search(const Flags& flags, const FocSequent& seq,
                             const SearchOptions& opts = {});
// Number of derivations of the C-phase root S | G : () |- C.
std::size_t count_derivations(const Flags& flags, const Stoup& s, const Context& g,
                              const Formula& c, const SearchOptions& opts = {});
std::size_t count_derivations(const Flags& flags, const Sequent& s,
                              const SearchOptions& opts = {});

// ---- focusing -----------------------------------------------------------

// Normal form of `f` as a derivation of the C-phase root sequent.
FocDeriv focus(const SeqDeriv& f, const Flags& flags);
// Erases phases. Anteroom decompositions become jjc or otlctx depending on
// `flags` (otlctx whenever an holds).
SeqDeriv emb(const FocDeriv& d, const Flags& flags);
// focus(f) == focus(g); throws TypeError if the conclusions differ.
bool seq_equal(const SeqDeriv& f, const SeqDeriv& g, const Flags& flags);

// ---- serialization ------------------------------------------------------
//   (ic f) (otlctx f) (act f) (swlc f) (pass f) (il f) (otl f) (swrl f)
//   (ax "X") (ir) (otr k r g) (otrem r r2)
std::string to_sexpr(const FocDeriv& d);
FocDeriv parse_foc_deriv(std::string_view text);
std::string pretty(const FocDeriv& d);

}  // namespace skew
