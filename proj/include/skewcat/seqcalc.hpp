#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skewcat/formula.hpp"

namespace skew {

// Derivations S | G --> C of the unfocused sequent calculus. The smart
// constructors compute the conclusion and throw TypeError when premises do
// not fit; flag gating is left to check_seq.
class SeqDeriv {
 public:
  enum class Rule : std::uint8_t {
    Pass,
    IL,
    OtL,
    Ax,
    IR,
    OtR,     // pos = length of the first premise's context
    OtRem,   // ln
    IC,      // rn, pos = |G0|
    JJC,     // rn, pos = |G0|, both parts closed
    OtLctx,  // an, pos = |G0|
  };

  static SeqDeriv pass(SeqDeriv f);
  static SeqDeriv il(SeqDeriv f);
  static SeqDeriv otl(SeqDeriv f);
  static SeqDeriv ax(Formula a);
  static SeqDeriv ir();
  static SeqDeriv otr(SeqDeriv f, SeqDeriv g);
  static SeqDeriv otrem(SeqDeriv f, SeqDeriv g);
  static SeqDeriv ic(std::size_t pos, SeqDeriv f);
  static SeqDeriv jjc(std::size_t pos, SeqDeriv f);
  static SeqDeriv otlctx(std::size_t pos, SeqDeriv f);

  Rule rule() const { return node_->rule; }
  const Sequent& conclusion() const { return node_->concl; }
  const std::vector<SeqDeriv>& premises() const { return node_->premises; }
  const SeqDeriv& premise(std::size_t i) const { return node_->premises[i]; }
  std::size_t pos() const { return node_->pos; }
  std::size_t size() const { return node_->size; }
  // Same node object (cheap identity test).
  bool same(const SeqDeriv& o) const { return node_ == o.node_; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const SeqDeriv& a, const SeqDeriv& b);
  friend bool operator!=(const SeqDeriv& a, const SeqDeriv& b) { return !(a == b); }

 private:
  struct Node {
    Rule rule;
    Sequent concl;
    std::vector<SeqDeriv> premises;
    std::size_t pos = 0;
    std::size_t size = 1;
  };
  explicit SeqDeriv(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static SeqDeriv make(Rule r, Sequent concl, std::vector<SeqDeriv> ps, std::size_t pos);
  std::shared_ptr<const Node> node_;
};

const char* rule_name(SeqDeriv::Rule r);

// Validates flag gating and returns the conclusion. Errors carry the path of
// premise indices to the offending node.
Sequent check_seq(const SeqDeriv& d, const Flags& flags);

// ---- admissible rules ---------------------------------------------------

// f : S | G --> A,  g : A | D --> C   gives  S | G, D --> C.
SeqDeriv scut(const SeqDeriv& f, const SeqDeriv& g, const Flags& flags);
// f : - | G --> A,  g : S | D0, A, D1 --> C with |D0| = pos.
SeqDeriv ccut(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos, const Flags& flags);
// f : A' | G --> A gives S | D0, A', G, D1 --> C.
SeqDeriv ccut_fma(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos, const Flags& flags);
// f : S' | G --> A gives S | D0, <<S'>>, G, D1 --> C. Needs an.
SeqDeriv ccut_stp(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos, const Flags& flags);
// - | A, G --> C  to  A | G --> C. Needs ln.
SeqDeriv act_admissible(const SeqDeriv& f, const Flags& flags);
// S | G0, B, G1 --> C  to  S | G0, I, B, G1 --> C with |G0| = pos. Needs an.
SeqDeriv ic_restricted(const SeqDeriv& f, std::size_t pos, const Flags& flags);

// ---- serialization ------------------------------------------------------
//   (pass f) (il f) (otl f) (ax "A") (ir) (otr k f g) (otrem f g)
//   (ic k f) (jjc k f) (otlctx k f)
std::string to_sexpr(const SeqDeriv& d);
SeqDeriv parse_seq_deriv(std::string_view text);
// Indented multi-line rendering with the conclusion of every node.
std::string pretty(const SeqDeriv& d);

}  // namespace skew
