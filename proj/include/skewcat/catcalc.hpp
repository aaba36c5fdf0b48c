#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewcat/formula.hpp"

namespace skew {

// Derivation terms A ==> C of the categorical calculus. Every constructor
// carries the formulas that fix its endpoints, so typing needs no
// inference. Construction is unchecked; use check_cat.
class CatDeriv {
 public:
  enum class Rule : std::uint8_t {
    Id,
    Comp,       // Comp(g, f) is g . f
    TensorMap,  // f (x) g
    Lam,
    Rho,
    Alpha,
    LamInv,
    RhoInv,
    AlphaInv,
  };

  static CatDeriv id(Formula a);
  static CatDeriv comp(CatDeriv g, CatDeriv f);
  static CatDeriv tensor(CatDeriv f, CatDeriv g);
  static CatDeriv lam(Formula a);
  static CatDeriv rho(Formula a);
  static CatDeriv alpha(Formula a, Formula b, Formula c);
  static CatDeriv lam_inv(Formula a);
  static CatDeriv rho_inv(Formula a);
  static CatDeriv alpha_inv(Formula a, Formula b, Formula c);

  Rule rule() const { return node_->rule; }
  // Formula parameters (1 for id/lam/rho and inverses, 3 for alpha).
  const std::vector<Formula>& params() const { return node_->params; }
  // Sub-derivations (Comp: g, f; TensorMap: f, g).
  const std::vector<CatDeriv>& children() const { return node_->children; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const CatDeriv& a, const CatDeriv& b);

 private:
  struct Node {
    Rule rule;
    std::vector<Formula> params;
    std::vector<CatDeriv> children;
    std::size_t size = 1;
  };
  explicit CatDeriv(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static CatDeriv make(Rule r, std::vector<Formula> ps, std::vector<CatDeriv> cs);
  std::shared_ptr<const Node> node_;
};

struct Endpoints {
  Formula source;
  Formula target;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

// Typing under `flags`. Throws TypeError (with a path of child indices) on
// mismatch and FlagError when an inverse is used with its flag off.
Endpoints check_cat(const CatDeriv& d, const Flags& flags);

// [[f | G]] : [[A | G]] ==> [[B | G]], f tensored on the right with one
// identity per context formula.
CatDeriv tensor_ctx(const CatDeriv& f, const Context& g);

// A (x) (J (x) J') ==> (A (x) J) (x) J' for closed J, J'. Needs rn.
CatDeriv alpha_c_inv(const Formula& a, const Formula& j, const Formula& j2);

// Equality of maps: both sides are completed to sequent derivations and
// focused; the focused derivations are compared structurally.
bool cat_equal(const CatDeriv& f, const CatDeriv& g, const Flags& flags);

// ---- serialization ------------------------------------------------------
//   (id "A") (comp g f) (tensor f g) (lam "A") (rho "A") (alpha "A" "B" "C")
//   (laminv "A") (rhoinv "A") (alphainv "A" "B" "C")
std::string to_sexpr(const CatDeriv& d);
CatDeriv parse_cat_deriv(std::string_view text);

}  // namespace skew
