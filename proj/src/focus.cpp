#include "skewcat/error.hpp"
#include "skewcat/focused.hpp"

namespace skew {

namespace {

using F = FocDeriv;
using FR = FocDeriv::Rule;
using S = SeqDeriv;
using SR = SeqDeriv::Rule;

// Maps unfocused derivations of S | G --> C to L-phase derivations of
// S | norm(G) |- C, where norm drops or splits what the C phase decomposes.
class Focuser {
 public:
  explicit Focuser(const Flags& flags) : fl_(flags) {}

  void norm(const Formula& d, Context& out) const {
    if (fl_.rn && d.is_closed()) return;
    if (fl_.an && d.is_tensor()) {
      norm(d.left(), out);
      norm(d.right(), out);
      return;
    }
    out.push_back(d);
  }

  Context norm(const Context& g) const {
    Context out;
    for (const auto& d : g) norm(d, out);
    return out;
  }

  // C-phase derivation of S | om : g |- C over an L-phase derivation `f` of
  // S | norm(om), g |- C.
  F wrap_c(Context om, Context g, const F& f) const {
    if (om.empty()) return F::swlc(f);
    Formula d = om.back();
    om.pop_back();
    if (fl_.rn && d.is_unit()) return F::ic(wrap_c(std::move(om), std::move(g), f));
    if (d.is_tensor() && ((fl_.rn && d.is_closed()) || fl_.an)) {
      om.push_back(d.left());
      om.push_back(d.right());
      return F::otlctx(wrap_c(std::move(om), std::move(g), f));
    }
    g.insert(g.begin(), d);
    return F::act(wrap_c(std::move(om), std::move(g), f));
  }

  // L-phase derivation under the C chain of an otl node.
  static const F& under_chain(const F& otl) {
    const F* c = &otl.premise(0);
    while (c->rule() != FR::SwLC) c = &c->premise(0);
    return c->premise(0);
  }

  // f : A | norm(B), G |- C   gives   A * B | G |- C.
  F otl(const Formula& b, const Context& g, const F& f) const {
    return F::otl(wrap_c({b}, g, f));
  }

  // Rebuilds an otl node over a new L-derivation with the extra context
  // `more` appended.
  F re_otl(const F& otl_node, const Context& more, const F& inner) const {
    const FocSequent& c = otl_node.conclusion();
    Context g = c.context;
    g.insert(g.end(), more.begin(), more.end());
    return otl(c.stoup->right(), g, inner);
  }

  F ax(const Formula& a) const {
    if (a.is_atom()) return F::swrl(F::ax(a));
    if (a.is_unit()) return F::il(F::swrl(F::ir()));
    F right = pass(a.right(), ax(a.right()));
    return otl(a.right(), {}, tensor_r(ax(a.left()), right));
  }

  // f : A | D |- C   gives   - | norm(A), D |- C.
  F pass(const Formula& a, const F& f) const {
    if (fl_.rn && a.is_closed()) return strip(f);
    if (fl_.an && a.is_tensor()) return pass(a.left(), under_chain(f));
    return F::pass(f);
  }

  // f : J | D |- C with J closed (rn)   gives   - | D |- C.
  F strip(const F& f) const {
    if (f.rule() == FR::IL) return f.premise(0);
    if (f.rule() == FR::OtL) return strip(under_chain(f));
    throw Error("focus: unexpected rule under a closed stoup");
  }

  // f : S | G1 |- A,  g : - | G2 |- B   gives   S | G1, G2 |- A * B.
  F tensor_r(const F& f, const F& g) const {
    switch (f.rule()) {
      case FR::Pass: return F::pass(tensor_r(f.premise(0), g));
      case FR::IL: return F::il(tensor_r(f.premise(0), g));
      case FR::OtL:
        return re_otl(f, g.conclusion().context, tensor_r(under_chain(f), g));
      case FR::SwRL: {
        const F& r = f.premise(0);
        if (fl_.ln && !r.conclusion().stoup && g.rule() == FR::Pass)
          return F::pass(tensor_rem(r, g.premise(0)));
        return F::swrl(F::otr(r, g));
      }
      default:
        throw Error("focus: expected an L-phase derivation");
    }
  }

  // r : - | |- A (phase R),  g : A' | G |- B   gives   A' | G |- A * B.
  F tensor_rem(const F& r, const F& g) const {
    switch (g.rule()) {
      case FR::IL: return F::il(tensor_r(F::swrl(r), g.premise(0)));
      case FR::OtL: return re_otl(g, {}, tensor_rem(r, under_chain(g)));
      case FR::SwRL: return F::swrl(F::otrem(r, g.premise(0)));
      default:
        throw Error("focus: unexpected rule under a present stoup");
    }
  }

  F focus_l(const S& f) const {
    switch (f.rule()) {
      case SR::Ax: return ax(f.conclusion().succedent);
      case SR::IR: return F::swrl(F::ir());
      case SR::Pass:
        return pass(*f.premise(0).conclusion().stoup, focus_l(f.premise(0)));
      case SR::IL: return F::il(focus_l(f.premise(0)));
      case SR::OtL: {
        const Sequent& p = f.premise(0).conclusion();
        Context g(p.context.begin() + 1, p.context.end());
        return otl(p.context.front(), norm(g), focus_l(f.premise(0)));
      }
      case SR::OtR: return tensor_r(focus_l(f.premise(0)), focus_l(f.premise(1)));
      case SR::OtRem: {
        F l = focus_l(f.premise(0));
        return tensor_rem(l.premise(0), focus_l(f.premise(1)));
      }
      case SR::IC:
      case SR::JJC:
      case SR::OtLctx:
        return focus_l(f.premise(0));
    }
    throw Error("focus: unknown rule");
  }

  F focus(const S& f) const {
    const Sequent& c = f.conclusion();
    return wrap_c(c.context, {}, focus_l(f));
  }

 private:
  Flags fl_;
};

S emb_rec(const F& d, const Flags& fl) {
  switch (d.rule()) {
    case FR::IC: {
      std::size_t k = d.premise(0).conclusion().anteroom.size();
      return S::ic(k, emb_rec(d.premise(0), fl));
    }
    case FR::OtLctx: {
      std::size_t k = d.conclusion().anteroom.size() - 1;
      S p = emb_rec(d.premise(0), fl);
      return fl.an ? S::otlctx(k, p) : S::jjc(k, p);
    }
    case FR::Act:
    case FR::SwLC:
    case FR::SwRL:
      return emb_rec(d.premise(0), fl);
    case FR::Pass: return S::pass(emb_rec(d.premise(0), fl));
    case FR::IL: return S::il(emb_rec(d.premise(0), fl));
    case FR::OtL: return S::otl(emb_rec(d.premise(0), fl));
    case FR::Ax: return S::ax(d.conclusion().succedent);
    case FR::IR: return S::ir();
    case FR::OtR: return S::otr(emb_rec(d.premise(0), fl), emb_rec(d.premise(1), fl));
    case FR::OtRem: return S::otrem(emb_rec(d.premise(0), fl), emb_rec(d.premise(1), fl));
  }
  throw Error("emb: unknown rule");
}

}  // namespace

FocDeriv focus(const SeqDeriv& f, const Flags& flags) {
  check_seq(f, flags);
  return Focuser(flags).focus(f);
}

SeqDeriv emb(const FocDeriv& d, const Flags& flags) { return emb_rec(d, flags); }

bool seq_equal(const SeqDeriv& f, const SeqDeriv& g, const Flags& flags) {
  if (f.conclusion() != g.conclusion())
    throw TypeError("seq_equal: conclusions differ (" + print_sequent(f.conclusion()) +
                    " vs " + print_sequent(g.conclusion()) + ")");
  return focus(f, flags) == focus(g, flags);
}

}  // namespace skew
