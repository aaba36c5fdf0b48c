#include "skewcat/bridge.hpp"

#include "skewcat/error.hpp"

namespace skew {

namespace {

using D = CatDeriv;
using S = SeqDeriv;
using SR = SeqDeriv::Rule;

Context slice(const Context& g, std::size_t from, std::size_t to) {
  return Context(g.begin() + static_cast<std::ptrdiff_t>(from),
                 g.begin() + static_cast<std::ptrdiff_t>(to));
}

// [[X | G]] ==> X (x) [[- | G]]
D phi(const Formula& x, const Context& g) {
  if (g.empty()) return D::rho(x);
  Context init(g.begin(), g.end() - 1);
  const Formula& d = g.back();
  return D::comp(D::alpha(x, interp_antecedent(std::nullopt, init), d),
                 D::tensor(phi(x, init), D::id(d)));
}

D sound_rec(const S& f, const Flags& flags) {
  const Sequent& c = f.conclusion();
  switch (f.rule()) {
    case SR::Ax: return D::id(c.succedent);
    case SR::IR: return D::id(Formula::unit());
    case SR::Pass: {
      const Formula& a = c.context.front();
      return D::comp(sound_rec(f.premise(0), flags),
                     tensor_ctx(D::lam(a), slice(c.context, 1, c.context.size())));
    }
    case SR::IL:
    case SR::OtL:
      return sound_rec(f.premise(0), flags);
    case SR::OtR: {
      const Sequent& p = f.premise(0).conclusion();
      Context delta = slice(c.context, f.pos(), c.context.size());
      return D::comp(D::tensor(sound_rec(f.premise(0), flags), sound_rec(f.premise(1), flags)),
                     phi(interp_antecedent(p.stoup, p.context), delta));
    }
    case SR::OtRem: {
      const Formula& b = f.premise(1).conclusion().succedent;
      return D::comp(D::tensor(sound_rec(f.premise(0), flags), D::id(b)),
                     D::comp(D::lam_inv(b), sound_rec(f.premise(1), flags)));
    }
    case SR::IC:
    case SR::JJC:
    case SR::OtLctx: {
      std::size_t k = f.pos();
      Formula x = interp_antecedent(c.stoup, slice(c.context, 0, k));
      Context rest = slice(c.context, k + 1, c.context.size());
      const Formula& m = c.context[k];
      D step = f.rule() == SR::IC    ? D::rho_inv(x)
               : f.rule() == SR::JJC ? alpha_c_inv(x, m.left(), m.right())
                                     : D::alpha_inv(x, m.left(), m.right());
      return D::comp(sound_rec(f.premise(0), flags), tensor_ctx(step, rest));
    }
  }
  throw Error("sound: unknown rule");
}

// Canonical derivation of S | G --> [[S | G]].
S unfold(const Stoup& s, const Context& g) {
  if (g.empty()) return s ? S::ax(*s) : S::ir();
  Context init(g.begin(), g.end() - 1);
  return S::otr(unfold(s, init), S::pass(S::ax(g.back())));
}

S cmplt_rec(const D& f, const Flags& flags) {
  const auto& p = f.params();
  const auto& ch = f.children();
  switch (f.rule()) {
    case D::Rule::Id: return S::ax(p[0]);
    case D::Rule::Comp:
      return scut(cmplt_rec(ch[1], flags), cmplt_rec(ch[0], flags), flags);
    case D::Rule::TensorMap:
      return S::otl(S::otr(cmplt_rec(ch[0], flags), S::pass(cmplt_rec(ch[1], flags))));
    case D::Rule::Lam: return S::otl(S::il(S::pass(S::ax(p[0]))));
    case D::Rule::Rho: return S::otr(S::ax(p[0]), S::ir());
    case D::Rule::Alpha:
      return S::otl(S::otl(
          S::otr(S::ax(p[0]), S::pass(S::otr(S::ax(p[1]), S::pass(S::ax(p[2])))))));
    case D::Rule::LamInv: return S::otrem(S::ir(), S::ax(p[0]));
    case D::Rule::RhoInv: return S::otl(S::ic(0, S::ax(p[0])));
    case D::Rule::AlphaInv:
      return S::otl(S::otlctx(
          0, S::otr(S::otr(S::ax(p[0]), S::pass(S::ax(p[1]))), S::pass(S::ax(p[2])))));
  }
  throw Error("cmplt: unknown rule");
}

}  // namespace

CatDeriv sound(const SeqDeriv& f, const Flags& flags) {
  check_seq(f, flags);
  return sound_rec(f, flags);
}

SeqDeriv cmplt(const CatDeriv& f, const Flags& flags) {
  check_cat(f, flags);
  return cmplt_rec(f, flags);
}

SeqDeriv cmplt(const CatDeriv& f, const Stoup& s, const Context& g, const Flags& flags) {
  Endpoints e = check_cat(f, flags);
  Formula src = interp_antecedent(s, g);
  if (e.source != src)
    throw TypeError("cmplt: source " + print_formula(e.source) + " differs from " +
                    print_formula(src));
  if (!s && g.empty()) return scut(S::ir(), cmplt_rec(f, flags), flags);
  if (s && g.empty()) return cmplt_rec(f, flags);
  return scut(unfold(s, g), cmplt_rec(f, flags), flags);
}

std::vector<CatDeriv> hom_enumerate(const Flags& flags, const Formula& a, const Formula& c,
                                    const SearchOptions& opts) {
  std::vector<CatDeriv> out;
  for (const auto& d : search(flags, FocSequent{Phase::C, a, {}, {}, c}, opts))
    out.push_back(sound_rec(emb(d, flags), flags));
  return out;
}

bool cat_equal(const CatDeriv& f, const CatDeriv& g, const Flags& flags) {
  Endpoints ef = check_cat(f, flags);
  Endpoints eg = check_cat(g, flags);
  if (ef != eg) return false;
  return focus(cmplt_rec(f, flags), flags) == focus(cmplt_rec(g, flags), flags);
}

}  // namespace skew
