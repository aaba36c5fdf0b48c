// Admissible cuts, act and the restricted unit insertion. All functions
// recurse structurally; the stoup-carrying context cut (ccut_stoup) serves
// both ccut_fma and ccut_stp.
#include "skewcat/error.hpp"
#include "skewcat/seqcalc.hpp"

namespace skew {

namespace {

using D = SeqDeriv;
using R = SeqDeriv::Rule;

class Cutter {
 public:
  explicit Cutter(const Flags& flags) : flags_(flags) {}

  D scut(const D& f, const D& g) {
    switch (f.rule()) {
      case R::Ax:
        return g;
      case R::Pass:
        return D::pass(scut(f.premise(0), g));
      case R::IL:
        return D::il(scut(f.premise(0), g));
      case R::OtL:
        return D::otl(scut(f.premise(0), g));
      case R::IC:
        return D::ic(f.pos(), scut(f.premise(0), g));
      case R::JJC:
        return D::jjc(f.pos(), scut(f.premise(0), g));
      case R::OtLctx:
        return D::otlctx(f.pos(), scut(f.premise(0), g));
      case R::IR:
      case R::OtR:
      case R::OtRem:
        return scut_right(f, g);
    }
    throw Error("scut: unknown rule");
  }

  // f : - | G --> A,  g : S | D0, A, D1 --> C.
  D ccut(const D& f, const D& g, std::size_t n) {
    const std::size_t len = f.conclusion().context.size();
    switch (g.rule()) {
      case R::Pass:
        if (n == 0) return scut(f, g.premise(0));
        return D::pass(ccut(f, g.premise(0), n - 1));
      case R::IL:
        return D::il(ccut(f, g.premise(0), n));
      case R::OtL:
        return D::otl(ccut(f, g.premise(0), n + 1));
      case R::OtR:
        if (n < g.pos()) return D::otr(ccut(f, g.premise(0), n), g.premise(1));
        return D::otr(g.premise(0), ccut(f, g.premise(1), n - g.pos()));
      case R::OtRem:
        return D::otrem(g.premise(0), ccut(f, g.premise(1), n));
      case R::IC: {
        const std::size_t m = g.pos();
        if (m < n) return D::ic(m, ccut(f, g.premise(0), n - 1));
        if (m > n) return D::ic(m + len - 1, ccut(f, g.premise(0), n));
        return ccut_principal(f, g, n);
      }
      case R::JJC:
      case R::OtLctx: {
        const std::size_t m = g.pos();
        if (m < n) return rebuild_join(g.rule(), m, ccut(f, g.premise(0), n + 1));
        if (m > n) return rebuild_join(g.rule(), m + len - 1, ccut(f, g.premise(0), n));
        return ccut_principal(f, g, n);
      }
      case R::Ax:
      case R::IR:
        break;
    }
    throw TypeError("ccut: cut formula is not in the context");
  }

  // f : S' | G --> A,  g : S | D0, A, D1 --> C  gives  S | D0, <<S'>>, G, D1 --> C.
  D ccut_stoup(const D& f, const D& g, std::size_t n) {
    const std::size_t len = 1 + f.conclusion().context.size();
    switch (g.rule()) {
      case R::Pass:
        if (n == 0) {
          if (f.conclusion().stoup) return D::pass(scut(f, g.premise(0)));
          return D::pass(D::il(scut(f, g.premise(0))));
        }
        return D::pass(ccut_stoup(f, g.premise(0), n - 1));
      case R::IL:
        return D::il(ccut_stoup(f, g.premise(0), n));
      case R::OtL:
        return D::otl(ccut_stoup(f, g.premise(0), n + 1));
      case R::OtR:
        if (n < g.pos()) return D::otr(ccut_stoup(f, g.premise(0), n), g.premise(1));
        return D::otr(g.premise(0), ccut_stoup(f, g.premise(1), n - g.pos()));
      case R::OtRem:
        return D::otrem(g.premise(0), ccut_stoup(f, g.premise(1), n));
      case R::IC: {
        const std::size_t m = g.pos();
        if (m < n) return D::ic(m, ccut_stoup(f, g.premise(0), n - 1));
        if (m > n) return D::ic(m + len - 1, ccut_stoup(f, g.premise(0), n));
        return ccut_stoup_principal(f, g, n);
      }
      case R::JJC:
      case R::OtLctx: {
        const std::size_t m = g.pos();
        if (m < n) return rebuild_join(g.rule(), m, ccut_stoup(f, g.premise(0), n + 1));
        if (m > n) return rebuild_join(g.rule(), m + len - 1, ccut_stoup(f, g.premise(0), n));
        return ccut_stoup_principal(f, g, n);
      }
      case R::Ax:
      case R::IR:
        break;
    }
    throw TypeError("ccut: cut formula is not in the context");
  }

  // - | A, G --> C  to  A | G --> C.
  D act(const D& f) {
    switch (f.rule()) {
      case R::Pass:
        return f.premise(0);
      case R::OtR:
        if (f.pos() == 0) return D::otrem(f.premise(0), act(f.premise(1)));
        return D::otr(act(f.premise(0)), f.premise(1));
      case R::IC:
        if (f.pos() == 0) return D::il(f.premise(0));
        return D::ic(f.pos() - 1, act(f.premise(0)));
      case R::JJC:
      case R::OtLctx:
        if (f.pos() == 0) return D::otl(act(f.premise(0)));
        return rebuild_join(f.rule(), f.pos() - 1, act(f.premise(0)));
      default:
        break;
    }
    throw TypeError("act: premise must have an empty stoup and a non-empty context");
  }

  // S | G0, B, G1 --> C  to  S | G0, I, B, G1 --> C.
  D ic_restricted(const D& f, std::size_t n) {
    if (flags_.rn) return D::ic(n, f);
    switch (f.rule()) {
      case R::Pass:
        if (n == 0) return D::pass(D::il(f));
        return D::pass(ic_restricted(f.premise(0), n - 1));
      case R::IL:
        return D::il(ic_restricted(f.premise(0), n));
      case R::OtL:
        return D::otl(ic_restricted(f.premise(0), n + 1));
      case R::OtR:
        if (n < f.pos()) return D::otr(ic_restricted(f.premise(0), n), f.premise(1));
        return D::otr(f.premise(0), ic_restricted(f.premise(1), n - f.pos()));
      case R::OtRem:
        return D::otrem(f.premise(0), ic_restricted(f.premise(1), n));
      case R::OtLctx: {
        const std::size_t m = f.pos();
        if (m < n) return D::otlctx(m, ic_restricted(f.premise(0), n + 1));
        return D::otlctx(m + 1, ic_restricted(f.premise(0), n));
      }
      case R::IC:
      case R::JJC:
      case R::Ax:
      case R::IR:
        break;
    }
    throw TypeError("ic_restricted: no formula right of the insertion point");
  }

 private:
  D rebuild_join(R rule, std::size_t pos, D f) {
    if (rule == R::JJC) return D::jjc(pos, std::move(f));
    return D::otlctx(pos, std::move(f));
  }

  // Decomposition of a context formula by whichever rule the flags allow.
  D join(std::size_t pos, D f) {
    if (flags_.an) return D::otlctx(pos, std::move(f));
    return D::jjc(pos, std::move(f));
  }

  D insert_unit(std::size_t pos, D f) {
    if (flags_.rn) return D::ic(pos, std::move(f));
    return ic_restricted(f, pos);
  }

  // f right rule, g : A | D --> C.
  D scut_right(const D& f, const D& g) {
    const std::size_t gamma = f.conclusion().context.size();
    switch (g.rule()) {
      case R::Ax:
        return f;
      case R::IL:
        // f : - | --> I is ir.
        return g.premise(0);
      case R::OtL: {
        const D& g1 = g.premise(0);
        if (f.rule() == R::OtR) return scut(f.premise(0), ccut(f.premise(1), g1, 0));
        if (f.rule() == R::OtRem) return scut(f.premise(1), act(scut(f.premise(0), g1)));
        break;
      }
      case R::OtR:
        return D::otr(scut(f, g.premise(0)), g.premise(1));
      case R::OtRem:
        if (f.conclusion().stoup) return D::otrem(g.premise(0), scut(f, g.premise(1)));
        return D::otr(g.premise(0), scut(f, g.premise(1)));
      case R::IC:
        return D::ic(g.pos() + gamma, scut(f, g.premise(0)));
      case R::JJC:
      case R::OtLctx:
        return rebuild_join(g.rule(), g.pos() + gamma, scut(f, g.premise(0)));
      case R::Pass:
      case R::IR:
        break;
    }
    throw TypeError("scut: succedent of the first premise differs from the stoup of the second");
  }

  // g = IC/JJC/OtLctx at n, f : - | G --> A.
  D ccut_principal(const D& f, const D& g, std::size_t n) {
    switch (f.rule()) {
      case R::Pass:
        return ccut_stoup(f.premise(0), g, n);
      case R::IC:
        return D::ic(n + f.pos(), ccut(f.premise(0), g, n));
      case R::JJC:
      case R::OtLctx:
        return rebuild_join(f.rule(), n + f.pos(), ccut(f.premise(0), g, n));
      case R::IR:
        return g.premise(0);
      case R::OtR:
        return ccut(f.premise(0), ccut(f.premise(1), g.premise(0), n + 1), n);
      default:
        break;
    }
    throw TypeError("ccut: unexpected first premise at a principal cut");
  }

  // g = IC/JJC/OtLctx at n, f : S' | G --> A.
  D ccut_stoup_principal(const D& f, const D& g, std::size_t n) {
    switch (f.rule()) {
      case R::Ax:
      case R::IR:
        return g;
      case R::Pass:
        return insert_unit(n, ccut_stoup(f.premise(0), g, n));
      case R::IL:
        return ccut_stoup(f.premise(0), g, n);
      case R::OtL:
        return join(n, ccut_stoup(f.premise(0), g, n));
      case R::IC:
        return D::ic(n + 1 + f.pos(), ccut_stoup(f.premise(0), g, n));
      case R::JJC:
      case R::OtLctx:
        return rebuild_join(f.rule(), n + 1 + f.pos(), ccut_stoup(f.premise(0), g, n));
      case R::OtR:
        return ccut_stoup(f.premise(0), ccut(f.premise(1), g.premise(0), n + 1), n);
      case R::OtRem:
        return ccut(f.premise(0), ccut_stoup(f.premise(1), g.premise(0), n + 1), n);
    }
    throw TypeError("ccut: unexpected first premise at a principal cut");
  }

  Flags flags_;
};

void require_cut_formula(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos) {
  const auto& ctx = g.conclusion().context;
  if (pos >= ctx.size()) throw TypeError("ccut: position out of range");
  if (ctx[pos] != f.conclusion().succedent)
    throw TypeError("ccut: cut formula " + print_formula(f.conclusion().succedent) +
                    " differs from context formula " + print_formula(ctx[pos]));
}

}  // namespace

SeqDeriv scut(const SeqDeriv& f, const SeqDeriv& g, const Flags& flags) {
  const auto& s = g.conclusion().stoup;
  if (!s || *s != f.conclusion().succedent)
    throw TypeError("scut: succedent of the first premise differs from the stoup of the second");
  return Cutter(flags).scut(f, g);
}

SeqDeriv ccut(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos, const Flags& flags) {
  if (f.conclusion().stoup) throw TypeError("ccut: first premise must have an empty stoup");
  require_cut_formula(f, g, pos);
  return Cutter(flags).ccut(f, g, pos);
}

SeqDeriv ccut_fma(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos, const Flags& flags) {
  if (!f.conclusion().stoup) throw TypeError("ccut_fma: first premise stoup is empty");
  require_cut_formula(f, g, pos);
  if (!flags.rn) return Cutter(flags).ccut(SeqDeriv::pass(f), g, pos);
  return Cutter(flags).ccut_stoup(f, g, pos);
}

SeqDeriv ccut_stp(const SeqDeriv& f, const SeqDeriv& g, std::size_t pos, const Flags& flags) {
  if (!flags.an) throw FlagError("ccut_stp requires an");
  require_cut_formula(f, g, pos);
  return Cutter(flags).ccut_stoup(f, g, pos);
}

SeqDeriv act_admissible(const SeqDeriv& f, const Flags& flags) {
  if (!flags.ln) throw FlagError("act requires ln");
  const Sequent& s = f.conclusion();
  if (s.stoup || s.context.empty())
    throw TypeError("act: premise must have an empty stoup and a non-empty context");
  return Cutter(flags).act(f);
}

SeqDeriv ic_restricted(const SeqDeriv& f, std::size_t pos, const Flags& flags) {
  if (!flags.an) throw FlagError("ic_restricted requires an");
  if (pos >= f.conclusion().context.size())
    throw TypeError("ic_restricted: no formula right of the insertion point");
  return Cutter(flags).ic_restricted(f, pos);
}

}  // namespace skew
