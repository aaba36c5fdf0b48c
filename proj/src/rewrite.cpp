#include "skewcat/rewrite.hpp"

#include <cstdlib>
#include <functional>
#include <unordered_set>

#include "skewcat/error.hpp"

namespace skew {

namespace {

using D = SeqDeriv;
using R = SeqDeriv::Rule;
using W = RewriteRule;

bool is(const D& t, R r) { return t.rule() == r; }

struct RuleMeta {
  const char* name;
  bool ln, rn, an;  // required flags
};

constexpr RuleMeta kMeta[kRewriteRuleCount] = {
    {"eta-unit", false, false, false},
    {"eta-tensor", false, false, false},
    {"otr-pass", false, false, false},
    {"otr-il", false, false, false},
    {"otr-otl", false, false, false},
    {"otr-pass-em", true, false, false},
    {"otrem-il", true, false, false},
    {"otrem-otl", true, false, false},
    {"pass-il", false, true, false},
    {"ic-ic", false, true, false},
    {"jjc-ic", false, true, false},
    {"pass-ic", false, true, false},
    {"il-ic", false, true, false},
    {"otl-ic", false, true, false},
    {"otr-ic-left", false, true, false},
    {"otr-ic-right", false, true, false},
    {"pass-otl-closed", false, true, false},
    {"jjc-jjc", false, true, false},
    {"ic-jjc", false, true, false},
    {"pass-jjc", false, true, false},
    {"il-jjc", false, true, false},
    {"otl-jjc", false, true, false},
    {"otr-jjc-left", false, true, false},
    {"otr-jjc-right", false, true, false},
    {"ctx-ctx", false, false, true},
    {"pass-ctx", false, false, true},
    {"il-ctx", false, false, true},
    {"otl-ctx", false, false, true},
    {"otr-ctx-left", false, false, true},
    {"otr-ctx-right", false, false, true},
    {"pass-otl", false, false, true},
    {"otrem-ic", true, true, false},
    {"otrem-jjc", true, true, false},
    {"otrem-ctx", true, false, true},
    {"jjc-to-ctx", false, true, true},
    {"ic-ctx", false, true, true},
    {"ctx-ic", false, true, true},
};

// Context rule (ic / jjc / otlctx) rebuilt at a new position.
D ctx_rule(R r, std::size_t pos, D f) {
  switch (r) {
    case R::IC: return D::ic(pos, std::move(f));
    case R::JJC: return D::jjc(pos, std::move(f));
    default: return D::otlctx(pos, std::move(f));
  }
}

// The common commutation shapes, parameterized by the context rule `c`.
std::optional<D> pass_over(const D& t, R c) {
  if (!is(t, R::Pass) || !is(t.premise(0), c)) return std::nullopt;
  const D& in = t.premise(0);
  return ctx_rule(c, in.pos() + 1, D::pass(in.premise(0)));
}

std::optional<D> il_over(const D& t, R c) {
  if (!is(t, R::IL) || !is(t.premise(0), c)) return std::nullopt;
  const D& in = t.premise(0);
  return ctx_rule(c, in.pos(), D::il(in.premise(0)));
}

std::optional<D> otl_over(const D& t, R c) {
  if (!is(t, R::OtL) || !is(t.premise(0), c) || t.premise(0).pos() == 0) return std::nullopt;
  const D& in = t.premise(0);
  return ctx_rule(c, in.pos() - 1, D::otl(in.premise(0)));
}

std::optional<D> otr_left_over(const D& t, R c) {
  if (!is(t, R::OtR) || !is(t.premise(0), c)) return std::nullopt;
  const D& in = t.premise(0);
  return ctx_rule(c, in.pos(), D::otr(in.premise(0), t.premise(1)));
}

std::optional<D> otr_right_over(const D& t, R c) {
  if (!is(t, R::OtR) || !is(t.premise(1), c)) return std::nullopt;
  const D& in = t.premise(1);
  return ctx_rule(c, t.pos() + in.pos(), D::otr(t.premise(0), in.premise(0)));
}

std::optional<D> otrem_over(const D& t, R c) {
  if (!is(t, R::OtRem) || !is(t.premise(1), c)) return std::nullopt;
  const D& in = t.premise(1);
  return ctx_rule(c, in.pos(), D::otrem(t.premise(0), in.premise(0)));
}

// outer a (inner b f) -> inner' (b + shift) (outer a f) when b >= a + min_gap.
std::optional<D> swap_ctx(const D& t, R outer, R inner, std::size_t min_gap, long shift) {
  if (!is(t, outer) || !is(t.premise(0), inner)) return std::nullopt;
  const D& in = t.premise(0);
  const std::size_t a = t.pos();
  const std::size_t b = in.pos();
  if (b < a + min_gap) return std::nullopt;
  D lowered = ctx_rule(outer, a, in.premise(0));
  return ctx_rule(inner, static_cast<std::size_t>(static_cast<long>(b) + shift),
                  std::move(lowered));
}

}  // namespace

const char* rewrite_rule_name(RewriteRule r) { return kMeta[static_cast<int>(r)].name; }

bool rewrite_rule_enabled(RewriteRule r, const Flags& flags) {
  const RuleMeta& m = kMeta[static_cast<int>(r)];
  return (!m.ln || flags.ln) && (!m.rn || flags.rn) && (!m.an || flags.an);
}

std::vector<RewriteRule> all_rewrite_rules() {
  std::vector<RewriteRule> out;
  for (std::size_t i = 0; i < kRewriteRuleCount; ++i) out.push_back(static_cast<RewriteRule>(i));
  return out;
}

std::optional<SeqDeriv> apply_rule_at_root(RewriteRule r, const SeqDeriv& t, const Flags& flags) {
  if (!rewrite_rule_enabled(r, flags)) return std::nullopt;
  switch (r) {
    case W::EtaUnit:
      if (is(t, R::Ax) && t.conclusion().succedent.is_unit()) return D::il(D::ir());
      return std::nullopt;
    case W::EtaTensor: {
      if (!is(t, R::Ax) || !t.conclusion().succedent.is_tensor()) return std::nullopt;
      const Formula& c = t.conclusion().succedent;
      return D::otl(D::otr(D::ax(c.left()), D::pass(D::ax(c.right()))));
    }
    case W::OtrPass:
      if (!is(t, R::OtR) || !is(t.premise(0), R::Pass)) return std::nullopt;
      return D::pass(D::otr(t.premise(0).premise(0), t.premise(1)));
    case W::OtrIL:
      if (!is(t, R::OtR) || !is(t.premise(0), R::IL)) return std::nullopt;
      return D::il(D::otr(t.premise(0).premise(0), t.premise(1)));
    case W::OtrOtL:
      if (!is(t, R::OtR) || !is(t.premise(0), R::OtL)) return std::nullopt;
      return D::otl(D::otr(t.premise(0).premise(0), t.premise(1)));
    case W::OtrPassEm: {
      if (!is(t, R::OtR) || !is(t.premise(1), R::Pass)) return std::nullopt;
      const Sequent& s = t.premise(0).conclusion();
      if (s.stoup || !s.context.empty()) return std::nullopt;
      return D::pass(D::otrem(t.premise(0), t.premise(1).premise(0)));
    }
    case W::OtremIL:
      if (!is(t, R::OtRem) || !is(t.premise(1), R::IL)) return std::nullopt;
      return D::il(D::otr(t.premise(0), t.premise(1).premise(0)));
    case W::OtremOtL:
      if (!is(t, R::OtRem) || !is(t.premise(1), R::OtL)) return std::nullopt;
      return D::otl(D::otrem(t.premise(0), t.premise(1).premise(0)));
    case W::PassIL:
      if (!is(t, R::Pass) || !is(t.premise(0), R::IL)) return std::nullopt;
      return D::ic(0, t.premise(0).premise(0));
    case W::IcIc:
      return swap_ctx(t, R::IC, R::IC, 0, +1);
    case W::JjcIc:
      return swap_ctx(t, R::JJC, R::IC, 2, -1);
    case W::PassIc:
      return pass_over(t, R::IC);
    case W::ILIc:
      return il_over(t, R::IC);
    case W::OtLIc:
      return otl_over(t, R::IC);
    case W::OtrIcLeft:
      return otr_left_over(t, R::IC);
    case W::OtrIcRight:
      return otr_right_over(t, R::IC);
    case W::PassOtLClosed: {
      if (!is(t, R::Pass) || !is(t.premise(0), R::OtL)) return std::nullopt;
      const Formula& s = *t.premise(0).conclusion().stoup;
      if (!s.is_closed()) return std::nullopt;
      return D::jjc(0, D::pass(t.premise(0).premise(0)));
    }
    case W::JjcJjc:
      return swap_ctx(t, R::JJC, R::JJC, 2, -1);
    case W::IcJjc:
      return swap_ctx(t, R::IC, R::JJC, 0, +1);
    case W::PassJjc:
      return pass_over(t, R::JJC);
    case W::ILJjc:
      return il_over(t, R::JJC);
    case W::OtLJjc:
      return otl_over(t, R::JJC);
    case W::OtrJjcLeft:
      return otr_left_over(t, R::JJC);
    case W::OtrJjcRight:
      return otr_right_over(t, R::JJC);
    case W::CtxCtx:
      return swap_ctx(t, R::OtLctx, R::OtLctx, 2, -1);
    case W::PassCtx:
      return pass_over(t, R::OtLctx);
    case W::ILCtx:
      return il_over(t, R::OtLctx);
    case W::OtLCtx:
      return otl_over(t, R::OtLctx);
    case W::OtrCtxLeft:
      return otr_left_over(t, R::OtLctx);
    case W::OtrCtxRight:
      return otr_right_over(t, R::OtLctx);
    case W::PassOtL:
      if (!is(t, R::Pass) || !is(t.premise(0), R::OtL)) return std::nullopt;
      return D::otlctx(0, D::pass(t.premise(0).premise(0)));
    case W::OtremIc:
      return otrem_over(t, R::IC);
    case W::OtremJjc:
      return otrem_over(t, R::JJC);
    case W::OtremCtx:
      return otrem_over(t, R::OtLctx);
    case W::JjcToCtx:
      if (!is(t, R::JJC)) return std::nullopt;
      return D::otlctx(t.pos(), t.premise(0));
    case W::IcCtx:
      return swap_ctx(t, R::IC, R::OtLctx, 0, +1);
    case W::CtxIc:
      return swap_ctx(t, R::OtLctx, R::IC, 2, -1);
  }
  return std::nullopt;
}

SeqDeriv with_premises(const SeqDeriv& t, std::vector<SeqDeriv> ps) {
  switch (t.rule()) {
    case R::Pass: return D::pass(std::move(ps[0]));
    case R::IL: return D::il(std::move(ps[0]));
    case R::OtL: return D::otl(std::move(ps[0]));
    case R::OtR: return D::otr(std::move(ps[0]), std::move(ps[1]));
    case R::OtRem: return D::otrem(std::move(ps[0]), std::move(ps[1]));
    case R::IC: return D::ic(t.pos(), std::move(ps[0]));
    case R::JJC: return D::jjc(t.pos(), std::move(ps[0]));
    case R::OtLctx: return D::otlctx(t.pos(), std::move(ps[0]));
    case R::Ax:
    case R::IR:
      return t;
  }
  return t;
}

namespace {

std::optional<std::pair<W, D>> first_root_redex(const D& t, const Flags& flags) {
  for (std::size_t i = 0; i < kRewriteRuleCount; ++i) {
    auto r = static_cast<W>(i);
    if (auto out = apply_rule_at_root(r, t, flags)) return std::make_pair(r, std::move(*out));
  }
  return std::nullopt;
}

void collect(const D& t, const Flags& flags, std::vector<std::size_t>& path,
             std::vector<Redex>& out) {
  for (std::size_t i = 0; i < kRewriteRuleCount; ++i) {
    auto r = static_cast<W>(i);
    if (apply_rule_at_root(r, t, flags)) out.push_back({path, r});
  }
  for (std::size_t i = 0; i < t.premises().size(); ++i) {
    path.push_back(i);
    collect(t.premise(i), flags, path, out);
    path.pop_back();
  }
}

D replace_at(const D& t, const std::vector<std::size_t>& path, std::size_t depth,
             const std::function<D(const D&)>& fn) {
  if (depth == path.size()) return fn(t);
  std::vector<D> ps = t.premises();
  ps.at(path[depth]) = replace_at(ps[path[depth]], path, depth + 1, fn);
  return with_premises(t, std::move(ps));
}

class Normalizer {
 public:
  Normalizer(const Flags& flags, std::size_t cap) : flags_(flags), cap_(cap) {}

  D innermost(const D& t) {
    if (normal_.count(t.id())) return t;
    std::vector<D> ps;
    bool changed = false;
    ps.reserve(t.premises().size());
    for (const auto& p : t.premises()) {
      ps.push_back(innermost(p));
      changed = changed || !ps.back().same(p);
    }
    D cur = changed ? with_premises(t, std::move(ps)) : t;
    auto red = first_root_redex(cur, flags_);
    if (!red) {
      mark(cur);
      return cur;
    }
    tick();
    D out = innermost(red->second);
    mark(out);
    return out;
  }

  D outermost(D t) {
    for (;;) {
      std::vector<std::size_t> path;
      std::optional<std::pair<W, D>> hit;
      if (!find_first(t, path, hit)) return t;
      tick();
      D replacement = hit->second;
      t = replace_at(t, path, 0, [&](const D&) { return replacement; });
    }
  }

  std::size_t steps() const { return steps_; }

 private:
  bool find_first(const D& t, std::vector<std::size_t>& path,
                  std::optional<std::pair<W, D>>& hit) {
    if (auto r = first_root_redex(t, flags_)) {
      hit = std::move(r);
      return true;
    }
    for (std::size_t i = 0; i < t.premises().size(); ++i) {
      path.push_back(i);
      if (find_first(t.premise(i), path, hit)) return true;
      path.pop_back();
    }
    return false;
  }

  void tick() {
    if (++steps_ > cap_)
      throw Error("rewrite_nf: step cap of " + std::to_string(cap_) +
                  " exceeded; the rewrite system should terminate, so this is a bug");
  }

  void mark(const D& t) {
    normal_.insert(t.id());
    keep_.push_back(t);
  }

  Flags flags_;
  std::size_t cap_;
  std::size_t steps_ = 0;
  std::unordered_set<const void*> normal_;
  std::vector<D> keep_;
};

}  // namespace

std::vector<Redex> find_redexes(const SeqDeriv& t, const Flags& flags) {
  std::vector<Redex> out;
  std::vector<std::size_t> path;
  collect(t, flags, path, out);
  return out;
}

SeqDeriv apply_redex(const SeqDeriv& t, const Redex& r, const Flags& flags) {
  return replace_at(t, r.path, 0, [&](const D& sub) {
    auto out = apply_rule_at_root(r.rule, sub, flags);
    if (!out) throw Error(std::string("apply_redex: rule ") + rewrite_rule_name(r.rule) +
                          " does not match at the given position");
    return *out;
  });
}

bool is_normal(const SeqDeriv& t, const Flags& flags) {
  if (first_root_redex(t, flags)) return false;
  for (const auto& p : t.premises())
    if (!is_normal(p, flags)) return false;
  return true;
}

std::size_t default_step_cap() {
  if (const char* env = std::getenv("SKEWCAT_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

SeqDeriv rewrite_nf(const SeqDeriv& f, const Flags& flags, Strategy strategy,
                    std::size_t max_steps, RewriteStats* stats) {
  Normalizer n(flags, max_steps);
  SeqDeriv out = strategy == Strategy::Innermost ? n.innermost(f) : n.outermost(f);
  if (stats) stats->steps = n.steps();
  return out;
}

}  // namespace skew
