#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewcat/formula.hpp"
#include "skewcat/seqcalc.hpp"

namespace skew {

// Directed generators of the derivation congruence. The table in
// docs/rewrite-rules.md lists each one with its left- and right-hand side.
enum class RewriteRule : std::uint8_t {
  EtaUnit,          // ax_I -> il ir
  EtaTensor,        // ax_{A*B} -> otl (otr (ax A, pass ax B))
  OtrPass,          // otr (pass f, g) -> pass (otr (f, g))
  OtrIL,            // otr (il f, g) -> il (otr (f, g))
  OtrOtL,           // otr (otl f, g) -> otl (otr (f, g))
  OtrPassEm,        // ln: otr (f, pass g) -> pass (otrem (f, g)), f : - | --> A
  OtremIL,          // ln: otrem (f, il g) -> il (otr (f, g))
  OtremOtL,         // ln: otrem (f, otl g) -> otl (otrem (f, g))
  PassIL,           // rn: pass (il f) -> ic 0 f
  IcIc,             // rn: ic a (ic b f) -> ic (b+1) (ic a f), b >= a
  JjcIc,            // rn: jjc a (ic b f) -> ic (b-1) (jjc a f), b >= a+2
  PassIc,           // rn: pass (ic a f) -> ic (a+1) (pass f)
  ILIc,             // rn: il (ic a f) -> ic a (il f)
  OtLIc,            // rn: otl (ic m f) -> ic (m-1) (otl f), m >= 1
  OtrIcLeft,        // rn: otr (ic a f, g) -> ic a (otr (f, g))
  OtrIcRight,       // rn: otr (f, ic a g) -> ic (|G|+a) (otr (f, g))
  PassOtLClosed,    // rn: pass (otl f) -> jjc 0 (pass f), stoup of f and next formula closed
  JjcJjc,           // rn: jjc a (jjc b f) -> jjc (b-1) (jjc a f), b >= a+2
  IcJjc,            // rn: ic a (jjc b f) -> jjc (b+1) (ic a f), b >= a
  PassJjc,          // rn: pass (jjc a f) -> jjc (a+1) (pass f)
  ILJjc,            // rn: il (jjc a f) -> jjc a (il f)
  OtLJjc,           // rn: otl (jjc m f) -> jjc (m-1) (otl f), m >= 1
  OtrJjcLeft,       // rn: otr (jjc a f, g) -> jjc a (otr (f, g))
  OtrJjcRight,      // rn: otr (f, jjc a g) -> jjc (|G|+a) (otr (f, g))
  CtxCtx,           // an: otlctx a (otlctx b f) -> otlctx (b-1) (otlctx a f), b >= a+2
  PassCtx,          // an: pass (otlctx a f) -> otlctx (a+1) (pass f)
  ILCtx,            // an: il (otlctx a f) -> otlctx a (il f)
  OtLCtx,           // an: otl (otlctx m f) -> otlctx (m-1) (otl f), m >= 1
  OtrCtxLeft,       // an: otr (otlctx a f, g) -> otlctx a (otr (f, g))
  OtrCtxRight,      // an: otr (f, otlctx a g) -> otlctx (|G|+a) (otr (f, g))
  PassOtL,          // an: pass (otl f) -> otlctx 0 (pass f)
  OtremIc,          // ln rn: otrem (f, ic a g) -> ic a (otrem (f, g))
  OtremJjc,         // ln rn: otrem (f, jjc a g) -> jjc a (otrem (f, g))
  OtremCtx,         // ln an: otrem (f, otlctx a g) -> otlctx a (otrem (f, g))
  JjcToCtx,         // rn an: jjc a f -> otlctx a f
  IcCtx,            // rn an: ic a (otlctx b f) -> otlctx (b+1) (ic a f), b >= a
  CtxIc,            // rn an: otlctx a (ic b f) -> ic (b-1) (otlctx a f), b >= a+2
};

inline constexpr std::size_t kRewriteRuleCount = 37;

const char* rewrite_rule_name(RewriteRule r);
// Whether the generator belongs to the calculus selected by `flags`.
bool rewrite_rule_enabled(RewriteRule r, const Flags& flags);
std::vector<RewriteRule> all_rewrite_rules();

// Result of rule `r` at the root of `t`, if `t` is an instance of its
// left-hand side.
std::optional<SeqDeriv> apply_rule_at_root(RewriteRule r, const SeqDeriv& t, const Flags& flags);

struct Redex {
  std::vector<std::size_t> path;  // premise indices from the root
  RewriteRule rule;
};

// Every (position, enabled rule) pair with a match, positions in pre-order.
std::vector<Redex> find_redexes(const SeqDeriv& t, const Flags& flags);
SeqDeriv apply_redex(const SeqDeriv& t, const Redex& r, const Flags& flags);
bool is_normal(const SeqDeriv& t, const Flags& flags);

enum class Strategy { Innermost, Outermost };

// 10^6 unless SKEWCAT_MAX_STEPS is set.
std::size_t default_step_cap();

struct RewriteStats {
  std::size_t steps = 0;
};

// Rewrites to the normal form. When several rules match one node the first
// in declaration order is used. Throws Error when the step cap is exceeded.
SeqDeriv rewrite_nf(const SeqDeriv& f, const Flags& flags,
                    Strategy strategy = Strategy::Innermost,
                    std::size_t max_steps = default_step_cap(),
                    RewriteStats* stats = nullptr);

// Rebuilds `t` with new premises (same rule and position).
SeqDeriv with_premises(const SeqDeriv& t, std::vector<SeqDeriv> premises);

}  // namespace skew
