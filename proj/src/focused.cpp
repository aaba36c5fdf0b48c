#include "skewcat/focused.hpp"

#include "skewcat/error.hpp"
#include "skewcat/sexpr.hpp"

namespace skew {

namespace {

using F = FocDeriv;
using R = FocDeriv::Rule;

[[noreturn]] void mismatch(const char* rule, const std::string& what) {
  throw TypeError(std::string(rule) + ": " + what);
}

void expect_phase(const char* rule, const F& f, Phase p) {
  if (f.conclusion().phase != p)
    mismatch(rule, std::string("premise must be in phase ") + phase_name(p));
}

bool irreducible(const Stoup& s) { return !s || s->is_atom(); }

}  // namespace

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::C: return "C";
    case Phase::L: return "L";
    case Phase::R: return "R";
  }
  return "?";
}

const char* rule_name(FocDeriv::Rule r) {
  switch (r) {
    case R::IC: return "ic";
    case R::OtLctx: return "otlctx";
    case R::Act: return "act";
    case R::SwLC: return "swlc";
    case R::Pass: return "pass";
    case R::IL: return "il";
    case R::OtL: return "otl";
    case R::SwRL: return "swrl";
    case R::Ax: return "ax";
    case R::IR: return "ir";
    case R::OtR: return "otr";
    case R::OtRem: return "otrem";
  }
  return "?";
}

std::string print_foc_sequent(const FocSequent& s) {
  std::string out = std::string(phase_name(s.phase)) + "[" + print_stoup(s.stoup) + " |";
  if (s.phase == Phase::C) {
    if (!s.anteroom.empty()) out += " " + print_context(s.anteroom);
    out += " :";
  }
  if (!s.context.empty()) out += " " + print_context(s.context);
  out += " |- " + print_formula(s.succedent) + "]";
  return out;
}

FocSequent root_sequent(const Sequent& s) {
  return FocSequent{Phase::C, s.stoup, s.context, {}, s.succedent};
}

FocDeriv FocDeriv::make(Rule r, FocSequent concl, std::vector<FocDeriv> ps, std::size_t pos) {
  auto n = std::make_shared<Node>(Node{r, std::move(concl), {}, pos, 1});
  for (const auto& p : ps) n->size += p.size();
  n->premises = std::move(ps);
  return FocDeriv(std::move(n));
}

FocDeriv FocDeriv::ic(FocDeriv f) {
  expect_phase("ic", f, Phase::C);
  FocSequent c = f.conclusion();
  c.anteroom.push_back(Formula::unit());
  return make(R::IC, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::otlctx(FocDeriv f) {
  expect_phase("otlctx", f, Phase::C);
  FocSequent c = f.conclusion();
  if (c.anteroom.size() < 2) mismatch("otlctx", "premise anteroom needs two formulas");
  Formula b = c.anteroom.back();
  c.anteroom.pop_back();
  c.anteroom.back() = Formula::tensor(c.anteroom.back(), b);
  return make(R::OtLctx, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::act(FocDeriv f) {
  expect_phase("act", f, Phase::C);
  FocSequent c = f.conclusion();
  if (c.context.empty()) mismatch("act", "premise passive context is empty");
  c.anteroom.push_back(c.context.front());
  c.context.erase(c.context.begin());
  return make(R::Act, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::swlc(FocDeriv f) {
  expect_phase("swlc", f, Phase::L);
  FocSequent c = f.conclusion();
  c.phase = Phase::C;
  return make(R::SwLC, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::pass(FocDeriv f) {
  expect_phase("pass", f, Phase::L);
  FocSequent c = f.conclusion();
  if (!c.stoup) mismatch("pass", "premise stoup is empty");
  c.context.insert(c.context.begin(), *c.stoup);
  c.stoup.reset();
  return make(R::Pass, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::il(FocDeriv f) {
  expect_phase("il", f, Phase::L);
  FocSequent c = f.conclusion();
  if (c.stoup) mismatch("il", "premise stoup must be empty");
  c.stoup = Formula::unit();
  return make(R::IL, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::otl(FocDeriv f) {
  expect_phase("otl", f, Phase::C);
  FocSequent c = f.conclusion();
  if (!c.stoup) mismatch("otl", "premise stoup is empty");
  if (c.anteroom.size() != 1) mismatch("otl", "premise anteroom must hold exactly one formula");
  c.stoup = Formula::tensor(*c.stoup, c.anteroom[0]);
  c.anteroom.clear();
  c.phase = Phase::L;
  return make(R::OtL, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::swrl(FocDeriv f) {
  expect_phase("swrl", f, Phase::R);
  FocSequent c = f.conclusion();
  c.phase = Phase::L;
  return make(R::SwRL, std::move(c), {std::move(f)}, 0);
}

FocDeriv FocDeriv::ax(Formula atom) {
  if (!atom.is_atom()) mismatch("ax", "focused axiom needs an atom");
  FocSequent c{Phase::R, atom, {}, {}, atom};
  return make(R::Ax, std::move(c), {}, 0);
}

FocDeriv FocDeriv::ir() {
  static const FocDeriv d =
      make(R::IR, FocSequent{Phase::R, std::nullopt, {}, {}, Formula::unit()}, {}, 0);
  return d;
}

FocDeriv FocDeriv::otr(FocDeriv r, FocDeriv g) {
  expect_phase("otr", r, Phase::R);
  expect_phase("otr", g, Phase::L);
  const FocSequent& a = r.conclusion();
  const FocSequent& b = g.conclusion();
  if (b.stoup) mismatch("otr", "second premise stoup must be empty");
  FocSequent c{Phase::R, a.stoup, {}, a.context,
               Formula::tensor(a.succedent, b.succedent)};
  c.context.insert(c.context.end(), b.context.begin(), b.context.end());
  std::size_t k = a.context.size();
  return make(R::OtR, std::move(c), {std::move(r), std::move(g)}, k);
}

FocDeriv FocDeriv::otrem(FocDeriv r, FocDeriv r2) {
  expect_phase("otrem", r, Phase::R);
  expect_phase("otrem", r2, Phase::R);
  const FocSequent& a = r.conclusion();
  const FocSequent& b = r2.conclusion();
  if (a.stoup || !a.context.empty())
    mismatch("otrem", "first premise antecedent must be empty");
  if (!b.stoup || !b.stoup->is_atom()) mismatch("otrem", "second premise stoup must be an atom");
  FocSequent c{Phase::R, b.stoup, {}, b.context, Formula::tensor(a.succedent, b.succedent)};
  return make(R::OtRem, std::move(c), {std::move(r), std::move(r2)}, 0);
}

bool operator==(const FocDeriv& a, const FocDeriv& b) {
  if (a.node_ == b.node_) return true;
  if (a.rule() != b.rule() || a.pos() != b.pos() || a.size() != b.size()) return false;
  if (a.rule() == R::Ax) return a.conclusion().succedent == b.conclusion().succedent;
  return a.premises() == b.premises();
}

// ---- side conditions ----------------------------------------------------

namespace {

void check_at(const F& d, const Flags& fl, std::string& path) {
  const FocSequent& c = d.conclusion();
  switch (d.rule()) {
    case R::IC:
      if (!fl.rn) throw FlagError("ic requires rn", path);
      break;
    case R::OtLctx: {
      const Formula& ab = c.anteroom.back();
      if (!((fl.rn && ab.is_closed()) || fl.an))
        throw FlagError("otlctx requires (rn and a closed formula) or an", path);
      break;
    }
    case R::Act: {
      const Formula& dd = c.anteroom.back();
      if (fl.rn && dd.is_closed())
        throw FlagError("act side condition rn -> D != J violated (D = " + print_formula(dd) +
                            " is closed)",
                        path);
      if (fl.an && dd.is_tensor())
        throw FlagError("act side condition an -> D != A * B violated (D = " +
                            print_formula(dd) + ")",
                        path);
      break;
    }
    case R::SwRL:
      if (!irreducible(c.stoup)) throw FlagError("swrl needs an irreducible stoup", path);
      if (fl.ln && !c.stoup && !c.context.empty())
        throw FlagError("swrl side condition ln and empty stoup -> empty context violated",
                        path);
      break;
    case R::OtRem:
      if (!fl.ln) throw FlagError("otrem requires ln", path);
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    std::size_t len = path.size();
    if (!path.empty()) path += '.';
    path += std::to_string(i);
    check_at(d.premise(i), fl, path);
    path.resize(len);
  }
}

}  // namespace

FocSequent check_foc(const FocDeriv& d, const Flags& flags) {
  std::string path;
  check_at(d, flags, path);
  return d.conclusion();
}

// ---- serialization ------------------------------------------------------

namespace {

void write(const F& d, std::string& out) {
  out += '(';
  out += rule_name(d.rule());
  if (d.rule() == R::Ax) {
    out += ' ';
    out += quote_string(d.conclusion().succedent.name());
  } else if (d.rule() == R::OtR) {
    out += ' ';
    out += std::to_string(d.pos());
  }
  for (const auto& p : d.premises()) {
    out += ' ';
    write(p, out);
  }
  out += ')';
}

F read(const Sexpr& s) {
  if (!s.is_list() || s.head().empty()) throw ParseError("expected a tagged list", s.position);
  const std::string tag(s.head());
  auto arity = [&](std::size_t n) {
    if (s.items.size() != n + 1)
      throw ParseError(tag + " takes " + std::to_string(n) + " arguments", s.position);
  };
  try {
    if (tag == "ic") { arity(1); return F::ic(read(s.items[1])); }
    if (tag == "otlctx") { arity(1); return F::otlctx(read(s.items[1])); }
    if (tag == "act") { arity(1); return F::act(read(s.items[1])); }
    if (tag == "swlc") { arity(1); return F::swlc(read(s.items[1])); }
    if (tag == "pass") { arity(1); return F::pass(read(s.items[1])); }
    if (tag == "il") { arity(1); return F::il(read(s.items[1])); }
    if (tag == "otl") { arity(1); return F::otl(read(s.items[1])); }
    if (tag == "swrl") { arity(1); return F::swrl(read(s.items[1])); }
    if (tag == "ir") { arity(0); return F::ir(); }
    if (tag == "ax") {
      arity(1);
      const Sexpr& a = s.items[1];
      if (a.kind != Sexpr::Kind::String) throw ParseError("expected a quoted atom", a.position);
      Formula f = Formula::unit();
      try {
        f = parse_formula(a.text);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), a.position + 1 + e.position());
      }
      return F::ax(f);
    }
    if (tag == "otr") {
      arity(3);
      const Sexpr& k = s.items[1];
      if (k.kind != Sexpr::Kind::Integer || k.integer < 0)
        throw ParseError("expected a non-negative index", k.position);
      F d = F::otr(read(s.items[2]), read(s.items[3]));
      if (d.pos() != static_cast<std::size_t>(k.integer))
        throw TypeError("otr: split index " + std::to_string(k.integer) +
                        " differs from the first premise's context length " +
                        std::to_string(d.pos()));
      return d;
    }
    if (tag == "otrem") { arity(2); return F::otrem(read(s.items[1]), read(s.items[2])); }
  } catch (const FlagError&) {
    throw;
  } catch (const TypeError& e) {
    if (!e.path().empty()) throw;
    throw TypeError(e.message(), "offset " + std::to_string(s.position));
  }
  throw ParseError("unknown focused rule '" + tag + "'", s.position);
}

void pretty_into(const F& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(d.rule());
  if (d.rule() == R::OtR) out += " " + std::to_string(d.pos());
  out += "  : " + print_foc_sequent(d.conclusion()) + "\n";
  for (const auto& p : d.premises()) pretty_into(p, depth + 1, out);
}

}  // namespace

std::string to_sexpr(const FocDeriv& d) {
  std::string out;
  write(d, out);
  return out;
}

FocDeriv parse_foc_deriv(std::string_view text) { return read(parse_sexpr(text)); }

std::string pretty(const FocDeriv& d) {
  std::string out;
  pretty_into(d, 0, out);
  return out;
}

}  // namespace skew
