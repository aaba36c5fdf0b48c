#include "skewcat/seqcalc.hpp"

#include "skewcat/error.hpp"
#include "skewcat/sexpr.hpp"

namespace skew {

namespace {

using R = SeqDeriv::Rule;

Formula ot(const Formula& a, const Formula& b) { return Formula::tensor(a, b); }

Context concat(const Context& a, const Context& b) {
  Context out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

[[noreturn]] void mismatch(const char* rule, const std::string& what) {
  throw TypeError(std::string(rule) + ": " + what);
}

}  // namespace

const char* rule_name(SeqDeriv::Rule r) {
  switch (r) {
    case R::Pass: return "pass";
    case R::IL: return "il";
    case R::OtL: return "otl";
    case R::Ax: return "ax";
    case R::IR: return "ir";
    case R::OtR: return "otr";
    case R::OtRem: return "otrem";
    case R::IC: return "ic";
    case R::JJC: return "jjc";
    case R::OtLctx: return "otlctx";
  }
  return "?";
}

SeqDeriv SeqDeriv::make(Rule r, Sequent concl, std::vector<SeqDeriv> ps, std::size_t pos) {
  auto n = std::make_shared<Node>(Node{r, std::move(concl), {}, pos, 1});
  for (const auto& p : ps) n->size += p.size();
  n->premises = std::move(ps);
  return SeqDeriv(std::move(n));
}

SeqDeriv SeqDeriv::pass(SeqDeriv f) {
  const Sequent& s = f.conclusion();
  if (!s.stoup) mismatch("pass", "premise stoup is empty");
  Context ctx{*s.stoup};
  ctx.insert(ctx.end(), s.context.begin(), s.context.end());
  Sequent c{std::nullopt, std::move(ctx), s.succedent};
  return make(R::Pass, std::move(c), {std::move(f)}, 0);
}

SeqDeriv SeqDeriv::il(SeqDeriv f) {
  const Sequent& s = f.conclusion();
  if (s.stoup) mismatch("il", "premise stoup must be empty");
  Sequent c{Formula::unit(), s.context, s.succedent};
  return make(R::IL, std::move(c), {std::move(f)}, 0);
}

SeqDeriv SeqDeriv::otl(SeqDeriv f) {
  const Sequent& s = f.conclusion();
  if (!s.stoup) mismatch("otl", "premise stoup is empty");
  if (s.context.empty()) mismatch("otl", "premise context is empty");
  Sequent c{ot(*s.stoup, s.context[0]), Context(s.context.begin() + 1, s.context.end()),
            s.succedent};
  return make(R::OtL, std::move(c), {std::move(f)}, 0);
}

SeqDeriv SeqDeriv::ax(Formula a) {
  Sequent c{a, {}, a};
  return make(R::Ax, std::move(c), {}, 0);
}

SeqDeriv SeqDeriv::ir() {
  static const SeqDeriv d = make(R::IR, Sequent{std::nullopt, {}, Formula::unit()}, {}, 0);
  return d;
}

SeqDeriv SeqDeriv::otr(SeqDeriv f, SeqDeriv g) {
  const Sequent& a = f.conclusion();
  const Sequent& b = g.conclusion();
  if (b.stoup) mismatch("otr", "second premise stoup must be empty");
  Sequent c{a.stoup, concat(a.context, b.context), ot(a.succedent, b.succedent)};
  std::size_t k = a.context.size();
  return make(R::OtR, std::move(c), {std::move(f), std::move(g)}, k);
}

SeqDeriv SeqDeriv::otrem(SeqDeriv f, SeqDeriv g) {
  const Sequent& a = f.conclusion();
  const Sequent& b = g.conclusion();
  if (a.stoup || !a.context.empty())
    mismatch("otrem", "first premise antecedent must be empty");
  if (!b.stoup) mismatch("otrem", "second premise stoup is empty");
  Sequent c{b.stoup, b.context, ot(a.succedent, b.succedent)};
  return make(R::OtRem, std::move(c), {std::move(f), std::move(g)}, 0);
}

SeqDeriv SeqDeriv::ic(std::size_t pos, SeqDeriv f) {
  const Sequent& s = f.conclusion();
  if (pos > s.context.size()) mismatch("ic", "position out of range");
  Context ctx = s.context;
  ctx.insert(ctx.begin() + static_cast<std::ptrdiff_t>(pos), Formula::unit());
  Sequent c{s.stoup, std::move(ctx), s.succedent};
  return make(R::IC, std::move(c), {std::move(f)}, pos);
}

namespace {

Sequent join_at(const char* rule, const Sequent& s, std::size_t pos) {
  if (pos + 2 > s.context.size())
    mismatch(rule, "position out of range");
  Context ctx;
  ctx.reserve(s.context.size() - 1);
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i == pos) {
      ctx.push_back(ot(s.context[i], s.context[i + 1]));
      ++i;
    } else {
      ctx.push_back(s.context[i]);
    }
  }
  return Sequent{s.stoup, std::move(ctx), s.succedent};
}

}  // namespace

SeqDeriv SeqDeriv::jjc(std::size_t pos, SeqDeriv f) {
  Sequent c = join_at("jjc", f.conclusion(), pos);
  if (!c.context[pos].is_closed()) mismatch("jjc", "decomposed formulas must be closed");
  return make(R::JJC, std::move(c), {std::move(f)}, pos);
}

SeqDeriv SeqDeriv::otlctx(std::size_t pos, SeqDeriv f) {
  Sequent c = join_at("otlctx", f.conclusion(), pos);
  return make(R::OtLctx, std::move(c), {std::move(f)}, pos);
}

bool operator==(const SeqDeriv& a, const SeqDeriv& b) {
  if (a.node_ == b.node_) return true;
  if (a.rule() != b.rule() || a.pos() != b.pos() || a.size() != b.size()) return false;
  if (a.rule() == R::Ax) return a.conclusion().succedent == b.conclusion().succedent;
  return a.premises() == b.premises();
}

// ---- flag checking ------------------------------------------------------

namespace {

void check_at(const SeqDeriv& d, const Flags& flags, std::string& path) {
  switch (d.rule()) {
    case R::OtRem:
      if (!flags.ln) throw FlagError("otrem requires ln", path);
      break;
    case R::IC:
      if (!flags.rn) throw FlagError("ic requires rn", path);
      break;
    case R::JJC:
      if (!flags.rn) throw FlagError("jjc requires rn", path);
      break;
    case R::OtLctx:
      if (!flags.an) throw FlagError("otlctx requires an", path);
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    std::size_t len = path.size();
    if (!path.empty()) path += '.';
    path += std::to_string(i);
    check_at(d.premise(i), flags, path);
    path.resize(len);
  }
}

}  // namespace

Sequent check_seq(const SeqDeriv& d, const Flags& flags) {
  std::string path;
  check_at(d, flags, path);
  return d.conclusion();
}

// ---- serialization ------------------------------------------------------

namespace {

void write(const SeqDeriv& d, std::string& out) {
  out += '(';
  out += rule_name(d.rule());
  switch (d.rule()) {
    case R::Ax:
      out += ' ';
      out += quote_string(print_formula(d.conclusion().succedent));
      break;
    case R::OtR:
    case R::IC:
    case R::JJC:
    case R::OtLctx:
      out += ' ';
      out += std::to_string(d.pos());
      break;
    default:
      break;
  }
  for (const auto& p : d.premises()) {
    out += ' ';
    write(p, out);
  }
  out += ')';
}

std::size_t index_arg(const Sexpr& s) {
  if (s.kind != Sexpr::Kind::Integer || s.integer < 0)
    throw ParseError("expected a non-negative index", s.position);
  return static_cast<std::size_t>(s.integer);
}

SeqDeriv read(const Sexpr& s) {
  if (!s.is_list() || s.head().empty()) throw ParseError("expected a tagged list", s.position);
  const std::string tag(s.head());
  auto arity = [&](std::size_t n) {
    if (s.items.size() != n + 1)
      throw ParseError(tag + " takes " + std::to_string(n) + " arguments", s.position);
  };
  try {
    if (tag == "pass") { arity(1); return SeqDeriv::pass(read(s.items[1])); }
    if (tag == "il") { arity(1); return SeqDeriv::il(read(s.items[1])); }
    if (tag == "otl") { arity(1); return SeqDeriv::otl(read(s.items[1])); }
    if (tag == "ir") { arity(0); return SeqDeriv::ir(); }
    if (tag == "ax") {
      arity(1);
      const Sexpr& a = s.items[1];
      if (a.kind != Sexpr::Kind::String) throw ParseError("expected a quoted formula", a.position);
      try {
        return SeqDeriv::ax(parse_formula(a.text));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), a.position + 1 + e.position());
      }
    }
    if (tag == "otr") {
      arity(3);
      std::size_t k = index_arg(s.items[1]);
      SeqDeriv d = SeqDeriv::otr(read(s.items[2]), read(s.items[3]));
      if (d.pos() != k)
        throw TypeError("otr: split index " + std::to_string(k) +
                        " differs from the first premise's context length " +
                        std::to_string(d.pos()));
      return d;
    }
    if (tag == "otrem") { arity(2); return SeqDeriv::otrem(read(s.items[1]), read(s.items[2])); }
    if (tag == "ic") { arity(2); return SeqDeriv::ic(index_arg(s.items[1]), read(s.items[2])); }
    if (tag == "jjc") { arity(2); return SeqDeriv::jjc(index_arg(s.items[1]), read(s.items[2])); }
    if (tag == "otlctx") {
      arity(2);
      return SeqDeriv::otlctx(index_arg(s.items[1]), read(s.items[2]));
    }
  } catch (const FlagError&) {
    throw;
  } catch (const TypeError& e) {
    if (!e.path().empty()) throw;
    throw TypeError(e.message(), "offset " + std::to_string(s.position));
  }
  throw ParseError("unknown sequent rule '" + tag + "'", s.position);
}

void pretty_into(const SeqDeriv& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(d.rule());
  if (d.rule() == R::OtR || d.rule() == R::IC || d.rule() == R::JJC ||
      d.rule() == R::OtLctx)
    out += " " + std::to_string(d.pos());
  out += "  : " + print_sequent(d.conclusion()) + "\n";
  for (const auto& p : d.premises()) pretty_into(p, depth + 1, out);
}

}  // namespace

std::string to_sexpr(const SeqDeriv& d) {
  std::string out;
  write(d, out);
  return out;
}

SeqDeriv parse_seq_deriv(std::string_view text) { return read(parse_sexpr(text)); }

std::string pretty(const SeqDeriv& d) {
  std::string out;
  pretty_into(d, 0, out);
  return out;
}

}  // namespace skew
