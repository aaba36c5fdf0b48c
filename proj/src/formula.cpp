#include "skewcat/formula.hpp"

#include <cctype>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "skewcat/error.hpp"

namespace skew {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct AtomTable {
  std::mutex mu;
  std::unordered_map<std::string, std::int32_t> ids;
  std::vector<std::unique_ptr<std::string>> names;
};

AtomTable& atom_table() {
  static AtomTable table;
  return table;
}

}  // namespace

std::int32_t intern_atom(std::string_view name) {
  auto& t = atom_table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return it->second;
  auto id = static_cast<std::int32_t>(t.names.size());
  t.names.push_back(std::make_unique<std::string>(name));
  t.ids.emplace(std::string(name), id);
  return id;
}

const std::string& atom_name(std::int32_t id) {
  auto& t = atom_table();
  std::lock_guard lock(t.mu);
  return *t.names.at(static_cast<std::size_t>(id));
}

Formula Formula::atom(std::string_view name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::string(name);
  n->atom_id = intern_atom(name);
  n->closed = false;
  n->hash = mix(0xa70, static_cast<std::size_t>(n->atom_id));
  return Formula(std::move(n));
}

Formula Formula::unit() {
  static const Formula u = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unit;
    n->hash = 0x1u;
    return Formula(std::move(n));
  }();
  return u;
}

Formula Formula::tensor(Formula left, Formula right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->size = 1 + left.size() + right.size();
  n->closed = left.is_closed() && right.is_closed();
  n->hash = mix(mix(0x7e5, left.hash()), right.hash());
  n->left = std::make_unique<Formula>(std::move(left));
  n->right = std::make_unique<Formula>(std::move(right));
  return Formula(std::move(n));
}

const Formula& Formula::left() const {
  if (!node_->left) throw Error("left() of a non-tensor formula");
  return *node_->left;
}

const Formula& Formula::right() const {
  if (!node_->right) throw Error("right() of a non-tensor formula");
  return *node_->right;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size())
    return false;
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.atom_id() == b.atom_id();
    case Formula::Kind::Unit:
      return true;
    case Formula::Kind::Tensor:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Formula::Kind::Atom:
      return a.name() < b.name();
    case Formula::Kind::Unit:
      return false;
    case Formula::Kind::Tensor:
      if (a.left() != b.left()) return a.left() < b.left();
      return a.right() < b.right();
  }
  return false;
}

std::vector<Flags> Flags::every() {
  std::vector<Flags> out;
  for (int bits = 0; bits < 8; ++bits)
    out.push_back({(bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0});
  return out;
}

std::string to_string(const Flags& flags) {
  std::string s;
  if (flags.ln) s += "ln ";
  if (flags.rn) s += "rn ";
  if (flags.an) s += "an ";
  if (s.empty()) return "skew";
  s.pop_back();
  return s;
}

// ---- parsing ------------------------------------------------------------

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class FormulaParser {
 public:
  FormulaParser(std::string_view text, std::size_t base)
      : text_(text), base_(base) {}

  Formula parse_all() {
    skip_ws();
    if (at_end()) fail("expected a formula");
    Formula f = parse_formula();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Formula parse_formula() {
    Formula acc = parse_term();
    for (;;) {
      skip_ws();
      if (!eat_tensor_op()) return acc;
      acc = Formula::tensor(std::move(acc), parse_term());
    }
  }

  Formula parse_term() {
    skip_ws();
    if (at_end()) fail("expected a formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_formula();
      skip_ws();
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (!at_end() && ident_char(text_[pos_])) ++pos_;
      std::string_view id = text_.substr(start, pos_ - start);
      if (id == "I") return Formula::unit();
      return Formula::atom(id);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool eat_tensor_op() {
    if (at_end()) return false;
    if (text_[pos_] == '*') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "(x)") {
      pos_ += 3;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x8A\x97") {  // U+2297
      pos_ += 3;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, base_ + pos_);
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

Formula parse_formula_at(std::string_view text, std::size_t base) {
  return FormulaParser(text, base).parse_all();
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return parse_formula_at(text, 0);
}

Sequent parse_sequent(std::string_view text) {
  std::size_t turnstile = text.find("|-");
  std::size_t turnstile_len = 2;
  if (turnstile == std::string_view::npos) {
    turnstile = text.find("\xE2\x8A\xA2");  // U+22A2
    turnstile_len = 3;
  }
  if (turnstile == std::string_view::npos)
    throw ParseError("expected '|-' in sequent", text.size());

  Sequent seq{std::nullopt, {}, Formula::unit()};
  std::size_t succ_off = turnstile + turnstile_len;
  std::string_view succ = text.substr(succ_off);
  seq.succedent = parse_formula_at(succ, succ_off);

  std::string_view lhs = text.substr(0, turnstile);
  std::size_t bar = lhs.find('|');
  if (bar == std::string_view::npos) {
    // Sugar: "A |- C", or "|- C" for the empty antecedent.
    std::size_t off = 0;
    std::string_view a = trim(lhs, &off);
    if (!a.empty()) seq.stoup = parse_formula_at(a, off);
    return seq;
  }

  std::size_t off = 0;
  std::string_view stoup = trim(lhs.substr(0, bar), &off);
  if (stoup.empty()) throw ParseError("expected a stoup ('-' or a formula)", bar);
  if (stoup != "-" && stoup != "\xE2\x88\x92")  // also U+2212
    seq.stoup = parse_formula_at(stoup, off);

  std::size_t ctx_off = bar + 1;
  std::string_view ctx = lhs.substr(ctx_off);
  std::size_t probe = 0;
  if (trim(ctx, &probe).empty()) return seq;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = ctx.find(',', start);
    std::string_view piece = ctx.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    std::size_t poff = ctx_off + start;
    std::string_view item = trim(piece, &poff);
    if (item.empty()) throw ParseError("empty context entry", poff);
    seq.context.push_back(parse_formula_at(item, poff));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return seq;
}

// ---- printing -----------------------------------------------------------

namespace {

void print_into(const Formula& f, std::string& out, bool nested) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Unit:
      out += 'I';
      return;
    case Formula::Kind::Tensor:
      if (nested) out += '(';
      print_into(f.left(), out, true);
      out += " * ";
      print_into(f.right(), out, true);
      if (nested) out += ')';
      return;
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out, false);
  return out;
}

std::string print_stoup(const Stoup& s) { return s ? print_formula(*s) : "-"; }

std::string print_context(const Context& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(g[i]);
  }
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::string out = print_stoup(s.stoup) + " |";
  if (!s.context.empty()) out += " " + print_context(s.context);
  out += " |- " + print_formula(s.succedent);
  return out;
}

// ---- frontier and interpretation ---------------------------------------

void append_frontier(const Formula& f, Frontier& out) {
  if (f.is_closed()) return;
  if (f.is_atom()) {
    out.push_back(f.atom_id());
    return;
  }
  append_frontier(f.left(), out);
  append_frontier(f.right(), out);
}

Frontier frontier(const Formula& f) {
  Frontier out;
  append_frontier(f, out);
  return out;
}

Frontier frontier(const Stoup& s) { return s ? frontier(*s) : Frontier{}; }

Frontier frontier(const Context& g) {
  Frontier out;
  for (const auto& f : g) append_frontier(f, out);
  return out;
}

Frontier frontier(const Stoup& s, const Context& g) {
  Frontier out;
  if (s) append_frontier(*s, out);
  for (const auto& f : g) append_frontier(f, out);
  return out;
}

std::vector<std::string> frontier_names(const Frontier& fr) {
  std::vector<std::string> out;
  out.reserve(fr.size());
  for (auto id : fr) out.push_back(atom_name(id));
  return out;
}

Formula interp_stoup(const Stoup& s) { return s ? *s : Formula::unit(); }

Formula interp_antecedent(const Stoup& s, const Context& g) {
  Formula acc = interp_stoup(s);
  for (const auto& f : g) acc = Formula::tensor(std::move(acc), f);
  return acc;
}

}  // namespace skew
