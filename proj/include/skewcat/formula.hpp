#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

// Objects of the free skew monoidal category: atoms, the unit I and the
// tensor. Values are immutable and cheap to copy (shared nodes).
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Unit, Tensor };

  static Formula atom(std::string_view name);
  static Formula unit();
  static Formula tensor(Formula left, Formula right);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_tensor() const { return kind() == Kind::Tensor; }

  // Atom name; empty for non-atoms.
  const std::string& name() const { return node_->name; }
  // Interned atom id, -1 for non-atoms.
  std::int32_t atom_id() const { return node_->atom_id; }
  const Formula& left() const;
  const Formula& right() const;

  // Number of syntax nodes.
  std::size_t size() const { return node_->size; }
  // No atom occurs in the formula.
  bool is_closed() const { return node_->closed; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Total order: by size, then kind, then atom name, then children.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::int32_t atom_id = -1;
    std::unique_ptr<Formula> left;
    std::unique_ptr<Formula> right;
    std::size_t size = 1;
    bool closed = true;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

using Stoup = std::optional<Formula>;
using Context = std::vector<Formula>;

struct Sequent {
  Stoup stoup;
  Context context;
  Formula succedent;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

// Normality flags: left (lambda invertible), right (rho invertible),
// associative (alpha invertible).
struct Flags {
  bool ln = false;
  bool rn = false;
  bool an = false;

  friend bool operator==(const Flags&, const Flags&) = default;

  static Flags none() { return {}; }
  static Flags all() { return {true, true, true}; }
  // The eight settings in binary order (ln is the high bit).
  static std::vector<Flags> every();
};

std::string to_string(const Flags& flags);

// Atom names are interned process-wide; ids are stable for the lifetime of
// the process.
std::int32_t intern_atom(std::string_view name);
const std::string& atom_name(std::int32_t id);

// ---- syntax -------------------------------------------------------------

// Grammar:
//   formula := term (('*' | '(x)' | '⊗') term)*        left-associative
//   term    := 'I' | ident | '(' formula ')'
//   ident   := [A-Za-z_][A-Za-z0-9_']*   (except the reserved 'I')
Formula parse_formula(std::string_view text);

// Sequent text:  S | A1, ..., An |- C   with S either '-' or a formula, or the
// sugar  A |- C  for a stoup formula and an empty context.
Sequent parse_sequent(std::string_view text);

// Top level unparenthesized, every nested tensor parenthesized.
std::string print_formula(const Formula& f);
std::string print_stoup(const Stoup& s);
std::string print_context(const Context& g);
std::string print_sequent(const Sequent& s);

// ---- predicates and interpretation -------------------------------------

using Frontier = std::vector<std::int32_t>;

void append_frontier(const Formula& f, Frontier& out);
Frontier frontier(const Formula& f);
Frontier frontier(const Stoup& s);
Frontier frontier(const Context& g);
// Frontier of stoup followed by context.
Frontier frontier(const Stoup& s, const Context& g);
std::vector<std::string> frontier_names(const Frontier& fr);

inline bool is_closed(const Formula& f) { return f.is_closed(); }

// <<-|>> = I, <<A>> = A.
Formula interp_stoup(const Stoup& s);
// [[S | A1..An]] = (..(<<S>> * A1) * ..) * An.
Formula interp_antecedent(const Stoup& s, const Context& g);

}  // namespace skew
