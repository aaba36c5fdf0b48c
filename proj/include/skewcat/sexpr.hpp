#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace skew {

// Minimal s-expression tree: symbols, integers, double-quoted strings and
// lists. Used by the derivation serializers.
struct Sexpr {
  enum class Kind { Symbol, Integer, String, List };

  Kind kind = Kind::List;
  std::string text;        // Symbol / String payload
  long long integer = 0;   // Integer payload
  std::vector<Sexpr> items;
  std::size_t position = 0;  // byte offset in the source

  bool is_list() const { return kind == Kind::List; }
  // Head symbol of a non-empty list, "" otherwise.
  std::string_view head() const;
};

Sexpr parse_sexpr(std::string_view text);
std::string quote_string(std::string_view s);

}  // namespace skew
