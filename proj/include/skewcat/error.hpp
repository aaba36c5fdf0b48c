#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace skew {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text. `position` is a byte offset into the parsed input.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error("parse error at " + std::to_string(position) + ": " + msg),
        message_(msg),
        position_(position) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// Ill-typed derivation. `path` locates the offending node as a list of
// premise indices from the root, e.g. "0.1".
class TypeError : public Error {
 public:
  explicit TypeError(const std::string& msg, std::string path = "")
      : Error(path.empty() ? "type error: " + msg
                           : "type error at " + path + ": " + msg),
        message_(msg),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }
  // The message without the location prefix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::string path_;
};

// A flag-gated rule or side condition used while its flag is off (or a side
// condition of the focused calculus fails).
class FlagError : public TypeError {
 public:
  explicit FlagError(const std::string& msg, std::string path = "")
      : TypeError(msg, std::move(path)) {}
};

}  // namespace skew
