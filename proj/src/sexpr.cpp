#include "skewcat/sexpr.hpp"

#include <cctype>

#include "skewcat/error.hpp"

namespace skew {

std::string_view Sexpr::head() const {
  if (kind != Kind::List || items.empty() || items[0].kind != Kind::Symbol)
    return {};
  return items[0].text;
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Sexpr read_top() {
    skip_ws();
    Sexpr s = read();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("trailing input after s-expression", pos_);
    return s;
  }

 private:
  Sexpr read() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    Sexpr out;
    out.position = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      out.kind = Sexpr::Kind::List;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("missing ')'", pos_);
        if (text_[pos_] == ')') {
          ++pos_;
          return out;
        }
        out.items.push_back(read());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", pos_);
    if (c == '"') {
      ++pos_;
      out.kind = Sexpr::Kind::String;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out.text += text_[pos_++];
      }
      if (pos_ >= text_.size()) throw ParseError("unterminated string", out.position);
      ++pos_;
      return out;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"')
      ++pos_;
    std::string tok(text_.substr(start, pos_ - start));
    bool numeric = !tok.empty() &&
                   (std::isdigit(static_cast<unsigned char>(tok[0])) ||
                    (tok[0] == '-' && tok.size() > 1));
    for (std::size_t i = 1; numeric && i < tok.size(); ++i)
      numeric = std::isdigit(static_cast<unsigned char>(tok[i])) != 0;
    if (numeric) {
      out.kind = Sexpr::Kind::Integer;
      out.integer = std::stoll(tok);
    } else {
      out.kind = Sexpr::Kind::Symbol;
      out.text = std::move(tok);
    }
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Sexpr parse_sexpr(std::string_view text) { return Reader(text).read_top(); }

std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace skew
