#include "irr/parser.hpp"

#include <algorithm>
#include <cctype>

#include "irr/errors.hpp"

namespace irr {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<Var>& allowed) : text_(text), allowed_(allowed) {}

  MPoly parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MPoly factor() {
    MPoly b = base();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("exponent must be a natural number literal", pos_);
      }
      std::size_t start = pos_;
      Integer e = digits();
      if (e > 10000) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly base() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t slash = pos_;
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw ParseError("expected denominator", pos_);
        }
        den = digits();
        if (den == 0) throw ParseError("zero denominator", slash);
      }
      Rational q(num, den);
      q.canonicalize();
      return MPoly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (Var v : allowed_) {
        if (var_name(v) == name) return var(v);
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<Var>& allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<Var>& allowed) { return Parser(text, allowed).parse(); }

}  // namespace irr
