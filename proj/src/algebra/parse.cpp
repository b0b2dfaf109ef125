#include <cctype>

#include "dasep/algebra/bivar_poly.hpp"
#include "dasep/error.hpp"

namespace dasep {
namespace {

// expr   := ['-'] term (('+' | '-') term)*
// term   := factor (('*' factor) | ('/' integer))*
// factor := base ['^' integer]
// base   := integer | 'u' | 't' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BivarPoly parse() {
    BivarPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

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

  Integer integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  BivarPoly expr() {
    BivarPoly acc = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BivarPoly term() {
    BivarPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        Integer d = integer();
        if (d == 0) fail("division by zero");
        acc *= Rational(Integer(1), d);
      } else {
        return acc;
      }
    }
  }

  BivarPoly factor() {
    BivarPoly b = base();
    if (accept('^')) {
      Integer e = integer();
      if (!e.fits_uint_p()) fail("exponent too large");
      b = pow(b, static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  BivarPoly base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return BivarPoly(Rational(integer()));
    if (c == 'u') {
      ++pos_;
      return BivarPoly::u();
    }
    if (c == 't') {
      ++pos_;
      return BivarPoly::t();
    }
    if (accept('(')) {
      BivarPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('-')) return -factor();
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

BivarPoly BivarPoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace dasep
