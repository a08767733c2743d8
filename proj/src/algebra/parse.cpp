#include "toda_rpp/algebra/parse.hpp"

#include <cctype>
#include <string>

#include "toda_rpp/errors.hpp"

namespace toda_rpp {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar s = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!peek_digit()) fail("expected digit");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int signed_int() {
    bool neg = accept('-');
    std::string d = digits();
    if (d.size() > 9) fail("integer too large");
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  Scalar expr() {
    Scalar acc = term();
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

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      int e = signed_int();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  Scalar atom() {
    if (accept('(')) {
      Scalar s = expr();
      expect(')');
      return s;
    }
    if (peek_digit()) return Scalar(mpq_class(digits()));
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected number, variable or '('");
    std::string_view family = text_.substr(start, pos_ - start);
    if (family.size() > 4) fail("variable name longer than four letters");
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      int index = signed_int();
      expect(']');
      return Scalar(Variable(family, index));
    }
    return Scalar(Variable(family));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace toda_rpp
