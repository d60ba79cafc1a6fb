#include "arbor/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace arbor {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, char a, char b) : text_(text), a_(a), b_(b) {}

  BiPoly run() {
    BiPoly r = sum();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BiPoly sum() {
    BiPoly acc;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    acc = product();
    if (negate) acc = -acc;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      BiPoly t = product();
      if (c == '+') acc += t;
      else acc -= t;
    }
  }

  bool starts_factor(char c) const {
    if (c == '\0') return false;
    return c == '(' || c == a_ || c == b_ || std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  BiPoly product() {
    BiPoly acc = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        BiPoly d = power();
        if (d.terms().size() != 1 || d.terms().begin()->first != BiPoly::Exponent{0, 0})
          fail("division by a non-constant");
        acc *= Rational(1) / d.terms().begin()->second;
      } else if (starts_factor(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  BiPoly power() {
    BiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  BiPoly atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      BiPoly inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == a_ && c != '\0') {
      ++pos_;
      return BiPoly::A();
    }
    if (c == b_ && c != '\0') {
      ++pos_;
      return BiPoly::B();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return BiPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(c == '\0' ? "unexpected end" : std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  char a_, b_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text, char a, char b) { return ExprParser(text, a, b).run(); }

UniPoly parse_unipoly(std::string_view text, char var) {
  return ExprParser(text, var, '\0').run().coeff_b(0);
}

}  // namespace arbor
