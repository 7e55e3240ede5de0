#include "singulocus/poly_parse.hpp"

#include <cctype>

namespace singulocus {
namespace {

class PolyParser {
 public:
  PolyParser(const PolyRingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc(ring_);
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == '-') {  // unary minus inside a product, e.g. x*-y
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(ring_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (ring_->vars[i] == name) return Poly::variable(ring_, i);
      pos_ = start;
      fail("undeclared variable '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    mpz_class num(std::string(s_.substr(start, pos_ - start)));
    mpz_class den = 1;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) fail("expected denominator");
      den = mpz_class(std::string(s_.substr(ds, pos_ - ds)));
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  const PolyRingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PolyRingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace singulocus
