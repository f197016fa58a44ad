#pragma once

#include <cctype>
#include <string>
#include <utility>

#include "curvetop/bipoly.hpp"
#include "curvetop/errors.hpp"

namespace curvetop {

// Recursive-descent parser for polynomial text. Grammar (EBNF in the repo
// docs): operators + - * ^, parentheses, integer and rational literals
// ("3/4"), and implicit multiplication between a numeric literal and a
// variable ("10x^2"). Adjacent identifiers are not multiplied implicitly.
namespace parser_detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t at = pos_;
    if (pos_ >= s_.size()) {
      cur_ = {Tok::End, "", at};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      cur_ = {Tok::Number, s_.substr(b, pos_ - b), at};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      cur_ = {Tok::Ident, s_.substr(b, pos_ - b), at};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': cur_ = {Tok::Plus, "+", at}; return;
      case '-': cur_ = {Tok::Minus, "-", at}; return;
      case '*': cur_ = {Tok::Star, "*", at}; return;
      case '/': cur_ = {Tok::Slash, "/", at}; return;
      case '^': cur_ = {Tok::Caret, "^", at}; return;
      case '(': cur_ = {Tok::LParen, "(", at}; return;
      case ')': cur_ = {Tok::RParen, ")", at}; return;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", at);
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, std::pair<std::string, std::string> vars)
      : lex_(text), xvar_(std::move(vars.first)), yvar_(std::move(vars.second)) {}

  BiPoly parse() {
    BiPoly p = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) throw SyntaxError("unexpected trailing input", t.offset);
    return p;
  }

 private:
  static constexpr unsigned kMaxExponent = 4096;

  BiPoly expr() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    BiPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        acc = acc + term();
      } else if (k == Tok::Minus) {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Tok::Star) {
        lex_.take();
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  BiPoly factor() {
    Token t = lex_.peek();
    if (t.kind == Tok::Number) {
      lex_.take();
      Rational v = Rational::from_string(t.text);
      if (lex_.peek().kind == Tok::Slash) {
        lex_.take();
        Token d = lex_.peek();
        if (d.kind != Tok::Number)
          throw SyntaxError("expected integer denominator after '/'", d.offset);
        lex_.take();
        Integer den(d.text);
        if (den == 0) throw SyntaxError("zero denominator", d.offset);
        v = Rational(v.num(), den);
      }
      BiPoly lit(v);
      // Implicit multiplication: a numeric literal immediately followed by a
      // variable, as in "10x^2*y^2". The exponent binds to the variable.
      if (lex_.peek().kind == Tok::Ident) return lit * factor();
      if (lex_.peek().kind == Tok::Caret) return pow_poly(lit, exponent());
      return lit;
    }
    BiPoly base = atom();
    if (lex_.peek().kind == Tok::Caret) base = pow_poly(base, exponent());
    return base;
  }

  unsigned exponent() {
    lex_.take();  // '^'
    Token e = lex_.peek();
    if (e.kind != Tok::Number) throw SyntaxError("expected integer exponent after '^'", e.offset);
    lex_.take();
    unsigned long ev = 0;
    try {
      ev = std::stoul(e.text);
    } catch (...) {
      throw SyntaxError("exponent out of range", e.offset);
    }
    if (ev > kMaxExponent) throw SyntaxError("exponent too large", e.offset);
    return static_cast<unsigned>(ev);
  }

  BiPoly atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::Ident: {
        lex_.take();
        if (t.text == xvar_) return BiPoly::var_x();
        if (t.text == yvar_) return BiPoly::var_y();
        throw UnknownVariableError(t.text, t.offset);
      }
      case Tok::LParen: {
        lex_.take();
        BiPoly inner = expr();
        Token close = lex_.peek();
        if (close.kind != Tok::RParen) throw SyntaxError("expected ')'", close.offset);
        lex_.take();
        return inner;
      }
      case Tok::Slash:
        throw SyntaxError("'/' is only valid inside a rational literal", t.offset);
      default:
        throw SyntaxError("expected a number, variable or '('", t.offset);
    }
  }

  static BiPoly pow_poly(const BiPoly& b, unsigned e) {
    BiPoly r(Rational(1));
    BiPoly base = b;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  Lexer lex_;
  std::string xvar_, yvar_;
};

}  // namespace parser_detail

inline BiPoly parse_polynomial(const std::string& text,
                               std::pair<std::string, std::string> var_names = {"x", "y"}) {
  return parser_detail::Parser(text, std::move(var_names)).parse();
}

}  // namespace curvetop
