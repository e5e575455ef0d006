#include <cctype>

#include "algkit/polynomial.hpp"

namespace algkit {

namespace {

struct Token {
  enum Type { integer, identifier, plus, minus, star, slash, caret, lparen, rparen, end } type;
  std::string_view text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      current_ = {Token::end, {}, pos_};
      return;
    }
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Token::integer, src_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      current_ = {Token::identifier, src_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Token::plus, src_.substr(start, 1), start}; return;
      case '-': current_ = {Token::minus, src_.substr(start, 1), start}; return;
      case '*': current_ = {Token::star, src_.substr(start, 1), start}; return;
      case '/': current_ = {Token::slash, src_.substr(start, 1), start}; return;
      case '^': current_ = {Token::caret, src_.substr(start, 1), start}; return;
      case '(': current_ = {Token::lparen, src_.substr(start, 1), start}; return;
      case ')': current_ = {Token::rparen, src_.substr(start, 1), start}; return;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Token::end, {}, 0};
};

class Parser {
public:
  Parser(std::string_view src, const VarSpace& space) : lex_(src), space_(space) {}

  Polynomial run() {
    Polynomial p = expr();
    const Token& t = lex_.peek();
    if (t.type != Token::end) throw ParseError("unexpected trailing input", t.pos);
    return p;
  }

private:
  Polynomial expr() {
    bool negate = false;
    if (lex_.peek().type == Token::plus) {
      lex_.take();
    } else if (lex_.peek().type == Token::minus) {
      lex_.take();
      negate = true;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      const Token::Type t = lex_.peek().type;
      if (t == Token::plus) {
        lex_.take();
        acc += term();
      } else if (t == Token::minus) {
        lex_.take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().type == Token::star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (lex_.peek().type == Token::caret) {
      lex_.take();
      return base.pow(take_uint("exponent"));
    }
    return base;
  }

  Polynomial atom() {
    const Token t = lex_.peek();
    switch (t.type) {
      case Token::integer: {
        lex_.take();
        Rational value = Rational::parse(t.text);
        if (lex_.peek().type == Token::slash) {
          lex_.take();
          const Token d = lex_.peek();
          unsigned den = take_uint("denominator");
          if (den == 0) throw ParseError("zero denominator", d.pos);
          value = value / Rational(static_cast<long>(den));
        }
        return Polynomial::constant(space_, value);
      }
      case Token::identifier: {
        lex_.take();
        auto v = space_.lookup(t.text);
        if (!v) throw ParseError("unknown identifier '" + std::string(t.text) + "'", t.pos);
        return Polynomial::variable(space_, *v);
      }
      case Token::lparen: {
        lex_.take();
        Polynomial inner = expr();
        const Token close = lex_.peek();
        if (close.type != Token::rparen) throw ParseError("expected ')'", close.pos);
        lex_.take();
        return inner;
      }
      default:
        throw ParseError("expected a number, identifier, or '('", t.pos);
    }
  }

  unsigned take_uint(const char* what) {
    const Token t = lex_.peek();
    if (t.type != Token::integer)
      throw ParseError(std::string("expected a nonnegative integer ") + what, t.pos);
    lex_.take();
    unsigned long v = 0;
    for (char c : t.text) {
      v = v * 10 + static_cast<unsigned long>(c - '0');
      if (v > (1u << 20)) throw ParseError(std::string(what) + " too large", t.pos);
    }
    return static_cast<unsigned>(v);
  }

  Lexer lex_;
  const VarSpace& space_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const VarSpace& space) {
  Parser p(src, space);
  return p.run();
}

}  // namespace algkit
