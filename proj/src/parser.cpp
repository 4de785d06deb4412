#include "lojex/parser.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>

namespace lojex {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }
  [[nodiscard]] char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }
  [[nodiscard]] bool at_end() { return peek() == '\0'; }
  [[nodiscard]] std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a number");
    }
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class PolyParser {
public:
  PolyParser(std::string_view text, std::string xvar, std::string yvar)
      : cur_(text), xvar_(std::move(xvar)), yvar_(std::move(yvar)) {}

  BiPoly parse() {
    if (cur_.at_end()) {
      cur_.fail("empty expression");
    }
    BiPoly p = expr();
    if (!cur_.at_end()) {
      cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
    }
    return p;
  }

private:
  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (cur_.accept('+')) {
        acc += term();
      } else if (cur_.accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      const char c = cur_.peek();
      if (cur_.accept('*')) {
        acc = acc * unary();
      } else if (c == '/') {
        cur_.accept('/');
        (void)cur_.peek();
        const std::size_t at = cur_.pos();
        const BiPoly d = unary();
        if (d.is_zero()) {
          throw ParseError("division by zero", at);
        }
        if (d.total_degree() > 0) {
          throw ParseError("division by a non-constant", at);
        }
        acc = acc * BiPoly(d.value_at_origin().inverse());
      } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c)) != 0) {
        // Juxtaposition such as 2x or x(y+1).
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    if (cur_.accept('-')) {
      return -unary();
    }
    if (cur_.accept('+')) {
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    if (cur_.accept('^')) {
      const unsigned e = exponent();
      return base.pow(e);
    }
    return base;
  }

  unsigned exponent() {
    const char c = cur_.peek();
    const std::size_t at = cur_.pos();
    Integer e;
    if (c == '(') {
      cur_.accept('(');
      if (cur_.peek() == '+') {
        cur_.accept('+');
      }
      if (std::isdigit(static_cast<unsigned char>(cur_.peek())) == 0) {
        throw ParseError("exponent must be a non-negative integer constant", at);
      }
      e = cur_.integer();
      cur_.expect(')');
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      e = cur_.integer();
    } else {
      throw ParseError("exponent must be a non-negative integer constant", at);
    }
    if (e > 10000) {
      throw ParseError("exponent too large", at);
    }
    return static_cast<unsigned>(e.get_ui());
  }

  BiPoly primary() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.accept('(');
      BiPoly p = expr();
      cur_.expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      return BiPoly(Rat(cur_.integer()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const std::size_t at = cur_.pos();
      const std::string name = cur_.identifier();
      if (name == xvar_) {
        return BiPoly::x();
      }
      if (name == yvar_) {
        return BiPoly::y();
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    if (c == '\0') {
      cur_.fail("unexpected end of input");
    }
    cur_.fail(std::string("unexpected '") + c + "'");
  }

  Cursor cur_;
  std::string xvar_;
  std::string yvar_;
};

Rat rational_literal(Cursor &cur) {
  const Integer n = cur.integer();
  if (cur.peek() == '/') {
    cur.accept('/');
    const std::size_t at = cur.pos();
    const Integer d = cur.integer();
    if (d == 0) {
      throw ParseError("zero denominator", at);
    }
    return Rat(n, d);
  }
  return Rat(n);
}

} // namespace

BiPoly parse_poly(std::string_view text, const std::string &xvar, const std::string &yvar) {
  return PolyParser(text, xvar, yvar).parse();
}

std::vector<std::pair<Rat, Rat>> parse_arc(std::string_view text, const std::string &yvar) {
  Cursor cur(text);
  std::map<Rat, Rat> acc;
  if (cur.at_end()) {
    cur.fail("empty arc");
  }
  std::string compact;
  std::remove_copy_if(text.begin(), text.end(), std::back_inserter(compact),
                      [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; });
  if (compact == "0") {
    return {};
  }
  bool first = true;
  while (!cur.at_end()) {
    Rat sign(1);
    if (cur.accept('-')) {
      sign = Rat(-1);
    } else if (cur.accept('+')) {
      // explicit plus
    } else if (!first) {
      cur.fail(std::string("unexpected '") + cur.peek() + "'");
    }
    first = false;
    Rat coeff(1);
    const std::size_t term_at = cur.pos();
    if (std::isdigit(static_cast<unsigned char>(cur.peek())) != 0) {
      coeff = rational_literal(cur);
      cur.accept('*');
    } else if (cur.peek() == '(') {
      cur.accept('(');
      Rat s(1);
      if (cur.accept('-')) {
        s = Rat(-1);
      }
      coeff = s * rational_literal(cur);
      cur.expect(')');
      cur.accept('*');
    }
    const std::size_t at = cur.pos();
    if (cur.identifier() != yvar) {
      throw ParseError("arc terms must be c*" + yvar + "^e with e > 0", term_at);
    }
    Rat e(1);
    if (cur.accept('^')) {
      if (cur.accept('(')) {
        e = rational_literal(cur);
        cur.expect(')');
      } else {
        e = Rat(cur.integer());
      }
    }
    if (e.sign() <= 0) {
      throw ParseError("arc exponents must be positive", at);
    }
    acc[e] += sign * coeff;
  }
  std::vector<std::pair<Rat, Rat>> out;
  for (const auto &[e, c] : acc) {
    if (!c.is_zero()) {
      out.emplace_back(e, c);
    }
  }
  return out;
}

} // namespace lojex
