#include "hyperlc/parse.hpp"

#include <cctype>
#include <string>

#include "hyperlc/errors.hpp"

namespace hyperlc {
namespace {

Poly parse_coeff_list(std::string_view text) {
  // text includes the surrounding brackets.
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
  };
  skip_ws();
  if (pos == body.size()) return Poly();
  while (true) {
    skip_ws();
    std::size_t start = pos;
    while (pos < body.size() && body[pos] != ',') ++pos;
    std::string_view item = body.substr(start, pos - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (item.size() >= 2 && (item.front() == '"' || item.front() == '\'') && item.back() == item.front()) {
      item = item.substr(1, item.size() - 2);
    }
    if (item.empty()) throw ParseError("empty entry in coefficient list");
    coeffs.push_back(parse_rational(item));
    if (pos == body.size()) break;
    ++pos;  // ','
  }
  return Poly(std::move(coeffs));
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Poly rhs = term();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return c == '(' || c == 'x' || c == 'X' || std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        Poly rhs = unary();
        if (rhs.degree() != 0) fail("division is only defined by nonzero constants");
        acc *= Rational(1 / rhs.leading());
      } else if (starts_factor(c)) {
        acc *= unary();  // implicit multiplication: 3x, 2(x-1), (x-1)(x+1)
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 4096) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return Poly::x();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return Poly::constant(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty polynomial");
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated coefficient list");
    return parse_coeff_list(text);
  }
  return ExprParser(text).parse();
}

std::string to_coeff_list(const Poly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += "\"" + to_string(p.coeffs()[i]) + "\"";
  }
  return out + "]";
}

}  // namespace hyperlc
