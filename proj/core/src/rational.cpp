#include "hyperlc/rational.hpp"

#include <cctype>
#include <string>

#include "hyperlc/errors.hpp"

namespace hyperlc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    value = make_rational(parse_integer(text.substr(0, slash), whole),
                          parse_integer(text.substr(slash + 1), whole));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Integer ip = int_part.empty() ? Integer(0) : parse_integer(int_part, whole);
    Integer fp = frac_part.empty() ? Integer(0) : parse_integer(frac_part, whole);
    value = make_rational(ip * scale + fp, scale);
  } else {
    value = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace hyperlc
