#include "kappa0/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace kappa0 {

namespace {

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("invalid digit in integer literal");
  }
  return Int(std::string(s));
}

Rat parse_decimal(std::string_view s) {
  // [sign] digits [. digits] [eE [sign] digits]
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string mantissa;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("decimal literal without digits");
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    std::string exp_text(s.substr(pos + 1));
    if (exp_text.empty()) throw std::invalid_argument("empty exponent");
    std::size_t used = 0;
    exponent = std::stol(exp_text, &used);
    if (used != exp_text.size()) throw std::invalid_argument("invalid exponent");
  } else if (pos != s.size()) {
    throw std::invalid_argument("trailing characters in numeric literal");
  }
  Int num(mantissa.empty() ? "0" : mantissa);
  if (negative) num = -num;
  long shift = exponent - frac_digits;
  Int den = 1;
  if (shift >= 0) {
    for (long i = 0; i < shift; ++i) num *= 10;
  } else {
    for (long i = 0; i < -shift; ++i) den *= 10;
  }
  return Rat(num, den);
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  }
  if (text.find('.') != std::string_view::npos ||
      text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    return parse_decimal(text);
  }
  return Rat(parse_int(text));
}

std::string rat_to_string(const Rat& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

double rat_to_double(const Rat& value) { return value.convert_to<double>(); }

}  // namespace kappa0
