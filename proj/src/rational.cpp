#include "wrzero/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wrzero {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  std::string s(text);
  // Strip surrounding whitespace.
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.erase(s.begin());
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    value = Rational(Integer(num), Integer(den));
    if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    value.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ipart = s.substr(0, dot);
    std::string fpart = s.substr(dot + 1);
    if (ipart.empty()) ipart = "0";
    if ((!all_digits(ipart)) || (!fpart.empty() && !all_digits(fpart))) {
      throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    }
    Integer scale = 1;
    for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
    Integer numerator = Integer(ipart) * scale + (fpart.empty() ? Integer(0) : Integer(fpart));
    value = Rational(numerator, scale);
    value.canonicalize();
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed integer literal: " + std::string(text));
    }
    value = Rational(Integer(s));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace wrzero
