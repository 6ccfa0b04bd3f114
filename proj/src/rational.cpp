#include "lcgp/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace lcgp {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto bad = [&] { return std::invalid_argument("malformed rational literal '" + s + "'"); };

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  if (pos >= s.size()) throw bad();

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(pos, slash - pos);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    for (char c : num + den)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    Integer d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    value = Rational(Integer(num, 10), d);
    value.canonicalize();
  } else {
    std::string digits;
    Integer scale = 1;
    bool seen_dot = false;
    for (std::size_t i = pos; i < s.size(); ++i) {
      char c = s[i];
      if (c == '.' && !seen_dot) {
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        digits.push_back(c);
        if (seen_dot) scale *= 10;
      } else {
        throw bad();
      }
    }
    if (digits.empty()) throw bad();
    value = Rational(Integer(digits, 10), scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace lcgp
