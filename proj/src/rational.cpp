#include "mpec/rational.hpp"

#include <cctype>

namespace mpec {

Ratio parse_decimal_ratio(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  long long num = 0;
  long long den = 1;
  bool seen_digit = false;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw Error("malformed rational literal: " + text);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error("malformed rational literal: " + text);
    seen_digit = true;
    if (num > (1LL << 56)) throw Error("rational literal out of range: " + text);
    num = num * 10 + (c - '0');
    if (seen_dot) {
      if (den > (1LL << 56)) throw Error("rational literal out of range: " + text);
      den *= 10;
    }
  }
  if (!seen_digit) throw Error("malformed rational literal: " + text);
  return Ratio(num, den);
}

std::string to_string(const Ratio& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace mpec
