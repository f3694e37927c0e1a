#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "mpec/errors.hpp"

namespace mpec {

// Exact non-negative rational on 64-bit components. All solver parameters
// (gamma, theta) and ratio checks go through cross-multiplied integer
// comparisons so results are identical on every platform.
struct Ratio {
  long long num = 0;
  long long den = 1;

  constexpr Ratio() = default;
  Ratio(long long n, long long d) : num(n), den(d) {
    internal_check(d > 0 && n >= 0, "ratio components out of range");
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Ratio&) const = default;
};

// 1 - 1/e truncated (rounded down) at the 10th decimal. Used both as the
// coverage-gain factor of the budgeted solver and inside the contraction
// factor theta; truncating downward keeps every derived bound conservative.
inline constexpr long long kOneMinusInvENum = 6321205588LL;
inline constexpr long long kOneMinusInvEDen = 10000000000LL;

// a <= r * b, exactly.
inline bool le_scaled(long long a, const Ratio& r, long long b) {
  return static_cast<__int128>(a) * r.den <= static_cast<__int128>(r.num) * b;
}

// a < r * b, exactly.
inline bool lt_scaled(long long a, const Ratio& r, long long b) {
  return static_cast<__int128>(a) * r.den < static_cast<__int128>(r.num) * b;
}

// Parses a non-negative decimal literal ("2", "2.5", "0.75") into an exact
// rational. Throws on malformed input or loss of range.
Ratio parse_decimal_ratio(const std::string& text);

std::string to_string(const Ratio& r);

}  // namespace mpec
