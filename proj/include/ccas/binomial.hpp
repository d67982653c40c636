#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "ccas/errors.hpp"

namespace ccas {

/// Exact clique count. 128-bit unsigned; every operation on it is checked.
using Count = unsigned __int128;

inline constexpr Count kCountMax = std::numeric_limits<Count>::max();

inline std::string to_string(Count value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline Count checked_add(Count a, Count b) {
  if (a > kCountMax - b) {
    throw OverflowError("clique count addition " + to_string(a) + " + " +
                        to_string(b) + " exceeds 128-bit range");
  }
  return a + b;
}

inline Count checked_mul(Count a, Count b) {
  if (a != 0 && b > kCountMax / a) {
    throw OverflowError("clique count product " + to_string(a) + " * " +
                        to_string(b) + " exceeds 128-bit range");
  }
  return a * b;
}

inline bool fits_u64(Count value) {
  return value <= std::numeric_limits<std::uint64_t>::max();
}

namespace detail {

inline Count gcd(Count a, Count b) {
  while (b != 0) {
    Count t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// C(n, r), exact. Zero when r < 0 or r > n. Throws OverflowError naming the
/// coefficient if the result does not fit in 128 bits.
///
/// Multiplicative form with the divisor cancelled against the running value
/// first, so no intermediate exceeds the final result by more than a factor
/// of (n - r + i) / gcd.
inline Count binomial(std::uint64_t n, std::int64_t r) {
  if (r < 0 || static_cast<std::uint64_t>(r) > n) return 0;
  std::uint64_t rr = std::min<std::uint64_t>(static_cast<std::uint64_t>(r),
                                             n - static_cast<std::uint64_t>(r));
  Count result = 1;
  for (std::uint64_t i = 1; i <= rr; ++i) {
    // result * (n - rr + i) / i is an integer: C(n - rr + i, i).
    Count numerator = n - rr + i;
    Count divisor = i;
    Count g = detail::gcd(result, divisor);
    result /= g;
    divisor /= g;
    numerator /= divisor;  // exact: gcd(result, divisor) == 1
    if (numerator != 0 && result > kCountMax / numerator) {
      throw OverflowError("binomial C(" + std::to_string(n) + ", " +
                          std::to_string(r) + ") exceeds 128-bit range");
    }
    result *= numerator;
  }
  return result;
}

}  // namespace ccas
