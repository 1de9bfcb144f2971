#ifndef HYPERCROSS_BIGCOUNT_HPP
#define HYPERCROSS_BIGCOUNT_HPP

#include <cstdint>
#include <string>

#include "hypercross/errors.hpp"

namespace hypercross {

// Cardinalities are exact 128-bit unsigned integers with checked arithmetic.
// Anything reaching 2^127 raises CountOverflowError instead of wrapping.
using Count128 = unsigned __int128;

inline constexpr Count128 count_limit() { return Count128(1) << 127; }

inline Count128 checked_add(Count128 a, Count128 b) {
  Count128 r = a + b;
  if (r < a || r >= count_limit())
    throw CountOverflowError("count exceeds 2^127");
  return r;
}

inline Count128 checked_mul(Count128 a, Count128 b) {
  if (a == 0 || b == 0) return 0;
  Count128 r = a * b;
  if (r / a != b || r >= count_limit())
    throw CountOverflowError("count exceeds 2^127");
  return r;
}

inline Count128 checked_pow(Count128 base, int exp) {
  Count128 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline std::string to_decimal(Count128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

// Lossless double conversion is impossible above 2^53; callers that need the
// exact value print the decimal form instead.
inline double to_double(Count128 v) {
  return static_cast<double>(v);
}

}  // namespace hypercross

#endif
