#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ompstat {

// Coefficient type for all generating functions: 128-bit, with checked
// arithmetic.  Overflow throws, never wraps.
using Int = __int128;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

inline std::string dec_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // negate in unsigned space so the minimum value survives
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

// Binomial coefficient as an exact checked integer; 0 outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long j = 1; j <= k; ++j) {
    r = checked_mul(r, n - k + j);
    r /= j;  // exact: r is C(n-k+j, j) * j! / j! at each step
  }
  return r;
}

inline Int factorial(long long n) {
  Int r = 1;
  for (long long j = 2; j <= n; ++j) r = checked_mul(r, j);
  return r;
}

}  // namespace ompstat
