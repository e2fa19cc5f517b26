#pragma once

// Test-only oracles, independent of the library implementations they check.

#include <vector>

#include "ompstat/checked_int.hpp"
#include "ompstat/symfunc.hpp"

namespace oracles {

// Number of ordered set partitions of [n], via the recurrence
// a(n) = sum_k C(n,k) a(n-k).
inline long long fubini(int n) {
  std::vector<long long> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k)
      a[static_cast<std::size_t>(m)] +=
          static_cast<long long>(ompstat::binomial(m, k)) *
          a[static_cast<std::size_t>(m) - static_cast<std::size_t>(k)];
  return a[static_cast<std::size_t>(n)];
}

inline long long multinomial(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  long long r = static_cast<long long>(ompstat::factorial(n));
  for (int p : parts) r /= static_cast<long long>(ompstat::factorial(p));
  return r;
}

// Standard tableau count by the hook length formula.
inline long long hook_length_count(const std::vector<int>& lambda) {
  int n = 0;
  for (int p : lambda) n += p;
  long long numer = static_cast<long long>(ompstat::factorial(n));
  long long denom = 1;
  for (std::size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c) {
      int arm = lambda[r] - c - 1;
      int leg = 0;
      for (std::size_t r2 = r + 1; r2 < lambda.size(); ++r2)
        if (lambda[r2] > c) ++leg;
      denom *= arm + leg + 1;
    }
  return numer / denom;
}

}  // namespace oracles
