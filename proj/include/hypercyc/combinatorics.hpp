#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace hypercyc {

// C(n, k); zero outside 0 <= k <= n (including negative arguments).
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Stirling numbers of the second kind.
inline std::int64_t stirling2(int n, int m) {
  if (n == 0 && m == 0) return 1;
  if (n <= 0 || m <= 0 || m > n) return 0;
  std::vector<std::int64_t> row(m + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[m];
}

}  // namespace hypercyc
