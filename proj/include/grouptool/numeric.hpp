#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace grouptool {

// Trial division is plenty for group orders (capped at 1e5).
inline std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

// Largest power of p dividing n.
inline int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) { n /= p; r *= p; }
  return r;
}

// Product of p-parts of n over the primes in pi.
inline int pi_part(int n, const std::vector<int>& pi) {
  int r = 1;
  for (int p : pi) r *= p_part(n, p);
  return r;
}

inline bool is_prime_power(int n, int* base = nullptr) {
  auto f = factorize(n);
  if (f.size() != 1) return false;
  if (base) *base = f[0].first;
  return true;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace grouptool
