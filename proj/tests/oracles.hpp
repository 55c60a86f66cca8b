// Test-side reference computations, written independently of the library.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Rank by plain Gaussian elimination on a dense copy.
inline std::size_t rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<mpq_class>> random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols,
                                                         int density_percent = 60) {
  std::uniform_int_distribution<int> coin(0, 99), num(-4, 4), den(1, 3);
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
  for (auto &row : m)
    for (auto &x : row)
      if (coin(rng) < density_percent) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
      }
  return m;
}

/// Number of words of length d in letters 0..k-1 (one vertex, k loops) that
/// avoid every forbidden factor.
inline std::size_t monomial_words(std::size_t k, std::size_t d, const std::vector<std::vector<std::size_t>> &forbidden) {
  std::size_t count = 0;
  std::vector<std::size_t> w(d, 0);
  while (true) {
    bool ok = true;
    for (const auto &f : forbidden) {
      for (std::size_t s = 0; s + f.size() <= d && ok; ++s) {
        bool hit = true;
        for (std::size_t j = 0; j < f.size(); ++j) hit = hit && w[s + j] == f[j];
        if (hit) ok = false;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < d && ++w[i] == k) w[i++] = 0;
    if (i == d) break;
  }
  return count;
}

/// Truncated power series product.
inline std::vector<long long> series_mul(const std::vector<long long> &a, const std::vector<long long> &b, std::size_t len) {
  std::vector<long long> c(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) c[i + j] += a[i] * b[j];
  return c;
}

} // namespace oracle
