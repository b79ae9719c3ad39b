#pragma once

// Shared helpers and independent oracles for the unit tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "galoisdraw/exact.hpp"
#include "galoisdraw/modp.hpp"

namespace testing {

using namespace galoisdraw;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240607);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline ZPoly random_zpoly(int max_degree, long bound) {
  const int d = static_cast<int>(uniform(0, max_degree));
  std::vector<Integer> c(d + 1);
  for (auto& v : c) v = uniform(-bound, bound);
  return ZPoly(std::move(c));
}

inline QPoly random_qpoly(int max_degree, long bound) {
  const int d = static_cast<int>(uniform(0, max_degree));
  std::vector<Rational> c(d + 1);
  for (auto& v : c) {
    v = Rational(uniform(-bound, bound), uniform(1, bound));
    v.canonicalize();
  }
  return QPoly(std::move(c));
}

/// Trial division.
inline bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t naive_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

/// Determinant by fraction-free Bareiss elimination over Z.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Resultant as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const ZPoly& f, const ZPoly& g) {
  const std::size_t m = f.degree(), n = g.degree();
  std::vector<std::vector<Integer>> s(m + n, std::vector<Integer>(m + n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  return bareiss_det(std::move(s));
}

/// FpPoly from coefficients written high degree first, as in printed
/// factorizations.
inline FpPoly fp_high_first(std::uint64_t p, std::vector<std::uint64_t> high_first) {
  std::reverse(high_first.begin(), high_first.end());
  return FpPoly(PrimeField(p), std::move(high_first));
}

inline ZPoly z_high_first(std::vector<long> high_first) {
  std::vector<Integer> c;
  for (auto it = high_first.rbegin(); it != high_first.rend(); ++it) c.emplace_back(*it);
  return ZPoly(std::move(c));
}

}  // namespace testing
