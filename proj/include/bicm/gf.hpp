#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicm {

/// Coefficient field GF(p) for the homological computations.
struct PrimeField {
  int p = 2;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

inline bool is_prime(int m) {
  if (m < 2) return false;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

inline PrimeField make_prime_field(int p) {
  if (!is_prime(p) || p >= (1 << 15))
    throw std::domain_error("field modulus must be a prime below 2^15, got " + std::to_string(p));
  return PrimeField{p};
}

/// Rank of a dense matrix over GF(p) by Gaussian elimination.  Entries must
/// already lie in [0, p).  Destroys its argument.
inline int rank_mod_p(std::vector<std::vector<int>>& m, int p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    // scale the pivot row to 1 (p is prime, so m[rank][c]^(p-2) inverts it)
    long long inv = 1, base = m[rank][c], e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t cc = c; cc < cols; ++cc)
      m[rank][cc] = static_cast<int>(m[rank][cc] * inv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      int f = m[r][c];
      if (!f) continue;
      for (std::size_t cc = c; cc < cols; ++cc) {
        long long v = (m[r][cc] - static_cast<long long>(f) * m[rank][cc]) % p;
        m[r][cc] = static_cast<int>(v < 0 ? v + p : v);
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace bicm
