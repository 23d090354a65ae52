#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bicm {

inline constexpr int kMaxVertices = 32;

inline std::uint32_t full_vertex_mask(int n) {
  return n >= 32 ? 0xffffffffu : ((1u << n) - 1u);
}

inline int mask_size(std::uint32_t m) { return std::popcount(m); }

inline int lowest_var(std::uint32_t m) { return std::countr_zero(m); }

/// 1-indexed elements of a bit mask, ascending.
inline std::vector<int> mask_to_one_indexed(std::uint32_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

inline std::uint32_t mask_from_one_indexed(const std::vector<int>& vars, int n) {
  std::uint32_t m = 0;
  for (int v : vars) {
    if (v < 1 || v > n) throw std::domain_error("variable index out of range");
    m |= 1u << (v - 1);
  }
  return m;
}

/// Orders masks by cardinality, then by the ascending sequence of their
/// elements (so {1,4} sorts before {2,3}).  This is the single ordering used
/// for generators, facets and all emitted output.
inline bool lex_mask_less(std::uint32_t a, std::uint32_t b) {
  int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  while (a && b) {
    int va = std::countr_zero(a), vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

/// Maximum size of a pairwise-disjoint subfamily (exact branch and bound).
inline int max_disjoint_subfamily(const std::vector<std::uint32_t>& masks) {
  int best = 0;
  const auto m = masks.size();
  auto rec = [&](auto&& self, std::size_t idx, std::uint32_t used, int cur) -> void {
    if (cur > best) best = cur;
    if (idx == m || cur + static_cast<int>(m - idx) <= best) return;
    if ((masks[idx] & used) == 0) self(self, idx + 1, used | masks[idx], cur + 1);
    self(self, idx + 1, used, cur);
  };
  rec(rec, 0, 0, 0);
  return best;
}

/// Minimum size of a set of elements hitting every mask (exact branch and
/// bound; branches on the elements of the first unhit mask).
inline int min_transversal_size(const std::vector<std::uint32_t>& masks, int n) {
  for (std::uint32_t m : masks)
    if (m == 0) throw std::domain_error("empty mask admits no transversal");
  int best = n;
  auto rec = [&](auto&& self, std::uint32_t cover, int count) -> void {
    if (count >= best) return;
    std::uint32_t pending = 0;
    for (std::uint32_t m : masks)
      if ((m & cover) == 0) {
        pending = m;
        break;
      }
    if (pending == 0) {
      best = count;
      return;
    }
    while (pending) {
      int v = std::countr_zero(pending);
      pending &= pending - 1;
      self(self, cover | (1u << v), count + 1);
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace bicm
