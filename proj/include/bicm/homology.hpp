#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bicm/complex.hpp"
#include "bicm/gf.hpp"
#include "bicm/ideal.hpp"

namespace bicm {

/// Subset scans over 2^n drive everything below.
inline constexpr int kMaxHomologyVars = 16;

/// Ranks of the reduced simplicial homology of `c` over GF(p), as a vector
/// r with r[i] = rank of H~_{i-1}.  The complex {∅} has H~_{-1} of rank one;
/// the empty complex reports a single zero.
inline std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c, PrimeField f) {
  if (c.is_empty_complex()) return {0};
  const int dim = complex_dim(c);
  // faces grouped by dimension; group g holds the faces of size g (dim g-1)
  std::vector<std::vector<std::uint32_t>> grp(static_cast<std::size_t>(dim + 2));
  for (std::uint32_t face : all_faces(c)) grp[static_cast<std::size_t>(std::popcount(face))].push_back(face);
  for (auto& g : grp) std::sort(g.begin(), g.end());

  // ranks of the boundary maps C_d -> C_{d-1}, d = 0..dim
  std::vector<int> brank(static_cast<std::size_t>(dim + 2), 0);
  for (int d = 0; d <= dim; ++d) {
    const auto& src = grp[static_cast<std::size_t>(d + 1)];
    const auto& dst = grp[static_cast<std::size_t>(d)];
    if (src.empty() || dst.empty()) continue;
    std::vector<std::vector<int>> m(dst.size(), std::vector<int>(src.size(), 0));
    for (std::size_t col = 0; col < src.size(); ++col) {
      std::uint32_t tau = src[col];
      int r = 0;
      std::uint32_t rest = tau;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint32_t sub = tau & ~(1u << v);
        auto it = std::lower_bound(dst.begin(), dst.end(), sub);
        std::size_t row = static_cast<std::size_t>(it - dst.begin());
        m[row][col] = (r % 2 == 0) ? 1 : f.p - 1;
        ++r;
      }
    }
    brank[static_cast<std::size_t>(d + 1)] = rank_mod_p(m, f.p);
  }

  std::vector<long long> out(static_cast<std::size_t>(dim + 2), 0);
  for (int d = -1; d <= dim; ++d) {
    long long faces_d = static_cast<long long>(grp[static_cast<std::size_t>(d + 1)].size());
    long long rd = brank[static_cast<std::size_t>(d + 1)];
    long long rd1 = d + 2 < static_cast<int>(brank.size()) ? brank[static_cast<std::size_t>(d + 2)] : 0;
    out[static_cast<std::size_t>(d + 1)] = faces_d - rd - rd1;
  }
  return out;
}

/// Graded Betti numbers of the ideal I (convention: beta_{i,j}(I), one step
/// below the Betti numbers of S/I).
struct BettiTable {
  int p = 2;
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  int max_homological_index() const {
    int m = 0;
    for (const auto& [ij, v] : entries)
      if (v > 0) m = std::max(m, ij.first);
    return m;
  }
};

/// Hochster-style expansion: beta_{i,j}(I) is the sum over the size-j vertex
/// subsets sigma of rank H~_{j-i-2} of the restriction of the Stanley-Reisner
/// complex to sigma.
inline BettiTable betti_table(const SquarefreeIdeal& ideal, PrimeField f) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("Betti table requires a nonzero proper ideal");
  if (ideal.n > kMaxHomologyVars)
    throw std::domain_error("Betti table scan limited to n <= 16");
  const SimplicialComplex delta = stanley_reisner(ideal);
  BettiTable table;
  table.p = f.p;
  const std::uint32_t full = full_vertex_mask(ideal.n);
  for (std::uint32_t sigma = 1; sigma <= full; ++sigma) {
    const int j = std::popcount(sigma);
    auto ranks = reduced_homology_ranks(restrict_to(delta, sigma), f);
    for (std::size_t idx = 0; idx < ranks.size(); ++idx) {
      if (ranks[idx] <= 0) continue;
      int t = static_cast<int>(idx) - 1;  // H~_t
      int i = j - t - 2;
      if (i >= 0) table.entries[{i, j}] += ranks[idx];
    }
    if (sigma == full) break;
  }
  return table;
}

struct HomologicalProfile {
  int pd = 0;          // projective dimension of S/I
  int depth = 0;       // depth of S/I (n minus pd)
  int dim = 0;         // Krull dimension of S/I (max facet size)
  int regularity = 0;  // regularity of I
  bool unmixed = false;
};

inline HomologicalProfile homological_profile(const SquarefreeIdeal& ideal, PrimeField f) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("profile requires a nonzero proper ideal");
  const BettiTable table = betti_table(ideal, f);
  HomologicalProfile out;
  out.pd = table.max_homological_index() + 1;
  out.depth = ideal.n - out.pd;
  const SimplicialComplex delta = stanley_reisner(ideal);
  int maxf = 0, minf = kMaxVertices + 1;
  for (std::uint32_t facet : delta.facets) {
    maxf = std::max(maxf, std::popcount(facet));
    minf = std::min(minf, std::popcount(facet));
  }
  out.dim = maxf;
  out.unmixed = maxf == minf;
  int reg = 0;
  for (const auto& [ij, v] : table.entries)
    if (v > 0) reg = std::max(reg, ij.second - ij.first);
  out.regularity = reg;
  return out;
}

/// Reisner's criterion over GF(p): every link has vanishing reduced homology
/// below its dimension.
inline bool complex_is_cohen_macaulay(const SimplicialComplex& c, PrimeField f) {
  if (c.is_empty_complex()) return true;
  for (std::uint32_t face : all_faces(c)) {
    SimplicialComplex link = link_of(c, face);
    const int dl = complex_dim(link);
    auto ranks = reduced_homology_ranks(link, f);
    for (int t = -1; t < dl; ++t)
      if (ranks[static_cast<std::size_t>(t + 1)] != 0) return false;
  }
  return true;
}

/// Cohen-Macaulayness of S/I via Reisner's criterion, cross-checked on every
/// call against depth == dim from the Betti table route.
inline bool is_cohen_macaulay(const SquarefreeIdeal& ideal, PrimeField f) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("Cohen-Macaulay test requires a nonzero proper ideal");
  const bool reisner = complex_is_cohen_macaulay(stanley_reisner(ideal), f);
  const HomologicalProfile prof = homological_profile(ideal, f);
  if (reisner != (prof.depth == prof.dim))
    throw std::logic_error("internal: Reisner criterion disagrees with depth == dim");
  return reisner;
}

/// The two routes to "I has a linear resolution": Betti numbers concentrated
/// on the single diagonal j = i + d, and Cohen-Macaulayness of the Alexander
/// dual.  Requires an equigenerated nonzero proper ideal.
inline std::pair<bool, bool> linear_resolution_routes(const SquarefreeIdeal& ideal, PrimeField f) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("linear resolution test requires a nonzero proper ideal");
  if (!ideal.is_equigenerated())
    throw std::domain_error("linear resolution test requires an equigenerated ideal");
  const int d = monomial_degree(ideal.gens[0]);
  bool linear = true;
  for (const auto& [ij, v] : betti_table(ideal, f).entries)
    if (v > 0 && ij.second != ij.first + d) {
      linear = false;
      break;
    }
  const bool dual_cm = is_cohen_macaulay(alexander_dual(ideal), f);
  return {linear, dual_cm};
}

inline bool has_linear_resolution(const SquarefreeIdeal& ideal, PrimeField f) {
  auto [linear, dual_cm] = linear_resolution_routes(ideal, f);
  if (linear != dual_cm)
    throw std::logic_error("internal: Betti linearity disagrees with dual Cohen-Macaulayness");
  return linear;
}

/// Both I and its Alexander dual Cohen-Macaulay; equivalently I is
/// Cohen-Macaulay with a linear resolution.
inline bool is_bi_cm(const SquarefreeIdeal& ideal, PrimeField f) {
  return is_cohen_macaulay(ideal, f) && has_linear_resolution(ideal, f);
}

namespace detail {
inline BettiTable betti_or_empty(const SquarefreeIdeal& ideal, PrimeField f) {
  if (ideal.is_zero()) return BettiTable{f.p, {}};
  return betti_table(ideal, f);
}
}  // namespace detail

/// Checks beta_{i,j}(I) = beta_{i,j}(I1) + beta_{i,j}(I2) + beta_{i-1,j}(I1 cap I2)
/// for all (i, j).  The generators of I must be the disjoint union of those
/// of I1 and I2.
inline bool is_betti_splitting(const SquarefreeIdeal& ideal, const SquarefreeIdeal& part1,
                               const SquarefreeIdeal& part2, PrimeField f) {
  if (ideal.n != part1.n || ideal.n != part2.n)
    throw std::domain_error("Betti splitting needs a common ambient ring");
  std::vector<Monomial> merged = part1.gens;
  merged.insert(merged.end(), part2.gens.begin(), part2.gens.end());
  std::sort(merged.begin(), merged.end(), lex_mask_less);
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end() || merged != ideal.gens)
    throw std::domain_error("generators must split into the two parts");
  const BettiTable t = detail::betti_or_empty(ideal, f);
  const BettiTable t1 = detail::betti_or_empty(part1, f);
  const BettiTable t2 = detail::betti_or_empty(part2, f);
  const BettiTable ti = detail::betti_or_empty(intersect(part1, part2), f);
  std::vector<std::pair<int, int>> keys;
  for (const BettiTable* tab : {&t, &t1, &t2})
    for (const auto& [ij, v] : tab->entries) keys.push_back(ij);
  for (const auto& [ij, v] : ti.entries) keys.emplace_back(ij.first + 1, ij.second);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto [i, j] : keys) {
    long long lhs = t.at(i, j);
    long long rhs = t1.at(i, j) + t2.at(i, j) + (i >= 1 ? ti.at(i - 1, j) : 0);
    if (lhs != rhs) return false;
  }
  return true;
}

/// A decomposition I = x_var * i1 + i2 with i2 contained in i1 and the
/// generators splitting accordingly.
struct VertexSplitting {
  int var = 0;
  SquarefreeIdeal i1;
  SquarefreeIdeal i2;
};

inline std::vector<VertexSplitting> all_vertex_splittings(const SquarefreeIdeal& ideal) {
  std::vector<VertexSplitting> out;
  if (ideal.is_zero() || ideal.is_unit()) return out;
  for (int v = 0; v < ideal.n; ++v) {
    const std::uint32_t bit = 1u << v;
    std::vector<Monomial> quotients, rest;
    for (Monomial g : ideal.gens)
      (g & bit ? quotients : rest).push_back(g & ~bit);
    if (quotients.empty()) continue;
    SquarefreeIdeal i1 = make_ideal(ideal.n, quotients);
    // the multiples of x_var must re-emerge verbatim from x_var * i1
    if (i1.gens.size() != quotients.size()) continue;
    SquarefreeIdeal i2 = make_ideal(ideal.n, rest);
    if (!contains_ideal(i1, i2)) continue;
    out.push_back(VertexSplitting{v, std::move(i1), std::move(i2)});
  }
  return out;
}

/// First valid splitting vertex in increasing order, if any.
inline std::optional<VertexSplitting> find_vertex_splitting(const SquarefreeIdeal& ideal) {
  auto all = all_vertex_splittings(ideal);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Recursive definition: (u), 0 and S are vertex splittable, and so is any
/// I = x_i I1 + I2 whose parts are.
inline bool is_vertex_splittable(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit() || ideal.gens.size() == 1) return true;
  for (const VertexSplitting& s : all_vertex_splittings(ideal))
    if (is_vertex_splittable(s.i1) && is_vertex_splittable(s.i2)) return true;
  return false;
}

}  // namespace bicm
