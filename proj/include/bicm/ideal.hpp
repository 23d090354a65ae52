#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicm/graph.hpp"
#include "bicm/masks.hpp"

namespace bicm {

/// A squarefree monomial is identified with its support: bit i stands for
/// the variable x_{i+1}.  The empty mask is the unit monomial 1.
using Monomial = std::uint32_t;

inline int monomial_degree(Monomial u) { return std::popcount(u); }

inline bool monomial_divides(Monomial u, Monomial v) { return (u & v) == u; }

inline bool supports_disjoint(Monomial u, Monomial v) { return (u & v) == 0; }

inline std::string monomial_to_string(Monomial u) {
  if (u == 0) return "1";
  std::string s;
  for (int v : mask_to_one_indexed(u)) s += "x" + std::to_string(v);
  return s;
}

/// Squarefree monomial ideal in n variables, held by its unique minimal set
/// of monomial generators (an antichain under divisibility, sorted by
/// lex_mask_less).  Empty generator list = zero ideal; the single unit
/// monomial = the whole ring.  Values are immutable once built; construct
/// through make_ideal so the canonical form is guaranteed.
struct SquarefreeIdeal {
  int n = 0;
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0] == 0; }
  bool is_proper() const { return !is_unit(); }

  Monomial support() const {
    Monomial s = 0;
    for (Monomial g : gens) s |= g;
    return s;
  }

  bool contains(Monomial m) const {
    for (Monomial g : gens)
      if (monomial_divides(g, m)) return true;
    return false;
  }

  bool is_equigenerated() const {
    for (Monomial g : gens)
      if (monomial_degree(g) != monomial_degree(gens[0])) return false;
    return true;
  }

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;
};

/// Drops every monomial strictly divisible by another (and duplicates);
/// the result is the minimal generating set in canonical order.
inline SquarefreeIdeal make_ideal(int n, std::vector<Monomial> gens) {
  if (n < 1 || n > kMaxVertices) throw std::domain_error("variable count must be between 1 and 32");
  for (Monomial g : gens)
    if (g & ~full_vertex_mask(n)) throw std::domain_error("generator uses a variable beyond x_n");
  std::sort(gens.begin(), gens.end(), lex_mask_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (Monomial g : gens) {
    bool redundant = false;
    for (Monomial kept : minimal)
      if (monomial_divides(kept, g)) {  // kept has lower or equal degree by sort order
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  return SquarefreeIdeal{n, std::move(minimal)};
}

inline SquarefreeIdeal zero_ideal(int n) { return make_ideal(n, {}); }

inline SquarefreeIdeal unit_ideal(int n) { return make_ideal(n, {0}); }

/// All squarefree monomials of degree d supported inside `vars`
/// (the "squarefree Veronese" generators).  d = 0 gives the unit ideal,
/// d > |vars| the zero ideal.
inline SquarefreeIdeal squarefree_veronese_on(std::uint32_t vars, int d, int n) {
  if (d < 0) throw std::domain_error("degree must be nonnegative");
  std::vector<int> positions;
  std::uint32_t rest = vars;
  while (rest) {
    positions.push_back(std::countr_zero(rest));
    rest &= rest - 1;
  }
  std::vector<Monomial> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == d) {
      Monomial m = 0;
      for (int p : chosen) m |= 1u << p;
      out.push_back(m);
      return;
    }
    for (std::size_t i = start; i < positions.size(); ++i) {
      chosen.push_back(positions[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return make_ideal(n, std::move(out));
}

inline SquarefreeIdeal squarefree_veronese(int n, int d) {
  return squarefree_veronese_on(full_vertex_mask(n), d, n);
}

inline SquarefreeIdeal maximal_ideal(int n) { return squarefree_veronese(n, 1); }

inline SquarefreeIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [i, j] : g.edges()) gens.push_back((1u << i) | (1u << j));
  return make_ideal(g.n, std::move(gens));
}

/// Generators u1...uk over k-subsets of the generators with pairwise
/// disjoint supports, minimalized.  For squarefree monomials this is exactly
/// the squarefree part of the ordinary power I^k.
inline SquarefreeIdeal squarefree_power(const SquarefreeIdeal& ideal, int k) {
  if (k < 1) throw std::domain_error("power exponent must be at least 1");
  std::vector<Monomial> out;
  const auto& gens = ideal.gens;
  auto rec = [&](auto&& self, std::size_t start, Monomial acc, int depth) -> void {
    if (depth == k) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(k - depth) <= gens.size(); ++i)
      if (supports_disjoint(acc, gens[i])) self(self, i + 1, acc | gens[i], depth + 1);
  };
  rec(rec, 0, 0, 0);
  return make_ideal(ideal.n, std::move(out));
}

/// Ideal generated by x_{V(M)} for the k-matchings M of g; agrees with
/// squarefree_power(edge_ideal(g), k).
inline SquarefreeIdeal matching_power(const Graph& g, int k) {
  if (k < 1) throw std::domain_error("power exponent must be at least 1");
  std::vector<Monomial> out;
  for (const Matching& m : matchings(g, k)) out.push_back(m.vertex_set);
  return make_ideal(g.n, std::move(out));
}

/// Matching product I * J: products of support-disjoint generator pairs.
inline SquarefreeIdeal matching_product(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.n != b.n) throw std::domain_error("matching product needs a common ambient ring");
  std::vector<Monomial> out;
  for (Monomial u : a.gens)
    for (Monomial v : b.gens)
      if (supports_disjoint(u, v)) out.push_back(u | v);
  return make_ideal(a.n, std::move(out));
}

inline SquarefreeIdeal ideal_sum(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.n != b.n) throw std::domain_error("ideal sum needs a common ambient ring");
  std::vector<Monomial> out = a.gens;
  out.insert(out.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.n, std::move(out));
}

/// I cap J, generated by the pairwise least common multiples.
inline SquarefreeIdeal intersect(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
  if (a.n != b.n) throw std::domain_error("intersection needs a common ambient ring");
  std::vector<Monomial> out;
  for (Monomial u : a.gens)
    for (Monomial v : b.gens) out.push_back(u | v);
  return make_ideal(a.n, std::move(out));
}

/// x_var * I (var is a 0-indexed variable not already in the support of I).
inline SquarefreeIdeal variable_multiply(const SquarefreeIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.n) throw std::domain_error("variable out of range");
  if (ideal.support() & (1u << var))
    throw std::domain_error("variable already appears in the ideal's support");
  std::vector<Monomial> out;
  for (Monomial g : ideal.gens) out.push_back(g | (1u << var));
  return make_ideal(ideal.n, std::move(out));
}

/// (I, x_var): adjoins the variable as a generator and minimalizes.
inline SquarefreeIdeal add_variable_to_ideal(const SquarefreeIdeal& ideal, int var) {
  if (var < 0 || var >= ideal.n) throw std::domain_error("variable out of range");
  std::vector<Monomial> out = ideal.gens;
  out.push_back(1u << var);
  return make_ideal(ideal.n, std::move(out));
}

/// Reinterprets the ideal in m variables; m may extend or (when the support
/// allows it) shrink the ambient ring.
inline SquarefreeIdeal with_ambient(const SquarefreeIdeal& ideal, int m) {
  if (ideal.support() & ~full_vertex_mask(m))
    throw std::domain_error("support does not fit in the requested ambient ring");
  return make_ideal(m, ideal.gens);
}

/// True when every generator of `inner` lies in `outer`.
inline bool contains_ideal(const SquarefreeIdeal& outer, const SquarefreeIdeal& inner) {
  if (outer.n != inner.n) throw std::domain_error("containment needs a common ambient ring");
  for (Monomial g : inner.gens)
    if (!outer.contains(g)) return false;
  return true;
}

// --- t-spread machinery -------------------------------------------------------

using SpreadVector = std::vector<int>;

/// The sorted support indices i_1 < ... < i_l satisfy i_{j+1} - i_j >= t_j.
/// Entries of t beyond position l-1 are ignored; missing entries impose no
/// constraint.
inline bool is_t_spread(Monomial u, const SpreadVector& t) {
  auto vars = mask_to_one_indexed(u);
  for (std::size_t j = 0; j + 1 < vars.size(); ++j) {
    int gap = vars[j + 1] - vars[j];
    int need = j < t.size() ? t[j] : 0;
    if (gap < need) return false;
  }
  return true;
}

/// Principal t-spread Borel ideal B_t(u): the smallest t-spread strongly
/// stable ideal containing u.  Generated by the t-spread monomials
/// x_{b_1}...x_{b_d} with b_j <= a_j for every j, where u = x_{a_1}...x_{a_d}.
inline SquarefreeIdeal t_spread_borel(Monomial u, const SpreadVector& t, int n) {
  auto a = mask_to_one_indexed(u);
  if (a.empty()) throw std::domain_error("Borel generator must be a nonunit monomial");
  if (t.size() + 1 != a.size())
    throw std::domain_error("spread vector length must be the degree minus one");
  if (!is_t_spread(u, t)) throw std::domain_error("generator is not t-spread");
  if (u & ~full_vertex_mask(n)) throw std::domain_error("generator uses a variable beyond x_n");
  const int d = static_cast<int>(a.size());
  std::vector<Monomial> out;
  std::vector<int> b(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int j) -> void {
    if (j == d) {
      Monomial m = 0;
      for (int v : b) m |= 1u << (v - 1);
      out.push_back(m);
      return;
    }
    // squarefree: indices stay strictly increasing even for zero spread entries
    int lo = j == 0 ? 1
                    : b[static_cast<std::size_t>(j - 1)] +
                          std::max(1, t[static_cast<std::size_t>(j - 1)]);
    for (int v = lo; v <= a[static_cast<std::size_t>(j)]; ++v) {
      b[static_cast<std::size_t>(j)] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return make_ideal(n, std::move(out));
}

/// Same ideal computed the slow way: the fixpoint of the exchange moves
/// x_i (v / x_j), i < j, restricted to t-spread results.
inline SquarefreeIdeal t_spread_borel_via_exchanges(Monomial u, const SpreadVector& t, int n) {
  auto a = mask_to_one_indexed(u);
  if (a.empty()) throw std::domain_error("Borel generator must be a nonunit monomial");
  if (t.size() + 1 != a.size())
    throw std::domain_error("spread vector length must be the degree minus one");
  if (!is_t_spread(u, t)) throw std::domain_error("generator is not t-spread");
  if (u & ~full_vertex_mask(n)) throw std::domain_error("generator uses a variable beyond x_n");
  std::set<Monomial> closure{u};
  std::vector<Monomial> work{u};
  while (!work.empty()) {
    Monomial v = work.back();
    work.pop_back();
    std::uint32_t sup = v;
    while (sup) {
      int j = std::countr_zero(sup);
      sup &= sup - 1;
      for (int i = 0; i < j; ++i) {
        if (v & (1u << i)) continue;
        Monomial w = (v & ~(1u << j)) | (1u << i);
        if (!is_t_spread(w, t)) continue;
        if (closure.insert(w).second) work.push_back(w);
      }
    }
  }
  return make_ideal(n, std::vector<Monomial>(closure.begin(), closure.end()));
}

// --- summary invariants -------------------------------------------------------

struct IdealStats {
  int mu = 0;                    // number of minimal generators
  Monomial support = 0;          // union of generator supports
  int height = 0;                // minimum transversal of the generator supports
  int monomial_grade = 0;        // largest k with a nonzero k-th squarefree power
  bool is_equigenerated = false;
  std::optional<int> degree;     // common generator degree, when equigenerated
};

inline IdealStats ideal_stats(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("stats require a nonzero proper ideal");
  IdealStats s;
  s.mu = static_cast<int>(ideal.gens.size());
  s.support = ideal.support();
  s.height = min_transversal_size(ideal.gens, ideal.n);
  s.monomial_grade = max_disjoint_subfamily(ideal.gens);
  s.is_equigenerated = ideal.is_equigenerated();
  if (s.is_equigenerated) s.degree = monomial_degree(ideal.gens[0]);
  return s;
}

// --- serialization --------------------------------------------------------------

/// {"n":4,"gens":[[1,3],[1,4],[2,4]]} with generators in canonical order.
inline std::string to_json_string(const SquarefreeIdeal& ideal) {
  std::ostringstream out;
  out << "{\"n\":" << ideal.n << ",\"gens\":[";
  for (std::size_t g = 0; g < ideal.gens.size(); ++g) {
    if (g) out << ',';
    out << '[';
    auto vars = mask_to_one_indexed(ideal.gens[g]);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (v) out << ',';
      out << vars[v];
    }
    out << ']';
  }
  out << "]}";
  return out.str();
}

inline std::string to_pretty_string(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t g = 0; g < ideal.gens.size(); ++g) {
    if (g) s += ", ";
    s += monomial_to_string(ideal.gens[g]);
  }
  return s + ")";
}

}  // namespace bicm
