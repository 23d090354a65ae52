#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "bicm/graph.hpp"
#include "bicm/ideal.hpp"

namespace bicm_test {

/// Monomial from 1-indexed variables: mono({1, 3}) is x1 x3.
inline bicm::Monomial mono(std::initializer_list<int> vars) {
  bicm::Monomial m = 0;
  for (int v : vars) m |= 1u << (v - 1);
  return m;
}

/// Graph from 1-indexed edge pairs.
inline bicm::Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  bicm::Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a - 1, b - 1);
  return g;
}

inline bicm::Graph cycle_graph(int n) {
  bicm::Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline bicm::Graph random_graph(int n, std::mt19937& rng, double density = 0.5) {
  bicm::Graph g(n);
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

/// Minimal generating sets are antichains in canonical order.
inline bool is_canonical_antichain(const bicm::SquarefreeIdeal& ideal) {
  const auto& g = ideal.gens;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (a != b && bicm::monomial_divides(g[a], g[b])) return false;
  for (std::size_t a = 0; a + 1 < g.size(); ++a)
    if (!bicm::lex_mask_less(g[a], g[a + 1])) return false;
  return true;
}

}  // namespace bicm_test
