#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "bicm/graph.hpp"
#include "test_helpers.hpp"

using namespace bicm;
using bicm_test::graph_of;
using bicm_test::random_graph;

TEST_CASE("complete and path constructors") {
  Graph k4 = complete_graph(4);
  REQUIRE(k4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Graph p4 = path_graph(4);
  REQUIRE(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(complete_graph(2).edges() == std::vector<std::pair<int, int>>{{0, 1}});
  REQUIRE_THROWS_AS(complete_graph(0), std::domain_error);
  REQUIRE_THROWS_AS(complete_graph(33), std::domain_error);
  REQUIRE(complete_graph(4).is_valid());
}

TEST_CASE("complement") {
  REQUIRE(complement(path_graph(4)) == graph_of(4, {{1, 3}, {1, 4}, {2, 4}}));
  REQUIRE(complement(complete_graph(5)).edge_count() == 0);
  REQUIRE(complement(complement(path_graph(6))) == path_graph(6));

  // involution across everything small, and random larger graphs
  for (int n = 1; n <= 5; ++n)
    enumerate_graphs(n, {}, [](const Graph& g) {
      REQUIRE(complement(complement(g)) == g);
      REQUIRE(complement(g).is_valid());
      return true;
    });
  std::mt19937 rng(29);
  for (int n = 6; n <= 8; ++n)
    for (int it = 0; it < 40; ++it) {
      Graph g = random_graph(n, rng);
      REQUIRE(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraphs") {
  REQUIRE(induced_subgraph(complete_graph(5), 0b00111u) == complete_graph(3));
  REQUIRE(induced_subgraph(path_graph(5), 0b10101u).edge_count() == 0);
  REQUIRE(induced_subgraph(complement(path_graph(5)), 0b01111u) ==
          graph_of(4, {{1, 3}, {1, 4}, {2, 4}}));
  REQUIRE_THROWS_AS(induced_subgraph(path_graph(4), 0), std::domain_error);
  REQUIRE_THROWS_AS(induced_subgraph(path_graph(4), 0b10000u), std::domain_error);

  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    Graph g = random_graph(6, rng);
    std::uint32_t a = 1 + (rng() % 62);  // nonempty proper-ish subset of [6]
    Graph ga = induced_subgraph(g, a);
    std::uint32_t b = 0;
    for (int v = 0; v < ga.n; ++v)
      if (rng() & 1) b |= 1u << v;
    if (b == 0) b = 1;
    // restricting twice equals restricting to the image of b inside a
    std::uint32_t image = 0;
    int pos = 0;
    for (int v = 0; v < 6; ++v)
      if ((a >> v) & 1) {
        if ((b >> pos) & 1) image |= 1u << v;
        ++pos;
      }
    REQUIRE(induced_subgraph(ga, b) == induced_subgraph(g, image));
  }
}

TEST_CASE("matchings and matching number") {
  REQUIRE(matching_number(path_graph(4)) == 2);
  auto two = matchings(path_graph(4), 2);
  REQUIRE(two.size() == 1);
  REQUIRE(two[0].edges == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  REQUIRE(matching_number(complete_graph(6)) == 3);

  auto p4c = matchings(complement(path_graph(4)), 2);
  REQUIRE(p4c.size() == 1);
  REQUIRE(p4c[0].edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  REQUIRE_THROWS_AS(matchings(path_graph(3), 0), std::domain_error);

  // every returned matching is disjoint and covers 2k vertices; the list is
  // empty exactly beyond the matching number
  for (int n = 2; n <= 5; ++n)
    enumerate_graphs(n, {}, [&](const Graph& g) {
      int nu = matching_number(g);
      for (int k = 1; k <= nu + 1; ++k) {
        auto ms = matchings(g, k);
        REQUIRE(ms.empty() == (k > nu));
        for (const Matching& m : ms) {
          REQUIRE(static_cast<int>(m.edges.size()) == k);
          REQUIRE(std::popcount(m.vertex_set) == 2 * k);
          std::uint32_t seen = 0;
          for (auto [a, b] : m.edges) {
            REQUIRE(g.has_edge(a, b));
            REQUIRE(((seen >> a) & 1u) == 0);
            REQUIRE(((seen >> b) & 1u) == 0);
            seen |= (1u << a) | (1u << b);
          }
          REQUIRE(seen == m.vertex_set);
        }
      }
      return true;
    });
}

TEST_CASE("isomorphism with witness") {
  Graph p4 = path_graph(4);
  Graph p4c = complement(p4);
  auto witness = find_isomorphism(p4, p4c);
  REQUIRE(witness.has_value());
  REQUIRE(*witness == std::vector<int>{1, 3, 0, 2});  // 1,2,3,4 -> 2,4,1,3

  REQUIRE_FALSE(is_isomorphic(complete_graph(4), p4c));
  auto self = find_isomorphism(p4, p4);
  REQUIRE(self.has_value());
  REQUIRE(*self == std::vector<int>{0, 1, 2, 3});

  // witnesses genuinely map edges onto edges, and the relation is symmetric
  std::mt19937 rng(11);
  std::vector<Graph> sample;
  for (int it = 0; it < 12; ++it) sample.push_back(random_graph(6, rng));
  for (const Graph& g : sample)
    for (const Graph& h : sample) {
      auto w = find_isomorphism(g, h);
      REQUIRE(w.has_value() == is_isomorphic(h, g));
      if (w) {
        std::set<std::pair<int, int>> mapped;
        for (auto [a, b] : g.edges()) {
          int x = (*w)[static_cast<std::size_t>(a)], y = (*w)[static_cast<std::size_t>(b)];
          mapped.insert({std::min(x, y), std::max(x, y)});
        }
        auto he = h.edges();
        REQUIRE(mapped == std::set<std::pair<int, int>>(he.begin(), he.end()));
      }
    }
}

TEST_CASE("canonical forms agree with isomorphism") {
  std::mt19937 rng(5);
  for (int it = 0; it < 60; ++it) {
    Graph g = random_graph(6, rng);
    Graph h = random_graph(6, rng);
    REQUIRE((canonical_key(g) == canonical_key(h)) == is_isomorphic(g, h));
    REQUIRE(canonical_key(canonical_form(g)) == canonical_key(g));
  }
}

TEST_CASE("graph enumeration") {
  REQUIRE(count_graphs(4, {true, true}) == 7);
  REQUIRE(count_graphs(3, {true, true}) == 2);
  REQUIRE(count_graphs(5, {true, true}) == 23);

  // the two classes on three vertices are the path and the triangle
  auto classes3 = all_graphs(3, {true, true});
  REQUIRE(classes3.size() == 2);
  REQUIRE(is_isomorphic(classes3[0], path_graph(3)));
  REQUIRE(classes3[1] == complete_graph(3));

  for (int n = 1; n <= 5; ++n)
    REQUIRE(count_graphs(n, {}) == (1ull << pair_count(n)));

  // classical class counts on six vertices
  REQUIRE(count_graphs(6, {false, true}) == 156);
  REQUIRE(count_graphs(6, {true, true}) == 122);

  REQUIRE_THROWS_AS(count_graphs(9, {false, true}), std::domain_error);
}

TEST_CASE("graph6 round trips and frozen strings") {
  REQUIRE(to_graph6(complete_graph(4)) == "C~");
  REQUIRE(to_graph6(complete_graph(5)) == "D~{");
  REQUIRE(to_graph6(path_graph(4)) == "Ch");
  REQUIRE(to_graph6(complement(path_graph(5))) == "DUw");

  std::mt19937 rng(3);
  for (int it = 0; it < 80; ++it) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng);
    REQUIRE(from_graph6(to_graph6(g)) == g);
  }

  REQUIRE_THROWS_AS(from_graph6(""), std::invalid_argument);
  REQUIRE_THROWS_AS(from_graph6("C"), std::invalid_argument);       // truncated
  REQUIRE_THROWS_AS(from_graph6("C~~"), std::invalid_argument);     // too long
  REQUIRE_THROWS_AS(from_graph6("C\x01"), std::invalid_argument);   // byte below 63
  REQUIRE_THROWS_AS(from_graph6("B~"), std::invalid_argument);      // nonzero padding
}

TEST_CASE("edge list text round trips") {
  Graph g = complement(path_graph(5));
  REQUIRE(from_edge_list_text(to_edge_list_text(g)) == g);
  REQUIRE(to_edge_list_text(graph_of(3, {{1, 2}})) == "3\n1 2\n");
  REQUIRE_THROWS_AS(from_edge_list_text("3\n1"), std::invalid_argument);
  REQUIRE_THROWS_AS(from_edge_list_text("3\n1 4"), std::invalid_argument);
  REQUIRE_THROWS_AS(from_edge_list_text("3\n2 2"), std::invalid_argument);
}
