#include <catch2/catch.hpp>

#include "bicm/homology.hpp"
#include "test_helpers.hpp"

using namespace bicm;
using bicm_test::mono;

namespace {
const PrimeField gf2 = make_prime_field(2);
}

TEST_CASE("betti splittings") {
  // I(K3) = x3 (x1, x2) + (x1 x2)
  SquarefreeIdeal whole = edge_ideal(complete_graph(3));
  SquarefreeIdeal part1 = make_ideal(3, {mono({1, 3}), mono({2, 3})});
  SquarefreeIdeal part2 = make_ideal(3, {mono({1, 2})});
  REQUIRE(is_betti_splitting(whole, part1, part2, gf2));

  // numbers behind it: 3 = 2 + 1 and 2 = 1 + 0 + 1
  BettiTable t = betti_table(whole, gf2), t1 = betti_table(part1, gf2),
             t2 = betti_table(part2, gf2), ti = betti_table(intersect(part1, part2), gf2);
  REQUIRE(t.at(0, 2) == t1.at(0, 2) + t2.at(0, 2));
  REQUIRE(t.at(1, 3) == t1.at(1, 3) + t2.at(1, 3) + ti.at(0, 3));

  // degenerate split against the zero ideal
  REQUIRE(is_betti_splitting(whole, whole, zero_ideal(3), gf2));

  // violated partition is a domain error
  REQUIRE_THROWS_AS(is_betti_splitting(whole, part1, part1, gf2), std::domain_error);

  // matching-power decomposition of K5 at k = 2
  SquarefreeIdeal prime = make_ideal(5, {mono({1}), mono({2}), mono({3}), mono({4})});
  SquarefreeIdeal ih = with_ambient(edge_ideal(complete_graph(4)), 5);
  SquarefreeIdeal lhs = matching_power(complete_graph(5), 2);
  SquarefreeIdeal p1 = variable_multiply(matching_product(prime, ih), 4);
  SquarefreeIdeal p2 = squarefree_power(ih, 2);
  REQUIRE(lhs == ideal_sum(p1, p2));
  REQUIRE(is_betti_splitting(lhs, p1, p2, gf2));
}

TEST_CASE("vertex splittings") {
  SquarefreeIdeal k4 = edge_ideal(complete_graph(4));
  auto splits = all_vertex_splittings(k4);
  REQUIRE(splits.size() == 4);  // complete graphs split at every vertex
  bool found_last = false;
  for (const auto& s : splits)
    if (s.var == 3) {
      found_last = true;
      REQUIRE(s.i1 == make_ideal(4, {mono({1}), mono({2}), mono({3})}));
      REQUIRE(s.i2 == with_ambient(edge_ideal(complete_graph(3)), 4));
    }
  REQUIRE(found_last);

  SquarefreeIdeal p4c = edge_ideal(complement(path_graph(4)));
  bool found = false;
  for (const auto& s : all_vertex_splittings(p4c))
    if (s.var == 3) {
      found = true;
      REQUIRE(s.i1 == make_ideal(4, {mono({1}), mono({2})}));
      REQUIRE(s.i2 == make_ideal(4, {mono({1, 3})}));
    }
  REQUIRE(found);

  REQUIRE_FALSE(find_vertex_splitting(make_ideal(4, {mono({1, 2}), mono({3, 4})})).has_value());
}

TEST_CASE("vertex splittable ideals") {
  REQUIRE(is_vertex_splittable(edge_ideal(complete_graph(5))));
  REQUIRE(is_vertex_splittable(edge_ideal(complement(path_graph(5)))));
  REQUIRE(is_vertex_splittable(make_ideal(3, {mono({1, 2})})));
  REQUIRE(is_vertex_splittable(zero_ideal(3)));
  REQUIRE(is_vertex_splittable(unit_ideal(3)));
  // two disjoint edges admit no splitting at all
  REQUIRE_FALSE(is_vertex_splittable(make_ideal(4, {mono({1, 2}), mono({3, 4})})));
}

TEST_CASE("split parts of a Cohen-Macaulay edge ideal have matching depths") {
  SquarefreeIdeal k4 = edge_ideal(complete_graph(4));
  REQUIRE(is_cohen_macaulay(k4, gf2));
  for (const auto& s : all_vertex_splittings(k4)) {
    REQUIRE(is_betti_splitting(k4, variable_multiply(s.i1, s.var), s.i2, gf2));
    int depth_i1 = homological_profile(s.i1, gf2).depth;
    int depth_i2x = homological_profile(add_variable_to_ideal(s.i2, s.var), gf2).depth;
    REQUIRE(depth_i1 == depth_i2x);
    REQUIRE(is_cohen_macaulay(s.i1, gf2));
    REQUIRE(is_cohen_macaulay(s.i2, gf2));
  }
}
