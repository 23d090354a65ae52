#include <catch2/catch.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bicm/verify.hpp"
#include "test_helpers.hpp"

using namespace bicm;
using bicm_test::cycle_graph;
using bicm_test::mono;

namespace {
const PrimeField gf2 = make_prime_field(2);

long long count_counterexamples(const Verdict& v) {
  long long c = 0;
  for (const auto& w : v.witnesses)
    if (w.counterexample) ++c;
  return c;
}
}  // namespace

TEST_CASE("matching power sweeps on single graphs") {
  auto k5 = all_matching_powers_bicm(complete_graph(5), gf2);
  REQUIRE(k5.all_bicm);
  REQUIRE(k5.per_k == std::vector<bool>{true, true});

  auto p3 = all_matching_powers_bicm(path_graph(3), gf2);
  REQUIRE_FALSE(p3.all_bicm);
  REQUIRE(p3.per_k == std::vector<bool>{false});

  auto c4 = all_matching_powers_bicm(cycle_graph(4), gf2);
  REQUIRE_FALSE(c4.per_k[0]);

  Graph isolated(3);
  isolated.add_edge(0, 1);
  REQUIRE_THROWS_AS(all_matching_powers_bicm(isolated, gf2), std::domain_error);
}

TEST_CASE("the graphs on at most three vertices behave as expected") {
  REQUIRE(all_matching_powers_bicm(complete_graph(2), gf2).all_bicm);
  REQUIRE(all_matching_powers_bicm(complete_graph(3), gf2).all_bicm);
  REQUIRE_FALSE(all_matching_powers_bicm(path_graph(3), gf2).all_bicm);
}

TEST_CASE("the seven classes on four vertices, one by one") {
  using bicm_test::graph_of;
  struct Entry {
    Graph g;
    bool cm, linear;
  };
  // two disjoint edges, the star, the path, the 4-cycle, the paw, the
  // diamond, the complete graph
  std::vector<Entry> catalog = {
      {graph_of(4, {{1, 2}, {3, 4}}), true, false},
      {graph_of(4, {{1, 2}, {1, 3}, {1, 4}}), false, true},
      {path_graph(4), true, true},
      {cycle_graph(4), false, true},
      {graph_of(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}), false, true},
      {graph_of(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}), false, true},
      {complete_graph(4), true, true},
  };
  int bicm_count = 0;
  for (const Entry& e : catalog) {
    SquarefreeIdeal ideal = edge_ideal(e.g);
    REQUIRE(is_cohen_macaulay(ideal, gf2) == e.cm);
    REQUIRE(has_linear_resolution(ideal, gf2) == e.linear);
    if (e.cm && e.linear) ++bicm_count;
  }
  REQUIRE(bicm_count == 2);
}

TEST_CASE("classification sweep at n = 4") {
  Verdict v = verify_theorem(4, gf2);
  REQUIRE(v.passed);
  REQUIRE(v.instances_checked == 7);
  long long survivors = 0;
  for (const auto& w : v.witnesses)
    if (w.data.count("bicm") && w.data.at("bicm") == 1) ++survivors;
  REQUIRE(survivors == 2);
  REQUIRE(v.elapsed_seconds < 1.0);

  REQUIRE_THROWS_AS(verify_theorem(3, gf2), std::domain_error);
  REQUIRE_THROWS_AS(verify_theorem(8, gf2), std::domain_error);
}

TEST_CASE("verdicts are reproducible") {
  Verdict a = verify_theorem(4, gf2);
  Verdict b = verify_theorem(4, gf2, 2);
  REQUIRE(a.instances_checked == b.instances_checked);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    REQUIRE(a.witnesses[i].subject == b.witnesses[i].subject);
    REQUIRE(a.witnesses[i].note == b.witnesses[i].note);
    REQUIRE(a.witnesses[i].counterexample == b.witnesses[i].counterexample);
    REQUIRE(a.witnesses[i].data == b.witnesses[i].data);
  }
}

TEST_CASE("checkpointed sweeps resume to the same verdict") {
  std::string path = "checkpoint_test_n5.tmp";
  std::remove(path.c_str());
  Verdict fresh = verify_theorem(5, gf2, 1, path);
  REQUIRE(fresh.passed);
  REQUIRE(fresh.instances_checked == 23);

  // truncate the checkpoint to its first half, then resume
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  in.close();
  REQUIRE(lines.size() >= 23);
  std::ofstream out(path, std::ios::trunc);
  for (std::size_t i = 0; i < 11; ++i) out << lines[i] << '\n';
  out.close();

  Verdict resumed = verify_theorem(5, gf2, 1, path);
  REQUIRE(resumed.passed == fresh.passed);
  REQUIRE(resumed.instances_checked == fresh.instances_checked);
  for (std::size_t i = 0; i < fresh.witnesses.size(); ++i) {
    REQUIRE(resumed.witnesses[i].subject == fresh.witnesses[i].subject);
    REQUIRE(resumed.witnesses[i].data == fresh.witnesses[i].data);
  }
  std::remove(path.c_str());
}

TEST_CASE("family verification") {
  Verdict v4 = verify_prop_kp(4, gf2);
  REQUIRE(v4.passed);
  Verdict v6 = verify_prop_kp(6, gf2);
  REQUIRE(v6.passed);
  REQUIRE_THROWS_AS(verify_prop_kp(3, gf2), std::domain_error);

  // the squared path complement on 4 vertices is the single full monomial
  REQUIRE(matching_power(complement(path_graph(4)), 2) == make_ideal(4, {mono({1, 2, 3, 4})}));
}

TEST_CASE("punctured Veronese verification") {
  Verdict v = verify_notcm(4, 2, gf2);
  REQUIRE(v.passed);
  REQUIRE(v.instances_checked == 6);

  Verdict v53 = verify_notcm(5, 3, gf2);
  REQUIRE(v53.passed);
  REQUIRE(v53.instances_checked == 10);

  REQUIRE_THROWS_AS(verify_notcm(4, 4, gf2), std::domain_error);
  REQUIRE_THROWS_AS(verify_notcm(4, 1, gf2), std::domain_error);
}

TEST_CASE("identity verification") {
  Verdict v5 = verify_identities(5, gf2);
  REQUIRE(v5.passed);
  Verdict v6 = verify_identities(6, gf2);
  REQUIRE(v6.passed);
  REQUIRE_THROWS_AS(verify_identities(4, gf2), std::domain_error);
  REQUIRE_THROWS_AS(verify_identities(9, gf2), std::domain_error);
}

TEST_CASE("the glued graph at n = 6, i = 3 misses one generator") {
  // built as in the identity verifier: path complement on [5] plus a sixth
  // vertex joined to everything except vertex 3
  Graph g(6);
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 2; b <= 5; ++b) g.add_edge(a - 1, b - 1);
  for (int a = 1; a <= 5; ++a)
    if (a != 3) g.add_edge(a - 1, 5);
  SquarefreeIdeal square = matching_power(g, 2);
  std::vector<Monomial> expected;
  for (Monomial m : squarefree_veronese(6, 4).gens)
    if (m != mono({2, 3, 4, 6})) expected.push_back(m);
  REQUIRE(square == make_ideal(6, expected));
  REQUIRE_FALSE(is_cohen_macaulay(square, gf2));
}

TEST_CASE("prime part size equals n minus the small quotient depth for K6") {
  SquarefreeIdeal k6 = edge_ideal(complete_graph(6));
  auto split = find_vertex_splitting(k6);
  REQUIRE(split.has_value());
  int depth = homological_profile(add_variable_to_ideal(split->i2, split->var), gf2).depth;
  REQUIRE(static_cast<int>(split->i1.gens.size()) == 6 - depth);
  REQUIRE(depth == 1);
}

TEST_CASE("veronese probe") {
  Verdict known1 = probe_veronese(4, 2, 1, gf2);
  REQUIRE(known1.passed);
  REQUIRE(count_counterexamples(known1) == 0);

  Verdict known2 = probe_veronese(5, 2, 2, gf2);
  REQUIRE(known2.passed);

  // the degree-2 probes rebuild the edge ideals of the two families
  REQUIRE(probe_veronese(6, 2, 1, gf2).witnesses[0].subject ==
          to_json_string(edge_ideal(complete_graph(6))));
  REQUIRE(probe_veronese(6, 2, 2, gf2).witnesses[0].subject ==
          to_json_string(edge_ideal(complement(path_graph(6)))));

  // exploratory degree-3 case: completes and reports per-power verdicts
  Verdict probe = probe_veronese(7, 3, 2, gf2);
  REQUIRE(probe.instances_checked >= 1);
  for (const auto& w : probe.witnesses) INFO(w.subject << " k=" << w.k << " " << w.note);

  REQUIRE_THROWS_AS(probe_veronese(4, 3, 2, gf2), std::domain_error);
  REQUIRE_THROWS_AS(probe_veronese(4, 1, 1, gf2), std::domain_error);
}
