#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "bicm/graph.hpp"
#include "bicm/homology.hpp"
#include "bicm/ideal.hpp"

namespace bicm {

/// One confirmation or counterexample inside a verifier run.  `subject` is a
/// graph6 string or an ideal in JSON form; `data` carries the booleans,
/// depths and counts belonging to the instance.
struct WitnessRecord {
  bool counterexample = false;
  std::string subject;
  int k = 0;
  std::string note;
  std::map<std::string, long long> data;
};

/// Result of one verifier claim.  `passed` holds exactly when no witness is
/// a counterexample.
struct Verdict {
  std::string claim_id;
  bool passed = false;
  long long instances_checked = 0;
  std::vector<WitnessRecord> witnesses;
  double elapsed_seconds = 0.0;
};

namespace detail {

class VerdictBuilder {
 public:
  explicit VerdictBuilder(std::string claim_id) : start_(std::chrono::steady_clock::now()) {
    verdict_.claim_id = std::move(claim_id);
  }

  void confirm(WitnessRecord w) {
    w.counterexample = false;
    verdict_.witnesses.push_back(std::move(w));
  }

  void refute(WitnessRecord w) {
    w.counterexample = true;
    verdict_.witnesses.push_back(std::move(w));
  }

  void record(bool ok, WitnessRecord w) { ok ? confirm(std::move(w)) : refute(std::move(w)); }

  void count(long long instances = 1) { verdict_.instances_checked += instances; }

  /// Counterexamples are moved to the front, smallest subject first; the
  /// confirmation log keeps its deterministic insertion order.
  Verdict finish() {
    std::stable_sort(verdict_.witnesses.begin(), verdict_.witnesses.end(),
                     [](const WitnessRecord& a, const WitnessRecord& b) {
                       if (a.counterexample != b.counterexample) return a.counterexample;
                       if (!a.counterexample) return false;
                       return std::tie(a.subject, a.k) < std::tie(b.subject, b.k);
                     });
    verdict_.passed = true;
    for (const WitnessRecord& w : verdict_.witnesses)
      if (w.counterexample) verdict_.passed = false;
    verdict_.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return verdict_;
  }

 private:
  Verdict verdict_;
  std::chrono::steady_clock::time_point start_;
};

/// Runs fn(i) for i in [0, count) across `jobs` workers.  Exceptions are
/// rethrown on the caller thread after all workers join.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (count == 0) return;
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Per-power bi-CM sweep over k = 1 .. matching number.
struct MatchingPowerSweep {
  int nu = 0;
  std::vector<bool> per_k;
  bool all_bicm = true;
};

inline MatchingPowerSweep all_matching_powers_bicm(const Graph& g, PrimeField f) {
  if (g.has_isolated_vertex())
    throw std::domain_error("matching power sweep requires a graph without isolated vertices");
  MatchingPowerSweep sweep;
  sweep.nu = matching_number(g);
  for (int k = 1; k <= sweep.nu; ++k) {
    bool ok = is_bi_cm(matching_power(g, k), f);
    sweep.per_k.push_back(ok);
    sweep.all_bicm = sweep.all_bicm && ok;
  }
  return sweep;
}

namespace detail {

inline std::string per_k_string(const std::vector<bool>& per_k) {
  std::string s;
  for (bool b : per_k) s += b ? '1' : '0';
  return s;
}

struct ClassOutcome {
  int nu = 0;
  std::vector<bool> per_k;
  bool all_bicm = false;
};

/// Checkpoint lines look like "G6STRING nu=2 per_k=10 bicm=0"; "#" lines are
/// running tallies and are skipped on resume.
inline std::map<std::string, ClassOutcome> load_checkpoint(const std::string& path) {
  std::map<std::string, ClassOutcome> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string g6, nu_kv, perk_kv, bicm_kv;
    if (!(fields >> g6 >> nu_kv >> perk_kv >> bicm_kv)) continue;
    if (nu_kv.rfind("nu=", 0) != 0 || perk_kv.rfind("per_k=", 0) != 0 ||
        bicm_kv.rfind("bicm=", 0) != 0)
      continue;
    ClassOutcome out;
    out.nu = std::stoi(nu_kv.substr(3));
    for (char c : perk_kv.substr(6)) out.per_k.push_back(c == '1');
    out.all_bicm = bicm_kv.substr(5) == "1";
    done[g6] = out;
  }
  return done;
}

/// Canonical class representatives (no isolated vertices) as ascending pair
/// masks; the scan over all labellings is sharded across workers.
inline std::vector<std::uint64_t> canonical_class_masks(int n, int jobs) {
  const int total = pair_count(n);
  const std::uint64_t end = 1ull << total;
  const auto& pairs = pairs_of(n);
  const std::uint64_t chunk_count = std::min<std::uint64_t>(end, 256);
  const std::uint64_t chunk_size = (end + chunk_count - 1) / chunk_count;
  std::vector<std::vector<std::uint64_t>> found(chunk_count);
  parallel_for(static_cast<std::size_t>(chunk_count), jobs, [&](std::size_t c) {
    const std::uint64_t lo = chunk_size * c;
    const std::uint64_t hi = std::min(end, lo + chunk_size);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      std::uint32_t covered = 0;
      std::uint64_t rest = mask;
      while (rest) {
        int pos = std::countr_zero(rest);
        rest &= rest - 1;
        auto [i, j] = pairs[static_cast<std::size_t>(total - 1 - pos)];
        covered |= (1u << i) | (1u << j);
      }
      if (covered != full_vertex_mask(n)) continue;
      if (!is_canonical_pair_mask(n, mask)) continue;
      found[c].push_back(mask);
    }
  });
  std::vector<std::uint64_t> out;
  for (const auto& chunk : found) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

}  // namespace detail

/// Exhaustive classification sweep: over every isomorphism class of graphs
/// on [n] without isolated vertices, all matching powers are bi-CM exactly
/// for the complete graph and the path complement.  n = 7 is long-running;
/// passing a checkpoint path makes the sweep resumable.
inline Verdict verify_theorem(int n, PrimeField f, int jobs = 1,
                              const std::string& checkpoint_path = {}) {
  if (n < 4 || n > 7) throw std::domain_error("classification sweep supports 4 <= n <= 7");
  std::ostringstream id;
  id << "theorem(n=" << n << ",p=" << f.p << ")";
  detail::VerdictBuilder builder(id.str());

  const std::vector<std::uint64_t> classes = detail::canonical_class_masks(n, jobs);
  const std::uint64_t complete_mask = graph_to_pair_mask(complete_graph(n));
  const std::uint64_t path_complement_mask = canonical_key(complement(path_graph(n)));

  std::map<std::string, detail::ClassOutcome> done;
  if (!checkpoint_path.empty()) done = detail::load_checkpoint(checkpoint_path);

  std::vector<detail::ClassOutcome> outcomes(classes.size());
  std::vector<std::string> names(classes.size());
  {
    std::ofstream ckpt;
    if (!checkpoint_path.empty()) ckpt.open(checkpoint_path, std::ios::app);
    std::mutex ckpt_mu;
    long long completed = 0, survivors_so_far = 0;
    detail::parallel_for(classes.size(), jobs, [&](std::size_t c) {
      Graph g = graph_from_pair_mask(n, classes[c]);
      std::string g6 = to_graph6(g);
      names[c] = g6;
      auto it = done.find(g6);
      if (it != done.end()) {
        outcomes[c] = it->second;
        return;
      }
      MatchingPowerSweep sweep = all_matching_powers_bicm(g, f);
      outcomes[c] = detail::ClassOutcome{sweep.nu, sweep.per_k, sweep.all_bicm};
      if (ckpt.is_open()) {
        std::lock_guard<std::mutex> lock(ckpt_mu);
        ckpt << g6 << " nu=" << sweep.nu << " per_k=" << detail::per_k_string(sweep.per_k)
             << " bicm=" << (sweep.all_bicm ? 1 : 0) << '\n';
        ++completed;
        if (sweep.all_bicm) ++survivors_so_far;
        if (completed % 64 == 0)
          ckpt << "# tally classes=" << completed << " survivors=" << survivors_so_far << '\n';
        ckpt.flush();
      }
    });
    if (ckpt.is_open()) {
      ckpt << "# tally classes=" << completed << " survivors=" << survivors_so_far << " final\n";
    }
  }

  long long survivors = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const bool expected = classes[c] == complete_mask || classes[c] == path_complement_mask;
    const auto& out = outcomes[c];
    if (out.all_bicm) ++survivors;
    WitnessRecord w;
    w.subject = names[c];
    w.note = "per_k=" + detail::per_k_string(out.per_k);
    w.data["nu"] = out.nu;
    w.data["bicm"] = out.all_bicm ? 1 : 0;
    w.data["expected"] = expected ? 1 : 0;
    builder.record(out.all_bicm == expected, std::move(w));
    builder.count();
  }
  if (survivors != 2) {
    WitnessRecord w;
    w.subject = "survivor-count";
    w.note = "expected exactly 2 surviving classes, found " + std::to_string(survivors);
    w.data["survivors"] = survivors;
    builder.refute(std::move(w));
  }
  return builder.finish();
}

/// The two closed families: every matching power of the complete graph and
/// of the path complement is bi-CM, the quotient depths are 1 and 2, and the
/// powers coincide with the squarefree Veronese ideals of even degree.
inline Verdict verify_prop_kp(int n, PrimeField f) {
  if (n < 4) throw std::domain_error("family verification requires n >= 4");
  std::ostringstream id;
  id << "prop-kp(n=" << n << ",p=" << f.p << ")";
  detail::VerdictBuilder builder(id.str());

  struct FamilyCase {
    std::string name;
    Graph graph;
    int expected_depth;
    int veronese_from_k;
  };
  const std::vector<FamilyCase> cases = {
      {"K" + std::to_string(n), complete_graph(n), 1, 1},
      {"P" + std::to_string(n) + "c", complement(path_graph(n)), 2, 2},
  };

  for (const FamilyCase& fc : cases) {
    const std::string g6 = to_graph6(fc.graph);
    const int nu = matching_number(fc.graph);
    {
      WitnessRecord w;
      w.subject = g6;
      w.note = fc.name + ": matching number";
      w.data["nu"] = nu;
      builder.record(nu == n / 2, std::move(w));
      builder.count();
    }
    {
      const int depth = homological_profile(edge_ideal(fc.graph), f).depth;
      WitnessRecord w;
      w.subject = g6;
      w.note = fc.name + ": quotient depth";
      w.data["depth"] = depth;
      w.data["expected_depth"] = fc.expected_depth;
      builder.record(depth == fc.expected_depth, std::move(w));
      builder.count();
    }
    for (int k = 1; k <= nu; ++k) {
      const SquarefreeIdeal power = matching_power(fc.graph, k);
      {
        WitnessRecord w;
        w.subject = g6;
        w.k = k;
        w.note = fc.name + ": power is bi-CM";
        builder.record(is_bi_cm(power, f), std::move(w));
        builder.count();
      }
      if (k >= fc.veronese_from_k) {
        WitnessRecord w;
        w.subject = g6;
        w.k = k;
        w.note = fc.name + ": power equals all squarefree monomials of degree " +
                 std::to_string(2 * k);
        builder.record(power == squarefree_veronese(n, 2 * k), std::move(w));
        builder.count();
      }
    }
  }
  return builder.finish();
}

/// Dropping any single degree-d squarefree monomial from the full Veronese
/// set leaves a non-Cohen-Macaulay ideal (checked for every choice).
inline Verdict verify_notcm(int n, int d, PrimeField f) {
  if (d <= 1 || d >= n) throw std::domain_error("requires 1 < d < n");
  std::ostringstream id;
  id << "notcm(n=" << n << ",d=" << d << ",p=" << f.p << ")";
  detail::VerdictBuilder builder(id.str());
  const SquarefreeIdeal full = squarefree_veronese(n, d);
  for (Monomial u : full.gens) {
    std::vector<Monomial> gens;
    for (Monomial g : full.gens)
      if (g != u) gens.push_back(g);
    const SquarefreeIdeal ideal = make_ideal(n, std::move(gens));
    const bool cm = is_cohen_macaulay(ideal, f);
    WitnessRecord w;
    w.subject = cm ? to_json_string(ideal) : monomial_to_string(u);
    w.note = "removed " + monomial_to_string(u);
    w.data["cohen_macaulay"] = cm ? 1 : 0;
    builder.record(!cm, std::move(w));
    builder.count();
  }
  return builder.finish();
}

namespace detail {

inline int quotient_depth(const SquarefreeIdeal& ideal, PrimeField f) {
  if (ideal.is_zero()) return ideal.n;
  return homological_profile(ideal, f).depth;
}

}  // namespace detail

/// Structural identities used by the classification argument:
///   (a) splitting off the last vertex of K_n / P_n^c gives a vertex
///       splitting whose matching powers decompose as
///       x_n (P * I(H)^[k-1]) + I(H)^[k], and that decomposition is a Betti
///       splitting for every k;
///   (b) on every vertex splitting of those edge ideals, the generator count
///       of the prime part equals n minus the depth of the smaller quotient,
///       and the split parts are Cohen-Macaulay with matching depths;
///   (c) gluing a new vertex to all but one inner vertex of the path
///       complement produces a second power that misses exactly one Veronese
///       generator and fails Cohen-Macaulayness;
///   (d) the two sparse Veronese quotients appearing in the complete-graph
///       branch have depths 3 and 4.
inline Verdict verify_identities(int n, PrimeField f) {
  if (n < 5 || n > 8) throw std::domain_error("identity verification supports 5 <= n <= 8");
  std::ostringstream id;
  id << "identities(n=" << n << ",p=" << f.p << ")";
  detail::VerdictBuilder builder(id.str());

  struct FamilyCase {
    std::string name;
    Graph graph;
  };
  const std::vector<FamilyCase> cases = {
      {"K" + std::to_string(n), complete_graph(n)},
      {"P" + std::to_string(n) + "c", complement(path_graph(n))},
  };

  for (const FamilyCase& fc : cases) {
    const Graph& g = fc.graph;
    const std::string g6 = to_graph6(g);
    const SquarefreeIdeal ig = edge_ideal(g);
    const int last = n - 1;

    // P = (x_j : {j, n} an edge), H = G minus the last vertex
    SquarefreeIdeal prime = [&] {
      std::vector<Monomial> vars;
      std::uint32_t nb = g.adj[static_cast<std::size_t>(last)];
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        vars.push_back(1u << v);
      }
      return make_ideal(n, std::move(vars));
    }();
    const Graph h = induced_subgraph(g, g.vertex_mask() & ~(1u << last));
    const SquarefreeIdeal ih = with_ambient(edge_ideal(h), n);

    {
      // the split at the last vertex is a vertex splitting reassembling I(G)
      const SquarefreeIdeal rebuilt = ideal_sum(variable_multiply(prime, last), ih);
      bool split_found = false;
      for (const VertexSplitting& s : all_vertex_splittings(ig))
        if (s.var == last && s.i1 == prime && s.i2 == ih) split_found = true;
      WitnessRecord w;
      w.subject = g6;
      w.note = fc.name + ": edge ideal splits at the last vertex";
      builder.record(split_found && rebuilt == ig, std::move(w));
      builder.count();
    }

    const int nu = matching_number(g);
    for (int k = 1; k <= nu; ++k) {
      const SquarefreeIdeal lhs = matching_power(g, k);
      const SquarefreeIdeal tail = k == 1 ? unit_ideal(n) : squarefree_power(ih, k - 1);
      const SquarefreeIdeal part1 = variable_multiply(matching_product(prime, tail), last);
      const SquarefreeIdeal part2 = squarefree_power(ih, k);
      {
        WitnessRecord w;
        w.subject = g6;
        w.k = k;
        w.note = fc.name + ": power decomposes through the split";
        builder.record(lhs == ideal_sum(part1, part2), std::move(w));
        builder.count();
      }
      {
        bool ok = false;
        try {
          ok = is_betti_splitting(lhs, part1, part2, f);
        } catch (const std::domain_error&) {
          ok = false;  // generator partition failed, which refutes the identity
        }
        WitnessRecord w;
        w.subject = g6;
        w.k = k;
        w.note = fc.name + ": decomposition is a Betti splitting";
        builder.record(ok, std::move(w));
        builder.count();
      }
    }

    // every vertex splitting of the edge ideal: depth bookkeeping
    for (const VertexSplitting& s : all_vertex_splittings(ig)) {
      const SquarefreeIdeal with_var = add_variable_to_ideal(s.i2, s.var);
      const int depth_small = detail::quotient_depth(with_var, f);
      const int mu = static_cast<int>(s.i1.gens.size());
      {
        WitnessRecord w;
        w.subject = g6;
        w.note = fc.name + ": generator count of the prime part at vertex " +
                 std::to_string(s.var + 1);
        w.data["mu"] = mu;
        w.data["depth"] = depth_small;
        builder.record(mu == n - depth_small, std::move(w));
        builder.count();
      }
      {
        const bool i1_cm = s.i1.is_zero() || is_cohen_macaulay(s.i1, f);
        const bool i2_cm = s.i2.is_zero() || is_cohen_macaulay(s.i2, f);
        const int depth_i1 = detail::quotient_depth(s.i1, f);
        WitnessRecord w;
        w.subject = g6;
        w.note = fc.name + ": split parts Cohen-Macaulay with equal depths at vertex " +
                 std::to_string(s.var + 1);
        w.data["depth_i1"] = depth_i1;
        w.data["depth_i2_with_var"] = depth_small;
        builder.record(i1_cm && i2_cm && depth_i1 == depth_small, std::move(w));
        builder.count();
      }
    }
  }

  // (c) one glued vertex short of the full Veronese square
  for (int i = 2; i <= n - 2; ++i) {
    Graph g(n);
    for (int a = 1; a <= n - 1; ++a)
      for (int b = a + 2; b <= n - 1; ++b) g.add_edge(a - 1, b - 1);
    for (int a = 1; a <= n - 1; ++a)
      if (a != i) g.add_edge(a - 1, n - 1);
    const SquarefreeIdeal square = matching_power(g, 2);
    const Monomial missing = (1u << (i - 2)) | (1u << (i - 1)) | (1u << i) | (1u << (n - 1));
    std::vector<Monomial> expected_gens;
    for (Monomial m : squarefree_veronese(n, 4).gens)
      if (m != missing) expected_gens.push_back(m);
    {
      WitnessRecord w;
      w.subject = to_graph6(g);
      w.note = "glued graph misses exactly one degree-4 generator (i=" + std::to_string(i) + ")";
      builder.record(square == make_ideal(n, expected_gens), std::move(w));
      builder.count();
    }
    {
      WitnessRecord w;
      w.subject = to_graph6(g);
      w.note = "its square is not Cohen-Macaulay (i=" + std::to_string(i) + ")";
      builder.record(!is_cohen_macaulay(square, f), std::move(w));
      builder.count();
    }
  }

  // (d) the two depth values in the complete-graph branch
  {
    const SquarefreeIdeal first =
        with_ambient(squarefree_veronese(n - 1, 3), n);
    const int depth_first = detail::quotient_depth(first, f);
    WitnessRecord w;
    w.note = "depth of S over the degree-3 Veronese in the first n-1 variables";
    w.data["depth"] = depth_first;
    builder.record(depth_first == 3, std::move(w));
    builder.count();
  }
  {
    const SquarefreeIdeal second =
        add_variable_to_ideal(with_ambient(squarefree_veronese(n - 2, 4), n), n - 1);
    const int depth_second = detail::quotient_depth(second, f);
    WitnessRecord w;
    w.note = "depth of S over the degree-4 Veronese in the first n-2 variables plus x_n";
    w.data["depth"] = depth_second;
    builder.record(depth_second == 4, std::move(w));
    builder.count();
  }
  if (n == 5) {
    const SquarefreeIdeal branch =
        variable_multiply(with_ambient(squarefree_veronese(4, 3), 5), 4);
    const HomologicalProfile prof = homological_profile(branch, f);
    WitnessRecord w;
    w.note = "n=5 branch: x_5 times the degree-3 Veronese is mixed and not Cohen-Macaulay";
    w.data["unmixed"] = prof.unmixed ? 1 : 0;
    builder.record(!prof.unmixed && !is_cohen_macaulay(branch, f), std::move(w));
    builder.count();
  }
  return builder.finish();
}

/// Exploratory probe: are all squarefree powers of the uniform t-spread
/// Veronese ideal of degree d bi-CM?  For d = 2 this is the settled family
/// (so a failure there counts as a counterexample); for d >= 3 a failure is
/// reported as a finding without failing the verdict.
inline Verdict probe_veronese(int n, int d, int t, PrimeField f) {
  if (d < 2) throw std::domain_error("degree must be at least 2");
  if (t < 1) throw std::domain_error("spread must be at least 1");
  if (n <= (d - 1) * t) throw std::domain_error("need n > (d-1)t for the defining monomial");
  if (n > kMaxHomologyVars) throw std::domain_error("probe limited to n <= 16");
  std::ostringstream id;
  id << "veronese(n=" << n << ",d=" << d << ",t=" << t << ",p=" << f.p << ")";
  detail::VerdictBuilder builder(id.str());

  Monomial u = 0;
  for (int j = 1; j <= d; ++j) u |= 1u << ((n - 1) - (d - j) * t);
  const SquarefreeIdeal ideal = t_spread_borel(u, SpreadVector(static_cast<std::size_t>(d - 1), t), n);
  const int nu = ideal_stats(ideal).monomial_grade;
  for (int k = 1; k <= nu; ++k) {
    const SquarefreeIdeal power = squarefree_power(ideal, k);
    const bool ok = is_bi_cm(power, f);
    WitnessRecord w;
    w.subject = to_json_string(ideal);
    w.k = k;
    w.data["bicm"] = ok ? 1 : 0;
    if (ok) {
      w.note = "power is bi-CM";
      builder.confirm(std::move(w));
    } else if (d == 2) {
      w.note = "power of a settled degree-2 family member is not bi-CM";
      builder.refute(std::move(w));
    } else {
      w.note = "finding: power is not bi-CM";
      builder.confirm(std::move(w));
    }
    builder.count();
  }
  return builder.finish();
}

}  // namespace bicm
