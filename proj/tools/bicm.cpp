// Command-line surface for the bi-Cohen-Macaulay matching-power verifier.
//
// Exit codes: 0 success / claim verified, 1 claim failed, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicm/bicm.hpp"
#include "bicm/json_io.hpp"

namespace {

struct GlobalOptions {
  std::string format = "text";
};

bicm::Graph read_graph_from_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  std::string text = buffer.str();
  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first)) {
    if (!first.empty() && first.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  // a lone integer opens the edge-list format; anything else is graph6
  std::istringstream probe(first);
  int n = 0;
  std::string extra;
  if (probe >> n && !(probe >> extra)) return bicm::from_edge_list_text(text);
  std::string g6 = first;
  while (!g6.empty() && (g6.back() == '\r' || g6.back() == ' ')) g6.pop_back();
  return bicm::from_graph6(g6);
}

struct IdealSource {
  std::string graph6;
  std::string ideal_json;
  int k = 0;

  bicm::SquarefreeIdeal resolve() const {
    bicm::SquarefreeIdeal base;
    if (!ideal_json.empty()) {
      base = bicm::ideal_from_json(nlohmann::json::parse(ideal_json));
    } else {
      bicm::Graph g = graph6.empty() ? read_graph_from_stdin() : bicm::from_graph6(graph6);
      if (k >= 1) return bicm::matching_power(g, k);
      return bicm::edge_ideal(g);
    }
    if (k >= 1) return bicm::squarefree_power(base, k);
    return base;
  }

  void attach(CLI::App* cmd, bool with_k = true) {
    cmd->add_option("--graph", graph6, "graph6 string (stdin is read when absent)");
    cmd->add_option("--ideal", ideal_json, "ideal as JSON {\"n\":..,\"gens\":[[..]]}");
    if (with_k) cmd->add_option("--k", k, "apply the k-th matching/squarefree power");
  }
};

void print_ideal(const bicm::SquarefreeIdeal& ideal, const GlobalOptions& opt) {
  if (opt.format == "json") {
    std::cout << bicm::ideal_to_json(ideal).dump() << '\n';
    return;
  }
  std::cout << "n: " << ideal.n << '\n';
  std::cout << "gens (" << ideal.gens.size() << "): " << bicm::to_pretty_string(ideal) << '\n';
}

int render_verdict(const bicm::Verdict& v, const GlobalOptions& opt, bool list_confirmations) {
  if (opt.format == "json")
    std::cout << bicm::verdict_to_json(v).dump() << '\n';
  else
    std::cout << bicm::render_verdict_text(v, list_confirmations);
  return v.passed ? 0 : 1;
}

std::string checkpoint_file(int n, int p) {
  const char* dir = std::getenv("BICM_CHECKPOINT_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/theorem_n" + std::to_string(n) + "_p" + std::to_string(p) +
         ".checkpoint";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge ideals, matching powers and bi-Cohen-Macaulay verification"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  int exit_code = 0;

  // ---- gen ------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "emit a graph6 stream of all graphs on n vertices");
  int gen_n = 0;
  bool gen_no_isolated = false, gen_canonical = false;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_flag("--no-isolated", gen_no_isolated, "keep only graphs with minimum degree >= 1");
  gen->add_flag("--canonical", gen_canonical, "one representative per isomorphism class");
  gen->callback([&] {
    bicm::enumerate_graphs(gen_n, {gen_no_isolated, gen_canonical}, [](const bicm::Graph& g) {
      std::cout << bicm::to_graph6(g) << '\n';
      return true;
    });
  });

  // ---- ideal ----------------------------------------------------------
  auto* ideal_cmd = app.add_subcommand("ideal", "edge ideal of a graph or a t-spread Borel ideal");
  IdealSource ideal_src;
  ideal_src.attach(ideal_cmd, false);
  std::string borel_u;
  std::vector<int> borel_t;
  int borel_n = 0;
  ideal_cmd->add_option("--borel", borel_u, "Borel generator as 1-indexed variables, e.g. 2,4");
  ideal_cmd->add_option("--t", borel_t, "spread vector entries");
  ideal_cmd->add_option("--n", borel_n, "ambient variable count for --borel");
  ideal_cmd->callback([&] {
    bicm::SquarefreeIdeal ideal;
    if (!borel_u.empty()) {
      if (borel_n < 1) throw CLI::ValidationError("--borel requires --n");
      std::vector<int> vars;
      std::istringstream in(borel_u);
      std::string tok;
      while (std::getline(in, tok, ',')) vars.push_back(std::stoi(tok));
      bicm::Monomial u = bicm::mask_from_one_indexed(vars, borel_n);
      ideal = bicm::t_spread_borel(u, borel_t, borel_n);
    } else {
      ideal = ideal_src.resolve();
    }
    print_ideal(ideal, global);
  });

  // ---- power ----------------------------------------------------------
  auto* power = app.add_subcommand("power", "k-th matching power");
  IdealSource power_src;
  power_src.attach(power, false);
  power->add_option("--k", power_src.k, "power exponent")->required();
  power->callback([&] { print_ideal(power_src.resolve(), global); });

  // ---- dual -----------------------------------------------------------
  auto* dual = app.add_subcommand("dual", "Alexander dual");
  IdealSource dual_src;
  dual_src.attach(dual);
  dual->callback([&] { print_ideal(bicm::alexander_dual(dual_src.resolve()), global); });

  // ---- betti ----------------------------------------------------------
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of the ideal over GF(p)");
  IdealSource betti_src;
  betti_src.attach(betti);
  int betti_p = 2;
  betti->add_option("--p", betti_p, "field characteristic (prime)")->capture_default_str();
  betti->callback([&] {
    auto table = bicm::betti_table(betti_src.resolve(), bicm::make_prime_field(betti_p));
    if (global.format == "json") {
      std::cout << bicm::betti_to_json(table).dump() << '\n';
    } else {
      for (const auto& [ij, rank] : table.entries)
        if (rank > 0)
          std::cout << "beta[" << ij.first << "," << ij.second << "] = " << rank << '\n';
    }
  });

  // ---- profile --------------------------------------------------------
  auto* profile = app.add_subcommand("profile", "depth, dimension, pd, regularity, unmixedness");
  IdealSource profile_src;
  profile_src.attach(profile);
  int profile_p = 2;
  profile->add_option("--p", profile_p, "field characteristic (prime)")->capture_default_str();
  profile->callback([&] {
    auto prof = bicm::homological_profile(profile_src.resolve(), bicm::make_prime_field(profile_p));
    if (global.format == "json") {
      std::cout << bicm::profile_to_json(prof).dump() << '\n';
    } else {
      std::cout << "pd: " << prof.pd << "\ndepth: " << prof.depth << "\ndim: " << prof.dim
                << "\nregularity: " << prof.regularity
                << "\nunmixed: " << (prof.unmixed ? "yes" : "no") << '\n';
    }
  });

  // ---- check ----------------------------------------------------------
  auto* check = app.add_subcommand("check", "boolean predicates on the ideal");
  std::string check_what;
  check->add_option("what", check_what, "bicm | cm | linres")
      ->required()
      ->check(CLI::IsMember({"bicm", "cm", "linres"}));
  IdealSource check_src;
  check_src.attach(check);
  int check_p = 2;
  check->add_option("--p", check_p, "field characteristic (prime)")->capture_default_str();
  check->callback([&] {
    const bicm::PrimeField field = bicm::make_prime_field(check_p);
    const bicm::SquarefreeIdeal ideal = check_src.resolve();
    bool value = false;
    if (check_what == "bicm")
      value = bicm::is_bi_cm(ideal, field);
    else if (check_what == "cm")
      value = bicm::is_cohen_macaulay(ideal, field);
    else
      value = bicm::has_linear_resolution(ideal, field);
    if (global.format == "json")
      std::cout << nlohmann::json{{"check", check_what}, {"value", value}}.dump() << '\n';
    else
      std::cout << check_what << ": " << (value ? "true" : "false") << '\n';
    exit_code = value ? 0 : 1;
  });

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "machine-check one of the classification claims");
  verify->require_subcommand(1);
  int v_n = 0, v_d = 0, v_t = 0, v_p = 2, v_jobs = 0;
  bool v_long = false, v_grid = false;

  auto* theorem = verify->add_subcommand("theorem", "exhaustive classification sweep");
  theorem->add_option("--n", v_n, "vertex count (4..7)")->required();
  theorem->add_option("--p", v_p, "field characteristic")->capture_default_str();
  theorem->add_option("--jobs", v_jobs, "worker count (0 = available parallelism)");
  theorem->add_flag("--long", v_long, "enable the long-running n=7 sweep");
  theorem->callback([&] {
    if (v_n == 7 && !v_long) throw CLI::ValidationError("the n=7 sweep requires --long");
    const bicm::PrimeField field = bicm::make_prime_field(v_p);
    auto verdict = bicm::verify_theorem(v_n, field, v_jobs, checkpoint_file(v_n, v_p));
    long long survivors = 0;
    for (const auto& w : verdict.witnesses)
      if (w.data.count("bicm") && w.data.at("bicm") == 1) ++survivors;
    exit_code = render_verdict(verdict, global, false);
    if (global.format == "text") {
      std::string kn = "K" + std::to_string(v_n);
      std::string pc = "P" + std::to_string(v_n) + "c";
      std::cout << verdict.instances_checked << " classes, survivors: ";
      if (verdict.passed)
        std::cout << kn << ", " << pc << '\n';
      else
        std::cout << survivors << " (see counterexamples)\n";
    }
  });

  auto* propkp = verify->add_subcommand("prop-kp", "complete graph and path complement families");
  propkp->add_option("--n", v_n, "vertex count (>= 4)")->required();
  propkp->add_option("--p", v_p, "field characteristic")->capture_default_str();
  propkp->callback([&] {
    exit_code = render_verdict(bicm::verify_prop_kp(v_n, bicm::make_prime_field(v_p)), global, false);
  });

  auto* notcm = verify->add_subcommand("notcm", "punctured Veronese sets are never Cohen-Macaulay");
  notcm->add_option("--n", v_n, "vertex count")->required();
  notcm->add_option("--d", v_d, "degree (omit to sweep all 1 < d < n)");
  notcm->add_option("--p", v_p, "field characteristic")->capture_default_str();
  notcm->callback([&] {
    const bicm::PrimeField field = bicm::make_prime_field(v_p);
    if (v_d > 0) {
      exit_code = render_verdict(bicm::verify_notcm(v_n, v_d, field), global, false);
      return;
    }
    bool all_pass = true;
    for (int d = 2; d < v_n; ++d) {
      auto verdict = bicm::verify_notcm(v_n, d, field);
      if (render_verdict(verdict, global, false) != 0) all_pass = false;
    }
    exit_code = all_pass ? 0 : 1;
  });

  auto* identities = verify->add_subcommand("identities", "splitting and depth identities");
  identities->add_option("--n", v_n, "vertex count (5..8)")->required();
  identities->add_option("--p", v_p, "field characteristic")->capture_default_str();
  identities->callback([&] {
    exit_code =
        render_verdict(bicm::verify_identities(v_n, bicm::make_prime_field(v_p)), global, false);
  });

  auto* veronese = verify->add_subcommand("veronese", "uniform t-spread Veronese probe");
  veronese->add_option("--n", v_n, "variable count");
  veronese->add_option("--d", v_d, "degree");
  veronese->add_option("--t", v_t, "uniform spread");
  veronese->add_flag("--grid", v_grid, "probe the whole n <= 7, d <= 3, t <= 2 grid");
  veronese->add_option("--p", v_p, "field characteristic")->capture_default_str();
  veronese->callback([&] {
    const bicm::PrimeField field = bicm::make_prime_field(v_p);
    if (!v_grid) {
      if (v_n < 1 || v_d < 1 || v_t < 1)
        throw CLI::ValidationError("veronese needs --grid or all of --n, --d, --t");
      exit_code = render_verdict(bicm::probe_veronese(v_n, v_d, v_t, field), global, true);
      return;
    }
    bool all_pass = true;
    for (int d = 2; d <= 3; ++d)
      for (int t = 1; t <= 2; ++t)
        for (int n = (d - 1) * t + 2; n <= 7; ++n) {
          auto verdict = bicm::probe_veronese(n, d, t, field);
          if (render_verdict(verdict, global, true) != 0) all_pass = false;
        }
    exit_code = all_pass ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
