#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bicm/graph.hpp"
#include "bicm/homology.hpp"
#include "bicm/ideal.hpp"
#include "bicm/verify.hpp"

namespace bicm {

inline nlohmann::json ideal_to_json(const SquarefreeIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (Monomial g : ideal.gens) gens.push_back(mask_to_one_indexed(g));
  return nlohmann::json{{"n", ideal.n}, {"gens", gens}};
}

inline SquarefreeIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens"))
    throw std::invalid_argument("ideal JSON needs fields n and gens");
  const int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens"))
    gens.push_back(mask_from_one_indexed(g.get<std::vector<int>>(), n));
  return make_ideal(n, std::move(gens));
}

inline nlohmann::json betti_to_json(const BettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [ij, rank] : table.entries)
    if (rank > 0) entries.push_back({ij.first, ij.second, rank});
  return nlohmann::json{{"convention", "ideal"}, {"p", table.p}, {"entries", entries}};
}

inline nlohmann::json profile_to_json(const HomologicalProfile& prof) {
  return nlohmann::json{{"pd", prof.pd},
                        {"depth", prof.depth},
                        {"dim", prof.dim},
                        {"regularity", prof.regularity},
                        {"unmixed", prof.unmixed}};
}

inline nlohmann::json witness_to_json(const WitnessRecord& w) {
  nlohmann::json out{{"counterexample", w.counterexample},
                     {"subject", w.subject},
                     {"k", w.k},
                     {"note", w.note}};
  nlohmann::json data = nlohmann::json::object();
  for (const auto& [key, value] : w.data) data[key] = value;
  out["data"] = data;
  return out;
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const WitnessRecord& w : v.witnesses) witnesses.push_back(witness_to_json(w));
  return nlohmann::json{{"claim_id", v.claim_id},
                        {"passed", v.passed},
                        {"instances_checked", v.instances_checked},
                        {"witnesses", witnesses},
                        {"elapsed_seconds", v.elapsed_seconds}};
}

/// One human-readable block per verdict; the same data the JSON mode emits.
inline std::string render_verdict_text(const Verdict& v, bool list_confirmations = false) {
  std::ostringstream out;
  out << "claim: " << v.claim_id << '\n';
  out << "checked: " << v.instances_checked << " instances\n";
  long long counterexamples = 0;
  for (const WitnessRecord& w : v.witnesses)
    if (w.counterexample) ++counterexamples;
  for (const WitnessRecord& w : v.witnesses) {
    if (!w.counterexample && !list_confirmations) continue;
    out << (w.counterexample ? "counterexample: " : "note: ") << w.subject;
    if (w.k) out << " k=" << w.k;
    if (!w.note.empty()) out << " (" << w.note << ")";
    out << '\n';
  }
  std::ostringstream elapsed;
  elapsed.setf(std::ios::fixed);
  elapsed.precision(2);
  elapsed << v.elapsed_seconds;
  out << "result: " << (v.passed ? "PASS" : "FAIL") << " (" << elapsed.str() << " s)\n";
  return out.str();
}

}  // namespace bicm
