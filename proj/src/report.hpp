#ifndef NETSTAB_REPORT_HPP
#define NETSTAB_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "payoff.hpp"

namespace netstab {

// Concept tokens accepted by classify and by model "expected" blocks:
//   ldp sldp lap star-lap slap ps sps sps-strict m-network
//   strongly-stable strongly-stable-dm order-<r> bilateral pairwise-nash
//   unilateral weak-monadic monadic
// An "<token>-includes" expected key asserts containment instead of
// equality.
bool concept_needs_costs(const std::string& token);
bool concept_value(const Model& model, const std::string& token, Network g);
std::vector<Network> concept_set(const Model& model, const std::string& token);

// Default concept list for a model of this size (expensive searches are
// trimmed above four players; request them explicitly when needed).
std::vector<std::string> default_concepts(const Model& model);

struct ClassifyReport {
  int n = 0;
  std::vector<std::string> concepts;
  // One row per network, ascending mask; flags align with `concepts`.
  std::vector<std::pair<Network, std::vector<bool>>> rows;
};

// jobs > 1 fans the per-network classification out over a thread pool;
// rows are assembled in mask order regardless of worker count.
ClassifyReport classify(const Model& model,
                        const std::vector<std::string>& concepts,
                        int jobs = 1);

// Throws std::logic_error when a row violates one of the implication
// chains (SLDP => LDP, SLAP => *-LAP => LAP, SPS* => SPS => PS, strong
// stability => SPS, unilateral => SPS, monadic => weak monadic).
void assert_implication_chains(const ClassifyReport& report);

nlohmann::ordered_json classify_to_json(const ClassifyReport& report);
std::string classify_to_text(const ClassifyReport& report);

nlohmann::json networks_to_json(const std::vector<Network>& nets);

}  // namespace netstab

#endif
