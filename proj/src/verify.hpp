#ifndef NETSTAB_VERIFY_HPP
#define NETSTAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "payoff.hpp"

namespace netstab {

struct Check {
  std::string name;
  bool ok = false;
  nlohmann::json details;  // witnesses and computed sets
};

struct VerifyReport {
  std::string theorem;
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.ok) return false;
    }
    return true;
  }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Theorem identifiers accepted by verify:
//   deletion-equivalence addition-equivalence pairwise-corollaries
//   m-networks two-sided one-sided-inclusion sunk-cost-inclusion
//   monadic-equivalence potentials-existence
const std::vector<std::string>& verify_theorem_ids();

VerifyReport verify_deletion_equivalence(const PayoffFn& phi);
VerifyReport verify_addition_equivalences(const PayoffFn& phi);
VerifyReport verify_pairwise_corollaries(const PayoffFn& phi);
VerifyReport verify_m_networks(const PayoffFn& phi);
VerifyReport verify_two_sided(const PayoffFn& phi, const CostMatrix& c);
VerifyReport verify_one_sided_inclusion(const PayoffFn& phi,
                                        const CostMatrix& gamma);
VerifyReport verify_sunk_cost_inclusion(const PayoffFn& phi,
                                        const CostMatrix& c);
VerifyReport verify_monadic_equivalence(const PayoffFn& phi,
                                        const CostMatrix& c);
VerifyReport verify_potentials_existence(const PayoffFn& phi,
                                         const CostMatrix& c);
VerifyReport verify_inclusion_chains(const PayoffFn& phi);
VerifyReport verify_pairwise_nash_duality(const PayoffFn& phi);

// Dispatch by theorem id; appends expected-set checks when the model file
// declares them.
VerifyReport verify_theorem(const Model& model, const std::string& theorem_id);

// Seeded randomized batch over freshly drawn instances of the given size.
VerifyReport verify_theorem_random(const std::string& theorem_id,
                                   int instances, int players,
                                   std::uint64_t seed);

// The expected-set checks alone (every "expected" block in the model).
std::vector<Check> check_expected_sets(const Model& model);

}  // namespace netstab

#endif
