#ifndef NETSTAB_STABILITY_HPP
#define NETSTAB_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "payoff.hpp"

namespace netstab {

// --- link-based proofness predicates ---------------------------------------

// No player gains by cutting one of her links.
bool is_ldp(const PayoffFn& phi, Network g);
// No player gains by cutting any subset of her links simultaneously.
bool is_sldp(const PayoffFn& phi, Network g);

// LAP:  for ij outside g, a strict gain for one end forces a strict loss
//       for the other.
// *-LAP: already a weak gain for one end forces a strict loss for the other.
// SLAP: every link outside g strictly hurts both of its ends.
bool is_lap(const PayoffFn& phi, Network g);
bool is_star_lap(const PayoffFn& phi, Network g);
bool is_slap(const PayoffFn& phi, Network g);

bool is_pairwise_stable(const PayoffFn& phi, Network g);   // LDP  and LAP
bool is_strongly_ps(const PayoffFn& phi, Network g);       // SLDP and LAP
bool is_strictly_ps(const PayoffFn& phi, Network g);       // SLDP and SLAP

// --- structural predicates on the payoff function --------------------------

struct StructureWitness {
  Network g;
  int player_i = 0;
  int player_j = 0;      // second endpoint where applicable
  LinkMask links = 0;    // offending link set where applicable
  std::string note;
};

// Convexity over a class of networks, in the form the deletion-equivalence
// argument actually uses: within each class member g, whenever the summed
// one-at-a-time deletion losses of a link set h in L_i(g) are nonnegative,
// deleting all of h at once cannot pay either.
bool is_convex_on(const PayoffFn& phi, const std::vector<Network>& cls,
                  StructureWitness* witness = nullptr);

// No non-discerning pair: for every class member and every missing link at
// least one endpoint's payoff moves.
bool is_discerning_on(const PayoffFn& phi, const std::vector<Network>& cls,
                      StructureWitness* witness = nullptr);

// Weak gains propagate: a weak gain for one endpoint of a missing link
// implies a weak gain for the other.
bool is_uniform_on(const PayoffFn& phi, const std::vector<Network>& cls,
                   StructureWitness* witness = nullptr);

// Adding any own link never hurts, anywhere.
bool is_link_monotone(const PayoffFn& phi,
                      StructureWitness* witness = nullptr);

// Named network classes, each computed by brute force over all networks.
enum class NetworkClass { kAll, kLdp, kSldp, kLap, kStarLap, kSlap, kPs, kSps, kSpsStrict };
std::vector<Network> networks_in_class(const PayoffFn& phi, NetworkClass cls);

// --- coalition-based stability ----------------------------------------------

using PlayerMask = unsigned;  // bit (i-1) set when player i is in S

// Networks reachable from g when coalition S adds links internal to S and
// cuts links incident to S.
std::vector<Network> obtainable(PlayerSet ps, Network g, PlayerMask coalition);

enum class StrongStabilityMode { kJvdN, kDuttaMutuswami };

struct DeviationWitness {
  PlayerMask coalition = 0;
  Network from;
  Network to;
};

bool is_strongly_stable(const PayoffFn& phi, Network g,
                        StrongStabilityMode mode = StrongStabilityMode::kJvdN,
                        DeviationWitness* witness = nullptr);

// The strong-stability condition restricted to coalitions of size <= r.
bool stability_of_order(const PayoffFn& phi, Network g, int r,
                        StrongStabilityMode mode = StrongStabilityMode::kJvdN,
                        DeviationWitness* witness = nullptr);

}  // namespace netstab

#endif
