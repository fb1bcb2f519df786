#ifndef NETSTAB_TRUST_HPP
#define NETSTAB_TRUST_HPP

#include <optional>
#include <string>
#include <vector>

#include "consent.hpp"
#include "payoff.hpp"

namespace netstab {

inline constexpr int kMaxMonadicPlayers = 5;  // 3^{#non-links} support search

// A player's myopic conjecture about everyone else's signals: reciprocation
// entries l^{i*}_{ji} follow first-order self-interest of j (keep on a weak
// preference for the link, form on a weak preference as well); entries not
// involving the owner are copied from the profile. The owner's own row is
// her actual strategy.
struct BeliefSystem {
  int owner = 0;
  SignalProfile beliefs;
};

BeliefSystem monadic_beliefs(const PayoffFn& phi, const CostMatrix& c,
                             const SignalProfile& ell, int owner);

// Renders like the worked examples: "(-,(1,0),(1,0))" with "-" marking the
// owner's row.
std::string belief_str(const BeliefSystem& b);

// Is ell_i a best response (under pi^a) to the owner's monadic beliefs?
bool is_best_response_to_beliefs(const PayoffFn& phi, const CostMatrix& c,
                                 const SignalProfile& ell, int owner);

// Weak monadic stability: some profile supporting g in which every player
// best-responds to her own monadic beliefs. Profiles supporting g fix both
// signals of every link and exclude (1,1) on non-links, leaving three
// choices per non-link.
std::optional<SignalProfile> weak_monadic_support(const PayoffFn& phi,
                                                  const CostMatrix& c,
                                                  Network g);
bool is_weak_monadic(const PayoffFn& phi, const CostMatrix& c, Network g);

// Monadic stability adds belief confirmation. The supporting profile is the
// unique non-superfluous profile of g: with strictly positive costs best
// responses force that form anyway, and with zero costs a stray costless
// signal could otherwise confirm beliefs vacuously, against the worked
// examples. monadic_support_exhaustive exposes the literal any-profile
// reading for comparison.
std::optional<SignalProfile> monadic_support(const PayoffFn& phi,
                                             const CostMatrix& c, Network g);
std::optional<SignalProfile> monadic_support_exhaustive(const PayoffFn& phi,
                                                        const CostMatrix& c,
                                                        Network g);
bool is_monadic(const PayoffFn& phi, const CostMatrix& c, Network g);

// Unilateral stability through its network-level characterisation: an
// M-network no single player can profitably rewire (cutting any of her
// links, proposing any new ones) without hurting some newly chosen
// neighbour. Evaluated in the costless Myerson model.
bool is_unilaterally_stable(const PayoffFn& phi, Network g);

std::vector<Network> unilaterally_stable_networks(const PayoffFn& phi);
std::vector<Network> weak_monadic_networks(const PayoffFn& phi,
                                           const CostMatrix& c);
std::vector<Network> monadic_networks(const PayoffFn& phi,
                                      const CostMatrix& c);

}  // namespace netstab

#endif
