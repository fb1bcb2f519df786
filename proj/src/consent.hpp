#ifndef NETSTAB_CONSENT_HPP
#define NETSTAB_CONSENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "game.hpp"
#include "payoff.hpp"

namespace netstab {

// An n x n binary signal matrix (entry ij: i's message to j). The diagonal
// is never stored; the layout uses a fixed stride of 8, so n <= 8 fits one
// 64-bit word.
struct SignalProfile {
  int n = 0;
  std::uint64_t bits = 0;

  bool get(int i, int j) const {
    return (bits >> ((i - 1) * 8 + (j - 1))) & 1u;
  }
  void set(int i, int j, bool v) {
    std::uint64_t bit = std::uint64_t{1} << ((i - 1) * 8 + (j - 1));
    bits = v ? (bits | bit) : (bits & ~bit);
  }
  bool operator==(const SignalProfile&) const = default;
};

// Rows are per-player signal vectors over the other players in ascending
// order, e.g. ((1,1),(1,0),(1,0)) for n = 3.
SignalProfile signal_profile_from_rows(PlayerSet ps,
                                       const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> signal_profile_rows(const SignalProfile& ell);
std::string signal_profile_str(const SignalProfile& ell);

// An initiation/response pair of matrices for the one-sided model.
struct DyadProfile {
  int n = 0;
  std::uint64_t l_bits = 0;
  std::uint64_t r_bits = 0;

  bool l(int i, int j) const {
    return (l_bits >> ((i - 1) * 8 + (j - 1))) & 1u;
  }
  bool r(int i, int j) const {
    return (r_bits >> ((i - 1) * 8 + (j - 1))) & 1u;
  }
  void set_l(int i, int j, bool v);
  void set_r(int i, int j, bool v);
  bool operator==(const DyadProfile&) const = default;
};

std::string dyad_profile_str(const DyadProfile& d);

// g(l): links signalled from both sides.
Network supported_network(PlayerSet ps, const SignalProfile& ell);
// g^b(l, r): links whose initiation was answered positively.
Network one_sided_network(PlayerSet ps, const DyadProfile& d);

// Game-theoretic payoffs of the three model variants.
std::vector<Rational> myerson_payoffs(const PayoffFn& phi,
                                      const SignalProfile& ell);
std::vector<Rational> two_sided_payoffs(const PayoffFn& phi,
                                        const CostMatrix& c,
                                        const SignalProfile& ell);
std::vector<Rational> one_sided_payoffs(const PayoffFn& phi,
                                        const CostMatrix& gamma,
                                        const DyadProfile& d);

// Cost-netted network payoff functions.
// phi^a subtracts each player's cost of the links she is part of.
PayoffFn net_payoff_a(const PayoffFn& phi, const CostMatrix& c);
// phi^b charges each link to the cheaper endpoint (ties to the lower index).
PayoffFn net_payoff_b(const PayoffFn& phi, const CostMatrix& gamma);
// M_i(g): the neighbours whose link player i finances under phi^b.
std::vector<int> financed_neighbours(PlayerSet ps, Network g,
                                     const CostMatrix& gamma, int i);

// Strategy-index encodings used by the strategic-form views.
int myerson_strategy_count(PlayerSet ps);
SignalProfile signal_profile_from_game(PlayerSet ps, const Profile& a);
Profile game_profile_from_signals(PlayerSet ps, const SignalProfile& ell);
int one_sided_strategy_count(PlayerSet ps);
DyadProfile dyad_profile_from_game(PlayerSet ps, const Profile& a);
Profile game_profile_from_dyad(PlayerSet ps, const DyadProfile& d);

FiniteGame myerson_game(const PayoffFn& phi);
FiniteGame two_sided_game(const PayoffFn& phi, const CostMatrix& c);
FiniteGame one_sided_game(const PayoffFn& phi, const CostMatrix& gamma);

// Desk-scale caps for full profile enumeration.
inline constexpr int kMaxProfileEnumerationPlayers = 4;
inline constexpr int kMaxOneSidedFullPlayers = 3;

enum class EquilibriumMethod { kCharacterisation, kDirect };

// M-networks: networks supported by pure Nash equilibria of the Myerson
// model. The characterisation route scans for strong link deletion
// proofness; the direct route enumerates equilibria.
std::vector<Network> m_networks(const PayoffFn& phi,
                                EquilibriumMethod method);

std::vector<Network> nash_networks_two_sided(const PayoffFn& phi,
                                             const CostMatrix& c,
                                             EquilibriumMethod method);

// One-sided supported networks. kDirect enumerates the full 16^m profile
// space (n <= 3); kCharacterisation searches, per network, the clean
// profiles in which every link has a single financing initiator and no
// stray signals exist, checking each candidate against all 4^(n-1)
// deviations per player. Any Nash equilibrium can be stripped of stray
// signals and duplicate payers without breaking equilibrium, so the two
// routes agree.
std::vector<Network> nash_networks_one_sided(const PayoffFn& phi,
                                             const CostMatrix& gamma,
                                             EquilibriumMethod method);

// The unique two-sided non-superfluous profile supporting g.
SignalProfile non_superfluous_profile(PlayerSet ps, Network g);
// All one-sided non-superfluous profiles supporting g (one initiator per
// link), 2^{|g|} of them.
std::vector<DyadProfile> non_superfluous_profiles(PlayerSet ps, Network g);

// Is this dyad profile a Nash equilibrium of the one-sided model?
bool is_one_sided_nash(const PayoffFn& phi, const CostMatrix& gamma,
                       const DyadProfile& d);

// Pairwise Nash networks (strategy space) and bilaterally stable networks
// (network space); the two sets coincide.
std::vector<Network> pairwise_nash_networks(const PayoffFn& phi);
std::vector<Network> bilateral_stable_networks(const PayoffFn& phi);

struct InclusionReport {
  std::string lhs_name;
  std::string rhs_name;
  std::vector<Network> lhs;
  std::vector<Network> rhs;
  std::vector<Network> lhs_minus_rhs;  // inclusion violations
  std::vector<Network> rhs_minus_lhs;  // strictness witnesses
  bool inclusion_holds() const { return lhs_minus_rhs.empty(); }
};

// SLDP(phi^b) vs the one-sided supported set.
InclusionReport check_one_sided_inclusion(const PayoffFn& phi,
                                          const CostMatrix& gamma);
// Two-sided supported vs one-sided supported under gamma = c (sunk costs).
InclusionReport check_sunk_cost_inclusion(const PayoffFn& phi,
                                          const CostMatrix& c);
// Two-sided supported vs one-sided supported under gamma = c + c^T; the
// sets are incomparable in general, so both differences matter.
InclusionReport compare_initiator_bears_all(const PayoffFn& phi,
                                            const CostMatrix& c);

}  // namespace netstab

#endif
