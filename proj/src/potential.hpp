#ifndef NETSTAB_POTENTIAL_HPP
#define NETSTAB_POTENTIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "game.hpp"
#include "payoff.hpp"

namespace netstab {

struct PotentialFailure {
  std::string kind;  // endpoint-mismatch | constraint | sign-conflict | cycle
  Network g;
  int link_index = -1;
  int player = 0;
  std::vector<Network> cycle;
  std::string detail;
};

// A network potential indexed by link mask, normalised to Lambda(g^0) = 0.
struct NetworkPotentialResult {
  std::optional<std::vector<Rational>> table;
  std::optional<PotentialFailure> failure;
  bool exists() const { return table.has_value(); }
};

// Exact potential: every single-link marginal of either endpoint equals the
// potential difference. Built breadth-first from the empty network, then
// verified on every (g, g-ij, endpoint) triple.
NetworkPotentialResult exact_network_potential(const PayoffFn& phi);

// Ordinal potential: potential differences match the sign of every
// endpoint's single-link marginal. Equality edges are contracted exactly
// (union-find); strict arcs must form a DAG, and Lambda is read off a
// longest-path level numbering.
NetworkPotentialResult ordinal_network_potential(const PayoffFn& phi);

struct GamePotentialFailure {
  std::string kind;
  Profile a;
  Profile b;
  int player = 0;
  std::vector<Profile> cycle;
  std::string detail;
};

// A game potential indexed by the mixed-radix profile rank, normalised at
// the all-first profile.
struct GamePotentialResult {
  std::optional<std::vector<Rational>> table;
  std::optional<GamePotentialFailure> failure;
  bool exists() const { return table.has_value(); }
};

inline constexpr std::size_t kPotentialProfileCap = std::size_t{1} << 16;

GamePotentialResult exact_game_potential(
    const FiniteGame& game, std::size_t cap = kPotentialProfileCap);
GamePotentialResult ordinal_game_potential(
    const FiniteGame& game, std::size_t cap = kPotentialProfileCap);

std::size_t profile_rank(const FiniteGame& game, const Profile& a);
Profile profile_from_rank(const FiniteGame& game, std::size_t rank);

// The potential-based existence claims, each checked against brute-force
// stability sets whenever its premise holds.
struct ExistenceClaim {
  std::string name;
  bool premise = false;
  bool ok = true;  // vacuously true when the premise fails
  std::string detail;
};

struct ExistenceReport {
  bool exact_network = false;
  bool ordinal_network = false;
  bool exact_myerson = false;
  bool ordinal_myerson = false;
  bool ordinal_two_sided = false;
  std::vector<ExistenceClaim> claims;
  bool all_ok() const {
    for (const auto& c : claims) {
      if (!c.ok) return false;
    }
    return true;
  }
};

ExistenceReport existence_report(const PayoffFn& phi, const CostMatrix& c);

}  // namespace netstab

#endif
