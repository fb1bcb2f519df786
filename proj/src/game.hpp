#ifndef NETSTAB_GAME_HPP
#define NETSTAB_GAME_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace netstab {

// A strategy profile: one 0-based strategy index per player.
using Profile = std::vector<int>;

// A finite strategic-form game with an exact-rational payoff oracle.
// Players are 1-based, matching the network side of the library.
class FiniteGame {
 public:
  using Oracle = std::function<Rational(const Profile&, int player)>;

  FiniteGame(std::vector<int> strategy_counts, Oracle oracle,
             std::vector<std::vector<std::string>> labels = {});

  int players() const { return static_cast<int>(counts_.size()); }
  int strategy_count(int player) const { return counts_[player - 1]; }
  const std::vector<int>& strategy_counts() const { return counts_; }

  Rational payoff(const Profile& a, int player) const;
  std::vector<Rational> payoffs(const Profile& a) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int player, int strategy) const;
  std::optional<int> strategy_from_label(int player,
                                         const std::string& label) const;
  std::string profile_str(const Profile& a) const;

  // Product of the strategy counts; throws capacity_error beyond the cap.
  std::size_t profile_space(std::size_t cap) const;

  void validate_profile(const Profile& a) const;

 private:
  std::vector<int> counts_;
  Oracle oracle_;
  std::vector<std::vector<std::string>> labels_;
};

inline constexpr std::size_t kDefaultProfileCap = std::size_t{1} << 24;

// Iterates all profiles in mixed-radix ascending order (last player fastest).
void for_each_profile(const FiniteGame& game,
                      const std::function<void(const Profile&)>& fn);

// The argmax set of player i's payoff against a_{-i}; never empty.
std::vector<int> best_responses(const FiniteGame& game, int player,
                                const Profile& profile);

bool is_nash(const FiniteGame& game, const Profile& profile);

std::vector<Profile> enumerate_nash(const FiniteGame& game,
                                    std::size_t cap = kDefaultProfileCap);

// Strong equilibrium in its demanding form: for every nonempty coalition S
// and every joint deviation, every member of S ends up weakly worse off.
// The Dutta-Mutuswami reading (a deviation blocks only when all members
// strictly gain) is available as a mode.
enum class CoalitionMode { kAllWeaklyWorse, kBlockAllStrictGain };

bool is_strong_equilibrium(const FiniteGame& game, const Profile& profile,
                           CoalitionMode mode = CoalitionMode::kAllWeaklyWorse,
                           std::size_t cap = kDefaultProfileCap);

}  // namespace netstab

#endif
