#include "game.hpp"

#include "errors.hpp"

namespace netstab {

FiniteGame::FiniteGame(std::vector<int> strategy_counts, Oracle oracle,
                       std::vector<std::vector<std::string>> labels)
    : counts_(std::move(strategy_counts)),
      oracle_(std::move(oracle)),
      labels_(std::move(labels)) {
  if (counts_.empty()) throw precondition_error("game needs players");
  for (int c : counts_) {
    if (c < 1) throw precondition_error("strategy counts must be >= 1");
  }
  if (!labels_.empty()) {
    if (labels_.size() != counts_.size()) {
      throw precondition_error("labels must cover every player");
    }
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (static_cast<int>(labels_[i].size()) != counts_[i]) {
        throw precondition_error("label count mismatch for a player");
      }
    }
  }
}

void FiniteGame::validate_profile(const Profile& a) const {
  if (static_cast<int>(a.size()) != players()) {
    throw precondition_error("profile length must equal the player count");
  }
  for (int i = 1; i <= players(); ++i) {
    if (a[i - 1] < 0 || a[i - 1] >= counts_[i - 1]) {
      throw precondition_error("strategy index out of range");
    }
  }
}

Rational FiniteGame::payoff(const Profile& a, int player) const {
  return oracle_(a, player);
}

std::vector<Rational> FiniteGame::payoffs(const Profile& a) const {
  std::vector<Rational> out;
  out.reserve(players());
  for (int i = 1; i <= players(); ++i) out.push_back(oracle_(a, i));
  return out;
}

const std::string& FiniteGame::label(int player, int strategy) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_[player - 1][strategy];
}

std::optional<int> FiniteGame::strategy_from_label(
    int player, const std::string& label) const {
  if (labels_.empty()) return std::nullopt;
  const auto& row = labels_[player - 1];
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (row[s] == label) return static_cast<int>(s);
  }
  return std::nullopt;
}

std::string FiniteGame::profile_str(const Profile& a) const {
  std::string out = "(";
  for (int i = 1; i <= players(); ++i) {
    if (i > 1) out += ",";
    out += has_labels() ? label(i, a[i - 1]) : std::to_string(a[i - 1]);
  }
  return out + ")";
}

std::size_t FiniteGame::profile_space(std::size_t cap) const {
  std::size_t total = 1;
  for (int c : counts_) {
    if (total > cap / static_cast<std::size_t>(c)) {
      throw capacity_error("profile space exceeds the configured bound");
    }
    total *= static_cast<std::size_t>(c);
  }
  return total;
}

void for_each_profile(const FiniteGame& game,
                      const std::function<void(const Profile&)>& fn) {
  Profile a(game.players(), 0);
  while (true) {
    fn(a);
    int i = game.players() - 1;
    while (i >= 0) {
      if (++a[i] < game.strategy_count(i + 1)) break;
      a[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

std::vector<int> best_responses(const FiniteGame& game, int player,
                                const Profile& profile) {
  game.validate_profile(profile);
  Profile probe = profile;
  std::vector<int> best;
  Rational best_value;
  for (int s = 0; s < game.strategy_count(player); ++s) {
    probe[player - 1] = s;
    Rational v = game.payoff(probe, player);
    if (best.empty() || v > best_value) {
      best_value = v;
      best.assign(1, s);
    } else if (v == best_value) {
      best.push_back(s);
    }
  }
  return best;
}

bool is_nash(const FiniteGame& game, const Profile& profile) {
  game.validate_profile(profile);
  Profile probe = profile;
  for (int i = 1; i <= game.players(); ++i) {
    Rational own = game.payoff(profile, i);
    for (int s = 0; s < game.strategy_count(i); ++s) {
      probe[i - 1] = s;
      if (game.payoff(probe, i) > own) return false;
    }
    probe[i - 1] = profile[i - 1];
  }
  return true;
}

std::vector<Profile> enumerate_nash(const FiniteGame& game, std::size_t cap) {
  game.profile_space(cap);
  std::vector<Profile> out;
  for_each_profile(game, [&](const Profile& a) {
    if (is_nash(game, a)) out.push_back(a);
  });
  return out;
}

namespace {

// Iterates joint deviations of the coalition (players listed 1-based).
bool next_joint(const FiniteGame& game, const std::vector<int>& coalition,
                Profile& probe) {
  for (std::size_t k = 0; k < coalition.size(); ++k) {
    int i = coalition[k];
    if (++probe[i - 1] < game.strategy_count(i)) return true;
    probe[i - 1] = 0;
  }
  return false;
}

}  // namespace

bool is_strong_equilibrium(const FiniteGame& game, const Profile& profile,
                           CoalitionMode mode, std::size_t cap) {
  game.validate_profile(profile);
  int n = game.players();
  std::vector<Rational> base = game.payoffs(profile);

  std::size_t budget = 0;
  for (unsigned coalition_bits = 1; coalition_bits < (1u << n);
       ++coalition_bits) {
    std::size_t joint = 1;
    for (int i = 1; i <= n; ++i) {
      if (coalition_bits & (1u << (i - 1))) {
        joint *= static_cast<std::size_t>(game.strategy_count(i));
      }
    }
    budget += joint;
    if (budget > cap) {
      throw capacity_error("coalition deviation space exceeds the bound");
    }
  }

  for (unsigned coalition_bits = 1; coalition_bits < (1u << n);
       ++coalition_bits) {
    std::vector<int> coalition;
    for (int i = 1; i <= n; ++i) {
      if (coalition_bits & (1u << (i - 1))) coalition.push_back(i);
    }
    Profile probe = profile;
    for (int i : coalition) probe[i - 1] = 0;
    do {
      bool all_weakly_worse = true;
      bool all_strictly_better = true;
      for (int i : coalition) {
        Rational v = game.payoff(probe, i);
        if (v > base[i - 1]) all_weakly_worse = false;
        if (v <= base[i - 1]) all_strictly_better = false;
      }
      if (mode == CoalitionMode::kAllWeaklyWorse) {
        if (!all_weakly_worse) return false;
      } else {
        if (all_strictly_better) return false;
      }
    } while (next_joint(game, coalition, probe));
  }
  return true;
}

}  // namespace netstab
