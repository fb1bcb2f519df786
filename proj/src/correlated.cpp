#include "correlated.hpp"

#include "errors.hpp"

namespace netstab {

void validate_device(const CorrelationDevice& device, const FiniteGame& game) {
  if (device.support.empty()) {
    throw precondition_error("correlation device has empty support");
  }
  Rational total(0);
  for (const auto& entry : device.support) {
    game.validate_profile(entry.profile);
    if (entry.prob <= 0) {
      throw precondition_error("device probabilities must be positive");
    }
    total += entry.prob;
  }
  if (total != 1) {
    throw precondition_error("device probabilities sum to " +
                             rational_str(total) + ", expected 1");
  }
}

std::vector<Rational> expected_payoffs(const CorrelationDevice& device,
                                       const FiniteGame& game) {
  validate_device(device, game);
  std::vector<Rational> out(game.players(), Rational(0));
  for (const auto& entry : device.support) {
    for (int i = 1; i <= game.players(); ++i) {
      out[i - 1] += entry.prob * game.payoff(entry.profile, i);
    }
  }
  return out;
}

std::pair<Rational, Rational> conditional_deviation_value(
    const CorrelationDevice& device, const FiniteGame& game, int player,
    int recommended, int deviation) {
  Rational value(0);
  Rational marginal(0);
  for (const auto& entry : device.support) {
    if (entry.profile[player - 1] != recommended) continue;
    marginal += entry.prob;
    Profile probe = entry.profile;
    probe[player - 1] = deviation;
    value += entry.prob * game.payoff(probe, player);
  }
  return {value, marginal};
}

bool is_correlated_equilibrium(const CorrelationDevice& device,
                               const FiniteGame& game,
                               ObedienceWitness* witness) {
  validate_device(device, game);
  for (int i = 1; i <= game.players(); ++i) {
    for (int rec = 0; rec < game.strategy_count(i); ++rec) {
      auto [obey, marginal] = conditional_deviation_value(device, game, i,
                                                          rec, rec);
      if (marginal == 0) continue;  // never recommended
      for (int dev = 0; dev < game.strategy_count(i); ++dev) {
        if (dev == rec) continue;
        auto [value, same_marginal] =
            conditional_deviation_value(device, game, i, rec, dev);
        (void)same_marginal;
        if (value > obey) {
          if (witness) *witness = {i, rec, dev, obey, value};
          return false;
        }
      }
    }
  }
  return true;
}

bool is_ex_ante_self_enforcing(const CorrelationDevice& device,
                               const FiniteGame& game,
                               ObedienceWitness* witness) {
  std::vector<Rational> base = expected_payoffs(device, game);
  for (int i = 1; i <= game.players(); ++i) {
    for (int dev = 0; dev < game.strategy_count(i); ++dev) {
      Rational value(0);
      for (const auto& entry : device.support) {
        Profile probe = entry.profile;
        probe[i - 1] = dev;
        value += entry.prob * game.payoff(probe, i);
      }
      if (value > base[i - 1]) {
        if (witness) *witness = {i, -1, dev, base[i - 1], value};
        return false;
      }
    }
  }
  return true;
}

}  // namespace netstab
