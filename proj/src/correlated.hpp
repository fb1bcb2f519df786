#ifndef NETSTAB_CORRELATED_HPP
#define NETSTAB_CORRELATED_HPP

#include <optional>
#include <string>
#include <vector>

#include "game.hpp"

namespace netstab {

// A commonly known probability distribution over strategy profiles; state
// probabilities are positive exact rationals summing to one.
struct CorrelationDevice {
  struct Entry {
    Profile profile;
    Rational prob;
  };
  std::vector<Entry> support;
};

// Throws precondition_error when probabilities are not positive or do not
// sum to exactly one, or a profile is invalid for the game.
void validate_device(const CorrelationDevice& device, const FiniteGame& game);

std::vector<Rational> expected_payoffs(const CorrelationDevice& device,
                                       const FiniteGame& game);

struct ObedienceWitness {
  int player = 0;
  int recommended = -1;  // -1 for ex-ante deviations
  int deviation = 0;
  Rational obey_value;  // conditional (unnormalised) or ex-ante value
  Rational deviation_value;
};

// Conditional (private-recommendation) obedience: told s_i, following it
// must beat every fixed deviation t_i in conditional expectation. The
// comparison multiplies through by the marginal so it stays exact.
bool is_correlated_equilibrium(const CorrelationDevice& device,
                               const FiniteGame& game,
                               ObedienceWitness* witness = nullptr);

// Ex-ante self-enforcement: committing to any constant strategy before the
// device draws must not beat following the recommendations.
bool is_ex_ante_self_enforcing(const CorrelationDevice& device,
                               const FiniteGame& game,
                               ObedienceWitness* witness = nullptr);

// The conditional expected value of playing `deviation` whenever told
// `recommended`, as the pair (sum over matching states, marginal
// probability); obedience corresponds to deviation == recommended.
std::pair<Rational, Rational> conditional_deviation_value(
    const CorrelationDevice& device, const FiniteGame& game, int player,
    int recommended, int deviation);

}  // namespace netstab

#endif
