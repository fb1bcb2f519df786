#include "correlated.hpp"

#include <gtest/gtest.h>

#include "consent.hpp"
#include "errors.hpp"
#include "model_io.hpp"
#include "random_instances.hpp"
#include "test_support.hpp"

namespace netstab {
namespace {

FiniteGame chicken() { return parse_game(test::read_fixture("chicken.json")); }

CorrelationDevice device_from(const FiniteGame& game,
                              std::vector<std::pair<Profile, Rational>> rows) {
  CorrelationDevice d;
  for (auto& [p, q] : rows) d.support.push_back({p, q});
  validate_device(d, game);
  return d;
}

TEST(Devices, ValidationRejectsBadDistributions) {
  FiniteGame game = chicken();
  CorrelationDevice short_one;
  short_one.support.push_back({{0, 1}, Rational(1, 2)});
  EXPECT_THROW(validate_device(short_one, game), precondition_error);

  CorrelationDevice negative;
  negative.support.push_back({{0, 1}, Rational(3, 2)});
  negative.support.push_back({{1, 0}, Rational(-1, 2)});
  EXPECT_THROW(validate_device(negative, game), precondition_error);
}

TEST(TrafficLight, AlternatingDevice) {
  FiniteGame game = chicken();
  auto device = device_from(
      game, {{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}});
  EXPECT_EQ(expected_payoffs(device, game),
            (std::vector<Rational>{Rational(9, 2), Rational(9, 2)}));
  EXPECT_TRUE(is_correlated_equilibrium(device, game));
  EXPECT_TRUE(is_ex_ante_self_enforcing(device, game));
}

TEST(TrafficLight, SimultaneousRedDevice) {
  FiniteGame game = chicken();
  auto device = device_from(game, {{{0, 0}, Rational(1, 2)},
                                   {{0, 1}, Rational(1, 4)},
                                   {{1, 0}, Rational(1, 4)}});
  EXPECT_EQ(expected_payoffs(device, game),
            (std::vector<Rational>{Rational(19, 4), Rational(19, 4)}));

  // The worked argument's numbers: told red, the other driver is red with
  // probability 2/3; continuing is worth 2/3*7 + 1/3*0 = 14/3, which stays
  // below the device value 19/4.
  auto [dev_sum, marginal] =
      conditional_deviation_value(device, game, 1, /*rec=*/0, /*dev=*/1);
  ASSERT_EQ(marginal, Rational(3, 4));
  Rational conditional_dev = dev_sum / marginal;
  EXPECT_EQ(conditional_dev, Rational(14, 3));
  EXPECT_LT(conditional_dev, Rational(19, 4));

  // Frozen oracle verdicts: against this payoff matrix the device fails
  // both exhaustive checks — obeying red is worth only 4 conditionally, and
  // the constant-continue commitment is worth 21/4 ex ante.
  auto [obey_sum, obey_marginal] =
      conditional_deviation_value(device, game, 1, 0, 0);
  EXPECT_EQ(obey_sum / obey_marginal, Rational(4));
  ObedienceWitness w;
  EXPECT_FALSE(is_correlated_equilibrium(device, game, &w));
  EXPECT_EQ(w.recommended, 0);
  EXPECT_EQ(w.deviation, 1);
  EXPECT_FALSE(is_ex_ante_self_enforcing(device, game, &w));
  EXPECT_EQ(w.deviation_value, Rational(21, 4));
}

TEST(TrafficLight, AllRedIsNotSelfEnforcing) {
  FiniteGame game = chicken();
  auto device = device_from(game, {{{0, 0}, Rational(1)}});
  EXPECT_FALSE(is_correlated_equilibrium(device, game));
  EXPECT_FALSE(is_ex_ante_self_enforcing(device, game));
}

TEST(PointMass, NashProfilesPassBothChecks) {
  FiniteGame game = chicken();
  auto device = device_from(game, {{{0, 1}, Rational(1)}});
  EXPECT_TRUE(is_correlated_equilibrium(device, game));
  EXPECT_TRUE(is_ex_ante_self_enforcing(device, game));

  // Convex combinations of Nash point masses stay ex-ante self-enforcing.
  auto mix = device_from(
      game, {{{0, 1}, Rational(1, 3)}, {{1, 0}, Rational(2, 3)}});
  EXPECT_TRUE(is_ex_ante_self_enforcing(mix, game));
}

TEST(Recommender, NetworkDeviceValuesAndVerdicts) {
  Model m = test::load_model("fix_f.json");
  FiniteGame game = myerson_game(m.phi);

  auto profile = [&](std::vector<std::vector<int>> rows) {
    return game_profile_from_signals(
        m.ps, signal_profile_from_rows(m.ps, rows));
  };
  auto device =
      device_from(game, {{profile({{1, 1}, {1, 0}, {1, 0}}), Rational(1, 12)},
                         {profile({{0, 1}, {0, 1}, {1, 1}}), Rational(2, 3)},
                         {profile({{1, 1}, {1, 1}, {1, 1}}), Rational(1, 4)}});

  EXPECT_EQ(expected_payoffs(device, game),
            (std::vector<Rational>{Rational(11, 3), Rational(19, 6),
                                   Rational(37, 12)}));

  // Player 2's plausible deviation (1,0): worth 8/3 < 19/6 ex ante.
  Profile dev2 = profile({{0, 0}, {1, 0}, {0, 0}});
  Rational value(0);
  for (const auto& entry : device.support) {
    Profile probe = entry.profile;
    probe[1] = dev2[1];
    value += entry.prob * game.payoff(probe, 2);
  }
  EXPECT_EQ(value, Rational(8, 3));
  EXPECT_LT(value, Rational(19, 6));

  // Player 1's plausible deviation (1,1) changes no supported network.
  EXPECT_TRUE(is_ex_ante_self_enforcing(device, game));

  // Frozen oracle verdict: the recommendations reveal the state, and told
  // (1,1) player 2 profits by switching to (1,0), which turns the complete
  // network into {12,13} where she earns 8 > 2.
  ObedienceWitness w;
  EXPECT_FALSE(is_correlated_equilibrium(device, game, &w));
  EXPECT_EQ(w.player, 2);
}

TEST(Invariants, ConditionalImpliesExAnte) {
  Rng rng(83);
  FiniteGame game = chicken();
  int passed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    // Random small-support devices with probabilities k/8.
    std::vector<std::pair<Profile, Rational>> rows;
    int remaining = 8;
    while (remaining > 0) {
      int take = 1 + static_cast<int>(rng.below(remaining));
      Rational prob(take, 8);
      prob.canonicalize();
      rows.push_back(
          {{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))},
           prob});
      remaining -= take;
    }
    CorrelationDevice device;
    for (auto& [p, q] : rows) {
      bool merged = false;
      for (auto& e : device.support) {
        if (e.profile == p) {
          e.prob += q;
          merged = true;
          break;
        }
      }
      if (!merged) device.support.push_back({p, q});
    }
    validate_device(device, game);
    if (is_correlated_equilibrium(device, game)) {
      ++passed;
      EXPECT_TRUE(is_ex_ante_self_enforcing(device, game));
    }
  }
  EXPECT_GT(passed, 0);
}

}  // namespace
}  // namespace netstab
