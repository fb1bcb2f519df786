#include "trust.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "errors.hpp"
#include "random_instances.hpp"
#include "stability.hpp"
#include "test_support.hpp"
#include "verify.hpp"

namespace netstab {
namespace {

using test::load_model;
using test::net;
using test::nets;

SignalProfile rows(PlayerSet ps, const std::vector<std::vector<int>>& r) {
  return signal_profile_from_rows(ps, r);
}

TEST(MonadicBeliefs, DisplayedSystemsForTheCostlyExample) {
  Model m = load_model("fix_d.json");
  const CostMatrix& c = *m.costs_two_sided;
  auto beliefs = [&](const SignalProfile& ell, int owner) {
    return belief_str(monadic_beliefs(m.phi, c, ell, owner));
  };

  SignalProfile ell0 = rows(m.ps, {{1, 1}, {0, 0}, {0, 0}});
  EXPECT_EQ(beliefs(ell0, 1), "(-,(1,0),(1,0))");
  EXPECT_EQ(beliefs(ell0, 2), "((0,1),-,(0,0))");
  EXPECT_EQ(beliefs(ell0, 3), "((1,0),(0,0),-)");

  SignalProfile ell5 = rows(m.ps, {{1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(beliefs(ell5, 1), "(-,(1,1),(1,1))");
  EXPECT_EQ(beliefs(ell5, 2), "((1,0),-,(0,1))");
  EXPECT_EQ(beliefs(ell5, 3), "((1,1),(1,1),-)");

  SignalProfile ell6 = rows(m.ps, {{0, 1}, {1, 1}, {1, 1}});
  EXPECT_EQ(beliefs(ell6, 1), "(-,(1,1),(1,1))");
  EXPECT_EQ(beliefs(ell6, 2), "((1,1),-,(1,1))");
  EXPECT_EQ(beliefs(ell6, 3), "((0,1),(1,1),-)");

  SignalProfile ell7 = rows(m.ps, {{1, 1}, {1, 1}, {1, 1}});
  EXPECT_EQ(beliefs(ell7, 1), "(-,(1,1),(1,1))");
  EXPECT_EQ(beliefs(ell7, 2), "((1,1),-,(1,1))");
  EXPECT_EQ(beliefs(ell7, 3), "((1,1),(1,1),-)");
}

TEST(MonadicBeliefs, ZeroPayoffsTieTowardsLinking) {
  PlayerSet ps(3);
  PayoffFn zero = PayoffFn::zero(ps);
  CostMatrix c = CostMatrix::zero(ps);
  SignalProfile any = rows(ps, {{1, 0}, {1, 0}, {0, 0}});
  for (int owner = 1; owner <= 3; ++owner) {
    BeliefSystem b = monadic_beliefs(zero, c, any, owner);
    for (int j = 1; j <= 3; ++j) {
      if (j != owner) {
        EXPECT_TRUE(b.beliefs.get(j, owner));
      }
    }
  }
}

TEST(WeakMonadic, CostlyExampleMembersAndNonMembers) {
  Model m = load_model("fix_d.json");
  const CostMatrix& c = *m.costs_two_sided;

  auto support0 = weak_monadic_support(m.phi, c, empty_network(m.ps));
  ASSERT_TRUE(support0.has_value());

  EXPECT_TRUE(is_weak_monadic(m.phi, c, net(m.ps, "13,23")));
  EXPECT_TRUE(is_weak_monadic(m.phi, c, complete_network(m.ps)));
  EXPECT_FALSE(is_weak_monadic(m.phi, c, net(m.ps, "12,23")));
}

TEST(WeakMonadic, TheSuperfluousSupportOfTheEmptyNetwork) {
  Model m = load_model("fix_d.json");
  const CostMatrix& c = *m.costs_two_sided;
  // Player 1 messages both others (paying 2), expecting reciprocation that
  // never comes; everyone still best-responds to their own beliefs.
  SignalProfile ell0 = rows(m.ps, {{1, 1}, {0, 0}, {0, 0}});
  for (int i = 1; i <= 3; ++i) {
    EXPECT_TRUE(is_best_response_to_beliefs(m.phi, c, ell0, i));
  }
  // The non-superfluous all-zero profile is not belief-stable: player 1's
  // beliefs make linking strictly profitable.
  SignalProfile zero{3, 0};
  EXPECT_FALSE(is_best_response_to_beliefs(m.phi, c, zero, 1));
}

TEST(Monadic, CostlyExampleHasOnlyTheCompleteNetwork) {
  Model m = load_model("fix_d.json");
  const CostMatrix& c = *m.costs_two_sided;
  EXPECT_EQ(monadic_networks(m.phi, c),
            std::vector<Network>{complete_network(m.ps)});
  EXPECT_FALSE(is_monadic(m.phi, c, empty_network(m.ps)));
  EXPECT_FALSE(is_monadic(m.phi, c, net(m.ps, "12,23")));
}

TEST(Monadic, CostlessComparisonExample) {
  Model m = load_model("fix_e.json");
  CostMatrix c = m.two_sided_or_zero();

  auto support = monadic_support(m.phi, c, net(m.ps, "12"));
  ASSERT_TRUE(support.has_value());
  EXPECT_EQ(signal_profile_str(*support), "((1,0),(1,0),(0,0))");

  EXPECT_EQ(monadic_networks(m.phi, c), nets(m.ps, {"12"}));
  EXPECT_FALSE(is_monadic(m.phi, c, complete_network(m.ps)));
  EXPECT_FALSE(is_weak_monadic(m.phi, c, complete_network(m.ps)));
  EXPECT_TRUE(is_weak_monadic(m.phi, c, net(m.ps, "13,23")));
}

// With zero costs the literal any-supporting-profile reading admits an
// extra self-confirming support for {13,23}: player 1's costless message to
// player 2 goes unreciprocated yet confirms player 2's belief. The
// non-superfluous reading excludes it.
TEST(Monadic, ExhaustiveReadingDivergesAtZeroCosts) {
  Model m = load_model("fix_e.json");
  CostMatrix c = m.two_sided_or_zero();
  Network g6 = net(m.ps, "13,23");
  EXPECT_FALSE(is_monadic(m.phi, c, g6));
  auto stray = monadic_support_exhaustive(m.phi, c, g6);
  ASSERT_TRUE(stray.has_value());
  EXPECT_TRUE(stray->get(1, 2));
  EXPECT_FALSE(stray->get(2, 1));

  // With strictly positive costs the two readings agree.
  Model d = load_model("fix_d.json");
  for (Network g : enumerate_networks(d.ps)) {
    EXPECT_EQ(is_monadic(d.phi, *d.costs_two_sided, g),
              monadic_support_exhaustive(d.phi, *d.costs_two_sided, g)
                  .has_value());
  }
}

TEST(Monadic, ImpliesWeakMonadicWithNonSuperfluousSupport) {
  Rng rng(61);
  PlayerSet ps(3);
  for (int trial = 0; trial < 15; ++trial) {
    PayoffFn phi = random_payoff_table(rng, ps);
    CostMatrix c = random_positive_costs(rng, ps);
    for (Network g : enumerate_networks(ps)) {
      auto support = monadic_support(phi, c, g);
      if (!support) continue;
      EXPECT_TRUE(is_weak_monadic(phi, c, g));
      EXPECT_EQ(*support, non_superfluous_profile(ps, g));
    }
  }
}

TEST(Unilateral, ThreePlayerExample) {
  Model m = load_model("fix_c.json");
  EXPECT_EQ(unilaterally_stable_networks(m.phi),
            std::vector<Network>{complete_network(m.ps)});
  // Strongly or even strictly pairwise stable networks need not qualify.
  EXPECT_TRUE(is_strongly_ps(m.phi, empty_network(m.ps)));
  EXPECT_FALSE(is_unilaterally_stable(m.phi, empty_network(m.ps)));
  EXPECT_TRUE(is_strictly_ps(m.phi, net(m.ps, "12")));
  EXPECT_FALSE(is_unilaterally_stable(m.phi, net(m.ps, "12")));
}

TEST(Unilateral, DisjointFromMonadicOnTheComparisonExample) {
  Model m = load_model("fix_e.json");
  auto unilateral = unilaterally_stable_networks(m.phi);
  EXPECT_EQ(unilateral, nets(m.ps, {"13,23"}));
  EXPECT_FALSE(is_unilaterally_stable(m.phi, net(m.ps, "12")));
  EXPECT_FALSE(is_unilaterally_stable(m.phi, complete_network(m.ps)));

  auto monadic = monadic_networks(m.phi, m.two_sided_or_zero());
  for (Network g : unilateral) {
    EXPECT_EQ(std::find(monadic.begin(), monadic.end(), g), monadic.end());
  }
}

TEST(Unilateral, AlwaysStronglyPairwiseStable) {
  Rng rng(67);
  PlayerSet ps(3);
  for (int trial = 0; trial < 20; ++trial) {
    PayoffFn phi = random_payoff_table(rng, ps);
    for (Network g : unilaterally_stable_networks(phi)) {
      EXPECT_TRUE(is_strongly_ps(phi, g));
    }
  }
}

TEST(Unilateral, StrictlyMonotonePayoffsLeaveOnlyTheCompleteNetwork) {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    PayoffFn phi = random_link_monotone_table(rng, PlayerSet(3));
    EXPECT_EQ(unilaterally_stable_networks(phi),
              std::vector<Network>{complete_network(phi.players())});
  }
  // Under ties the claim fails: with identically zero payoffs every network
  // is unilaterally stable, although the payoffs are (weakly) link
  // monotone.
  PayoffFn zero = PayoffFn::zero(PlayerSet(3));
  EXPECT_TRUE(is_link_monotone(zero));
  EXPECT_EQ(unilaterally_stable_networks(zero).size(), 8u);
}

TEST(MonadicEquivalence, FixtureAndRandomized) {
  Model m = load_model("fix_d.json");
  EXPECT_TRUE(verify_monadic_equivalence(m.phi, *m.costs_two_sided).ok());

  Rng rng(73);
  PlayerSet ps(3);
  CostMatrix unit = CostMatrix::uniform(ps, Rational(1));
  for (int trial = 0; trial < 40; ++trial) {
    PayoffFn phi = random_payoff_table(rng, ps);
    EXPECT_TRUE(verify_monadic_equivalence(phi, unit).ok());
  }

  // Prohibitive uniform costs leave only the empty network on both sides.
  PayoffFn phi = random_payoff_table(rng, ps);
  CostMatrix huge = CostMatrix::uniform(ps, Rational(1000));
  EXPECT_TRUE(verify_monadic_equivalence(phi, huge).ok());
  EXPECT_EQ(monadic_networks(phi, huge),
            std::vector<Network>{empty_network(ps)});

  EXPECT_THROW(verify_monadic_equivalence(phi, CostMatrix::zero(ps)),
               precondition_error);
}

}  // namespace
}  // namespace netstab
