#include "network.hpp"

#include <gtest/gtest.h>

#include "errors.hpp"
#include "random_instances.hpp"

namespace netstab {
namespace {

TEST(LinkIndex, LexicographicRank) {
  PlayerSet ps(5);
  EXPECT_EQ(ps.link_index(1, 2), 0);
  EXPECT_EQ(ps.link_index(2, 1), 0);
  EXPECT_EQ(ps.link_index(4, 5), 9);
  EXPECT_EQ(ps.link_index(2, 3), 4);
}

TEST(LinkIndex, RoundTripsThroughLinkAt) {
  for (int n = 2; n <= 8; ++n) {
    PlayerSet ps(n);
    for (int idx = 0; idx < ps.link_count(); ++idx) {
      Link l = ps.link_at(idx);
      EXPECT_LT(l.i, l.j);
      EXPECT_EQ(ps.link_index(l.i, l.j), idx);
    }
  }
}

TEST(LinkIndex, RejectsLoopsAndOutOfRange) {
  PlayerSet ps(4);
  EXPECT_THROW(ps.link_index(2, 2), precondition_error);
  EXPECT_THROW(ps.link_index(0, 1), precondition_error);
  EXPECT_THROW(ps.link_index(1, 5), precondition_error);
}

TEST(NetworkAlgebra, AddAndRemoveLinkSets) {
  PlayerSet ps(5);
  Network g = network_from_links(ps, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}});
  LinkMask h45 = LinkMask{1} << ps.link_index(4, 5);
  Network bigger = add_links(g, h45);
  EXPECT_EQ(network_key(bigger), "12,13,24,34,35,45");

  LinkMask red = (LinkMask{1} << ps.link_index(1, 3)) |
                 (LinkMask{1} << ps.link_index(3, 5));
  EXPECT_EQ(network_key(remove_links(g, red)), "12,24,34");

  EXPECT_THROW(add_links(g, LinkMask{1} << ps.link_index(1, 2)),
               precondition_error);
  EXPECT_THROW(remove_links(g, h45), precondition_error);
  EXPECT_EQ(add_links(empty_network(ps), 0), empty_network(ps));
  EXPECT_EQ(remove_links(complete_network(ps), ps.complete_mask()),
            empty_network(ps));
}

TEST(NetworkAlgebra, AddThenRemoveIsIdentity) {
  Rng rng(7);
  PlayerSet ps(5);
  for (int trial = 0; trial < 200; ++trial) {
    Network g{5, static_cast<LinkMask>(rng.below(1u << ps.link_count()))};
    LinkMask h = static_cast<LinkMask>(rng.below(1u << ps.link_count())) &
                 ~g.bits;
    EXPECT_EQ(remove_links(add_links(g, h), h), g);
  }
}

TEST(Neighbourhood, MatchesLinksAndIsSymmetric) {
  PlayerSet ps(5);
  Network g = network_from_links(ps, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}});
  EXPECT_EQ(neighbourhood(ps, g, 1), (std::vector<int>{2, 3}));
  EXPECT_TRUE(neighbourhood(ps, empty_network(ps), 3).empty());

  PlayerSet ps3(3);
  EXPECT_EQ(neighbourhood(ps3, complete_network(ps3), 2),
            (std::vector<int>{1, 3}));

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Network g5{5, static_cast<LinkMask>(rng.below(1u << ps.link_count()))};
    for (int i = 1; i <= 5; ++i) {
      for (int j : neighbourhood(ps, g5, i)) {
        auto back = neighbourhood(ps, g5, j);
        EXPECT_NE(std::find(back.begin(), back.end(), i), back.end());
      }
    }
  }
}

TEST(Enumerate, CountsAndOrdering) {
  EXPECT_EQ(enumerate_networks(PlayerSet(3)).size(), 8u);
  EXPECT_EQ(enumerate_networks(PlayerSet(2)).size(), 2u);
  EXPECT_EQ(enumerate_networks(PlayerSet(4)).size(), 64u);
  auto all = enumerate_networks(PlayerSet(3));
  EXPECT_EQ(all.front(), empty_network(PlayerSet(3)));
  EXPECT_EQ(all.back(), complete_network(PlayerSet(3)));
  for (std::size_t k = 1; k < all.size(); ++k) {
    EXPECT_LT(all[k - 1].bits, all[k].bits);
  }
  EXPECT_THROW(enumerate_networks(PlayerSet(7)), capacity_error);
  EXPECT_EQ(enumerate_networks(PlayerSet(7), 8).size(), std::size_t{1} << 21);
}

TEST(Components, MarketsFromTheTradeExample) {
  PlayerSet ps(5);
  Network g = network_from_links(ps, {{1, 2}, {2, 3}, {4, 5}});
  auto comps = components(ps, g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(comps[1], (std::vector<int>{4, 5}));

  // Adding the chord 13 keeps the same markets.
  Network g2 = network_from_links(ps, {{1, 2}, {2, 3}, {1, 3}, {4, 5}});
  EXPECT_EQ(components(ps, g2), comps);

  auto singletons = components(ps, empty_network(ps));
  EXPECT_EQ(singletons.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(singletons[i], std::vector<int>{i + 1});
  }
}

TEST(NetworkKeys, RoundTripAndErrors) {
  PlayerSet ps(4);
  for (LinkMask m = 0; m <= ps.complete_mask(); ++m) {
    Network g{4, m};
    EXPECT_EQ(network_from_key(ps, network_key(g)), g);
  }
  EXPECT_THROW(network_from_key(ps, "19"), parse_error);
  EXPECT_THROW(network_from_key(ps, "11"), parse_error);
  EXPECT_THROW(network_from_key(ps, "12,12"), parse_error);
  EXPECT_THROW(network_from_key(ps, "1x"), parse_error);
}

TEST(Subsets, EnumeratesAllSubsetsAscending) {
  LinkMask mask = 0b1011;
  std::vector<LinkMask> seen;
  for (LinkMask s : subsets_of(mask)) seen.push_back(s);
  EXPECT_EQ(seen.size(), 8u);
  for (std::size_t k = 1; k < seen.size(); ++k) {
    EXPECT_LT(seen[k - 1], seen[k]);
    EXPECT_EQ(seen[k] & ~mask, 0u);
  }
  std::vector<LinkMask> empty_case;
  for (LinkMask s : subsets_of(0)) empty_case.push_back(s);
  EXPECT_EQ(empty_case, std::vector<LinkMask>{0});
}

}  // namespace
}  // namespace netstab
