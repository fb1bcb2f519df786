#ifndef NETSTAB_NETWORK_HPP
#define NETSTAB_NETWORK_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace netstab {

// Bit set over the canonical link universe. Canonical link order is
// lexicographic on the pair (i, j) with i < j, so for n = 5:
//   12 13 14 15 23 24 25 34 35 45  ->  indices 0..9
using LinkMask = std::uint32_t;

inline constexpr int kAbsoluteMaxPlayers = 8;   // 28 links fit a 32-bit mask
inline constexpr int kDefaultMaxPlayers = 6;    // 2^15 networks, desk scale

struct Link {
  int i = 0;  // canonical form i < j
  int j = 0;
  auto operator<=>(const Link&) const = default;
};

// The player set N = {1, ..., n}. All public interfaces use 1-based players.
class PlayerSet {
 public:
  explicit PlayerSet(int n);

  int n() const { return n_; }
  int link_count() const { return n_ * (n_ - 1) / 2; }

  int link_index(int i, int j) const;  // order independent
  Link link_at(int index) const;

  LinkMask complete_mask() const {
    return (LinkMask{1} << link_count()) - 1;
  }

  bool operator==(const PlayerSet& o) const { return n_ == o.n_; }

 private:
  int n_;
};

struct Network {
  int n = 0;
  LinkMask bits = 0;

  bool contains(int link_index) const { return (bits >> link_index) & 1u; }
  int size() const { return __builtin_popcount(bits); }
  bool operator==(const Network&) const = default;
  auto operator<=>(const Network&) const = default;
};

Network empty_network(PlayerSet ps);
Network complete_network(PlayerSet ps);
Network network_from_mask(PlayerSet ps, LinkMask mask);
Network network_from_links(PlayerSet ps,
                           const std::vector<std::pair<int, int>>& links);

bool has_link(PlayerSet ps, Network g, int i, int j);
Network with_link(PlayerSet ps, Network g, int i, int j);     // g + ij
Network without_link(PlayerSet ps, Network g, int i, int j);  // g - ij

// g + h requires g and h disjoint; g - h requires h contained in g.
// Both keep the usual set-algebra preconditions and throw
// precondition_error when they fail.
Network add_links(Network g, LinkMask h);
Network remove_links(Network g, LinkMask h);

// N_i(g) and L_i(g): the neighbours of i and the mask of i's links.
std::vector<int> neighbourhood(PlayerSet ps, Network g, int i);
LinkMask link_set(PlayerSet ps, Network g, int i);
LinkMask link_universe_of(PlayerSet ps, int i);  // L_i = L_i(g^N)
int degree(PlayerSet ps, Network g, int i);

// All 2^m networks in ascending-bitmask order (deterministic; first element
// is g^0, last is g^N). Throws capacity_error above max_players.
std::vector<Network> enumerate_networks(PlayerSet ps,
                                        int max_players = kDefaultMaxPlayers);

// Enumeration over a player set that already passed its construction-time
// gate (model parsing enforces the default cap; raising it is the caller's
// explicit opt-in).
inline std::vector<Network> all_networks(PlayerSet ps) {
  return enumerate_networks(ps, kAbsoluteMaxPlayers);
}

// Partition of players into connected components; isolated players form
// singleton components. Components are sorted by smallest member.
std::vector<std::vector<int>> components(PlayerSet ps, Network g);

// The canonical text key: sorted link list "12,13" with "" for g^0.
std::string network_key(Network g);
// Inverse of network_key. Throws parse_error on malformed keys.
Network network_from_key(PlayerSet ps, const std::string& key);
// Human-oriented display, "(empty)" instead of "".
std::string network_label(Network g);

// Subsets of a mask in ascending order, the empty set included.
class SubsetRange {
 public:
  explicit SubsetRange(LinkMask mask) : mask_(mask) {}
  class iterator {
   public:
    iterator(LinkMask mask, LinkMask cur, bool done)
        : mask_(mask), cur_(cur), done_(done) {}
    LinkMask operator*() const { return cur_; }
    iterator& operator++() {
      if (cur_ == mask_) {
        done_ = true;
        cur_ = 0;
      } else {
        cur_ = (cur_ - mask_) & mask_;
      }
      return *this;
    }
    bool operator!=(const iterator& o) const {
      return done_ != o.done_ || cur_ != o.cur_;
    }

   private:
    LinkMask mask_;
    LinkMask cur_;
    bool done_;
  };
  iterator begin() const { return iterator(mask_, 0, false); }
  iterator end() const { return iterator(mask_, 0, true); }

 private:
  LinkMask mask_;
};

inline SubsetRange subsets_of(LinkMask mask) { return SubsetRange(mask); }

}  // namespace netstab

#endif
