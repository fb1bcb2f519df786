#include "network.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace netstab {

PlayerSet::PlayerSet(int n) : n_(n) {
  if (n < 2 || n > kAbsoluteMaxPlayers) {
    throw precondition_error("player count must be in [2, " +
                             std::to_string(kAbsoluteMaxPlayers) + "], got " +
                             std::to_string(n));
  }
}

int PlayerSet::link_index(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) {
    throw precondition_error("invalid link (" + std::to_string(i) + "," +
                             std::to_string(j) + ") on n=" +
                             std::to_string(n_));
  }
  if (i > j) std::swap(i, j);
  // rank of (i, j) in lexicographic order over pairs with i < j
  return (i - 1) * n_ - i * (i - 1) / 2 + (j - i - 1);
}

Link PlayerSet::link_at(int index) const {
  if (index < 0 || index >= link_count()) {
    throw precondition_error("link index out of range");
  }
  int i = 1;
  int rest = index;
  while (rest >= n_ - i) {
    rest -= n_ - i;
    ++i;
  }
  return Link{i, i + 1 + rest};
}

Network empty_network(PlayerSet ps) { return Network{ps.n(), 0}; }

Network complete_network(PlayerSet ps) {
  return Network{ps.n(), ps.complete_mask()};
}

Network network_from_mask(PlayerSet ps, LinkMask mask) {
  if (mask & ~ps.complete_mask()) {
    throw precondition_error("mask has bits outside the link universe");
  }
  return Network{ps.n(), mask};
}

Network network_from_links(PlayerSet ps,
                           const std::vector<std::pair<int, int>>& links) {
  LinkMask mask = 0;
  for (auto [i, j] : links) mask |= LinkMask{1} << ps.link_index(i, j);
  return Network{ps.n(), mask};
}

bool has_link(PlayerSet ps, Network g, int i, int j) {
  return g.contains(ps.link_index(i, j));
}

Network with_link(PlayerSet ps, Network g, int i, int j) {
  return Network{g.n, g.bits | (LinkMask{1} << ps.link_index(i, j))};
}

Network without_link(PlayerSet ps, Network g, int i, int j) {
  return Network{g.n, g.bits & ~(LinkMask{1} << ps.link_index(i, j))};
}

Network add_links(Network g, LinkMask h) {
  if (g.bits & h) {
    throw precondition_error("g + h requires g and h to be disjoint");
  }
  return Network{g.n, g.bits | h};
}

Network remove_links(Network g, LinkMask h) {
  if ((h & g.bits) != h) {
    throw precondition_error("g - h requires h to be a subset of g");
  }
  return Network{g.n, g.bits & ~h};
}

std::vector<int> neighbourhood(PlayerSet ps, Network g, int i) {
  std::vector<int> out;
  for (int j = 1; j <= ps.n(); ++j) {
    if (j != i && g.contains(ps.link_index(i, j))) out.push_back(j);
  }
  return out;
}

LinkMask link_set(PlayerSet ps, Network g, int i) {
  LinkMask mask = 0;
  for (int j = 1; j <= ps.n(); ++j) {
    if (j == i) continue;
    int idx = ps.link_index(i, j);
    if (g.contains(idx)) mask |= LinkMask{1} << idx;
  }
  return mask;
}

LinkMask link_universe_of(PlayerSet ps, int i) {
  LinkMask mask = 0;
  for (int j = 1; j <= ps.n(); ++j) {
    if (j != i) mask |= LinkMask{1} << ps.link_index(i, j);
  }
  return mask;
}

int degree(PlayerSet ps, Network g, int i) {
  return __builtin_popcount(link_set(ps, g, i));
}

std::vector<Network> enumerate_networks(PlayerSet ps, int max_players) {
  if (ps.n() > max_players) {
    throw capacity_error("network enumeration capped at n=" +
                         std::to_string(max_players) + " (2^" +
                         std::to_string(ps.link_count()) +
                         " networks requested); raise the cap explicitly");
  }
  std::vector<Network> out;
  out.reserve(std::size_t{1} << ps.link_count());
  for (LinkMask m = 0; m <= ps.complete_mask(); ++m) {
    out.push_back(Network{ps.n(), m});
  }
  return out;
}

std::vector<std::vector<int>> components(PlayerSet ps, Network g) {
  int n = ps.n();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (g.contains(ps.link_index(i, j))) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::vector<std::vector<int>> groups(n + 1);
  for (int i = 1; i <= n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& grp : groups) {
    if (!grp.empty()) out.push_back(std::move(grp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

std::string network_key(Network g) {
  PlayerSet ps(g.n);
  std::string out;
  for (int idx = 0; idx < ps.link_count(); ++idx) {
    if (!g.contains(idx)) continue;
    Link l = ps.link_at(idx);
    if (!out.empty()) out += ',';
    out += std::to_string(l.i) + std::to_string(l.j);
  }
  return out;
}

Network network_from_key(PlayerSet ps, const std::string& key) {
  LinkMask mask = 0;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t next = key.find(',', pos);
    std::string tok = key.substr(pos, next == std::string::npos
                                          ? std::string::npos
                                          : next - pos);
    if (tok.size() != 2 || !isdigit(static_cast<unsigned char>(tok[0])) ||
        !isdigit(static_cast<unsigned char>(tok[1]))) {
      throw parse_error("bad link token '" + tok + "' in network key '" +
                        key + "'");
    }
    int i = tok[0] - '0';
    int j = tok[1] - '0';
    if (i < 1 || i > ps.n() || j < 1 || j > ps.n() || i == j) {
      throw parse_error("link '" + tok + "' not valid for n=" +
                        std::to_string(ps.n()));
    }
    LinkMask bit = LinkMask{1} << ps.link_index(i, j);
    if (mask & bit) {
      throw parse_error("duplicate link '" + tok + "' in network key");
    }
    mask |= bit;
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return Network{ps.n(), mask};
}

std::string network_label(Network g) {
  std::string key = network_key(g);
  return key.empty() ? "(empty)" : key;
}

}  // namespace netstab
