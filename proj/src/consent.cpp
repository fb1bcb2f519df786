#include "consent.hpp"

#include <algorithm>

#include "errors.hpp"
#include "stability.hpp"

namespace netstab {

void DyadProfile::set_l(int i, int j, bool v) {
  std::uint64_t bit = std::uint64_t{1} << ((i - 1) * 8 + (j - 1));
  l_bits = v ? (l_bits | bit) : (l_bits & ~bit);
}

void DyadProfile::set_r(int i, int j, bool v) {
  std::uint64_t bit = std::uint64_t{1} << ((i - 1) * 8 + (j - 1));
  r_bits = v ? (r_bits | bit) : (r_bits & ~bit);
}

SignalProfile signal_profile_from_rows(
    PlayerSet ps, const std::vector<std::vector<int>>& rows) {
  int n = ps.n();
  if (static_cast<int>(rows.size()) != n) {
    throw precondition_error("signal profile needs one row per player");
  }
  SignalProfile ell{n, 0};
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n - 1) {
      throw precondition_error("signal rows must have n-1 entries");
    }
    int k = 0;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      int v = rows[i - 1][k++];
      if (v != 0 && v != 1) {
        throw precondition_error("signals must be 0 or 1");
      }
      ell.set(i, j, v == 1);
    }
  }
  return ell;
}

std::vector<std::vector<int>> signal_profile_rows(const SignalProfile& ell) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= ell.n; ++i) {
    rows.emplace_back();
    for (int j = 1; j <= ell.n; ++j) {
      if (j != i) rows.back().push_back(ell.get(i, j) ? 1 : 0);
    }
  }
  return rows;
}

std::string signal_profile_str(const SignalProfile& ell) {
  std::string out = "(";
  for (int i = 1; i <= ell.n; ++i) {
    if (i > 1) out += ",";
    out += "(";
    bool first = true;
    for (int j = 1; j <= ell.n; ++j) {
      if (j == i) continue;
      if (!first) out += ",";
      first = false;
      out += ell.get(i, j) ? "1" : "0";
    }
    out += ")";
  }
  return out + ")";
}

std::string dyad_profile_str(const DyadProfile& d) {
  std::string out = "(";
  for (int i = 1; i <= d.n; ++i) {
    if (i > 1) out += ",";
    out += "(";
    bool first = true;
    for (int j = 1; j <= d.n; ++j) {
      if (j == i) continue;
      if (!first) out += ",";
      first = false;
      out += "l";
      out += std::to_string(i) + std::to_string(j) + "=";
      out += d.l(i, j) ? "1" : "0";
      out += ",r";
      out += std::to_string(i) + std::to_string(j) + "=";
      out += d.r(i, j) ? "1" : "0";
    }
    out += ")";
  }
  return out + ")";
}

Network supported_network(PlayerSet ps, const SignalProfile& ell) {
  Network g = empty_network(ps);
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = i + 1; j <= ps.n(); ++j) {
      if (ell.get(i, j) && ell.get(j, i)) g = with_link(ps, g, i, j);
    }
  }
  return g;
}

Network one_sided_network(PlayerSet ps, const DyadProfile& d) {
  Network g = empty_network(ps);
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = i + 1; j <= ps.n(); ++j) {
      if ((d.l(i, j) && d.r(j, i)) || (d.l(j, i) && d.r(i, j))) {
        g = with_link(ps, g, i, j);
      }
    }
  }
  return g;
}

std::vector<Rational> myerson_payoffs(const PayoffFn& phi,
                                      const SignalProfile& ell) {
  return phi.values(supported_network(phi.players(), ell));
}

std::vector<Rational> two_sided_payoffs(const PayoffFn& phi,
                                        const CostMatrix& c,
                                        const SignalProfile& ell) {
  PlayerSet ps = phi.players();
  Network g = supported_network(ps, ell);
  std::vector<Rational> out = phi.values(g);
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = 1; j <= ps.n(); ++j) {
      if (i != j && ell.get(i, j)) out[i - 1] -= c.at(i, j);
    }
  }
  return out;
}

std::vector<Rational> one_sided_payoffs(const PayoffFn& phi,
                                        const CostMatrix& gamma,
                                        const DyadProfile& d) {
  PlayerSet ps = phi.players();
  Network g = one_sided_network(ps, d);
  std::vector<Rational> out = phi.values(g);
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = 1; j <= ps.n(); ++j) {
      if (i != j && d.l(i, j)) out[i - 1] -= gamma.at(i, j);
    }
  }
  return out;
}

PayoffFn net_payoff_a(const PayoffFn& phi, const CostMatrix& c) {
  PlayerSet ps = phi.players();
  return PayoffFn::derived(ps, [phi, c, ps](Network g, int i) {
    Rational v = phi.value(g, i);
    for (int j : neighbourhood(ps, g, i)) v -= c.at(i, j);
    return v;
  });
}

std::vector<int> financed_neighbours(PlayerSet ps, Network g,
                                     const CostMatrix& gamma, int i) {
  std::vector<int> out;
  for (int j : neighbourhood(ps, g, i)) {
    const Rational& mine = gamma.at(i, j);
    const Rational& theirs = gamma.at(j, i);
    if (mine < theirs || (mine == theirs && i < j)) out.push_back(j);
  }
  return out;
}

PayoffFn net_payoff_b(const PayoffFn& phi, const CostMatrix& gamma) {
  PlayerSet ps = phi.players();
  return PayoffFn::derived(ps, [phi, gamma, ps](Network g, int i) {
    Rational v = phi.value(g, i);
    for (int j : financed_neighbours(ps, g, gamma, i)) v -= gamma.at(i, j);
    return v;
  });
}

int myerson_strategy_count(PlayerSet ps) { return 1 << (ps.n() - 1); }

namespace {

// k-th other player of i (0-based), ascending.
int counterpart(int i, int k) {
  int j = k + 1;
  if (j >= i) ++j;
  return j;
}

}  // namespace

SignalProfile signal_profile_from_game(PlayerSet ps, const Profile& a) {
  int n = ps.n();
  SignalProfile ell{n, 0};
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < n - 1; ++k) {
      ell.set(i, counterpart(i, k), (a[i - 1] >> k) & 1);
    }
  }
  return ell;
}

Profile game_profile_from_signals(PlayerSet ps, const SignalProfile& ell) {
  int n = ps.n();
  Profile a(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < n - 1; ++k) {
      if (ell.get(i, counterpart(i, k))) a[i - 1] |= 1 << k;
    }
  }
  return a;
}

int one_sided_strategy_count(PlayerSet ps) {
  return 1 << (2 * (ps.n() - 1));
}

DyadProfile dyad_profile_from_game(PlayerSet ps, const Profile& a) {
  int n = ps.n();
  DyadProfile d{n, 0, 0};
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < n - 1; ++k) {
      int j = counterpart(i, k);
      d.set_l(i, j, (a[i - 1] >> (2 * k)) & 1);
      d.set_r(i, j, (a[i - 1] >> (2 * k + 1)) & 1);
    }
  }
  return d;
}

Profile game_profile_from_dyad(PlayerSet ps, const DyadProfile& d) {
  int n = ps.n();
  Profile a(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 0; k < n - 1; ++k) {
      int j = counterpart(i, k);
      if (d.l(i, j)) a[i - 1] |= 1 << (2 * k);
      if (d.r(i, j)) a[i - 1] |= 1 << (2 * k + 1);
    }
  }
  return a;
}

FiniteGame myerson_game(const PayoffFn& phi) {
  PlayerSet ps = phi.players();
  std::vector<int> counts(ps.n(), myerson_strategy_count(ps));
  return FiniteGame(counts, [phi, ps](const Profile& a, int player) {
    return phi.value(supported_network(ps, signal_profile_from_game(ps, a)),
                     player);
  });
}

FiniteGame two_sided_game(const PayoffFn& phi, const CostMatrix& c) {
  PlayerSet ps = phi.players();
  std::vector<int> counts(ps.n(), myerson_strategy_count(ps));
  return FiniteGame(counts, [phi, c, ps](const Profile& a, int player) {
    SignalProfile ell = signal_profile_from_game(ps, a);
    Rational v = phi.value(supported_network(ps, ell), player);
    for (int j = 1; j <= ps.n(); ++j) {
      if (j != player && ell.get(player, j)) v -= c.at(player, j);
    }
    return v;
  });
}

FiniteGame one_sided_game(const PayoffFn& phi, const CostMatrix& gamma) {
  PlayerSet ps = phi.players();
  std::vector<int> counts(ps.n(), one_sided_strategy_count(ps));
  return FiniteGame(counts, [phi, gamma, ps](const Profile& a, int player) {
    DyadProfile d = dyad_profile_from_game(ps, a);
    Rational v = phi.value(one_sided_network(ps, d), player);
    for (int j = 1; j <= ps.n(); ++j) {
      if (j != player && d.l(player, j)) v -= gamma.at(player, j);
    }
    return v;
  });
}

namespace {

std::vector<Network> sorted_unique(std::vector<Network> nets) {
  std::sort(nets.begin(), nets.end());
  nets.erase(std::unique(nets.begin(), nets.end()), nets.end());
  return nets;
}

void require_profile_scale(PlayerSet ps, int cap, const char* what) {
  if (ps.n() > cap) {
    throw capacity_error(std::string(what) + " enumeration capped at n=" +
                         std::to_string(cap));
  }
}

}  // namespace

std::vector<Network> m_networks(const PayoffFn& phi,
                                EquilibriumMethod method) {
  PlayerSet ps = phi.players();
  if (method == EquilibriumMethod::kCharacterisation) {
    return networks_in_class(phi, NetworkClass::kSldp);
  }
  require_profile_scale(ps, kMaxProfileEnumerationPlayers, "signal profile");
  std::vector<Network> out;
  for (const Profile& a : enumerate_nash(myerson_game(phi))) {
    out.push_back(supported_network(ps, signal_profile_from_game(ps, a)));
  }
  return sorted_unique(std::move(out));
}

std::vector<Network> nash_networks_two_sided(const PayoffFn& phi,
                                             const CostMatrix& c,
                                             EquilibriumMethod method) {
  PlayerSet ps = phi.players();
  if (method == EquilibriumMethod::kCharacterisation) {
    return networks_in_class(net_payoff_a(phi, c), NetworkClass::kSldp);
  }
  require_profile_scale(ps, kMaxProfileEnumerationPlayers, "signal profile");
  std::vector<Network> out;
  for (const Profile& a : enumerate_nash(two_sided_game(phi, c))) {
    out.push_back(supported_network(ps, signal_profile_from_game(ps, a)));
  }
  return sorted_unique(std::move(out));
}

SignalProfile non_superfluous_profile(PlayerSet ps, Network g) {
  SignalProfile ell{ps.n(), 0};
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = 1; j <= ps.n(); ++j) {
      if (i != j && has_link(ps, g, i, j)) ell.set(i, j, true);
    }
  }
  return ell;
}

std::vector<DyadProfile> non_superfluous_profiles(PlayerSet ps, Network g) {
  std::vector<int> links;
  for (int idx = 0; idx < ps.link_count(); ++idx) {
    if (g.contains(idx)) links.push_back(idx);
  }
  std::vector<DyadProfile> out;
  for (unsigned pick = 0; pick < (1u << links.size()); ++pick) {
    DyadProfile d{ps.n(), 0, 0};
    for (std::size_t k = 0; k < links.size(); ++k) {
      Link l = ps.link_at(links[k]);
      int initiator = ((pick >> k) & 1u) ? l.j : l.i;
      int responder = initiator == l.i ? l.j : l.i;
      d.set_l(initiator, responder, true);
      d.set_r(responder, initiator, true);
    }
    out.push_back(d);
  }
  return out;
}

bool is_one_sided_nash(const PayoffFn& phi, const CostMatrix& gamma,
                       const DyadProfile& d) {
  FiniteGame game = one_sided_game(phi, gamma);
  return is_nash(game, game_profile_from_dyad(phi.players(), d));
}

std::vector<Network> nash_networks_one_sided(const PayoffFn& phi,
                                             const CostMatrix& gamma,
                                             EquilibriumMethod method) {
  PlayerSet ps = phi.players();
  FiniteGame game = one_sided_game(phi, gamma);
  if (method == EquilibriumMethod::kDirect) {
    require_profile_scale(ps, kMaxOneSidedFullPlayers, "dyad profile");
    std::vector<Network> out;
    for (const Profile& a : enumerate_nash(game)) {
      out.push_back(one_sided_network(ps, dyad_profile_from_game(ps, a)));
    }
    return sorted_unique(std::move(out));
  }
  require_profile_scale(ps, kMaxProfileEnumerationPlayers, "dyad profile");
  std::vector<Network> out;
  for (Network g : all_networks(ps)) {
    bool supported = false;
    for (const DyadProfile& d : non_superfluous_profiles(ps, g)) {
      if (is_nash(game, game_profile_from_dyad(ps, d))) {
        supported = true;
        break;
      }
    }
    if (supported) out.push_back(g);
  }
  return out;
}

std::vector<Network> pairwise_nash_networks(const PayoffFn& phi) {
  PlayerSet ps = phi.players();
  require_profile_scale(ps, kMaxProfileEnumerationPlayers, "signal profile");
  FiniteGame game = myerson_game(phi);
  std::vector<Network> out;
  for (const Profile& a : enumerate_nash(game)) {
    bool pairwise = true;
    std::vector<Rational> base = game.payoffs(a);
    Profile probe = a;
    for (int i = 1; i <= ps.n() && pairwise; ++i) {
      for (int j = i + 1; j <= ps.n() && pairwise; ++j) {
        for (int si = 0; si < game.strategy_count(i) && pairwise; ++si) {
          for (int sj = 0; sj < game.strategy_count(j); ++sj) {
            probe[i - 1] = si;
            probe[j - 1] = sj;
            if (game.payoff(probe, i) > base[i - 1] &&
                game.payoff(probe, j) >= base[j - 1]) {
              pairwise = false;
              break;
            }
            if (game.payoff(probe, j) > base[j - 1] &&
                game.payoff(probe, i) >= base[i - 1]) {
              pairwise = false;
              break;
            }
          }
        }
        probe[i - 1] = a[i - 1];
        probe[j - 1] = a[j - 1];
      }
    }
    if (pairwise) {
      out.push_back(supported_network(ps, signal_profile_from_game(ps, a)));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Network> bilateral_stable_networks(const PayoffFn& phi) {
  PlayerSet ps = phi.players();
  std::vector<Network> out;
  for (Network g : all_networks(ps)) {
    if (!is_sldp(phi, g)) continue;
    bool stable = true;
    for (int i = 1; i <= ps.n() && stable; ++i) {
      for (int j = i + 1; j <= ps.n() && stable; ++j) {
        LinkMask mine = link_set(ps, g, i);
        LinkMask theirs = link_set(ps, g, j);
        bool can_add = !has_link(ps, g, i, j);
        for (int add = 0; add <= (can_add ? 1 : 0) && stable; ++add) {
          Network base = add ? with_link(ps, g, i, j) : g;
          for (LinkMask hi : subsets_of(mine)) {
            for (LinkMask hj : subsets_of(theirs)) {
              Network cand{g.n, base.bits & ~(hi | hj)};
              if (cand == g) continue;
              if (phi.value(cand, i) > phi.value(g, i) &&
                  phi.value(cand, j) >= phi.value(g, j)) {
                stable = false;
                break;
              }
              if (phi.value(cand, j) > phi.value(g, j) &&
                  phi.value(cand, i) >= phi.value(g, i)) {
                stable = false;
                break;
              }
            }
            if (!stable) break;
          }
        }
      }
    }
    if (stable) out.push_back(g);
  }
  return out;
}

namespace {

InclusionReport make_inclusion(std::string lhs_name, std::string rhs_name,
                               std::vector<Network> lhs,
                               std::vector<Network> rhs) {
  InclusionReport rep{std::move(lhs_name), std::move(rhs_name),
                      std::move(lhs), std::move(rhs), {}, {}};
  for (Network g : rep.lhs) {
    if (std::find(rep.rhs.begin(), rep.rhs.end(), g) == rep.rhs.end()) {
      rep.lhs_minus_rhs.push_back(g);
    }
  }
  for (Network g : rep.rhs) {
    if (std::find(rep.lhs.begin(), rep.lhs.end(), g) == rep.lhs.end()) {
      rep.rhs_minus_lhs.push_back(g);
    }
  }
  return rep;
}

}  // namespace

InclusionReport check_one_sided_inclusion(const PayoffFn& phi,
                                          const CostMatrix& gamma) {
  return make_inclusion(
      "sldp(phi^b)", "one-sided supported",
      networks_in_class(net_payoff_b(phi, gamma), NetworkClass::kSldp),
      nash_networks_one_sided(phi, gamma,
                              EquilibriumMethod::kCharacterisation));
}

InclusionReport check_sunk_cost_inclusion(const PayoffFn& phi,
                                          const CostMatrix& c) {
  return make_inclusion(
      "two-sided supported", "one-sided supported (gamma=c)",
      nash_networks_two_sided(phi, c, EquilibriumMethod::kCharacterisation),
      nash_networks_one_sided(phi, c, EquilibriumMethod::kCharacterisation));
}

InclusionReport compare_initiator_bears_all(const PayoffFn& phi,
                                            const CostMatrix& c) {
  return make_inclusion(
      "two-sided supported", "one-sided supported (gamma=c+c^T)",
      nash_networks_two_sided(phi, c, EquilibriumMethod::kCharacterisation),
      nash_networks_one_sided(phi, c.transposed_sum(),
                              EquilibriumMethod::kCharacterisation));
}

}  // namespace netstab
