#include "trust.hpp"

#include "errors.hpp"
#include "stability.hpp"

namespace netstab {

BeliefSystem monadic_beliefs(const PayoffFn& phi, const CostMatrix& c,
                             const SignalProfile& ell, int owner) {
  PlayerSet ps = phi.players();
  if (owner < 1 || owner > ps.n()) {
    throw precondition_error("belief owner outside the player set");
  }
  Network g = supported_network(ps, ell);
  BeliefSystem out{owner, ell};
  for (int j = 1; j <= ps.n(); ++j) {
    if (j == owner) continue;
    bool believes_reciprocation;
    if (has_link(ps, g, owner, j)) {
      // j keeps the link unless severing it (and saving c_ji) pays.
      Network cut = without_link(ps, g, owner, j);
      believes_reciprocation =
          phi.value(cut, j) + c.at(j, owner) <= phi.value(g, j);
    } else {
      // j forms the link when the net first-order effect is weakly positive.
      Network plus = with_link(ps, g, owner, j);
      believes_reciprocation =
          phi.value(plus, j) - c.at(j, owner) >= phi.value(g, j);
    }
    out.beliefs.set(j, owner, believes_reciprocation);
  }
  return out;
}

std::string belief_str(const BeliefSystem& b) {
  std::string out = "(";
  for (int i = 1; i <= b.beliefs.n; ++i) {
    if (i > 1) out += ",";
    if (i == b.owner) {
      out += "-";
      continue;
    }
    out += "(";
    bool first = true;
    for (int j = 1; j <= b.beliefs.n; ++j) {
      if (j == i) continue;
      if (!first) out += ",";
      first = false;
      out += b.beliefs.get(i, j) ? "1" : "0";
    }
    out += ")";
  }
  return out + ")";
}

namespace {

Rational belief_payoff(const PayoffFn& phi, const CostMatrix& c,
                       const SignalProfile& beliefs, int owner,
                       std::uint64_t own_row_strategy) {
  PlayerSet ps = phi.players();
  SignalProfile probe = beliefs;
  int k = 0;
  for (int j = 1; j <= ps.n(); ++j) {
    if (j == owner) continue;
    probe.set(owner, j, (own_row_strategy >> k) & 1);
    ++k;
  }
  Rational v = phi.value(supported_network(ps, probe), owner);
  k = 0;
  for (int j = 1; j <= ps.n(); ++j) {
    if (j == owner) continue;
    if ((own_row_strategy >> k) & 1) v -= c.at(owner, j);
    ++k;
  }
  return v;
}

std::uint64_t own_row_strategy_of(const SignalProfile& ell, int owner) {
  std::uint64_t s = 0;
  int k = 0;
  for (int j = 1; j <= ell.n; ++j) {
    if (j == owner) continue;
    if (ell.get(owner, j)) s |= std::uint64_t{1} << k;
    ++k;
  }
  return s;
}

// Enumerates profiles ell with g(ell) = g: link entries are forced to
// (1,1), every non-link pair ranges over {(0,0),(0,1),(1,0)}.
template <typename Fn>
void for_each_supporting_profile(PlayerSet ps, Network g, Fn&& fn) {
  std::vector<Link> non_links;
  for (int idx = 0; idx < ps.link_count(); ++idx) {
    if (!g.contains(idx)) non_links.push_back(ps.link_at(idx));
  }
  SignalProfile base{ps.n(), 0};
  for (int idx = 0; idx < ps.link_count(); ++idx) {
    if (g.contains(idx)) {
      Link l = ps.link_at(idx);
      base.set(l.i, l.j, true);
      base.set(l.j, l.i, true);
    }
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < non_links.size(); ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    SignalProfile ell = base;
    std::size_t rest = code;
    for (const Link& l : non_links) {
      int choice = static_cast<int>(rest % 3);
      rest /= 3;
      if (choice == 1) ell.set(l.i, l.j, true);
      if (choice == 2) ell.set(l.j, l.i, true);
    }
    if (fn(ell)) return;
  }
}

void require_monadic_scale(PlayerSet ps) {
  if (ps.n() > kMaxMonadicPlayers) {
    throw capacity_error("monadic stability search capped at n=" +
                         std::to_string(kMaxMonadicPlayers));
  }
}

}  // namespace

bool is_best_response_to_beliefs(const PayoffFn& phi, const CostMatrix& c,
                                 const SignalProfile& ell, int owner) {
  PlayerSet ps = phi.players();
  BeliefSystem b = monadic_beliefs(phi, c, ell, owner);
  Rational own = belief_payoff(phi, c, b.beliefs, owner,
                               own_row_strategy_of(ell, owner));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (ps.n() - 1)); ++s) {
    if (belief_payoff(phi, c, b.beliefs, owner, s) > own) return false;
  }
  return true;
}

std::optional<SignalProfile> weak_monadic_support(const PayoffFn& phi,
                                                  const CostMatrix& c,
                                                  Network g) {
  PlayerSet ps = phi.players();
  require_monadic_scale(ps);
  std::optional<SignalProfile> found;
  for_each_supporting_profile(ps, g, [&](const SignalProfile& ell) {
    for (int i = 1; i <= ps.n(); ++i) {
      if (!is_best_response_to_beliefs(phi, c, ell, i)) return false;
    }
    found = ell;
    return true;
  });
  return found;
}

bool is_weak_monadic(const PayoffFn& phi, const CostMatrix& c, Network g) {
  return weak_monadic_support(phi, c, g).has_value();
}

namespace {

bool beliefs_confirmed(const PayoffFn& phi, const CostMatrix& c,
                       const SignalProfile& ell) {
  PlayerSet ps = phi.players();
  for (int i = 1; i <= ps.n(); ++i) {
    BeliefSystem b = monadic_beliefs(phi, c, ell, i);
    for (int j = 1; j <= ps.n(); ++j) {
      if (j != i && b.beliefs.get(j, i) != ell.get(j, i)) return false;
    }
  }
  return true;
}

bool monadic_via(const PayoffFn& phi, const CostMatrix& c,
                 const SignalProfile& ell) {
  for (int i = 1; i <= phi.n(); ++i) {
    if (!is_best_response_to_beliefs(phi, c, ell, i)) return false;
  }
  return beliefs_confirmed(phi, c, ell);
}

}  // namespace

std::optional<SignalProfile> monadic_support(const PayoffFn& phi,
                                             const CostMatrix& c, Network g) {
  SignalProfile ell = non_superfluous_profile(phi.players(), g);
  if (monadic_via(phi, c, ell)) return ell;
  return std::nullopt;
}

std::optional<SignalProfile> monadic_support_exhaustive(const PayoffFn& phi,
                                                        const CostMatrix& c,
                                                        Network g) {
  PlayerSet ps = phi.players();
  require_monadic_scale(ps);
  std::optional<SignalProfile> found;
  for_each_supporting_profile(ps, g, [&](const SignalProfile& ell) {
    if (monadic_via(phi, c, ell)) {
      found = ell;
      return true;
    }
    return false;
  });
  return found;
}

bool is_monadic(const PayoffFn& phi, const CostMatrix& c, Network g) {
  return monadic_support(phi, c, g).has_value();
}

bool is_unilaterally_stable(const PayoffFn& phi, Network g) {
  PlayerSet ps = phi.players();
  if (!is_sldp(phi, g)) return false;
  for (int i = 1; i <= ps.n(); ++i) {
    LinkMask mine = link_set(ps, g, i);
    LinkMask missing = link_universe_of(ps, i) & ~mine;
    Rational own = phi.value(g, i);
    for (LinkMask cut : subsets_of(mine)) {
      for (LinkMask add : subsets_of(missing)) {
        if (cut == 0 && add == 0) continue;
        Network cand{g.n, (g.bits & ~cut) | add};
        if (phi.value(cand, i) <= own) continue;
        // i profits; some newly proposed neighbour must object.
        bool objection = false;
        for (int idx = 0; idx < ps.link_count(); ++idx) {
          if (!((add >> idx) & 1u)) continue;
          Link l = ps.link_at(idx);
          int j = (l.i == i) ? l.j : l.i;
          if (phi.value(cand, j) < phi.value(g, j)) {
            objection = true;
            break;
          }
        }
        if (!objection) return false;
      }
    }
  }
  return true;
}

std::vector<Network> unilaterally_stable_networks(const PayoffFn& phi) {
  std::vector<Network> out;
  for (Network g : all_networks(phi.players())) {
    if (is_unilaterally_stable(phi, g)) out.push_back(g);
  }
  return out;
}

std::vector<Network> weak_monadic_networks(const PayoffFn& phi,
                                           const CostMatrix& c) {
  std::vector<Network> out;
  for (Network g : all_networks(phi.players())) {
    if (is_weak_monadic(phi, c, g)) out.push_back(g);
  }
  return out;
}

std::vector<Network> monadic_networks(const PayoffFn& phi,
                                      const CostMatrix& c) {
  std::vector<Network> out;
  for (Network g : all_networks(phi.players())) {
    if (is_monadic(phi, c, g)) out.push_back(g);
  }
  return out;
}

}  // namespace netstab
