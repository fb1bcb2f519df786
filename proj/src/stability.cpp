#include "stability.hpp"

#include "errors.hpp"

namespace netstab {

bool is_ldp(const PayoffFn& phi, Network g) {
  PlayerSet ps = phi.players();
  for (int i = 1; i <= ps.n(); ++i) {
    Rational own = phi.value(g, i);
    for (int j : neighbourhood(ps, g, i)) {
      if (phi.value(without_link(ps, g, i, j), i) > own) return false;
    }
  }
  return true;
}

bool is_sldp(const PayoffFn& phi, Network g) {
  PlayerSet ps = phi.players();
  for (int i = 1; i <= ps.n(); ++i) {
    Rational own = phi.value(g, i);
    LinkMask mine = link_set(ps, g, i);
    for (LinkMask h : subsets_of(mine)) {
      if (h == 0) continue;
      if (phi.value(remove_links(g, h), i) > own) return false;
    }
  }
  return true;
}

bool is_lap(const PayoffFn& phi, Network g) {
  PlayerSet ps = phi.players();
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = i + 1; j <= ps.n(); ++j) {
      if (has_link(ps, g, i, j)) continue;
      Network gij = with_link(ps, g, i, j);
      if (phi.value(gij, i) > phi.value(g, i) &&
          phi.value(gij, j) >= phi.value(g, j)) {
        return false;
      }
      if (phi.value(gij, j) > phi.value(g, j) &&
          phi.value(gij, i) >= phi.value(g, i)) {
        return false;
      }
    }
  }
  return true;
}

bool is_star_lap(const PayoffFn& phi, Network g) {
  PlayerSet ps = phi.players();
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = i + 1; j <= ps.n(); ++j) {
      if (has_link(ps, g, i, j)) continue;
      Network gij = with_link(ps, g, i, j);
      if (phi.value(gij, i) >= phi.value(g, i) &&
          phi.value(gij, j) >= phi.value(g, j)) {
        return false;
      }
    }
  }
  return true;
}

bool is_slap(const PayoffFn& phi, Network g) {
  PlayerSet ps = phi.players();
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = i + 1; j <= ps.n(); ++j) {
      if (has_link(ps, g, i, j)) continue;
      Network gij = with_link(ps, g, i, j);
      if (phi.value(gij, i) >= phi.value(g, i) ||
          phi.value(gij, j) >= phi.value(g, j)) {
        return false;
      }
    }
  }
  return true;
}

bool is_pairwise_stable(const PayoffFn& phi, Network g) {
  return is_ldp(phi, g) && is_lap(phi, g);
}

bool is_strongly_ps(const PayoffFn& phi, Network g) {
  return is_sldp(phi, g) && is_lap(phi, g);
}

bool is_strictly_ps(const PayoffFn& phi, Network g) {
  return is_sldp(phi, g) && is_slap(phi, g);
}

bool is_convex_on(const PayoffFn& phi, const std::vector<Network>& cls,
                  StructureWitness* witness) {
  PlayerSet ps = phi.players();
  for (Network g : cls) {
    for (int i = 1; i <= ps.n(); ++i) {
      Rational own = phi.value(g, i);
      LinkMask mine = link_set(ps, g, i);
      for (LinkMask h : subsets_of(mine)) {
        if (h == 0 || (h & (h - 1)) == 0) continue;  // need two or more links
        Rational marginal_sum(0);
        for (int idx = 0; idx < ps.link_count(); ++idx) {
          if (!((h >> idx) & 1u)) continue;
          Network cut = remove_links(g, LinkMask{1} << idx);
          marginal_sum += own - phi.value(cut, i);
        }
        if (marginal_sum >= 0 && phi.value(remove_links(g, h), i) > own) {
          if (witness) *witness = {g, i, 0, h, "bulk deletion pays"};
          return false;
        }
      }
    }
  }
  return true;
}

bool is_discerning_on(const PayoffFn& phi, const std::vector<Network>& cls,
                      StructureWitness* witness) {
  PlayerSet ps = phi.players();
  for (Network g : cls) {
    for (int i = 1; i <= ps.n(); ++i) {
      for (int j = i + 1; j <= ps.n(); ++j) {
        if (has_link(ps, g, i, j)) continue;
        Network gij = with_link(ps, g, i, j);
        if (phi.value(gij, i) == phi.value(g, i) &&
            phi.value(gij, j) == phi.value(g, j)) {
          if (witness) *witness = {g, i, j, 0, "non-discerning link"};
          return false;
        }
      }
    }
  }
  return true;
}

bool is_uniform_on(const PayoffFn& phi, const std::vector<Network>& cls,
                   StructureWitness* witness) {
  PlayerSet ps = phi.players();
  for (Network g : cls) {
    for (int i = 1; i <= ps.n(); ++i) {
      for (int j = 1; j <= ps.n(); ++j) {
        if (i == j || has_link(ps, g, i, j)) continue;
        Network gij = with_link(ps, g, i, j);
        if (phi.value(gij, i) >= phi.value(g, i) &&
            phi.value(gij, j) < phi.value(g, j)) {
          if (witness) *witness = {g, i, j, 0, "weak gain does not propagate"};
          return false;
        }
      }
    }
  }
  return true;
}

bool is_link_monotone(const PayoffFn& phi, StructureWitness* witness) {
  PlayerSet ps = phi.players();
  for (Network g : all_networks(ps)) {
    for (int i = 1; i <= ps.n(); ++i) {
      for (int j = 1; j <= ps.n(); ++j) {
        if (i == j || has_link(ps, g, i, j)) continue;
        if (phi.value(with_link(ps, g, i, j), i) < phi.value(g, i)) {
          if (witness) *witness = {g, i, j, 0, "own link addition hurts"};
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Network> networks_in_class(const PayoffFn& phi, NetworkClass cls) {
  std::vector<Network> out;
  for (Network g : all_networks(phi.players())) {
    bool in = false;
    switch (cls) {
      case NetworkClass::kAll: in = true; break;
      case NetworkClass::kLdp: in = is_ldp(phi, g); break;
      case NetworkClass::kSldp: in = is_sldp(phi, g); break;
      case NetworkClass::kLap: in = is_lap(phi, g); break;
      case NetworkClass::kStarLap: in = is_star_lap(phi, g); break;
      case NetworkClass::kSlap: in = is_slap(phi, g); break;
      case NetworkClass::kPs: in = is_pairwise_stable(phi, g); break;
      case NetworkClass::kSps: in = is_strongly_ps(phi, g); break;
      case NetworkClass::kSpsStrict: in = is_strictly_ps(phi, g); break;
    }
    if (in) out.push_back(g);
  }
  return out;
}

std::vector<Network> obtainable(PlayerSet ps, Network g,
                                PlayerMask coalition) {
  if (coalition == 0 || (coalition >> ps.n()) != 0) {
    throw precondition_error("coalition must be a nonempty subset of N");
  }
  LinkMask addable = 0;
  for (int i = 1; i <= ps.n(); ++i) {
    for (int j = i + 1; j <= ps.n(); ++j) {
      bool both_in =
          (coalition >> (i - 1)) & 1u && (coalition >> (j - 1)) & 1u;
      if (both_in && !has_link(ps, g, i, j)) {
        addable |= LinkMask{1} << ps.link_index(i, j);
      }
    }
  }
  LinkMask cuttable = 0;
  for (int i = 1; i <= ps.n(); ++i) {
    if ((coalition >> (i - 1)) & 1u) cuttable |= link_set(ps, g, i);
  }
  std::vector<Network> out;
  for (LinkMask plus : subsets_of(addable)) {
    for (LinkMask minus : subsets_of(cuttable)) {
      out.push_back(Network{g.n, (g.bits | plus) & ~minus});
    }
  }
  return out;
}

namespace {

bool coalition_deviation_blocked(const PayoffFn& phi, Network g,
                                 PlayerMask coalition, Network candidate,
                                 StrongStabilityMode mode) {
  PlayerSet ps = phi.players();
  bool someone_gains = false;
  bool someone_loses = false;
  bool all_gain = true;
  for (int i = 1; i <= ps.n(); ++i) {
    if (!((coalition >> (i - 1)) & 1u)) continue;
    Rational before = phi.value(g, i);
    Rational after = phi.value(candidate, i);
    if (after > before) someone_gains = true;
    if (after < before) someone_loses = true;
    if (after <= before) all_gain = false;
  }
  if (mode == StrongStabilityMode::kJvdN) {
    return !someone_gains || someone_loses;
  }
  return !all_gain;
}

bool stable_up_to_order(const PayoffFn& phi, Network g, int max_size,
                        StrongStabilityMode mode, DeviationWitness* witness) {
  PlayerSet ps = phi.players();
  for (PlayerMask coalition = 1; coalition < (PlayerMask{1} << ps.n());
       ++coalition) {
    if (__builtin_popcount(coalition) > max_size) continue;
    for (Network candidate : obtainable(ps, g, coalition)) {
      if (candidate == g) continue;
      if (!coalition_deviation_blocked(phi, g, coalition, candidate, mode)) {
        if (witness) *witness = {coalition, g, candidate};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_strongly_stable(const PayoffFn& phi, Network g,
                        StrongStabilityMode mode, DeviationWitness* witness) {
  return stable_up_to_order(phi, g, phi.n(), mode, witness);
}

bool stability_of_order(const PayoffFn& phi, Network g, int r,
                        StrongStabilityMode mode, DeviationWitness* witness) {
  if (r < 1 || r > phi.n()) {
    throw precondition_error("order must be in [1, n]");
  }
  return stable_up_to_order(phi, g, r, mode, witness);
}

}  // namespace netstab
