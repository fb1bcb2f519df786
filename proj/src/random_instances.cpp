#include "random_instances.hpp"

namespace netstab {

Rational random_payoff_value(Rng& rng) {
  static const int dens[] = {1, 2, 3, 4};
  Rational r(rng.int_in(-6, 6), dens[rng.below(4)]);
  r.canonicalize();
  return r;
}

PayoffFn random_payoff_table(Rng& rng, PlayerSet ps) {
  PayoffFn::Table table;
  for (Network g : enumerate_networks(ps)) {
    std::vector<Rational> row;
    row.reserve(ps.n());
    for (int i = 0; i < ps.n(); ++i) row.push_back(random_payoff_value(rng));
    table.emplace(g.bits, std::move(row));
  }
  return PayoffFn::table(ps, std::move(table));
}

CostMatrix random_positive_costs(Rng& rng, PlayerSet ps) {
  int n = ps.n();
  std::vector<Rational> entries(n * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational c(rng.int_in(1, 8), rng.int_in(1, 4));
      c.canonicalize();
      entries[i * n + j] = c;
    }
  }
  return CostMatrix(ps, std::move(entries));
}

std::pair<PayoffFn, std::vector<Rational>> payoff_from_random_potential(
    Rng& rng, PlayerSet ps) {
  std::vector<Network> all = enumerate_networks(ps);
  // Integer body plus the network's own mask as a fractional tag: values
  // are pairwise distinct and remain so after integer shifts per link.
  long denom = static_cast<long>(all.size()) + 1;
  std::vector<Rational> lambda;
  lambda.reserve(all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    Rational v = Rational(rng.int_in(-8, 8)) +
                 Rational(static_cast<long>(k), denom);
    v.canonicalize();
    lambda.push_back(v);
  }

  // Dummy terms keyed by the restriction of g to links not touching i.
  std::vector<std::vector<Rational>> dummy(ps.n() + 1);
  for (int i = 1; i <= ps.n(); ++i) {
    dummy[i].reserve(all.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      dummy[i].push_back(random_payoff_value(rng));
    }
  }

  PayoffFn::Table table;
  for (Network g : all) {
    std::vector<Rational> row;
    row.reserve(ps.n());
    for (int i = 1; i <= ps.n(); ++i) {
      LinkMask rest = g.bits & ~link_universe_of(ps, i);
      Rational v = lambda[g.bits] + dummy[i][rest];
      v.canonicalize();
      row.push_back(v);
    }
    table.emplace(g.bits, std::move(row));
  }
  return {PayoffFn::table(ps, std::move(table)), std::move(lambda)};
}

PayoffFn random_generic_table(Rng& rng, PlayerSet ps) {
  std::vector<Network> all = enumerate_networks(ps);
  long denom = static_cast<long>(all.size()) * ps.n() + 1;
  long tag = 0;
  PayoffFn::Table table;
  for (Network g : all) {
    std::vector<Rational> row;
    row.reserve(ps.n());
    for (int i = 0; i < ps.n(); ++i) {
      Rational v = Rational(rng.int_in(-6, 6)) + Rational(tag++, denom);
      v.canonicalize();
      row.push_back(v);
    }
    table.emplace(g.bits, std::move(row));
  }
  return PayoffFn::table(ps, std::move(table));
}

PayoffFn random_link_monotone_table(Rng& rng, PlayerSet ps) {
  // phi_i(g) = sum over i's links of a positive per-link weight, plus a
  // bounded externality from links not touching i. The own-link gain (>= 1)
  // dominates the externality spread (< 1), so adding an own link always
  // strictly helps.
  int n = ps.n();
  std::vector<std::vector<Rational>> weight(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int idx = 0; idx < ps.link_count(); ++idx) {
      weight[i].push_back(Rational(rng.int_in(1, 4)));
    }
  }
  PayoffFn::Table table;
  for (Network g : enumerate_networks(ps)) {
    std::vector<Rational> row;
    for (int i = 1; i <= n; ++i) {
      Rational v(0);
      for (int idx = 0; idx < ps.link_count(); ++idx) {
        if (!g.contains(idx)) continue;
        Link l = ps.link_at(idx);
        if (l.i == i || l.j == i) {
          v += weight[i][idx];
        } else {
          Rational ext(rng.int_in(0, 1), 97);
          v += ext;  // tiny, keeps the instance generic
        }
      }
      v.canonicalize();
      row.push_back(v);
    }
    table.emplace(g.bits, std::move(row));
  }
  return PayoffFn::table(ps, std::move(table));
}

}  // namespace netstab
