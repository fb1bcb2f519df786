#ifndef NETSTAB_RANDOM_INSTANCES_HPP
#define NETSTAB_RANDOM_INSTANCES_HPP

#include <cstdint>
#include <utility>

#include "payoff.hpp"

namespace netstab {

// Deterministic generator (splitmix64) so seeded runs reproduce across
// platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  int int_in(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Small-denominator rationals so that exact ties actually occur and the
// tie-sensitive branches of the stability predicates get exercised.
Rational random_payoff_value(Rng& rng);

// A dense random payoff table over all networks.
PayoffFn random_payoff_table(Rng& rng, PlayerSet ps);

// Strictly positive off-diagonal costs.
CostMatrix random_positive_costs(Rng& rng, PlayerSet ps);

// A payoff function built from a random potential: phi_i(g) = Lambda(g) +
// d_i(g restricted to links not touching i). Admits an exact network
// potential by construction; the dummy term keeps phi_i distinct from
// Lambda. The Lambda values carry a per-network fractional tag, so they are
// pairwise distinct and stay distinct after subtracting any integer link
// costs — single-link marginals never tie. Returns the function and the
// Lambda table indexed by mask.
std::pair<PayoffFn, std::vector<Rational>> payoff_from_random_potential(
    Rng& rng, PlayerSet ps);

// A dense table whose n * 2^m values are pairwise distinct, so no stability
// comparison ever ties (a generic instance).
PayoffFn random_generic_table(Rng& rng, PlayerSet ps);

// A generic strictly link-monotone payoff table.
PayoffFn random_link_monotone_table(Rng& rng, PlayerSet ps);

}  // namespace netstab

#endif
