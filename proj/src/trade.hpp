#ifndef NETSTAB_TRADE_HPP
#define NETSTAB_TRADE_HPP

#include "payoff.hpp"

namespace netstab {

inline const mpz_class kDefaultTradePrecision = mpz_class("1000000000000");

// sqrt(m) rounded down to a rational with the given denominator; exact for
// perfect squares. Keeps every downstream comparison in exact arithmetic.
Rational rational_sqrt(const mpz_class& m, const mpz_class& denominator);

// Expected gross trade payoff per member of a market of size k:
//   G(k) = (1 / (k 2^k)) * sum_{r=1}^{k-1} C(k,r) sqrt(r (k-r)),  G(1) = 0.
Rational trade_gross_benefit(int k, const mpz_class& precision);

// The Walrasian trade-network payoff function: a player in a component of
// size k containing lambda links earns G(k) - c * lambda / k.
PayoffFn trade_payoffs(PlayerSet ps, const Rational& cost,
                       const mpz_class& precision = kDefaultTradePrecision);

}  // namespace netstab

#endif
