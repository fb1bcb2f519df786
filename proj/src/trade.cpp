#include "trade.hpp"

#include "errors.hpp"

namespace netstab {

Rational rational_sqrt(const mpz_class& m, const mpz_class& denominator) {
  if (m < 0) throw precondition_error("square root of a negative value");
  if (denominator <= 0) throw precondition_error("precision must be positive");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  if (root * root == m) return Rational(root);
  mpz_class scaled = m * denominator * denominator;
  mpz_class num;
  mpz_sqrt(num.get_mpz_t(), scaled.get_mpz_t());
  Rational r(num, denominator);
  r.canonicalize();
  return r;
}

Rational trade_gross_benefit(int k, const mpz_class& precision) {
  if (k <= 1) return Rational(0);
  mpz_class binom;
  Rational sum(0);
  for (int r = 1; r <= k - 1; ++r) {
    mpz_bin_uiui(binom.get_mpz_t(), k, r);
    Rational term = Rational(binom) *
                    rational_sqrt(mpz_class(r) * mpz_class(k - r), precision);
    sum += term;
  }
  mpz_class scale = mpz_class(k) * (mpz_class(1) << k);
  Rational g = sum / Rational(scale);
  g.canonicalize();
  return g;
}

PayoffFn trade_payoffs(PlayerSet ps, const Rational& cost,
                       const mpz_class& precision) {
  if (cost < 0) throw precondition_error("trade cost must be nonnegative");
  // G(k) depends only on the component size; precompute once.
  std::vector<Rational> gross(ps.n() + 1, Rational(0));
  for (int k = 2; k <= ps.n(); ++k) {
    gross[k] = trade_gross_benefit(k, precision);
  }
  Rational c = cost;
  return PayoffFn::derived(ps, [ps, gross, c](Network g, int player) {
    for (const auto& comp : components(ps, g)) {
      bool member = false;
      for (int p : comp) {
        if (p == player) {
          member = true;
          break;
        }
      }
      if (!member) continue;
      int k = static_cast<int>(comp.size());
      int lambda = 0;
      for (std::size_t a = 0; a < comp.size(); ++a) {
        for (std::size_t b = a + 1; b < comp.size(); ++b) {
          if (has_link(ps, g, comp[a], comp[b])) ++lambda;
        }
      }
      Rational out = gross[k] - c * Rational(lambda) / Rational(k);
      out.canonicalize();
      return out;
    }
    throw precondition_error("player not found in any component");
  });
}

}  // namespace netstab
