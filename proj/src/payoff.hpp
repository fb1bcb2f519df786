#ifndef NETSTAB_PAYOFF_HPP
#define NETSTAB_PAYOFF_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "network.hpp"
#include "rational.hpp"

namespace netstab {

// A total map from networks to per-player payoff vectors. Table-backed
// functions default unlisted networks to the zero vector; derived functions
// evaluate a pure closure on demand (used for cost-netted payoffs).
class PayoffFn {
 public:
  using Table = std::map<LinkMask, std::vector<Rational>>;
  using Eval = std::function<Rational(Network, int)>;

  static PayoffFn zero(PlayerSet ps);
  static PayoffFn table(PlayerSet ps, Table entries);
  static PayoffFn derived(PlayerSet ps, Eval eval);

  PlayerSet players() const { return ps_; }
  int n() const { return ps_.n(); }

  Rational value(Network g, int player) const;
  std::vector<Rational> values(Network g) const;

  bool is_table() const { return eval_ == nullptr; }
  // Table entries with at least one nonzero component, by ascending mask.
  const Table& entries() const;
  // Materialises a derived function into a table (for serialisation).
  PayoffFn materialise(int max_players = kDefaultMaxPlayers) const;

 private:
  explicit PayoffFn(PlayerSet ps) : ps_(ps) {}

  PlayerSet ps_;
  Table table_;
  Eval eval_;  // null for table-backed functions
};

class CostMatrix {
 public:
  CostMatrix(PlayerSet ps, std::vector<Rational> entries);  // row-major n*n
  static CostMatrix zero(PlayerSet ps);
  static CostMatrix uniform(PlayerSet ps, const Rational& c);

  PlayerSet players() const { return ps_; }
  const Rational& at(int i, int j) const;
  bool strictly_positive() const;  // all off-diagonal entries > 0
  CostMatrix transposed_sum() const;  // entry (i,j) = c_ij + c_ji

  bool operator==(const CostMatrix& o) const {
    return ps_ == o.ps_ && entries_ == o.entries_;
  }

 private:
  PlayerSet ps_;
  std::vector<Rational> entries_;
};

// A parsed model file: player set, payoff function and optional cost
// structures for the two consent variants.
struct Model {
  PlayerSet ps;
  PayoffFn phi;
  std::optional<CostMatrix> costs_two_sided;
  std::optional<CostMatrix> costs_one_sided;
  std::map<std::string, std::vector<std::string>> expected;  // concept -> keys

  CostMatrix two_sided_or_zero() const {
    return costs_two_sided ? *costs_two_sided : CostMatrix::zero(ps);
  }
  CostMatrix one_sided_or_zero() const {
    return costs_one_sided ? *costs_one_sided : CostMatrix::zero(ps);
  }
};

}  // namespace netstab

#endif
