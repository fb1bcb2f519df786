#include "payoff.hpp"

#include "errors.hpp"

namespace netstab {

PayoffFn PayoffFn::zero(PlayerSet ps) { return PayoffFn(ps); }

PayoffFn PayoffFn::table(PlayerSet ps, Table entries) {
  PayoffFn fn(ps);
  for (auto& [mask, vec] : entries) {
    if (mask & ~ps.complete_mask()) {
      throw precondition_error("payoff table key outside the link universe");
    }
    if (static_cast<int>(vec.size()) != ps.n()) {
      throw precondition_error("payoff vector length must equal n");
    }
    bool all_zero = true;
    for (const Rational& v : vec) {
      if (v != 0) {
        all_zero = false;
        break;
      }
    }
    if (!all_zero) fn.table_.emplace(mask, vec);
  }
  return fn;
}

PayoffFn PayoffFn::derived(PlayerSet ps, Eval eval) {
  PayoffFn fn(ps);
  fn.eval_ = std::move(eval);
  return fn;
}

Rational PayoffFn::value(Network g, int player) const {
  if (g.n != ps_.n() || player < 1 || player > ps_.n()) {
    throw precondition_error("payoff lookup outside the player set");
  }
  if (eval_) return eval_(g, player);
  auto it = table_.find(g.bits);
  if (it == table_.end()) return Rational(0);
  return it->second[player - 1];
}

std::vector<Rational> PayoffFn::values(Network g) const {
  std::vector<Rational> out;
  out.reserve(ps_.n());
  for (int i = 1; i <= ps_.n(); ++i) out.push_back(value(g, i));
  return out;
}

const PayoffFn::Table& PayoffFn::entries() const {
  if (eval_) {
    throw precondition_error(
        "derived payoff function has no table; materialise it first");
  }
  return table_;
}

PayoffFn PayoffFn::materialise(int max_players) const {
  if (!eval_) return *this;
  Table t;
  for (Network g : enumerate_networks(ps_, max_players)) {
    t.emplace(g.bits, values(g));
  }
  return table(ps_, std::move(t));
}

CostMatrix::CostMatrix(PlayerSet ps, std::vector<Rational> entries)
    : ps_(ps), entries_(std::move(entries)) {
  int n = ps_.n();
  if (static_cast<int>(entries_.size()) != n * n) {
    throw precondition_error("cost matrix must be n x n");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& c = entries_[i * n + j];
      if (i == j && c != 0) {
        throw precondition_error("cost matrix diagonal must be zero");
      }
      if (c < 0) throw precondition_error("costs must be nonnegative");
    }
  }
}

CostMatrix CostMatrix::zero(PlayerSet ps) {
  return CostMatrix(ps, std::vector<Rational>(ps.n() * ps.n(), Rational(0)));
}

CostMatrix CostMatrix::uniform(PlayerSet ps, const Rational& c) {
  int n = ps.n();
  std::vector<Rational> e(n * n, c);
  for (int i = 0; i < n; ++i) e[i * n + i] = 0;
  return CostMatrix(ps, std::move(e));
}

const Rational& CostMatrix::at(int i, int j) const {
  if (i < 1 || i > ps_.n() || j < 1 || j > ps_.n()) {
    throw precondition_error("cost lookup outside the player set");
  }
  return entries_[(i - 1) * ps_.n() + (j - 1)];
}

bool CostMatrix::strictly_positive() const {
  for (int i = 1; i <= ps_.n(); ++i) {
    for (int j = 1; j <= ps_.n(); ++j) {
      if (i != j && at(i, j) <= 0) return false;
    }
  }
  return true;
}

CostMatrix CostMatrix::transposed_sum() const {
  int n = ps_.n();
  std::vector<Rational> e(n * n, Rational(0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) e[(i - 1) * n + (j - 1)] = at(i, j) + at(j, i);
    }
  }
  return CostMatrix(ps_, std::move(e));
}

}  // namespace netstab
