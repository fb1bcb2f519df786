#include "potential.hpp"

#include <algorithm>
#include <numeric>

#include "consent.hpp"
#include "errors.hpp"
#include "stability.hpp"
#include "trust.hpp"

namespace netstab {

namespace {

// Union-find over dense node ids.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

struct StrictArc {
  std::size_t from;  // lower potential
  std::size_t to;    // higher potential
};

// Levels every node of a DAG by longest path from a source; returns
// std::nullopt and a witness cycle (as node ids) when a cycle exists.
std::optional<std::vector<std::size_t>> dag_levels(
    std::size_t nodes, const std::vector<StrictArc>& arcs,
    std::vector<std::size_t>* cycle_out) {
  std::vector<std::vector<std::size_t>> adj(nodes);
  std::vector<std::size_t> indegree(nodes, 0);
  for (const StrictArc& a : arcs) {
    adj[a.from].push_back(a.to);
    ++indegree[a.to];
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < nodes; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<std::size_t> level(nodes, 0);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (std::size_t w : adj[v]) {
      level[w] = std::max(level[w], level[v] + 1);
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (order.size() == nodes) return level;

  if (cycle_out) {
    // Nodes with leftover indegree always have an unprocessed predecessor,
    // so walking backwards must revisit a node; the revisited stretch is a
    // cycle.
    std::vector<char> stuck(nodes, 0);
    std::size_t start = nodes;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (indegree[v] > 0) {
        stuck[v] = 1;
        if (start == nodes) start = v;
      }
    }
    std::vector<std::vector<std::size_t>> radj(nodes);
    for (const StrictArc& a : arcs) {
      if (stuck[a.from] && stuck[a.to]) radj[a.to].push_back(a.from);
    }
    std::vector<int> seen(nodes, -1);
    std::vector<std::size_t> path;
    std::size_t v = start;
    while (seen[v] < 0) {
      seen[v] = static_cast<int>(path.size());
      path.push_back(v);
      v = radj[v].front();
    }
    cycle_out->assign(path.begin() + seen[v], path.end());
    std::reverse(cycle_out->begin(), cycle_out->end());
  }
  return std::nullopt;
}

}  // namespace

NetworkPotentialResult exact_network_potential(const PayoffFn& phi) {
  PlayerSet ps = phi.players();
  std::vector<Network> all = all_networks(ps);
  std::size_t count = all.size();
  std::vector<Rational> lambda(count, Rational(0));

  // Assign along lowest-set-bit edges, in ascending popcount order (every
  // mask's lowest-bit predecessor has a smaller mask, so ascending mask
  // order suffices).
  for (LinkMask m = 1; m < count; ++m) {
    int idx = __builtin_ctz(m);
    Link l = ps.link_at(idx);
    Network g{ps.n(), m};
    Network prev{ps.n(), m & (m - 1)};
    Rational step = phi.value(g, l.i) - phi.value(prev, l.i);
    lambda[m] = lambda[prev.bits] + step;
  }

  // Verify the defining relation on every edge and both endpoints.
  for (const Network& g : all) {
    for (int idx = 0; idx < ps.link_count(); ++idx) {
      if (!g.contains(idx)) continue;
      Link l = ps.link_at(idx);
      Network prev{ps.n(), g.bits & ~(LinkMask{1} << idx)};
      Rational dl = lambda[g.bits] - lambda[prev.bits];
      for (int player : {l.i, l.j}) {
        Rational dphi = phi.value(g, player) - phi.value(prev, player);
        if (dphi != dl) {
          NetworkPotentialResult out;
          out.failure = PotentialFailure{
              "endpoint-mismatch", g, idx, player, {},
              "marginal " + rational_str(dphi) +
                  " does not match potential step " + rational_str(dl)};
          return out;
        }
      }
    }
  }
  NetworkPotentialResult out;
  out.table = std::move(lambda);
  return out;
}

NetworkPotentialResult ordinal_network_potential(const PayoffFn& phi) {
  PlayerSet ps = phi.players();
  std::size_t count = std::size_t{1} << ps.link_count();
  UnionFind uf(count);

  struct Edge {
    LinkMask high;
    LinkMask low;
    int s;  // sign of phi_i(g) - phi_i(g-ij), equal for both endpoints
    int link_index;
  };
  std::vector<Edge> edges;

  for (LinkMask m = 1; m < count; ++m) {
    Network g{ps.n(), m};
    for (int idx = 0; idx < ps.link_count(); ++idx) {
      if (!g.contains(idx)) continue;
      Link l = ps.link_at(idx);
      Network prev{ps.n(), m & ~(LinkMask{1} << idx)};
      Rational di = phi.value(g, l.i) - phi.value(prev, l.i);
      Rational dj = phi.value(g, l.j) - phi.value(prev, l.j);
      if (sign(di) != sign(dj)) {
        NetworkPotentialResult out;
        out.failure = PotentialFailure{
            "sign-conflict", g, idx, 0, {},
            "endpoints disagree in sign: " + rational_str(di) + " vs " +
                rational_str(dj)};
        return out;
      }
      int s = sign(di);
      if (s == 0) {
        uf.unite(m, prev.bits);
      } else {
        edges.push_back(Edge{m, prev.bits, s, idx});
      }
    }
  }

  std::vector<StrictArc> arcs;
  arcs.reserve(edges.size());
  for (const Edge& e : edges) {
    std::size_t hi = uf.find(e.high);
    std::size_t lo = uf.find(e.low);
    if (e.s > 0) {
      arcs.push_back(StrictArc{lo, hi});
    } else {
      arcs.push_back(StrictArc{hi, lo});
    }
  }

  std::vector<std::size_t> cycle_nodes;
  auto levels = dag_levels(count, arcs, &cycle_nodes);
  if (!levels) {
    NetworkPotentialResult out;
    PotentialFailure f;
    f.kind = "cycle";
    f.detail = "strict potential constraints form a cycle";
    for (std::size_t node : cycle_nodes) {
      // Map a class representative back to some member mask.
      for (LinkMask m = 0; m < count; ++m) {
        if (uf.find(m) == node) {
          f.cycle.push_back(Network{ps.n(), m});
          break;
        }
      }
    }
    out.failure = std::move(f);
    return out;
  }

  std::vector<Rational> lambda(count, Rational(0));
  Rational base(static_cast<long>((*levels)[uf.find(0)]));
  for (LinkMask m = 0; m < count; ++m) {
    lambda[m] = Rational(static_cast<long>((*levels)[uf.find(m)])) - base;
  }
  NetworkPotentialResult out;
  out.table = std::move(lambda);
  return out;
}

std::size_t profile_rank(const FiniteGame& game, const Profile& a) {
  std::size_t rank = 0;
  for (int i = 1; i <= game.players(); ++i) {
    rank = rank * static_cast<std::size_t>(game.strategy_count(i)) +
           static_cast<std::size_t>(a[i - 1]);
  }
  return rank;
}

Profile profile_from_rank(const FiniteGame& game, std::size_t rank) {
  Profile a(game.players(), 0);
  for (int i = game.players(); i >= 1; --i) {
    std::size_t c = static_cast<std::size_t>(game.strategy_count(i));
    a[i - 1] = static_cast<int>(rank % c);
    rank /= c;
  }
  return a;
}

GamePotentialResult exact_game_potential(const FiniteGame& game,
                                         std::size_t cap) {
  std::size_t space = game.profile_space(cap);
  std::vector<Rational> p(space, Rational(0));

  // Assign along a path that lowers one coordinate at a time to zero.
  for (std::size_t rank = 1; rank < space; ++rank) {
    Profile a = profile_from_rank(game, rank);
    int i = 1;
    while (a[i - 1] == 0) ++i;
    Profile b = a;
    b[i - 1] = 0;
    Rational step = game.payoff(a, i) - game.payoff(b, i);
    p[rank] = p[profile_rank(game, b)] + step;
  }

  for (std::size_t rank = 0; rank < space; ++rank) {
    Profile a = profile_from_rank(game, rank);
    for (int i = 1; i <= game.players(); ++i) {
      Profile b = a;
      for (int s = 0; s < a[i - 1]; ++s) {
        b[i - 1] = s;
        Rational dpi = game.payoff(a, i) - game.payoff(b, i);
        Rational dp = p[rank] - p[profile_rank(game, b)];
        if (dpi != dp) {
          GamePotentialResult out;
          out.failure = GamePotentialFailure{
              "constraint", a, b, i, {},
              "payoff difference " + rational_str(dpi) +
                  " does not match potential step " + rational_str(dp)};
          return out;
        }
      }
    }
  }
  GamePotentialResult out;
  out.table = std::move(p);
  return out;
}

GamePotentialResult ordinal_game_potential(const FiniteGame& game,
                                           std::size_t cap) {
  std::size_t space = game.profile_space(cap);
  UnionFind uf(space);
  std::vector<StrictArc> raw;

  for (std::size_t rank = 0; rank < space; ++rank) {
    Profile a = profile_from_rank(game, rank);
    for (int i = 1; i <= game.players(); ++i) {
      Profile b = a;
      for (int s = 0; s < a[i - 1]; ++s) {
        b[i - 1] = s;
        std::size_t other = profile_rank(game, b);
        Rational d = game.payoff(a, i) - game.payoff(b, i);
        int sg = sign(d);
        if (sg == 0) {
          uf.unite(rank, other);
        } else if (sg > 0) {
          raw.push_back(StrictArc{other, rank});
        } else {
          raw.push_back(StrictArc{rank, other});
        }
      }
    }
  }

  std::vector<StrictArc> arcs;
  arcs.reserve(raw.size());
  for (const StrictArc& a : raw) {
    arcs.push_back(StrictArc{uf.find(a.from), uf.find(a.to)});
  }
  std::vector<std::size_t> cycle_nodes;
  auto levels = dag_levels(space, arcs, &cycle_nodes);
  if (!levels) {
    GamePotentialResult out;
    GamePotentialFailure f;
    f.kind = "cycle";
    f.detail = "strict potential constraints form a cycle";
    for (std::size_t node : cycle_nodes) {
      for (std::size_t r = 0; r < space; ++r) {
        if (uf.find(r) == node) {
          f.cycle.push_back(profile_from_rank(game, r));
          break;
        }
      }
    }
    out.failure = std::move(f);
    return out;
  }
  std::vector<Rational> p(space, Rational(0));
  Rational base(static_cast<long>((*levels)[uf.find(0)]));
  for (std::size_t r = 0; r < space; ++r) {
    p[r] = Rational(static_cast<long>((*levels)[uf.find(r)])) - base;
  }
  GamePotentialResult out;
  out.table = std::move(p);
  return out;
}

ExistenceReport existence_report(const PayoffFn& phi, const CostMatrix& c) {
  ExistenceReport rep;
  rep.exact_network = exact_network_potential(phi).exists();
  rep.ordinal_network = ordinal_network_potential(phi).exists();
  FiniteGame myerson = myerson_game(phi);
  rep.exact_myerson = exact_game_potential(myerson).exists();
  rep.ordinal_myerson = ordinal_game_potential(myerson).exists();
  rep.ordinal_two_sided =
      ordinal_game_potential(two_sided_game(phi, c)).exists();

  auto ps_set = networks_in_class(phi, NetworkClass::kPs);
  auto sps_set = networks_in_class(phi, NetworkClass::kSps);
  auto sps_strict_set = networks_in_class(phi, NetworkClass::kSpsStrict);

  {
    ExistenceClaim claim{"exact network potential iff exact Myerson potential",
                         true, rep.exact_network == rep.exact_myerson, ""};
    if (!claim.ok) claim.detail = "biconditional violated";
    rep.claims.push_back(claim);
  }
  {
    ExistenceClaim claim{"ordinal network potential: some PS network exists",
                         rep.ordinal_network, true, ""};
    if (claim.premise && ps_set.empty()) {
      claim.ok = false;
      claim.detail = "pairwise stable set is empty";
    }
    rep.claims.push_back(claim);
  }
  {
    ExistenceClaim claim{
        "ordinal network potential: SPS and strictly-PS sets coincide",
        rep.ordinal_network, true, ""};
    if (claim.premise && sps_set != sps_strict_set) {
      claim.ok = false;
      claim.detail = "sets differ";
    }
    rep.claims.push_back(claim);
  }
  {
    ExistenceClaim claim{
        "ordinal Myerson potential: some strictly-PS network exists",
        rep.ordinal_myerson, true, ""};
    if (claim.premise && sps_strict_set.empty()) {
      claim.ok = false;
      claim.detail = "strictly pairwise stable set is empty";
    }
    rep.claims.push_back(claim);
  }
  {
    ExistenceClaim claim{
        "ordinal Myerson potential implies ordinal network potential",
        rep.ordinal_myerson, true, ""};
    if (claim.premise && !rep.ordinal_network) {
      claim.ok = false;
      claim.detail = "network-level ordinal potential missing";
    }
    rep.claims.push_back(claim);
  }
  {
    ExistenceClaim claim{
        "ordinal two-sided potential: some monadically stable network exists",
        rep.ordinal_two_sided, true, ""};
    if (claim.premise && monadic_networks(phi, c).empty()) {
      claim.ok = false;
      claim.detail = "monadically stable set is empty";
    }
    rep.claims.push_back(claim);
  }
  return rep;
}

}  // namespace netstab
