#include "verify.hpp"

#include <algorithm>

#include "consent.hpp"
#include "errors.hpp"
#include "potential.hpp"
#include "random_instances.hpp"
#include "report.hpp"
#include "stability.hpp"
#include "trust.hpp"

namespace netstab {

using nlohmann::json;

namespace {

bool subset_of(const std::vector<Network>& a, const std::vector<Network>& b) {
  for (Network g : a) {
    if (std::find(b.begin(), b.end(), g) == b.end()) return false;
  }
  return true;
}

json witness_json(const StructureWitness& w) {
  json out;
  out["network"] = network_key(w.g);
  if (w.player_i) out["player"] = w.player_i;
  if (w.player_j) out["other"] = w.player_j;
  if (w.links) out["links"] = w.links;
  out["note"] = w.note;
  return out;
}

Check set_equality_check(const std::string& name,
                         const std::vector<Network>& lhs,
                         const std::vector<Network>& rhs,
                         const std::string& lhs_name,
                         const std::string& rhs_name) {
  Check c{name, lhs == rhs, {}};
  c.details[lhs_name] = networks_to_json(lhs);
  c.details[rhs_name] = networks_to_json(rhs);
  return c;
}

Check biconditional_check(const std::string& name, bool sets_equal,
                          bool predicate, json extra = {}) {
  Check c{name, sets_equal == predicate, std::move(extra)};
  c.details["sets_equal"] = sets_equal;
  c.details["predicate"] = predicate;
  return c;
}

}  // namespace

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["theorem"] = theorem;
  doc["verdict"] = ok() ? "verified" : "violated";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["ok"] = c.ok;
    if (!c.details.is_null()) jc["details"] = c.details;
    arr.push_back(jc);
  }
  doc["checks"] = arr;
  return doc;
}

std::string VerifyReport::to_text() const {
  std::string out = theorem + ": " + (ok() ? "verified" : "VIOLATED") + "\n";
  for (const Check& c : checks) {
    out += std::string("  [") + (c.ok ? "ok" : "FAIL") + "] " + c.name + "\n";
    if (!c.ok && !c.details.is_null()) {
      out += "        " + c.details.dump() + "\n";
    }
  }
  return out;
}

const std::vector<std::string>& verify_theorem_ids() {
  static const std::vector<std::string> ids = {
      "deletion-equivalence", "addition-equivalence", "pairwise-corollaries",
      "m-networks",           "two-sided",            "one-sided-inclusion",
      "sunk-cost-inclusion",  "monadic-equivalence",  "potentials-existence"};
  return ids;
}

VerifyReport verify_deletion_equivalence(const PayoffFn& phi) {
  VerifyReport rep{"deletion-equivalence", {}};
  auto ldp = networks_in_class(phi, NetworkClass::kLdp);
  auto sldp = networks_in_class(phi, NetworkClass::kSldp);

  Check inc{"SLDP set contained in LDP set", subset_of(sldp, ldp), {}};
  rep.checks.push_back(inc);

  Check empty_net{"empty network is SLDP",
                  std::find(sldp.begin(), sldp.end(),
                            empty_network(phi.players())) != sldp.end(),
                  {}};
  rep.checks.push_back(empty_net);

  StructureWitness w;
  bool convex = is_convex_on(phi, ldp, &w);
  json extra;
  if (!convex) extra["witness"] = witness_json(w);
  Check bic = biconditional_check(
      "LDP = SLDP iff convex on the LDP class", ldp == sldp, convex,
      std::move(extra));
  bic.details["ldp"] = networks_to_json(ldp);
  bic.details["sldp"] = networks_to_json(sldp);
  rep.checks.push_back(bic);
  return rep;
}

VerifyReport verify_addition_equivalences(const PayoffFn& phi) {
  VerifyReport rep{"addition-equivalence", {}};
  auto lap = networks_in_class(phi, NetworkClass::kLap);
  auto star = networks_in_class(phi, NetworkClass::kStarLap);
  auto slap = networks_in_class(phi, NetworkClass::kSlap);
  Network full = complete_network(phi.players());

  Check part_a{"complete network is SLAP and SLAP within *-LAP within LAP",
               std::find(slap.begin(), slap.end(), full) != slap.end() &&
                   subset_of(slap, star) && subset_of(star, lap),
               {}};
  part_a.details["lap"] = networks_to_json(lap);
  part_a.details["star_lap"] = networks_to_json(star);
  part_a.details["slap"] = networks_to_json(slap);
  rep.checks.push_back(part_a);

  StructureWitness w;
  bool discerning = is_discerning_on(phi, lap, &w);
  json extra_b;
  if (!discerning) extra_b["witness"] = witness_json(w);
  rep.checks.push_back(biconditional_check(
      "*-LAP = LAP iff discerning on the LAP class", star == lap, discerning,
      std::move(extra_b)));

  bool uniform = is_uniform_on(phi, star, &w);
  json extra_c;
  if (!uniform) extra_c["witness"] = witness_json(w);
  rep.checks.push_back(biconditional_check(
      "SLAP = *-LAP iff uniform on the *-LAP class", slap == star, uniform,
      std::move(extra_c)));

  bool disc_lap = is_discerning_on(phi, lap, nullptr);
  bool unif_lap = is_uniform_on(phi, lap, nullptr);
  rep.checks.push_back(biconditional_check(
      "SLAP = LAP iff discerning and uniform on the LAP class", slap == lap,
      disc_lap && unif_lap));
  return rep;
}

VerifyReport verify_pairwise_corollaries(const PayoffFn& phi) {
  VerifyReport rep{"pairwise-corollaries", {}};
  auto ps = networks_in_class(phi, NetworkClass::kPs);
  auto sps = networks_in_class(phi, NetworkClass::kSps);
  auto strict = networks_in_class(phi, NetworkClass::kSpsStrict);

  Check chain{"strictly-PS within strongly-PS within PS",
              subset_of(strict, sps) && subset_of(sps, ps), {}};
  chain.details["ps"] = networks_to_json(ps);
  chain.details["sps"] = networks_to_json(sps);
  chain.details["sps_strict"] = networks_to_json(strict);
  rep.checks.push_back(chain);

  rep.checks.push_back(biconditional_check(
      "PS = SPS iff convex on the PS class", ps == sps,
      is_convex_on(phi, ps, nullptr)));
  rep.checks.push_back(biconditional_check(
      "SPS = strictly-PS iff discerning and uniform on the SPS class",
      sps == strict,
      is_discerning_on(phi, sps, nullptr) && is_uniform_on(phi, sps, nullptr)));
  rep.checks.push_back(biconditional_check(
      "PS = strictly-PS iff convex, discerning and uniform on the PS class",
      ps == strict,
      is_convex_on(phi, ps, nullptr) && is_discerning_on(phi, ps, nullptr) &&
          is_uniform_on(phi, ps, nullptr)));
  return rep;
}

VerifyReport verify_m_networks(const PayoffFn& phi) {
  VerifyReport rep{"m-networks", {}};
  auto characterised = m_networks(phi, EquilibriumMethod::kCharacterisation);

  if (phi.n() <= kMaxProfileEnumerationPlayers) {
    auto direct = m_networks(phi, EquilibriumMethod::kDirect);
    rep.checks.push_back(set_equality_check(
        "M-networks equal the SLDP class (both routes computed)", direct,
        characterised, "nash_enumeration", "sldp_scan"));
  }

  Check lemma{"empty network is an M-network",
              std::find(characterised.begin(), characterised.end(),
                        empty_network(phi.players())) != characterised.end(),
              {}};
  rep.checks.push_back(lemma);

  if (is_link_monotone(phi, nullptr)) {
    std::size_t all = std::size_t{1} << phi.players().link_count();
    Check mono{"link-monotone payoffs support every network",
               characterised.size() == all, {}};
    mono.details["m_network_count"] = characterised.size();
    mono.details["network_count"] = all;
    rep.checks.push_back(mono);
  }
  return rep;
}

VerifyReport verify_two_sided(const PayoffFn& phi, const CostMatrix& c) {
  VerifyReport rep{"two-sided", {}};
  auto characterised =
      nash_networks_two_sided(phi, c, EquilibriumMethod::kCharacterisation);

  if (phi.n() <= kMaxProfileEnumerationPlayers) {
    auto direct = nash_networks_two_sided(phi, c, EquilibriumMethod::kDirect);
    rep.checks.push_back(set_equality_check(
        "supported networks equal SLDP(phi^a) (both routes computed)", direct,
        characterised, "nash_enumeration", "sldp_scan"));
  }

  PlayerSet ps = phi.players();
  FiniteGame game = two_sided_game(phi, c);
  bool all_supported = true;
  json failures = json::array();
  for (Network g : characterised) {
    SignalProfile ell = non_superfluous_profile(ps, g);
    if (!is_nash(game, game_profile_from_signals(ps, ell))) {
      all_supported = false;
      failures.push_back(network_key(g));
    }
  }
  Check nonsup{"each supported network has a non-superfluous Nash profile",
               all_supported, {}};
  if (!all_supported) nonsup.details["failures"] = failures;
  rep.checks.push_back(nonsup);

  Check lemma{"all-zero profile is a Nash equilibrium",
              is_nash(game, Profile(ps.n(), 0)), {}};
  rep.checks.push_back(lemma);
  return rep;
}

VerifyReport verify_one_sided_inclusion(const PayoffFn& phi,
                                        const CostMatrix& gamma) {
  VerifyReport rep{"one-sided-inclusion", {}};
  InclusionReport inc = check_one_sided_inclusion(phi, gamma);
  Check c{"SLDP(phi^b) networks are all one-sided supported",
          inc.inclusion_holds(), {}};
  c.details["sldp_phi_b"] = networks_to_json(inc.lhs);
  c.details["one_sided_supported"] = networks_to_json(inc.rhs);
  c.details["converse_counterexamples"] = networks_to_json(inc.rhs_minus_lhs);
  if (!inc.inclusion_holds()) {
    c.details["violations"] = networks_to_json(inc.lhs_minus_rhs);
  }
  rep.checks.push_back(c);
  return rep;
}

VerifyReport verify_sunk_cost_inclusion(const PayoffFn& phi,
                                        const CostMatrix& c) {
  VerifyReport rep{"sunk-cost-inclusion", {}};
  InclusionReport inc = check_sunk_cost_inclusion(phi, c);
  Check chk{"two-sided supported networks are one-sided supported (gamma=c)",
            inc.inclusion_holds(), {}};
  chk.details["two_sided"] = networks_to_json(inc.lhs);
  chk.details["one_sided"] = networks_to_json(inc.rhs);
  chk.details["strictness_witnesses"] = networks_to_json(inc.rhs_minus_lhs);
  if (!inc.inclusion_holds()) {
    chk.details["violations"] = networks_to_json(inc.lhs_minus_rhs);
  }
  rep.checks.push_back(chk);
  return rep;
}

namespace {

json belief_to_json(const BeliefSystem& b) {
  json out;
  out["owner"] = b.owner;
  json rows = json::array();
  for (const auto& row : signal_profile_rows(b.beliefs)) rows.push_back(row);
  out["rows"] = rows;
  out["display"] = belief_str(b);
  return out;
}

}  // namespace

VerifyReport verify_monadic_equivalence(const PayoffFn& phi,
                                        const CostMatrix& c) {
  if (!c.strictly_positive()) {
    throw precondition_error(
        "monadic equivalence requires strictly positive costs");
  }
  VerifyReport rep{"monadic-equivalence", {}};
  auto monadic = monadic_networks(phi, c);
  auto strict = networks_in_class(net_payoff_a(phi, c),
                                  NetworkClass::kSpsStrict);
  Check eq = set_equality_check(
      "monadically stable networks equal strictly-PS(phi^a)", monadic, strict,
      "monadic", "sps_strict_phi_a");
  // Attach the confirmed supports with every player's belief system.
  json supports = json::object();
  for (Network g : monadic) {
    auto ell = monadic_support(phi, c, g);
    if (!ell) continue;
    json entry;
    json rows = json::array();
    for (const auto& row : signal_profile_rows(*ell)) rows.push_back(row);
    entry["profile"] = rows;
    json beliefs = json::array();
    for (int i = 1; i <= phi.n(); ++i) {
      beliefs.push_back(belief_to_json(monadic_beliefs(phi, c, *ell, i)));
    }
    entry["beliefs"] = beliefs;
    supports[network_key(g)] = entry;
  }
  eq.details["supports"] = supports;
  rep.checks.push_back(eq);
  return rep;
}

VerifyReport verify_potentials_existence(const PayoffFn& phi,
                                         const CostMatrix& c) {
  VerifyReport rep{"potentials-existence", {}};
  ExistenceReport er = existence_report(phi, c);
  json props;
  props["exact_network"] = er.exact_network;
  props["ordinal_network"] = er.ordinal_network;
  props["exact_myerson"] = er.exact_myerson;
  props["ordinal_myerson"] = er.ordinal_myerson;
  props["ordinal_two_sided"] = er.ordinal_two_sided;
  rep.checks.push_back(Check{"potential detection", true, props});
  for (const ExistenceClaim& claim : er.claims) {
    Check chk{claim.name, claim.ok, {}};
    chk.details["premise"] = claim.premise;
    if (!claim.detail.empty()) chk.details["detail"] = claim.detail;
    rep.checks.push_back(chk);
  }
  return rep;
}

VerifyReport verify_inclusion_chains(const PayoffFn& phi) {
  VerifyReport rep{"inclusion-chains", {}};
  auto ps_set = networks_in_class(phi, NetworkClass::kPs);
  auto sps = networks_in_class(phi, NetworkClass::kSps);
  auto strict = networks_in_class(phi, NetworkClass::kSpsStrict);
  rep.checks.push_back(
      Check{"strictly-PS within SPS within PS",
            subset_of(strict, sps) && subset_of(sps, ps_set), {}});

  std::vector<Network> unilateral = unilaterally_stable_networks(phi);
  rep.checks.push_back(Check{"unilaterally stable networks are strongly PS",
                             subset_of(unilateral, sps), {}});

  std::vector<Network> strong;
  for (Network g : all_networks(phi.players())) {
    if (is_strongly_stable(phi, g)) strong.push_back(g);
  }
  rep.checks.push_back(
      Check{"strongly stable networks are strongly PS", subset_of(strong, sps), {}});

  // Order-r stability is antitone in r and meets SLDP at r=1 and strong
  // stability at r=n.
  bool order_ok = true;
  auto sldp = networks_in_class(phi, NetworkClass::kSldp);
  for (Network g : all_networks(phi.players())) {
    bool prev = true;
    for (int r = 1; r <= phi.n(); ++r) {
      bool now = stability_of_order(phi, g, r);
      if (now && !prev) order_ok = false;  // antitone violated
      prev = now;
      if (r == 1) {
        bool in_sldp = std::find(sldp.begin(), sldp.end(), g) != sldp.end();
        if (now != in_sldp) order_ok = false;
      }
      if (r == phi.n()) {
        bool strong_here =
            std::find(strong.begin(), strong.end(), g) != strong.end();
        if (now != strong_here) order_ok = false;
      }
    }
  }
  rep.checks.push_back(
      Check{"order-r stability is antitone and meets SLDP / strong stability",
            order_ok, {}});
  return rep;
}

VerifyReport verify_pairwise_nash_duality(const PayoffFn& phi) {
  VerifyReport rep{"pairwise-nash", {}};
  rep.checks.push_back(set_equality_check(
      "pairwise Nash networks equal bilaterally stable networks",
      pairwise_nash_networks(phi), bilateral_stable_networks(phi),
      "pairwise_nash", "bilateral"));
  return rep;
}

std::vector<Check> check_expected_sets(const Model& model) {
  std::vector<Check> out;
  for (const auto& [key, keys] : model.expected) {
    std::string token = key;
    bool includes_only = false;
    const std::string suffix = "-includes";
    if (token.size() > suffix.size() &&
        token.compare(token.size() - suffix.size(), suffix.size(), suffix) ==
            0) {
      includes_only = true;
      token = token.substr(0, token.size() - suffix.size());
    }
    std::vector<Network> expected;
    for (const std::string& k : keys) {
      expected.push_back(network_from_key(model.ps, k));
    }
    std::sort(expected.begin(), expected.end());
    std::vector<Network> actual = concept_set(model, token);
    bool ok = includes_only ? subset_of(expected, actual) : expected == actual;
    Check c{std::string("expected ") + key, ok, {}};
    c.details["expected"] = networks_to_json(expected);
    c.details["computed"] = networks_to_json(actual);
    out.push_back(c);
  }
  return out;
}

VerifyReport verify_theorem(const Model& model, const std::string& theorem_id) {
  VerifyReport rep;
  if (theorem_id == "deletion-equivalence") {
    rep = verify_deletion_equivalence(model.phi);
  } else if (theorem_id == "addition-equivalence") {
    rep = verify_addition_equivalences(model.phi);
  } else if (theorem_id == "pairwise-corollaries") {
    rep = verify_pairwise_corollaries(model.phi);
  } else if (theorem_id == "m-networks") {
    rep = verify_m_networks(model.phi);
  } else if (theorem_id == "two-sided") {
    rep = verify_two_sided(model.phi, model.two_sided_or_zero());
  } else if (theorem_id == "one-sided-inclusion") {
    rep = verify_one_sided_inclusion(model.phi, model.one_sided_or_zero());
  } else if (theorem_id == "sunk-cost-inclusion") {
    rep = verify_sunk_cost_inclusion(model.phi, model.two_sided_or_zero());
  } else if (theorem_id == "monadic-equivalence") {
    rep = verify_monadic_equivalence(model.phi, model.two_sided_or_zero());
  } else if (theorem_id == "potentials-existence") {
    rep = verify_potentials_existence(model.phi, model.two_sided_or_zero());
  } else {
    throw precondition_error("unknown theorem id '" + theorem_id + "'");
  }
  for (Check& c : check_expected_sets(model)) rep.checks.push_back(c);
  return rep;
}

VerifyReport verify_theorem_random(const std::string& theorem_id,
                                   int instances, int players,
                                   std::uint64_t seed) {
  VerifyReport rep{theorem_id + " (randomized)", {}};
  Rng rng(seed);
  PlayerSet ps(players);
  int failures = 0;
  for (int k = 0; k < instances; ++k) {
    PayoffFn phi = random_payoff_table(rng, ps);
    VerifyReport one;
    if (theorem_id == "deletion-equivalence") {
      one = verify_deletion_equivalence(phi);
    } else if (theorem_id == "addition-equivalence") {
      one = verify_addition_equivalences(phi);
    } else if (theorem_id == "pairwise-corollaries") {
      one = verify_pairwise_corollaries(phi);
    } else if (theorem_id == "m-networks") {
      one = verify_m_networks(phi);
    } else if (theorem_id == "two-sided") {
      one = verify_two_sided(phi, random_positive_costs(rng, ps));
    } else if (theorem_id == "one-sided-inclusion") {
      one = verify_one_sided_inclusion(phi, random_positive_costs(rng, ps));
    } else if (theorem_id == "sunk-cost-inclusion") {
      one = verify_sunk_cost_inclusion(phi, random_positive_costs(rng, ps));
    } else if (theorem_id == "monadic-equivalence") {
      one = verify_monadic_equivalence(
          phi, CostMatrix::uniform(ps, Rational(1)));
    } else if (theorem_id == "potentials-existence") {
      // Generic instances: the tie-sensitive coincidence claims hold only
      // away from payoff ties, matching their sources.
      one = verify_potentials_existence(random_generic_table(rng, ps),
                                        CostMatrix::uniform(ps, Rational(1)));
    } else {
      throw precondition_error("unknown theorem id '" + theorem_id + "'");
    }
    if (!one.ok()) {
      ++failures;
      Check c{"instance " + std::to_string(k) + " violated", false,
              one.to_json()};
      rep.checks.push_back(c);
    }
  }
  Check summary{"randomized batch: " + std::to_string(instances) +
                    " instances at n=" + std::to_string(players),
                failures == 0, {}};
  summary.details["failures"] = failures;
  rep.checks.insert(rep.checks.begin(), summary);
  return rep;
}

}  // namespace netstab
