#include "netstab/netstab.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "consent.hpp"
#include "correlated.hpp"
#include "dot_export.hpp"
#include "errors.hpp"
#include "model_io.hpp"
#include "potential.hpp"
#include "report.hpp"
#include "stability.hpp"
#include "trade.hpp"
#include "trust.hpp"
#include "verify.hpp"

using nlohmann::json;
using namespace netstab;

struct ns_model {
  Model model;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** out_error, const std::string& message) {
  if (out_error) *out_error = dup_string(message);
}

template <typename Fn>
ns_status guarded(char** out_error, Fn&& fn) {
  try {
    return fn();
  } catch (const parse_error& e) {
    set_error(out_error, e.what());
    return NS_ERR_PARSE;
  } catch (const capacity_error& e) {
    set_error(out_error, e.what());
    return NS_ERR_CAPACITY;
  } catch (const precondition_error& e) {
    set_error(out_error, e.what());
    return NS_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    set_error(out_error, e.what());
    return NS_ERR_INTERNAL;
  }
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string token;
  for (const char* p = csv;; ++p) {
    if (*p == ',' || *p == '\0') {
      if (!token.empty()) out.push_back(token);
      token.clear();
      if (*p == '\0') break;
    } else if (!std::isspace(static_cast<unsigned char>(*p))) {
      token += *p;
    }
  }
  return out;
}

json signal_rows_json(const SignalProfile& ell) {
  json rows = json::array();
  for (const auto& row : signal_profile_rows(ell)) rows.push_back(row);
  return rows;
}

json dyad_json(const DyadProfile& d) {
  json out;
  json l = json::array();
  json r = json::array();
  for (int i = 1; i <= d.n; ++i) {
    json lrow = json::array();
    json rrow = json::array();
    for (int j = 1; j <= d.n; ++j) {
      if (j == i) continue;
      lrow.push_back(d.l(i, j) ? 1 : 0);
      rrow.push_back(d.r(i, j) ? 1 : 0);
    }
    l.push_back(lrow);
    r.push_back(rrow);
  }
  out["l"] = l;
  out["r"] = r;
  return out;
}

CorrelationDevice parse_device_signal_profiles(const Model& model,
                                               const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid device JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw parse_error("device file must be a JSON array of entries");
  }
  CorrelationDevice device;
  for (const json& entry : doc) {
    if (!entry.contains("profile") || !entry.contains("prob")) {
      throw parse_error("device entries need \"profile\" and \"prob\"");
    }
    const json& rowsj = entry["profile"];
    if (!rowsj.is_array() ||
        static_cast<int>(rowsj.size()) != model.ps.n()) {
      throw parse_error("device profile must list one signal row per player");
    }
    std::vector<std::vector<int>> rows;
    for (const json& rowj : rowsj) {
      rows.emplace_back();
      for (const json& cell : rowj) rows.back().push_back(cell.get<int>());
    }
    SignalProfile ell;
    try {
      ell = signal_profile_from_rows(model.ps, rows);
    } catch (const precondition_error& e) {
      throw parse_error(e.what());
    }
    Rational prob = rational_from_json(entry["prob"]);
    device.support.push_back(CorrelationDevice::Entry{
        game_profile_from_signals(model.ps, ell), prob});
  }
  return device;
}

CorrelationDevice parse_device_for_game(const FiniteGame& game,
                                        const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid device JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw parse_error("device file must be a JSON array of entries");
  }
  CorrelationDevice device;
  for (const json& entry : doc) {
    if (!entry.contains("profile") || !entry.contains("prob")) {
      throw parse_error("device entries need \"profile\" and \"prob\"");
    }
    const json& pj = entry["profile"];
    if (!pj.is_array() || static_cast<int>(pj.size()) != game.players()) {
      throw parse_error("device profile length must equal the player count");
    }
    Profile p;
    for (int i = 1; i <= game.players(); ++i) {
      const json& cell = pj[i - 1];
      if (cell.is_number_integer()) {
        p.push_back(cell.get<int>());
      } else if (cell.is_string()) {
        auto s = game.strategy_from_label(i, cell.get<std::string>());
        if (!s) {
          throw parse_error("unknown strategy label \"" +
                            cell.get<std::string>() + "\"");
        }
        p.push_back(*s);
      } else {
        throw parse_error("profile entries must be indices or labels");
      }
    }
    device.support.push_back(
        CorrelationDevice::Entry{p, rational_from_json(entry["prob"])});
  }
  return device;
}

json obedience_witness_json(const FiniteGame& game,
                            const ObedienceWitness& w) {
  json out;
  out["player"] = w.player;
  if (w.recommended >= 0) {
    out["recommended"] = game.has_labels()
                             ? json(game.label(w.player, w.recommended))
                             : json(w.recommended);
  }
  out["deviation"] = game.has_labels() ? json(game.label(w.player, w.deviation))
                                       : json(w.deviation);
  out["obey_value"] = rational_str(w.obey_value);
  out["deviation_value"] = rational_str(w.deviation_value);
  return out;
}

json correlated_report(const FiniteGame& game,
                       const CorrelationDevice& device) {
  json out;
  std::vector<Rational> expected = expected_payoffs(device, game);
  json ev = json::array();
  for (const Rational& v : expected) ev.push_back(rational_str(v));
  out["expected_payoffs"] = ev;

  ObedienceWitness w;
  bool conditional = is_correlated_equilibrium(device, game, &w);
  out["conditional"]["ok"] = conditional;
  if (!conditional) {
    out["conditional"]["witness"] = obedience_witness_json(game, w);
  }
  bool ex_ante = is_ex_ante_self_enforcing(device, game, &w);
  out["ex_ante"]["ok"] = ex_ante;
  if (!ex_ante) {
    out["ex_ante"]["witness"] = obedience_witness_json(game, w);
  }
  return out;
}

json potential_table_json(PlayerSet ps, const std::vector<Rational>& table) {
  json out = json::object();
  for (LinkMask m = 0; m < table.size(); ++m) {
    out[network_key(Network{ps.n(), m})] = rational_str(table[m]);
  }
  return out;
}

json network_potential_json(PlayerSet ps, const NetworkPotentialResult& r) {
  json out;
  out["exists"] = r.exists();
  if (r.table) out["table"] = potential_table_json(ps, *r.table);
  if (r.failure) {
    json f;
    f["kind"] = r.failure->kind;
    f["detail"] = r.failure->detail;
    if (r.failure->link_index >= 0) {
      f["network"] = network_key(r.failure->g);
      Link l = ps.link_at(r.failure->link_index);
      f["link"] = std::to_string(l.i) + std::to_string(l.j);
      if (r.failure->player) f["player"] = r.failure->player;
    }
    if (!r.failure->cycle.empty()) {
      json cyc = json::array();
      for (Network g : r.failure->cycle) cyc.push_back(network_key(g));
      f["cycle"] = cyc;
    }
    out["witness"] = f;
  }
  return out;
}

}  // namespace

extern "C" {

const char* ns_status_name(ns_status status) {
  switch (status) {
    case NS_OK: return "ok";
    case NS_VERDICT_VIOLATED: return "violated";
    case NS_ERR_PARSE: return "parse-error";
    case NS_ERR_PRECONDITION: return "precondition-error";
    case NS_ERR_CAPACITY: return "capacity-error";
    case NS_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case NS_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

void ns_string_free(char* text) { delete[] text; }

ns_status ns_model_parse(const char* json_text, int max_players,
                         ns_model** out_model, char** out_error) {
  if (!json_text || !out_model) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    int cap = max_players > 0 ? max_players : kDefaultMaxPlayers;
    *out_model = new ns_model{parse_model(json_text, cap)};
    return NS_OK;
  });
}

ns_status ns_model_trade(int players, const char* cost, const char* precision,
                         ns_model** out_model, char** out_error) {
  if (!cost || !out_model) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    PlayerSet ps(players);
    Rational c = parse_rational(cost);
    mpz_class prec = kDefaultTradePrecision;
    if (precision) prec = mpz_class(std::string(precision));
    PayoffFn phi = trade_payoffs(ps, c, prec).materialise();
    *out_model = new ns_model{
        Model{ps, std::move(phi), std::nullopt, std::nullopt, {}}};
    return NS_OK;
  });
}

void ns_model_free(ns_model* model) { delete model; }

int ns_model_players(const ns_model* model) {
  return model ? model->model.ps.n() : 0;
}

ns_status ns_model_emit(const ns_model* model, char** out_json) {
  if (!model || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(nullptr, [&] {
    *out_json = dup_string(emit_model(model->model));
    return NS_OK;
  });
}

ns_status ns_classify(const ns_model* model, const char* concepts_csv,
                      int jobs, int as_text, char** out_result,
                      char** out_error) {
  if (!model || !out_result) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    std::vector<std::string> concepts = split_csv(concepts_csv);
    if (concepts.empty()) concepts = default_concepts(model->model);
    ClassifyReport report = classify(model->model, concepts, jobs);
    *out_result = dup_string(as_text ? classify_to_text(report)
                                     : classify_to_json(report).dump(2));
    return NS_OK;
  });
}

ns_status ns_verify(const ns_model* model, const char* theorem_id,
                    char** out_json, char** out_error) {
  if (!model || !theorem_id || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    VerifyReport report = verify_theorem(model->model, theorem_id);
    *out_json = dup_string(report.to_json().dump(2));
    return report.ok() ? NS_OK : NS_VERDICT_VIOLATED;
  });
}

ns_status ns_verify_random(const char* theorem_id, int instances, int players,
                           uint64_t seed, char** out_json, char** out_error) {
  if (!theorem_id || !out_json || instances < 1) {
    return NS_ERR_INVALID_ARGUMENT;
  }
  return guarded(out_error, [&] {
    VerifyReport report =
        verify_theorem_random(theorem_id, instances, players, seed);
    *out_json = dup_string(report.to_json().dump(2));
    return report.ok() ? NS_OK : NS_VERDICT_VIOLATED;
  });
}

ns_status ns_equilibria(const ns_model* model, const char* variant,
                        char** out_json, char** out_error) {
  if (!model || !variant || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    const Model& m = model->model;
    std::string kind = variant;
    json out;
    out["variant"] = kind;
    if (kind == "myerson") {
      auto nets = m_networks(m.phi, EquilibriumMethod::kCharacterisation);
      out["m_networks"] = networks_to_json(nets);
      json profiles = json::object();
      for (Network g : nets) {
        profiles[network_key(g)] =
            signal_rows_json(non_superfluous_profile(m.ps, g));
      }
      out["supporting_profiles"] = profiles;
      if (m.ps.n() <= kMaxProfileEnumerationPlayers) {
        out["pairwise_nash"] = networks_to_json(pairwise_nash_networks(m.phi));
        out["bilateral"] = networks_to_json(bilateral_stable_networks(m.phi));
      }
    } else if (kind == "two-sided") {
      CostMatrix c = m.two_sided_or_zero();
      auto nets =
          nash_networks_two_sided(m.phi, c, EquilibriumMethod::kCharacterisation);
      out["supported"] = networks_to_json(nets);
      json profiles = json::object();
      for (Network g : nets) {
        profiles[network_key(g)] =
            signal_rows_json(non_superfluous_profile(m.ps, g));
      }
      out["supporting_profiles"] = profiles;
    } else if (kind == "one-sided") {
      CostMatrix gamma = m.one_sided_or_zero();
      auto nets = nash_networks_one_sided(m.phi, gamma,
                                          EquilibriumMethod::kCharacterisation);
      out["supported"] = networks_to_json(nets);
      json profiles = json::object();
      for (Network g : nets) {
        json list = json::array();
        for (const DyadProfile& d : non_superfluous_profiles(m.ps, g)) {
          if (is_one_sided_nash(m.phi, gamma, d)) list.push_back(dyad_json(d));
        }
        profiles[network_key(g)] = list;
      }
      out["equilibrium_profiles"] = profiles;
    } else {
      throw precondition_error("unknown variant '" + kind + "'");
    }
    *out_json = dup_string(out.dump(2));
    return NS_OK;
  });
}

ns_status ns_potentials(const ns_model* model, char** out_json,
                        char** out_error) {
  if (!model || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    const Model& m = model->model;
    json out;
    out["network_exact"] =
        network_potential_json(m.ps, exact_network_potential(m.phi));
    out["network_ordinal"] =
        network_potential_json(m.ps, ordinal_network_potential(m.phi));
    out["myerson_exact"]["exists"] =
        exact_game_potential(myerson_game(m.phi)).exists();
    out["myerson_ordinal"]["exists"] =
        ordinal_game_potential(myerson_game(m.phi)).exists();
    CostMatrix c = m.two_sided_or_zero();
    out["two_sided_ordinal"]["exists"] =
        ordinal_game_potential(two_sided_game(m.phi, c)).exists();
    VerifyReport existence = verify_potentials_existence(m.phi, c);
    out["existence"] = existence.to_json();
    *out_json = dup_string(out.dump(2));
    return existence.ok() ? NS_OK : NS_VERDICT_VIOLATED;
  });
}

ns_status ns_correlated_model(const ns_model* model, const char* device_json,
                              char** out_json, char** out_error) {
  if (!model || !device_json || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    FiniteGame game = myerson_game(model->model.phi);
    CorrelationDevice device =
        parse_device_signal_profiles(model->model, device_json);
    validate_device(device, game);
    *out_json = dup_string(correlated_report(game, device).dump(2));
    return NS_OK;
  });
}

ns_status ns_correlated_game(const char* game_json, const char* device_json,
                             char** out_json, char** out_error) {
  if (!game_json || !device_json || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    FiniteGame game = parse_game(game_json);
    CorrelationDevice device = parse_device_for_game(game, device_json);
    validate_device(device, game);
    *out_json = dup_string(correlated_report(game, device).dump(2));
    return NS_OK;
  });
}

ns_status ns_export_dot(const ns_model* model, const char* concepts_csv,
                        char** out_json, char** out_error) {
  if (!model || !out_json) return NS_ERR_INVALID_ARGUMENT;
  return guarded(out_error, [&] {
    std::vector<std::string> concepts = split_csv(concepts_csv);
    if (concepts.empty()) concepts = default_concepts(model->model);
    ClassifyReport report = classify(model->model, concepts, 1);
    json out;
    json files = json::array();
    for (const DotFile& f : export_dot(report)) {
      json jf;
      jf["name"] = f.name;
      jf["content"] = f.content;
      files.push_back(jf);
    }
    out["files"] = files;
    *out_json = dup_string(out.dump(2));
    return NS_OK;
  });
}

}  // extern "C"
