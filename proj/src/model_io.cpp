#include "model_io.hpp"

#include <map>
#include <memory>

#include "errors.hpp"

namespace netstab {

using nlohmann::json;
using nlohmann::ordered_json;

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) {
    return Rational(static_cast<long>(v.get<long long>()));
  }
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    throw parse_error("decimal numbers are not accepted; use \"p/q\"");
  }
  throw parse_error("expected a rational (integer or \"p/q\" string)");
}

json rational_to_json(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
    return json(c.get_num().get_si());
  }
  return json(rational_str(c));
}

namespace {

CostMatrix cost_matrix_from_json(PlayerSet ps, const json& rows) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != ps.n()) {
    throw parse_error("cost matrix must be an n x n array");
  }
  std::vector<Rational> entries;
  entries.reserve(ps.n() * ps.n());
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != ps.n()) {
      throw parse_error("cost matrix must be an n x n array");
    }
    for (const auto& cell : row) entries.push_back(rational_from_json(cell));
  }
  try {
    return CostMatrix(ps, std::move(entries));
  } catch (const precondition_error& e) {
    throw parse_error(e.what());
  }
}

json cost_matrix_to_json(const CostMatrix& c) {
  json rows = json::array();
  for (int i = 1; i <= c.players().n(); ++i) {
    json row = json::array();
    for (int j = 1; j <= c.players().n(); ++j) {
      row.push_back(rational_to_json(c.at(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Model parse_model_json(const json& doc, int max_players) {
  if (!doc.is_object()) throw parse_error("model file must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw parse_error("model file needs an integer \"n\"");
  }
  int n = doc["n"].get<int>();
  if (n < 2 || n > kAbsoluteMaxPlayers) {
    throw parse_error("n must be in [2, " +
                      std::to_string(kAbsoluteMaxPlayers) + "]");
  }
  if (n > max_players) {
    throw parse_error("n=" + std::to_string(n) +
                      " exceeds the configured player cap " +
                      std::to_string(max_players) +
                      " (raise it with --max-n)");
  }
  PlayerSet ps(n);

  PayoffFn::Table table;
  if (doc.contains("payoffs")) {
    const json& payoffs = doc["payoffs"];
    if (!payoffs.is_object()) throw parse_error("\"payoffs\" must be an object");
    for (auto it = payoffs.begin(); it != payoffs.end(); ++it) {
      Network g = network_from_key(ps, it.key());
      const json& vec = it.value();
      if (!vec.is_array() || static_cast<int>(vec.size()) != n) {
        throw parse_error("payoff vector for \"" + it.key() +
                          "\" must have n entries");
      }
      std::vector<Rational> values;
      values.reserve(n);
      for (const auto& cell : vec) values.push_back(rational_from_json(cell));
      if (!table.emplace(g.bits, std::move(values)).second) {
        throw parse_error("duplicate network key \"" + it.key() + "\"");
      }
    }
  }

  Model model{ps, PayoffFn::table(ps, std::move(table)), std::nullopt,
              std::nullopt, {}};
  if (doc.contains("costs_two_sided")) {
    model.costs_two_sided = cost_matrix_from_json(ps, doc["costs_two_sided"]);
  }
  if (doc.contains("costs_one_sided")) {
    model.costs_one_sided = cost_matrix_from_json(ps, doc["costs_one_sided"]);
  }
  if (doc.contains("expected")) {
    const json& expected = doc["expected"];
    if (!expected.is_object()) {
      throw parse_error("\"expected\" must be an object");
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!it.value().is_array()) {
        throw parse_error("expected set for \"" + it.key() +
                          "\" must be an array of network keys");
      }
      std::vector<std::string> keys;
      for (const auto& k : it.value()) {
        if (!k.is_string()) throw parse_error("network keys must be strings");
        // Round-trip through the parser to validate and canonicalise.
        keys.push_back(network_key(network_from_key(ps, k.get<std::string>())));
      }
      model.expected[it.key()] = std::move(keys);
    }
  }
  return model;
}

Model parse_model(const std::string& text, int max_players) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_model_json(doc, max_players);
}

ordered_json model_to_json(const Model& model) {
  ordered_json doc;
  doc["n"] = model.ps.n();
  ordered_json payoffs = ordered_json::object();
  const PayoffFn fn = model.phi.is_table()
                          ? model.phi
                          : model.phi.materialise();
  for (const auto& [mask, vec] : fn.entries()) {
    ordered_json arr = ordered_json::array();
    for (const Rational& v : vec) {
      ordered_json cell = rational_to_json(v);
      arr.push_back(std::move(cell));
    }
    payoffs[network_key(Network{model.ps.n(), mask})] = arr;
  }
  doc["payoffs"] = payoffs;
  if (model.costs_two_sided) {
    doc["costs_two_sided"] = cost_matrix_to_json(*model.costs_two_sided);
  }
  if (model.costs_one_sided) {
    doc["costs_one_sided"] = cost_matrix_to_json(*model.costs_one_sided);
  }
  if (!model.expected.empty()) {
    ordered_json expected = ordered_json::object();
    for (const auto& [name, keys] : model.expected) {
      expected[name] = keys;
    }
    doc["expected"] = expected;
  }
  return doc;
}

std::string emit_model(const Model& model) { return model_to_json(model).dump(2); }

FiniteGame parse_game(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("strategy_counts")) {
    throw parse_error("game file needs \"strategy_counts\"");
  }
  std::vector<int> counts;
  for (const auto& c : doc["strategy_counts"]) {
    if (!c.is_number_integer() || c.get<int>() < 1) {
      throw parse_error("strategy counts must be positive integers");
    }
    counts.push_back(c.get<int>());
  }
  if (counts.empty() || counts.size() > 8) {
    throw parse_error("game must have between 1 and 8 players");
  }

  std::vector<std::vector<std::string>> labels;
  if (doc.contains("labels")) {
    for (const auto& row : doc["labels"]) {
      labels.emplace_back();
      for (const auto& l : row) labels.back().push_back(l.get<std::string>());
    }
  }

  // Payoff table keyed by comma-separated strategy indices.
  auto table = std::make_shared<std::map<Profile, std::vector<Rational>>>();
  if (doc.contains("payoffs")) {
    if (!doc["payoffs"].is_object()) {
      throw parse_error("game \"payoffs\" must be an object");
    }
    for (auto it = doc["payoffs"].begin(); it != doc["payoffs"].end(); ++it) {
      Profile p;
      std::string tok;
      for (char ch : it.key() + std::string(",")) {
        if (ch == ',') {
          if (tok.empty()) throw parse_error("bad profile key");
          p.push_back(std::stoi(tok));
          tok.clear();
        } else {
          tok += ch;
        }
      }
      if (p.size() != counts.size()) {
        throw parse_error("profile key length mismatch in \"" + it.key() +
                          "\"");
      }
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= counts[i]) {
          throw parse_error("strategy index out of range in \"" + it.key() +
                            "\"");
        }
      }
      std::vector<Rational> values;
      for (const auto& cell : it.value()) {
        values.push_back(rational_from_json(cell));
      }
      if (values.size() != counts.size()) {
        throw parse_error("payoff vector length mismatch in \"" + it.key() +
                          "\"");
      }
      (*table)[p] = std::move(values);
    }
  }

  FiniteGame::Oracle oracle = [table](const Profile& a, int player) {
    auto it = table->find(a);
    if (it == table->end()) return Rational(0);
    return it->second[player - 1];
  };
  return FiniteGame(std::move(counts), std::move(oracle), std::move(labels));
}

}  // namespace netstab
