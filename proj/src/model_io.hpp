#ifndef NETSTAB_MODEL_IO_HPP
#define NETSTAB_MODEL_IO_HPP

#include <string>

#include <json.hpp>

#include "game.hpp"
#include "payoff.hpp"

namespace netstab {

// Model file schema:
//   {
//     "n": 3,
//     "payoffs": { "": [0,0,0], "12": [0,0,1], "12,13": ["1/2",0,0] },
//     "costs_two_sided": [[0,1,1],[1,0,1],[1,1,0]],
//     "costs_one_sided":  [[...], ...],
//     "expected": { "ps": ["", "12"], ... }
//   }
// Network keys are comma-separated sorted link lists ("" is the empty
// network); unlisted networks pay the zero vector. A rational is a JSON
// integer or a string "p/q" — decimals are rejected to keep arithmetic exact.
Model parse_model(const std::string& text, int max_players = kDefaultMaxPlayers);
Model parse_model_json(const nlohmann::json& doc, int max_players = kDefaultMaxPlayers);

nlohmann::ordered_json model_to_json(const Model& model);
std::string emit_model(const Model& model);

// Rational <-> JSON helpers shared by the report writers.
Rational rational_from_json(const nlohmann::json& v);
nlohmann::json rational_to_json(const Rational& r);

// Strategic-form game file schema:
//   { "strategy_counts": [2,2],
//     "labels": [["S","C"],["S","C"]],          // optional
//     "payoffs": { "0,1": [2,7], ... } }        // profile key: indices
// Missing profiles pay zero to everyone.
FiniteGame parse_game(const std::string& text);

}  // namespace netstab

#endif
