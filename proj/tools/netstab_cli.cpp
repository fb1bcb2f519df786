// Command-line front end. Talks to the library exclusively through the
// public C interface; file handling and presentation live here.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netstab/netstab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Owns strings handed out by the library.
struct ApiString {
  char* value = nullptr;
  ~ApiString() { ns_string_free(value); }
  std::string str() const { return value ? value : ""; }
};

struct ModelHandle {
  ns_model* model = nullptr;
  ~ModelHandle() { ns_model_free(model); }
};

int fail_with(ns_status status, const ApiString& error) {
  std::cerr << "error (" << ns_status_name(status) << ")";
  if (error.value) std::cerr << ": " << error.value;
  std::cerr << "\n";
  return kExitInputError;
}

int load_model(const std::string& path, int max_n, ModelHandle& handle) {
  if (max_n > 6) {
    std::cerr << "warning: --max-n " << max_n
              << " enables enumerations over 2^" << max_n * (max_n - 1) / 2
              << " networks; expect heavy memory and runtime\n";
  }
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  ApiString error;
  ns_status status =
      ns_model_parse(text.c_str(), max_n, &handle.model, &error.value);
  if (status != NS_OK) return fail_with(status, error);
  return kExitOk;
}

void print_verify_text(const nlohmann::json& report) {
  std::cout << report["theorem"].get<std::string>() << ": "
            << report["verdict"].get<std::string>() << "\n";
  for (const auto& check : report["checks"]) {
    std::cout << "  [" << (check["ok"].get<bool>() ? "ok" : "FAIL") << "] "
              << check["name"].get<std::string>() << "\n";
    if (!check["ok"].get<bool>() && check.contains("details")) {
      std::cout << "        " << check["details"].dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability analysis for consent-based network formation"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  int max_n = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--max-n", max_n,
                 "raise the player cap for model files (memory grows as "
                 "2^(n(n-1)/2))");
  app.add_option("--jobs", jobs, "worker threads for classification");
  app.add_option("--seed", seed, "seed for randomized verification");

  // classify
  auto* cmd_classify = app.add_subcommand("classify",
                                          "stability flags per network");
  std::string classify_model, classify_concepts;
  cmd_classify->add_option("model", classify_model, "model JSON file")
      ->required();
  cmd_classify->add_option("--concepts", classify_concepts,
                           "comma-separated concept list");

  // verify
  auto* cmd_verify = app.add_subcommand(
      "verify", "check an equivalence/inclusion theorem (exit 0/1/2)");
  std::string verify_model, verify_theorem;
  int verify_random = 0;
  int verify_n = 3;
  cmd_verify->add_option("model", verify_model, "model JSON file");
  cmd_verify->add_option("--theorem", verify_theorem, "theorem id")
      ->required();
  cmd_verify->add_option("--random", verify_random,
                         "verify this many random instances instead of a "
                         "model file");
  cmd_verify->add_option("--n", verify_n, "players for random instances");

  // equilibria
  auto* cmd_eq = app.add_subcommand("equilibria",
                                    "supported networks of a consent model");
  std::string eq_model, eq_variant = "myerson";
  cmd_eq->add_option("model", eq_model, "model JSON file")->required();
  cmd_eq->add_option("--variant", eq_variant,
                     "myerson, two-sided or one-sided")
      ->check(CLI::IsMember({"myerson", "two-sided", "one-sided"}));

  // potentials
  auto* cmd_pot = app.add_subcommand(
      "potentials", "exact/ordinal potential detection and existence claims");
  std::string pot_model;
  cmd_pot->add_option("model", pot_model, "model JSON file")->required();

  // correlated
  auto* cmd_corr = app.add_subcommand(
      "correlated", "expected payoffs and self-enforcement of a device");
  std::string corr_model, corr_game, corr_device;
  cmd_corr->add_option("--model", corr_model,
                       "model JSON file (device over its Myerson game)");
  cmd_corr->add_option("--game", corr_game, "strategic-form game JSON file");
  cmd_corr->add_option("--device", corr_device, "device JSON file")
      ->required();

  // generate-trade
  auto* cmd_trade = app.add_subcommand("generate-trade",
                                       "write a trade-model payoff table");
  int trade_n = 3;
  std::string trade_cost = "13/25", trade_precision, trade_out;
  cmd_trade->add_option("--n", trade_n, "players")->required();
  cmd_trade->add_option("--c", trade_cost, "uniform link cost (rational)")
      ->required();
  cmd_trade->add_option("--precision", trade_precision,
                        "denominator bound for rounding the surd terms");
  cmd_trade->add_option("-o,--out", trade_out, "output file (default stdout)");

  // export-dot
  auto* cmd_dot = app.add_subcommand("export-dot",
                                     "write one DOT file per network");
  std::string dot_model, dot_dir = ".", dot_concepts;
  cmd_dot->add_option("model", dot_model, "model JSON file")->required();
  cmd_dot->add_option("--out", dot_dir, "output directory");
  cmd_dot->add_option("--concepts", dot_concepts,
                      "concepts for the graph labels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_classify->parsed()) {
      ModelHandle handle;
      if (int rc = load_model(classify_model, max_n, handle)) return rc;
      ApiString result, error;
      ns_status status = ns_classify(
          handle.model,
          classify_concepts.empty() ? nullptr : classify_concepts.c_str(),
          jobs, format == "table" ? 1 : 0, &result.value, &error.value);
      if (status != NS_OK) return fail_with(status, error);
      std::cout << result.str();
      if (format == "json") std::cout << "\n";
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      ApiString result, error;
      ns_status status;
      if (verify_random > 0) {
        status = ns_verify_random(verify_theorem.c_str(), verify_random,
                                  verify_n, seed, &result.value, &error.value);
      } else {
        if (verify_model.empty()) {
          std::cerr << "error: verify needs a model file or --random\n";
          return kExitInputError;
        }
        ModelHandle handle;
        if (int rc = load_model(verify_model, max_n, handle)) return rc;
        status = ns_verify(handle.model, verify_theorem.c_str(), &result.value,
                           &error.value);
      }
      if (status != NS_OK && status != NS_VERDICT_VIOLATED) {
        return fail_with(status, error);
      }
      if (format == "json") {
        std::cout << result.str() << "\n";
      } else {
        print_verify_text(nlohmann::json::parse(result.str()));
      }
      return status == NS_OK ? kExitOk : kExitViolated;
    }

    if (cmd_eq->parsed()) {
      ModelHandle handle;
      if (int rc = load_model(eq_model, max_n, handle)) return rc;
      ApiString result, error;
      ns_status status = ns_equilibria(handle.model, eq_variant.c_str(),
                                       &result.value, &error.value);
      if (status != NS_OK) return fail_with(status, error);
      std::cout << result.str() << "\n";
      return kExitOk;
    }

    if (cmd_pot->parsed()) {
      ModelHandle handle;
      if (int rc = load_model(pot_model, max_n, handle)) return rc;
      ApiString result, error;
      ns_status status =
          ns_potentials(handle.model, &result.value, &error.value);
      if (status != NS_OK && status != NS_VERDICT_VIOLATED) {
        return fail_with(status, error);
      }
      std::cout << result.str() << "\n";
      return status == NS_OK ? kExitOk : kExitViolated;
    }

    if (cmd_corr->parsed()) {
      if (corr_model.empty() == corr_game.empty()) {
        std::cerr << "error: pass exactly one of --model or --game\n";
        return kExitInputError;
      }
      std::string device_text = read_file(corr_device);
      ApiString result, error;
      ns_status status;
      if (!corr_model.empty()) {
        ModelHandle handle;
        if (int rc = load_model(corr_model, max_n, handle)) return rc;
        status = ns_correlated_model(handle.model, device_text.c_str(),
                                     &result.value, &error.value);
      } else {
        std::string game_text = read_file(corr_game);
        status = ns_correlated_game(game_text.c_str(), device_text.c_str(),
                                    &result.value, &error.value);
      }
      if (status != NS_OK) return fail_with(status, error);
      std::cout << result.str() << "\n";
      return kExitOk;
    }

    if (cmd_trade->parsed()) {
      ModelHandle handle;
      ApiString error;
      ns_status status = ns_model_trade(
          trade_n, trade_cost.c_str(),
          trade_precision.empty() ? nullptr : trade_precision.c_str(),
          &handle.model, &error.value);
      if (status != NS_OK) return fail_with(status, error);
      ApiString text;
      status = ns_model_emit(handle.model, &text.value);
      if (status != NS_OK) return fail_with(status, error);
      if (trade_out.empty()) {
        std::cout << text.str() << "\n";
      } else {
        std::ofstream out(trade_out);
        if (!out) {
          std::cerr << "error: cannot write '" << trade_out << "'\n";
          return kExitInputError;
        }
        out << text.str() << "\n";
      }
      return kExitOk;
    }

    if (cmd_dot->parsed()) {
      ModelHandle handle;
      if (int rc = load_model(dot_model, max_n, handle)) return rc;
      ApiString result, error;
      ns_status status = ns_export_dot(
          handle.model, dot_concepts.empty() ? nullptr : dot_concepts.c_str(),
          &result.value, &error.value);
      if (status != NS_OK) return fail_with(status, error);
      nlohmann::json doc = nlohmann::json::parse(result.str());
      std::filesystem::create_directories(dot_dir);
      for (const auto& file : doc["files"]) {
        std::filesystem::path path =
            std::filesystem::path(dot_dir) / file["name"].get<std::string>();
        std::ofstream out(path);
        out << file["content"].get<std::string>();
        std::cout << path.string() << "\n";
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
