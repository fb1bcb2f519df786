#include "report.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "consent.hpp"
#include "errors.hpp"
#include "stability.hpp"
#include "trust.hpp"

namespace netstab {

bool concept_needs_costs(const std::string& token) {
  return token == "weak-monadic" || token == "monadic";
}

namespace {

int order_of(const std::string& token) {
  if (token.rfind("order-", 0) != 0) return 0;
  return std::stoi(token.substr(6));
}

}  // namespace

bool concept_value(const Model& model, const std::string& token, Network g) {
  const PayoffFn& phi = model.phi;
  if (token == "ldp") return is_ldp(phi, g);
  if (token == "sldp" || token == "m-network") return is_sldp(phi, g);
  if (token == "lap") return is_lap(phi, g);
  if (token == "star-lap") return is_star_lap(phi, g);
  if (token == "slap") return is_slap(phi, g);
  if (token == "ps") return is_pairwise_stable(phi, g);
  if (token == "sps") return is_strongly_ps(phi, g);
  if (token == "sps-strict") return is_strictly_ps(phi, g);
  if (token == "strongly-stable") return is_strongly_stable(phi, g);
  if (token == "strongly-stable-dm") {
    return is_strongly_stable(phi, g, StrongStabilityMode::kDuttaMutuswami);
  }
  if (token == "bilateral") {
    auto set = bilateral_stable_networks(phi);
    return std::find(set.begin(), set.end(), g) != set.end();
  }
  if (token == "pairwise-nash") {
    auto set = pairwise_nash_networks(phi);
    return std::find(set.begin(), set.end(), g) != set.end();
  }
  if (token == "unilateral") return is_unilaterally_stable(phi, g);
  if (token == "weak-monadic") {
    return is_weak_monadic(phi, model.two_sided_or_zero(), g);
  }
  if (token == "monadic") {
    return is_monadic(phi, model.two_sided_or_zero(), g);
  }
  if (int r = order_of(token); r > 0) return stability_of_order(phi, g, r);
  throw precondition_error("unknown concept '" + token + "'");
}

std::vector<Network> concept_set(const Model& model, const std::string& token) {
  // Set-valued concepts are computed once, not per network.
  if (token == "bilateral") return bilateral_stable_networks(model.phi);
  if (token == "pairwise-nash") return pairwise_nash_networks(model.phi);
  if (token == "weak-monadic") {
    return weak_monadic_networks(model.phi, model.two_sided_or_zero());
  }
  if (token == "monadic") {
    return monadic_networks(model.phi, model.two_sided_or_zero());
  }
  std::vector<Network> out;
  for (Network g : all_networks(model.ps)) {
    if (concept_value(model, token, g)) out.push_back(g);
  }
  return out;
}

std::vector<std::string> default_concepts(const Model& model) {
  std::vector<std::string> out = {"ldp",  "sldp", "lap",        "star-lap",
                                  "slap", "ps",   "sps",        "sps-strict",
                                  "m-network", "unilateral"};
  if (model.ps.n() <= 4) {
    out.push_back("strongly-stable");
    out.push_back("bilateral");
    out.push_back("weak-monadic");
    out.push_back("monadic");
  }
  return out;
}

ClassifyReport classify(const Model& model,
                        const std::vector<std::string>& concepts, int jobs) {
  ClassifyReport report;
  report.n = model.ps.n();
  report.concepts = concepts;
  std::vector<Network> nets = all_networks(model.ps);
  report.rows.resize(nets.size());

  // Set-valued concepts (searches over profiles) are computed once up
  // front; per-network predicates fan out over the workers.
  std::vector<int> set_concept(concepts.size(), 0);
  std::vector<std::vector<Network>> sets(concepts.size());
  for (std::size_t c = 0; c < concepts.size(); ++c) {
    const std::string& token = concepts[c];
    if (token == "bilateral" || token == "pairwise-nash" ||
        token == "weak-monadic" || token == "monadic") {
      set_concept[c] = 1;
      sets[c] = concept_set(model, token);
    }
  }

  auto classify_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      Network g = nets[k];
      std::vector<bool> flags(concepts.size(), false);
      for (std::size_t c = 0; c < concepts.size(); ++c) {
        if (set_concept[c]) {
          flags[c] = std::find(sets[c].begin(), sets[c].end(), g) !=
                     sets[c].end();
        } else {
          flags[c] = concept_value(model, concepts[c], g);
        }
      }
      report.rows[k] = {g, std::move(flags)};
    }
  };

  int workers = std::max(1, jobs);
  if (workers == 1 || nets.size() < 32) {
    classify_range(0, nets.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (nets.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t lo = w * chunk;
      std::size_t hi = std::min(nets.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(classify_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  assert_implication_chains(report);
  return report;
}

void assert_implication_chains(const ClassifyReport& report) {
  auto index_of = [&](const std::string& token) {
    for (std::size_t c = 0; c < report.concepts.size(); ++c) {
      if (report.concepts[c] == token) return static_cast<int>(c);
    }
    return -1;
  };
  const std::pair<const char*, const char*> implications[] = {
      {"sldp", "ldp"},          {"slap", "star-lap"},
      {"star-lap", "lap"},      {"sps-strict", "sps"},
      {"sps", "ps"},            {"strongly-stable", "sps"},
      {"unilateral", "sps"},    {"monadic", "weak-monadic"},
      {"m-network", "ldp"},
  };
  for (const auto& row : report.rows) {
    for (auto [from, to] : implications) {
      int a = index_of(from);
      int b = index_of(to);
      if (a < 0 || b < 0) continue;
      if (row.second[a] && !row.second[b]) {
        throw std::logic_error(std::string("implication ") + from + " => " +
                               to + " violated at " +
                               network_label(row.first));
      }
    }
  }
}

nlohmann::ordered_json classify_to_json(const ClassifyReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["concepts"] = report.concepts;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [g, flags] : report.rows) {
    nlohmann::ordered_json row;
    row["network"] = network_key(g);
    row["mask"] = g.bits;
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < report.concepts.size(); ++c) {
      f[report.concepts[c]] = static_cast<bool>(flags[c]);
    }
    row["flags"] = f;
    rows.push_back(row);
  }
  doc["rows"] = rows;
  return doc;
}

std::string classify_to_text(const ClassifyReport& report) {
  std::size_t name_width = 8;
  for (const auto& [g, flags] : report.rows) {
    name_width = std::max(name_width, network_label(g).size());
  }
  auto padded = [](std::string s, std::size_t width) {
    s.append(width > s.size() ? width - s.size() : 0, ' ');
    return s;
  };
  std::string out = padded("network", name_width);
  for (const auto& c : report.concepts) out += " " + c;
  out += "\n";
  for (const auto& [g, flags] : report.rows) {
    out += padded(network_label(g), name_width);
    for (std::size_t c = 0; c < report.concepts.size(); ++c) {
      std::size_t w = report.concepts[c].size();
      std::size_t pad = (w - 1) / 2;
      out += " ";
      out.append(pad, ' ');
      out += flags[c] ? "x" : ".";
      out.append(w - pad - 1, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }
  return out;
}

nlohmann::json networks_to_json(const std::vector<Network>& nets) {
  nlohmann::json arr = nlohmann::json::array();
  for (Network g : nets) arr.push_back(network_key(g));
  return arr;
}

}  // namespace netstab
