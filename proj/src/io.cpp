// Copyright 2026 The netform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netform/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace netform::io {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& require(const Json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(where) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

double number(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_number()) {
    throw ParseError(std::string(where) + ": field \"" + key + "\" must be a number");
  }
  return v.get<double>();
}

std::size_t count(const Json& j, const char* key, const char* where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(where) + ": field \"" + key +
                     "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

AgentParams agent_from_json(const Json& j, const char* where) {
  AgentParams p;
  p.beta = number(j, "beta", where);
  p.s = number(j, "s", where);
  p.d = number(j, "d", where);
  p.b = number(j, "b", where);
  return p;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is one past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    if (colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError(source + ": " + line_column(text, at) + ": " + what);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), path);
}

NamedNetwork network_from_json(const Json& j) {
  constexpr const char* where = "network";
  const std::size_t n = count(j, "n", where);
  const Json& edges = require(j, "edges", where);
  if (!edges.is_array()) throw ParseError("network: \"edges\" must be an array");
  NamedNetwork out{Network(n), {}};
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("network: each edge must be a pair of agent indices");
    }
    const auto a = e[0].get<long long>();
    const auto b = e[1].get<long long>();
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n) {
      throw ParseError("network: edge [" + std::to_string(a) + "," +
                       std::to_string(b) + "] is out of range");
    }
    if (a == b) throw ParseError("network: self-loop on agent " + std::to_string(a));
    if (out.network.has_edge(a, b)) {
      throw ParseError("network: duplicate edge [" + std::to_string(a) + "," +
                       std::to_string(b) + "]");
    }
    out.network.add_edge(a, b);
  }
  if (j.contains("names")) {
    const Json& names = j.at("names");
    if (!names.is_array() || names.size() != n) {
      throw ParseError("network: \"names\" must list one name per agent");
    }
    for (const Json& name : names) {
      if (!name.is_string()) throw ParseError("network: names must be strings");
      out.names.push_back(name.get<std::string>());
    }
  }
  return out;
}

Json to_json(const Network& net, const std::vector<std::string>& names) {
  Json j;
  j["n"] = net.size();
  Json edges = Json::array();
  for (const Edge& e : net.edges()) edges.push_back({e.i, e.j});
  j["edges"] = std::move(edges);
  if (!names.empty()) j["names"] = names;
  return j;
}

GameConfig config_from_json(const Json& j) {
  constexpr const char* where = "config";
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  GameConfig cfg;
  const Json& fw = require(j, "framework", where);
  if (!fw.is_string()) throw ParseError("config: \"framework\" must be \"MO\" or \"SO\"");
  try {
    cfg.framework = parse_framework(fw.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  cfg.lambda = number(j, "lambda", where);
  cfg.c = number(j, "c", where);
  const bool has_agents = j.contains("agents");
  const bool has_symmetric = j.contains("symmetric");
  if (has_agents == has_symmetric) {
    throw ParseError("config: give exactly one of \"agents\" or \"symmetric\"");
  }
  if (has_agents) {
    const Json& agents = j.at("agents");
    if (!agents.is_array()) throw ParseError("config: \"agents\" must be an array");
    for (const Json& a : agents) cfg.agents.push_back(agent_from_json(a, "agent"));
  } else {
    const Json& sym = j.at("symmetric");
    const AgentParams p = agent_from_json(sym, "symmetric");
    cfg.agents.assign(count(sym, "n", "symmetric"), p);
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  return cfg;
}

Json to_json(const GameConfig& cfg) {
  Json j;
  j["framework"] = std::string(to_string(cfg.framework));
  j["lambda"] = cfg.lambda;
  j["c"] = cfg.c;
  Json agents = Json::array();
  for (const auto& a : cfg.agents) {
    agents.push_back({{"beta", a.beta}, {"s", a.s}, {"d", a.d}, {"b", a.b}});
  }
  j["agents"] = std::move(agents);
  return j;
}

Json to_json(const StabilityReport& report) {
  Json j;
  j["stable"] = report.stable;
  j["mode"] = std::string(to_string(report.mode));
  Json violations = Json::array();
  for (const Deviation& d : report.violations) {
    violations.push_back({{"kind", std::string(to_string(d.kind))},
                          {"pair", {d.pair.i, d.pair.j}},
                          {"gain_i", d.gain_i},
                          {"gain_j", d.gain_j}});
  }
  j["violations"] = std::move(violations);
  if (!report.overdrawn_agents.empty()) {
    j["warnings"] = Json::array();
    for (AgentIndex i : report.overdrawn_agents) {
      j["warnings"].push_back("agent " + std::to_string(i) +
                              " already exceeds its storage or budget");
    }
  }
  return j;
}

Json to_json(const StabilityPointReport& report) {
  Json j;
  j["eta_hat"] = report.eta_hat;
  j["achievable"] = report.achievable();
  j["lower_L"] = report.lower_L;
  j["upper_U"] = report.upper_U;
  j["binding"] = std::string(to_string(report.binding));
  j["boundary_tie"] = report.boundary_tie;
  j["capped_by_population"] = report.capped_by_population;
  j["population"] = report.population;
  return j;
}

Json to_json(const DegreeSequence& seq) { return seq.values; }

Json to_json(const WelfareReport& report) {
  Json j;
  j["welfare"] = report.welfare;
  j["max_welfare"] = report.max_welfare;
  j["efficient"] = report.efficient;
  j["contented"] = report.contented;
  j["per_agent_gap"] = report.per_agent_gap;
  Json profiles = Json::array();
  for (const auto& p : report.optimal_degree_profiles) profiles.push_back(to_json(p));
  j["optimal_degree_profiles"] = std::move(profiles);
  j["brute_force"] = report.brute_force;
  return j;
}

Json to_json(const PerturbationPlan& plan) {
  Json j;
  Json dummies = Json::array();
  for (const auto& d : plan.dummies) {
    Json entry;
    entry["capacity"] = d.capacity ? Json(*d.capacity) : Json(nullptr);
    entry["links"] = d.links;
    dummies.push_back(std::move(entry));
  }
  j["dummies"] = std::move(dummies);
  if (!plan.unresolved.empty()) j["unresolved"] = plan.unresolved;
  return j;
}

Json to_json(const EnumerationSummary& s) {
  auto seqs = [](const std::set<DegreeSequence>& set) {
    Json out = Json::array();
    for (const auto& seq : set) out.push_back(to_json(seq));
    return out;
  };
  Json j;
  j["n"] = s.n;
  j["total_graphs"] = s.total_graphs;
  j["feasible_graphs"] = s.feasible_graphs;
  j["stable_count"] = s.stable_count;
  j["stable_degree_sequences"] = seqs(s.stable_degree_sequences);
  j["max_welfare"] = s.max_welfare;
  j["efficient_count"] = s.efficient_count;
  j["efficient_degree_sequences"] = seqs(s.efficient_degree_sequences);
  j["contented_count"] = s.contented_count;
  j["efficient_but_unstable"] = s.efficient_but_unstable;
  j["contented_but_inefficient"] = s.contented_but_inefficient;
  j["pairwise_stable_count"] = s.pairwise_stable_count;
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["all_passed"] = report.all_passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"result", c.result},
                      {"config", c.config},
                      {"passed", c.passed},
                      {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  return j;
}

std::vector<GridEntry> grid_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("grid: expected a JSON array of configs");
  std::vector<GridEntry> grid;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string label = "config " + std::to_string(k);
    if (j[k].is_object() && j[k].contains("label") && j[k]["label"].is_string()) {
      label = j[k]["label"].get<std::string>();
    }
    grid.push_back({label, config_from_json(j[k])});
  }
  return grid;
}

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace) {
  out << kTraceHeader << '\n';
  std::ostringstream row;
  row << std::setprecision(17);
  for (const TraceStep& s : trace.steps) {
    row.str("");
    row << s.round << ',' << to_string(s.kind) << ',' << s.pair.i << ',' << s.pair.j
        << ',' << (s.accepted ? "true" : "false") << ',' << s.gain_i << ','
        << s.gain_j << ',' << (s.feasible_i ? "true" : "false") << ','
        << (s.feasible_j ? "true" : "false");
    out << row.str() << '\n';
  }
}

void write_dot(std::ostream& out, const Network& net,
               const std::vector<std::string>& names) {
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + '"';
  };
  out << "graph netform {\n";
  for (AgentIndex i = 0; i < net.size(); ++i) {
    out << "  " << i;
    if (i < names.size()) out << " [label=" << quoted(names[i]) << "]";
    out << ";\n";
  }
  for (const Edge& e : net.edges()) out << "  " << e.i << " -- " << e.j << ";\n";
  out << "}\n";
}

}  // namespace netform::io
