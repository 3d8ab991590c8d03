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

#include "netform/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>

#include "netform/io.hpp"
#include "netform/structure.hpp"

namespace netform::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string network;
  std::string mode;
  std::string out;
  std::string dot;
  std::string trace;
  std::string from = "null";
  std::string grid;
  std::string format = "json";
  std::string kind;
  std::string odd = "below";
  std::uint64_t seed = 0;
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::optional<std::size_t> max_rounds;
  std::optional<double> capacity;
  bool theorem = false;
  bool dummies = false;
};

std::optional<double> epsilon_override() {
  const char* raw = std::getenv("NETFORM_EPSILON");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double eps = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(eps) || eps < 0.0) {
    throw UsageError(std::string("NETFORM_EPSILON must be a non-negative number, got '") +
                     raw + "'");
  }
  return eps;
}

GameConfig load_config(const Options& opt) {
  if (opt.config.empty()) throw UsageError("--config is required");
  GameConfig cfg = io::config_from_json(io::read_json_file(opt.config));
  if (opt.n && *opt.n != cfg.size()) {
    const bool uniform = std::all_of(cfg.agents.begin(), cfg.agents.end(),
                                     [&](const AgentParams& p) { return p == cfg.agents[0]; });
    if (!uniform) {
      throw UsageError("--n can only resize configs whose agents are identical");
    }
    cfg = cfg.with_size(*opt.n);
  }
  if (auto eps = epsilon_override()) cfg.epsilon = *eps;
  return cfg;
}

io::NamedNetwork load_network(const Options& opt, const GameConfig& cfg) {
  if (opt.network.empty()) throw UsageError("--network is required");
  io::NamedNetwork named = io::network_from_json(io::read_json_file(opt.network));
  if (named.network.size() != cfg.size()) {
    throw UsageError("network has " + std::to_string(named.network.size()) +
                     " agents but the config has " + std::to_string(cfg.size()));
  }
  return named;
}

StabilityMode mode_for(const Options& opt, const GameConfig& cfg) {
  if (opt.mode.empty()) return default_mode(cfg.framework);
  try {
    return parse_mode(opt.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError(path + ": cannot open for writing");
  file << text;
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
  } else {
    write_text(opt.out, text);
  }
}

void emit_json(const Options& opt, std::ostream& out, const Json& j) {
  emit(opt, out, j.dump(2) + "\n");
}

void emit_dot(const Options& opt, const Network& net,
              const std::vector<std::string>& names) {
  if (opt.dot.empty()) return;
  std::ostringstream dot;
  io::write_dot(dot, net, names);
  write_text(opt.dot, dot.str());
}

void cmd_analyze(const Options& opt, std::ostream& out) {
  const GameConfig cfg = load_config(opt);
  const io::NamedNetwork named = load_network(opt, cfg);
  const StabilityReport report =
      opt.theorem ? check_theorem_conditions(cfg, named.network)
                  : is_bilaterally_stable(cfg, named.network, mode_for(opt, cfg));
  Json j = io::to_json(report);
  j["class"] = std::string(to_string(classify(cfg)));
  emit_json(opt, out, j);
  emit_dot(opt, named.network, named.names);
}

std::string table_row(const GameConfig& cfg, const StabilityPointReport& r) {
  std::ostringstream row;
  row << std::left << std::setw(8) << to_string(classify(cfg)) << std::setw(4)
      << to_string(cfg.framework) << std::setw(9) << r.eta_hat << std::setw(12)
      << r.achievable() << std::setw(13) << to_string(r.binding)
      << std::setprecision(6) << std::setw(11) << r.lower_L << std::setw(11)
      << r.upper_U << (r.boundary_tie ? "tie" : "-") << '\n';
  return row.str();
}

void cmd_stability_point(const Options& opt, std::ostream& out) {
  const GameConfig cfg = load_config(opt);
  const StabilityPointReport report = stability_point(cfg);
  if (opt.format == "table") {
    std::string text =
        "class   fw  eta_hat  achievable  binding      L          U          tie\n";
    text += table_row(cfg, report);
    emit(opt, out, text);
    return;
  }
  Json j = io::to_json(report);
  j["class"] = std::string(to_string(classify(cfg)));
  j["framework"] = std::string(to_string(cfg.framework));
  emit_json(opt, out, j);
}

void cmd_evolve(const Options& opt, std::ostream& out) {
  const GameConfig cfg = load_config(opt);
  const StabilityMode mode = mode_for(opt, cfg);
  Protocol protocol;
  std::vector<std::string> names;
  if (opt.from == "null") {
    protocol = Protocol::from_null(opt.seed);
  } else if (opt.from == "complete") {
    protocol = Protocol::from_complete(opt.seed);
  } else if (opt.from == "given") {
    io::NamedNetwork named = load_network(opt, cfg);
    names = named.names;
    protocol = Protocol::from_network(std::move(named.network), opt.seed);
  } else {
    throw UsageError("--from must be null, complete or given");
  }
  protocol.max_rounds = opt.max_rounds;
  if (protocol.max_rounds && *protocol.max_rounds == 0) {
    throw UsageError("--max-rounds must be at least 1");
  }
  const EvolutionTrace trace = evolve(cfg, protocol, mode);

  Json j;
  j["converged"] = trace.converged;
  j["rounds"] = trace.rounds;
  j["seed"] = trace.seed;
  j["algorithm"] = std::string(trace.algorithm);
  j["start"] = opt.from;
  j["mode"] = std::string(to_string(mode));
  j["steps"] = trace.steps.size();
  j["degrees"] = trace.final_network.degrees();
  j["network"] = io::to_json(trace.final_network, names);
  emit_json(opt, out, j);
  if (!opt.trace.empty()) {
    std::ostringstream csv;
    io::write_trace_csv(csv, trace);
    write_text(opt.trace, csv.str());
  }
  emit_dot(opt, trace.final_network, names);
}

void cmd_construct(const Options& opt, std::ostream& out) {
  if (!opt.n || !opt.r) throw UsageError("construct needs --n and --r");
  Network net;
  if (opt.kind == "regular") {
    net = construct_regular(*opt.n, *opt.r);
  } else if (opt.kind == "near-regular") {
    NearRegular mode;
    if (opt.odd == "below") {
      mode = NearRegular::OneBelow;
    } else if (opt.odd == "above") {
      mode = NearRegular::OneAbove;
    } else {
      throw UsageError("--odd must be below or above");
    }
    net = construct_near_regular(*opt.n, *opt.r, mode);
  } else {
    throw UsageError("construct kind must be regular or near-regular");
  }
  emit_json(opt, out, io::to_json(net));
  emit_dot(opt, net, {});
}

void cmd_enumerate(const Options& opt, std::ostream& out) {
  const GameConfig cfg = load_config(opt);
  emit_json(opt, out, io::to_json(classify_all(cfg, mode_for(opt, cfg))));
}

bool cmd_verify(const Options& opt, std::ostream& out) {
  std::vector<GridEntry> grid;
  if (!opt.grid.empty()) {
    grid = io::grid_from_json(io::read_json_file(opt.grid));
  } else if (!opt.config.empty()) {
    grid.push_back({opt.config, load_config(opt)});
  } else {
    grid = default_grid();
  }
  if (auto eps = epsilon_override()) {
    for (auto& entry : grid) entry.config.epsilon = *eps;
  }
  const VerificationReport report = verify_theorems(grid);
  if (opt.format == "table") {
    std::ostringstream text;
    for (const auto& c : report.checks) {
      text << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(15) << c.result
           << std::setw(34) << c.config << c.detail << '\n';
    }
    emit(opt, out, text.str());
  } else {
    emit_json(opt, out, io::to_json(report));
  }
  return report.all_passed();
}

void cmd_welfare(const Options& opt, std::ostream& out) {
  const GameConfig cfg = load_config(opt);
  const io::NamedNetwork named = load_network(opt, cfg);
  Json j = io::to_json(is_efficient(cfg, named.network));
  if (opt.dummies) {
    if (opt.capacity && *opt.capacity < 0.0) {
      throw UsageError("--capacity must be non-negative");
    }
    j["plan"] = io::to_json(suggest_dummies(cfg, named.network, opt.capacity));
  }
  emit_json(opt, out, j);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Social-storage network formation: stability, dynamics and welfare"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "GameConfig JSON file");
    sub->add_option("--n", opt.n, "resize a config of identical agents");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "write the report here instead of stdout");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", opt.mode, "plain, storage or storage-budget");
  };

  auto* analyze = app.add_subcommand("analyze", "check bilateral stability of a network");
  add_config(analyze);
  analyze->add_option("--network", opt.network, "Network JSON file");
  add_mode(analyze);
  analyze->add_flag("--theorem", opt.theorem, "use the closed-form conditions");
  add_out(analyze);
  analyze->add_option("--dot", opt.dot, "write the network as DOT");

  auto* point = app.add_subcommand("stability-point", "closed-form stability point");
  add_config(point);
  point->add_option("--format", opt.format, "json or table");
  add_out(point);

  auto* evo = app.add_subcommand("evolve", "run mutual-consent dynamics");
  add_config(evo);
  evo->add_option("--from", opt.from, "null, complete or given");
  evo->add_option("--network", opt.network, "start network for --from given");
  evo->add_option("--seed", opt.seed, "64-bit seed");
  evo->add_option("--max-rounds", opt.max_rounds, "round limit (default 10 N)");
  add_mode(evo);
  evo->add_option("--trace", opt.trace, "write the move trace as CSV");
  evo->add_option("--dot", opt.dot, "write the final network as DOT");
  add_out(evo);

  auto* build = app.add_subcommand("construct", "build a regular or near-regular network");
  build->add_option("kind", opt.kind, "regular or near-regular")->required();
  build->add_option("--n", opt.n, "agents");
  build->add_option("--r", opt.r, "degree");
  build->add_option("--odd", opt.odd, "near-regular odd agent: below or above");
  build->add_option("--dot", opt.dot, "write the network as DOT");
  add_out(build);

  auto* enumerate = app.add_subcommand("enumerate", "classify every graph (N <= 7)");
  add_config(enumerate);
  add_mode(enumerate);
  add_out(enumerate);

  auto* verify = app.add_subcommand("verify", "cross-check closed forms by enumeration");
  verify->add_option("--config", opt.config, "single config to verify");
  verify->add_option("--grid", opt.grid, "JSON array of configs");
  verify->add_option("--format", opt.format, "json or table");
  add_out(verify);

  auto* welfare = app.add_subcommand("welfare", "efficiency and contentment");
  add_config(welfare);
  welfare->add_option("--network", opt.network, "Network JSON file");
  welfare->add_flag("--dummies", opt.dummies, "suggest dummy storage devices");
  welfare->add_option("--capacity", opt.capacity, "storage per dummy (default unbounded)");
  add_out(welfare);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (opt.format != "json" && opt.format != "table") {
      throw UsageError("--format must be json or table");
    }
    if (analyze->parsed()) cmd_analyze(opt, out);
    if (point->parsed()) cmd_stability_point(opt, out);
    if (evo->parsed()) cmd_evolve(opt, out);
    if (build->parsed()) cmd_construct(opt, out);
    if (enumerate->parsed()) cmd_enumerate(opt, out);
    if (verify->parsed() && !cmd_verify(opt, out)) {
      err << "verification failed\n";
      return kExitDomain;
    }
    if (welfare->parsed()) cmd_welfare(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace netform::cli
