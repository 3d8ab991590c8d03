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

#include "netform/stability.hpp"

#include <cmath>
#include <string>

namespace netform {

std::string_view to_string(StabilityMode mode) {
  switch (mode) {
    case StabilityMode::Plain: return "plain";
    case StabilityMode::StorageConstrained: return "storage";
    case StabilityMode::StorageAndBudgetConstrained: return "storage-budget";
  }
  return "plain";
}

StabilityMode parse_mode(std::string_view text) {
  if (text == "plain") return StabilityMode::Plain;
  if (text == "storage") return StabilityMode::StorageConstrained;
  if (text == "storage-budget") return StabilityMode::StorageAndBudgetConstrained;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (expected plain, storage or storage-budget)");
}

StabilityMode default_mode(Framework framework) {
  return framework == Framework::MO
             ? StabilityMode::StorageConstrained
             : StabilityMode::StorageAndBudgetConstrained;
}

std::string_view to_string(MoveKind kind) {
  return kind == MoveKind::Add ? "add" : "delete";
}

double remaining_storage(const GameConfig& cfg, const Network& net,
                         AgentIndex i) {
  require_consistent(cfg, net);
  double used = 0.0;
  for (AgentIndex j : net.neighbors(i)) used += cfg.agents[j].d;
  return cfg.agents[i].s - used;
}

double remaining_budget(const GameConfig& cfg, const Network& net,
                        AgentIndex i) {
  require_consistent(cfg, net);
  return cfg.agents[i].b - cfg.c * static_cast<double>(net.degree(i));
}

double gain_from_add(const GameConfig& cfg, const Network& net, AgentIndex i,
                     AgentIndex j) {
  require_consistent(cfg, net);
  if (net.has_edge(i, j)) {
    throw std::invalid_argument("gain_from_add: link already present");
  }
  return utility(cfg, net.with_edge(i, j), i) - utility(cfg, net, i);
}

double gain_from_delete(const GameConfig& cfg, const Network& net,
                        AgentIndex i, AgentIndex j) {
  require_consistent(cfg, net);
  if (!net.has_edge(i, j)) {
    throw std::invalid_argument("gain_from_delete: link not present");
  }
  return utility(cfg, net.without_edge(i, j), i) - utility(cfg, net, i);
}

bool add_feasible(const GameConfig& cfg, const Network& net, AgentIndex i,
                  AgentIndex j, StabilityMode mode) {
  require_consistent(cfg, net);
  if (net.has_edge(i, j)) {
    throw std::invalid_argument("add_feasible: link already present");
  }
  if (mode == StabilityMode::Plain) return true;
  const double eps = cfg.epsilon;
  if (remaining_storage(cfg, net, j) < cfg.agents[i].d - eps) return false;
  if (mode == StabilityMode::StorageAndBudgetConstrained &&
      remaining_budget(cfg, net, i) < cfg.c - eps) {
    return false;
  }
  return true;
}

bool strictly_beneficial(const GameConfig& cfg, double gain) {
  return gain > cfg.epsilon;
}

namespace {

std::vector<AgentIndex> overdrawn(const GameConfig& cfg, const Network& net,
                                  StabilityMode mode) {
  std::vector<AgentIndex> out;
  if (mode == StabilityMode::Plain) return out;
  for (AgentIndex i = 0; i < net.size(); ++i) {
    const bool storage_short = remaining_storage(cfg, net, i) < -cfg.epsilon;
    const bool budget_short =
        mode == StabilityMode::StorageAndBudgetConstrained &&
        remaining_budget(cfg, net, i) < -cfg.epsilon;
    if (storage_short || budget_short) out.push_back(i);
  }
  return out;
}

}  // namespace

StabilityReport is_bilaterally_stable(const GameConfig& cfg,
                                      const Network& net, StabilityMode mode) {
  require_consistent(cfg, net);
  StabilityReport report;
  report.mode = mode;
  const std::size_t n = net.size();
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) {
      if (net.has_edge(i, j)) {
        const double gi = gain_from_delete(cfg, net, i, j);
        const double gj = gain_from_delete(cfg, net, j, i);
        if (strictly_beneficial(cfg, gi) && strictly_beneficial(cfg, gj)) {
          report.violations.push_back({MoveKind::Delete, Edge(i, j), gi, gj, true});
        }
      } else {
        const double gi = gain_from_add(cfg, net, i, j);
        const double gj = gain_from_add(cfg, net, j, i);
        if (strictly_beneficial(cfg, gi) && strictly_beneficial(cfg, gj) &&
            add_feasible(cfg, net, i, j, mode) &&
            add_feasible(cfg, net, j, i, mode)) {
          report.violations.push_back({MoveKind::Add, Edge(i, j), gi, gj, true});
        }
      }
    }
  }
  report.stable = report.violations.empty();
  report.overdrawn_agents = overdrawn(cfg, net, mode);
  return report;
}

namespace {

// Marginal value of the (eta+1)-th link: beta (lambda^eta - lambda^(eta+1)).
double marginal_value(double beta, double lambda, std::size_t eta) {
  const double e = static_cast<double>(eta);
  return beta * (std::pow(lambda, e) - std::pow(lambda, e + 1.0));
}

struct SymmetricRow {
  bool marginal_add = false;     // adding needs marginal value above c
  bool marginal_delete = false;  // deleting needs marginal value below c
  bool storage = false;          // s - d * eta_partner >= d
  bool budget = false;           // b - c * eta_self >= c
  bool complete_only = false;
  StabilityMode mode = StabilityMode::Plain;
};

SymmetricRow select_row(const GameConfig& cfg) {
  const NetworkClass cls = classify(cfg);
  SymmetricRow row;
  if (cfg.framework == Framework::MO) {
    if (cls == NetworkClass::SV_SRN) {
      row.marginal_add = row.marginal_delete = row.storage = true;
      row.mode = StabilityMode::StorageConstrained;
      return row;
    }
    if (cls == NetworkClass::SVN) {
      row.marginal_add = row.marginal_delete = true;
      row.mode = StabilityMode::Plain;
      return row;
    }
  } else {
    if (cls == NetworkClass::SRN || cls == NetworkClass::SV_SRN) {
      row.storage = row.budget = true;
      row.mode = StabilityMode::StorageAndBudgetConstrained;
      return row;
    }
    if (cls == NetworkClass::SVN) {
      row.complete_only = true;
      row.mode = StabilityMode::Plain;
      return row;
    }
  }
  throw UnsupportedError(
      "no closed-form stability condition for class " +
      std::string(to_string(cls)) + " under " +
      std::string(to_string(cfg.framework)) +
      "; use the definition-based checker");
}

}  // namespace

StabilityReport check_theorem_conditions(const GameConfig& cfg,
                                         const Network& net) {
  require_consistent(cfg, net);
  const SymmetricRow row = select_row(cfg);
  const double eps = cfg.epsilon;
  const double lambda = cfg.lambda;
  const double c = cfg.c;
  const std::size_t n = net.size();

  StabilityReport report;
  report.mode = row.mode;

  // Per-agent add/delete marginals from the closed forms. Under SO the
  // value of a link is always positive and deleting never pays.
  auto add_gain = [&](AgentIndex i) {
    const double mv = marginal_value(cfg.agents[i].beta, lambda, net.degree(i));
    return cfg.framework == Framework::MO ? mv - c : mv;
  };
  auto delete_gain = [&](AgentIndex i) {
    const std::size_t eta = net.degree(i);
    const double mv = marginal_value(cfg.agents[i].beta, lambda, eta - 1);
    return cfg.framework == Framework::MO ? c - mv : -mv;
  };
  auto has_room_for = [&](AgentIndex host) {
    const auto& p = cfg.agents[host];
    return p.s - p.d * static_cast<double>(net.degree(host)) >= p.d - eps;
  };
  auto can_afford = [&](AgentIndex i) {
    const auto& p = cfg.agents[i];
    return p.b - c * static_cast<double>(net.degree(i)) >= c - eps;
  };

  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) {
      if (net.has_edge(i, j)) {
        if (!row.marginal_delete) continue;
        const double gi = delete_gain(i);
        const double gj = delete_gain(j);
        // i wants out  =>  j does not.
        if (gi > eps && gj > eps) {
          report.violations.push_back({MoveKind::Delete, Edge(i, j), gi, gj, true});
        }
        continue;
      }
      const double gi = add_gain(i);
      const double gj = add_gain(j);
      if (row.complete_only) {
        report.violations.push_back({MoveKind::Add, Edge(i, j), gi, gj, true});
        continue;
      }
      bool i_wants = true;
      bool j_wants = true;
      if (row.marginal_add) {
        i_wants = gi > eps;
        j_wants = gj > eps;
      }
      if (row.storage) {
        i_wants = i_wants && has_room_for(j);
        j_wants = j_wants && has_room_for(i);
      }
      if (row.budget) {
        i_wants = i_wants && can_afford(i);
        j_wants = j_wants && can_afford(j);
      }
      if (i_wants && j_wants) {
        report.violations.push_back({MoveKind::Add, Edge(i, j), gi, gj, true});
      }
    }
  }
  report.stable = report.violations.empty();
  report.overdrawn_agents = overdrawn(cfg, net, row.mode);
  return report;
}

}  // namespace netform
