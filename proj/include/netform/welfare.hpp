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

#pragma once

#include <optional>
#include <vector>

#include "netform/model.hpp"
#include "netform/structure.hpp"

namespace netform {

// Welfare is maximized over resource-feasible networks: every agent's
// partners' data fits in its storage and, under SO, its links fit its
// budget. With sufficient resources that is every network.

/// Largest degree agent i can hold in a feasible network.
std::size_t feasible_degree_cap(const GameConfig& cfg, AgentIndex i);

/// True when no agent overdraws storage (or budget, under SO).
bool is_resource_feasible(const GameConfig& cfg, const Network& net);

/// max over eta in [0, feasible_degree_cap] of the agent's utility.
double per_agent_max_utility(const GameConfig& cfg, AgentIndex i);

/// Cost threshold at which one agent above eta_hat and one agent below
/// eta_hat give equal welfare: (beta lambda^eta_hat / 2)(1/lambda - lambda).
double efficiency_threshold(double beta, double lambda, std::size_t eta_hat);

struct WelfareReport {
  double welfare = 0.0;
  double max_welfare = 0.0;
  bool efficient = false;
  bool contented = false;
  /// per_agent_max_utility(i) - u_i.
  std::vector<double> per_agent_gap;
  /// Welfare-maximizing degree profiles. Two entries when the odd agent may
  /// sit either above or below the target degree at equal welfare.
  std::vector<DegreeSequence> optimal_degree_profiles;
  /// True when max_welfare came from exhaustive enumeration.
  bool brute_force = false;
};

/// Closed-form welfare-maximizing degree profiles for symmetric classes.
/// Welfare depends only on the degree sequence; the optimum puts everyone at
/// the per-agent target degree when the degree sum allows it, and otherwise
/// moves one agent up or down depending on the cost threshold.
std::vector<DegreeSequence> optimal_degree_profiles(const GameConfig& cfg);

/// Efficiency against the maximum over all feasible networks. Symmetric
/// classes use the closed form; General configs with N <= 6 enumerate.
/// Throws UnsupportedError for General configs with more agents.
WelfareReport is_efficient(const GameConfig& cfg, const Network& net);

struct ContentmentReport {
  bool contented = false;
  std::vector<double> gaps;
};

/// Every agent attains its per-agent maximum utility.
ContentmentReport is_contented(const GameConfig& cfg, const Network& net);

struct DummyDevice {
  /// Storage on the device; nullopt is unbounded.
  std::optional<double> capacity;
  /// Real agents that back up onto this device.
  std::vector<AgentIndex> links;
};

struct PerturbationPlan {
  std::vector<DummyDevice> dummies;
  /// Agents above their target degree. Dummies only add links, so these
  /// cannot be helped.
  std::vector<AgentIndex> unresolved;
};

/// Dummy storage devices that accept every link, chosen so each real agent
/// short of its target degree reaches it. An agent links to a given device at
/// most once, so the device count is at least the largest shortfall. With a
/// capacity, devices are packed first-fit by descending data size.
PerturbationPlan suggest_dummies(const GameConfig& cfg, const Network& net,
                                 std::optional<double> capacity = std::nullopt);

/// Utility of each real agent once the plan's dummy links are in place.
std::vector<double> utilities_with_plan(const GameConfig& cfg,
                                        const Network& net,
                                        const PerturbationPlan& plan);

}  // namespace netform
