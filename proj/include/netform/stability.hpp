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

#include <string_view>
#include <vector>

#include "netform/model.hpp"

namespace netform {

/// Which resource clauses gate link addition.
///   Plain                       - utility only.
///   StorageConstrained          - partner must have room for my data.
///   StorageAndBudgetConstrained - additionally I must afford one more link.
/// Deletion is never gated by resources.
enum class StabilityMode { Plain, StorageConstrained, StorageAndBudgetConstrained };

std::string_view to_string(StabilityMode mode);
StabilityMode parse_mode(std::string_view text);

/// MO pairs with storage constraints, SO with storage and budget.
StabilityMode default_mode(Framework framework);

enum class MoveKind { Add, Delete };

std::string_view to_string(MoveKind kind);

struct Deviation {
  MoveKind kind = MoveKind::Add;
  Edge pair;
  double gain_i = 0.0;
  double gain_j = 0.0;
  bool feasible = true;
};

struct StabilityReport {
  bool stable = true;
  std::vector<Deviation> violations;
  StabilityMode mode = StabilityMode::Plain;
  /// Agents whose current links already overdraw storage (or budget, in
  /// budget mode). The network is still analyzed.
  std::vector<AgentIndex> overdrawn_agents;
};

/// s_i minus the data of all current partners. Negative when overdrawn.
double remaining_storage(const GameConfig& cfg, const Network& net,
                         AgentIndex i);

/// b_i - c * degree.
double remaining_budget(const GameConfig& cfg, const Network& net,
                        AgentIndex i);

/// u_i(g + ij) - u_i(g). Requires ij absent.
double gain_from_add(const GameConfig& cfg, const Network& net, AgentIndex i,
                     AgentIndex j);

/// u_i(g - ij) - u_i(g). Requires ij present.
double gain_from_delete(const GameConfig& cfg, const Network& net,
                        AgentIndex i, AgentIndex j);

/// Resource side-condition for agent i agreeing to link with j: j has room
/// for i's data and (budget mode) i can pay for another link.
bool add_feasible(const GameConfig& cfg, const Network& net, AgentIndex i,
                  AgentIndex j, StabilityMode mode);

/// True when x exceeds zero by more than the config tolerance.
bool strictly_beneficial(const GameConfig& cfg, double gain);

/// Evaluates the bilateral stability definition pair by pair. Every
/// mutually profitable feasible move is recorded, in ascending pair order.
StabilityReport is_bilaterally_stable(const GameConfig& cfg,
                                      const Network& net, StabilityMode mode);

/// Closed-form stability conditions for the symmetric (class, framework)
/// combinations:
///   SVN/MO    - marginal-value conditions, Plain mode.
///   SV-SRN/MO - marginal-value plus storage-room conditions.
///   SVN/SO    - the network must be complete, Plain mode.
///   SRN/SO    - budget and storage-room conditions only.
/// The report's mode names the definition the row is equivalent to.
/// Throws UnsupportedError for General, and for SRN under MO.
StabilityReport check_theorem_conditions(const GameConfig& cfg,
                                         const Network& net);

}  // namespace netform
