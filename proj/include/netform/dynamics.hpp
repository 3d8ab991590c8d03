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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "netform/model.hpp"
#include "netform/stability.hpp"

namespace netform {

/// Identifier of the pair-shuffling scheme recorded with every trace:
/// std::mt19937_64 seeded with the 64-bit seed, Fisher-Yates from the last
/// position down, index drawn uniformly by rejection sampling.
inline constexpr std::string_view kShuffleAlgorithm = "mt19937_64/fisher-yates-rejection";

enum class StartKind { Null, Complete, Given };

std::string_view to_string(StartKind start);

struct Protocol {
  StartKind start = StartKind::Null;
  Network given;  // used only when start == Given
  std::uint64_t seed = 0;
  /// Unset means 10 * N.
  std::optional<std::size_t> max_rounds;

  static Protocol from_null(std::uint64_t seed);
  static Protocol from_complete(std::uint64_t seed);
  static Protocol from_network(Network net, std::uint64_t seed);
};

struct TraceStep {
  std::size_t round = 0;
  Edge pair;
  MoveKind kind = MoveKind::Add;
  bool accepted = false;
  double gain_i = 0.0;
  double gain_j = 0.0;
  bool feasible_i = true;
  bool feasible_j = true;
};

struct EvolutionTrace {
  /// Every pair visit where at least one side strictly gains.
  std::vector<TraceStep> steps;
  Network final_network;
  bool converged = false;
  std::size_t rounds = 0;
  std::uint64_t seed = 0;
  std::string_view algorithm = kShuffleAlgorithm;
};

/// Mutual-consent dynamics. Each round visits all unordered pairs in a fresh
/// seeded permutation and applies moves immediately: a missing link is added
/// when both sides strictly gain and both feasibility checks pass; a present
/// link is deleted when both sides strictly gain. Stops after a round with
/// no accepted move (converged) or after max_rounds.
EvolutionTrace evolve(const GameConfig& cfg, const Protocol& protocol,
                      StabilityMode mode);

/// Inclusive degree range.
struct DegreeRange {
  std::size_t low = 0;
  std::size_t high = 0;

  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// Largest degree agent i could sustain on its own resources in this mode:
/// N - 1, the number of partners whose data fits in s_i (storage modes) and
/// floor(b_i / c) (budget mode).
std::size_t own_degree_cap(const GameConfig& cfg, AgentIndex i,
                           StabilityMode mode);

/// Degrees in [0, own_degree_cap] at which agent i has no strict incentive to
/// add or delete a link, assuming partners always accept.
DegreeRange best_response_degree(const GameConfig& cfg, AgentIndex i,
                                 StabilityMode mode);

}  // namespace netform
