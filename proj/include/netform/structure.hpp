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
#include <string_view>
#include <vector>

#include "netform/model.hpp"

namespace netform {

/// Degrees sorted non-increasing. Networks that share a degree sequence are
/// considered the same stable outcome.
struct DegreeSequence {
  std::vector<std::size_t> values;

  DegreeSequence() = default;
  /// Sorts the input.
  explicit DegreeSequence(std::vector<std::size_t> degrees);

  std::size_t sum() const;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;
};

DegreeSequence degree_sequence(const Network& net);

/// Erdos-Gallai test.
bool is_graphical(const DegreeSequence& seq);

/// Connected circulant r-regular network: i links to i +- 1 .. i +- r/2,
/// plus i + n/2 when r is odd. Throws InfeasibleError on odd n*r or r >= n.
Network construct_regular(std::size_t n, std::size_t r);

enum class NearRegular { OneBelow, OneAbove };

/// n - 1 agents at degree r and one odd agent: agent n - 1 at r - 1
/// (OneBelow) or agent 0 at r + 1 (OneAbove). n and r must both be odd with
/// r < n. Connected when r >= 3.
Network construct_near_regular(std::size_t n, std::size_t r, NearRegular mode);

/// Havel-Hakimi realization; agent k receives the k-th largest degree.
/// nullopt when the sequence is not graphical.
std::optional<Network> realize_degree_sequence(const DegreeSequence& seq);

/// Joins two components without changing any degree: removes one link in
/// each (preferring links on a cycle) and cross-connects their endpoints.
/// Both components need at least one link.
Network rewire_join(const Network& net, const std::vector<AgentIndex>& first,
                    const std::vector<AgentIndex>& second);

/// Repeats rewire_join until at most one non-trivial component remains.
Network connect_by_rewiring(Network net);

/// Places the networks side by side; agents are renumbered consecutively.
Network disjoint_union(const std::vector<Network>& parts);

struct SmallComponentCheck {
  bool holds = true;
  /// Components with at most eta_hat agents, reported when there are two or
  /// more of them.
  std::vector<std::vector<AgentIndex>> offending;
};

/// A stable network has at most one component with <= eta_hat agents.
SmallComponentCheck check_small_component_claim(const Network& net,
                                                std::size_t eta_hat);

enum class InstabilityVerdict { MustBeUnstable, NoConclusion };

std::string_view to_string(InstabilityVerdict verdict);

struct InstabilityCheck {
  InstabilityVerdict verdict = InstabilityVerdict::NoConclusion;
  /// Deficient agents in two different components who both gain by linking.
  std::optional<Edge> witness;
};

/// For a network grown from null with odd eta_hat: two components that each
/// have <= eta_hat agents or an odd number above eta_hat force instability.
/// The witness is verified against the deviation predicates in the
/// framework's default mode, so the verdict never contradicts the
/// definition-based checker.
InstabilityCheck check_multi_component_instability(const GameConfig& cfg,
                                                   const Network& net,
                                                   std::size_t eta_hat,
                                                   bool evolved_from_null);

enum class Uniqueness { UniqueComplete, MultipleStable };

std::string_view to_string(Uniqueness u);

/// The complete network is the only stable outcome when n = eta_hat + 1 or
/// eta_hat >= n; otherwise several degree-distinct stable networks exist.
Uniqueness uniqueness_class(std::size_t n, std::size_t eta_hat);

/// Components that are stars on >= min_agents agents: one hub linked to every
/// other member, each of which is linked only to the hub.
std::vector<std::vector<AgentIndex>> star_components(const Network& net,
                                                     std::size_t min_agents);

}  // namespace netform
