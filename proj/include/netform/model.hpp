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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netform {

using AgentIndex = std::size_t;

/// Absolute tolerance used wherever a strict inequality decides a verdict.
/// Values within epsilon of each other are treated as equal.
inline constexpr double kDefaultEpsilon = 1e-12;

/// Thrown when a construction is impossible (parity, range).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an analysis is not defined for the given network class or
/// framework, or would exceed the exhaustive-enumeration scale.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-agent parameters: value of backed-up data, shareable storage,
/// data to back up, and link budget.
struct AgentParams {
  double beta = 0.0;
  double s = 0.0;
  double d = 0.0;
  double b = 0.0;

  void validate() const;

  friend bool operator==(const AgentParams&, const AgentParams&) = default;
};

enum class Framework { MO, SO };

std::string_view to_string(Framework framework);
Framework parse_framework(std::string_view text);

struct GameConfig {
  Framework framework = Framework::MO;
  double lambda = 0.5;
  double c = 0.1;
  std::vector<AgentParams> agents;
  double epsilon = kDefaultEpsilon;

  std::size_t size() const { return agents.size(); }
  void validate() const;

  /// Every agent gets the same parameters.
  static GameConfig symmetric(Framework framework, double lambda, double c,
                              const AgentParams& params, std::size_t n);
  /// Same config with the roster resized to n copies of agent 0.
  GameConfig with_size(std::size_t n) const;
};

/// An unordered agent pair, normalized so that i < j.
struct Edge {
  AgentIndex i = 0;
  AgentIndex j = 0;

  Edge() = default;
  Edge(AgentIndex a, AgentIndex b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on n labeled agents.
class Network {
 public:
  explicit Network(std::size_t n = 0);

  static Network null(std::size_t n) { return Network(n); }
  static Network complete(std::size_t n);
  static Network from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool has_edge(AgentIndex i, AgentIndex j) const;
  std::size_t degree(AgentIndex i) const;
  std::vector<std::size_t> degrees() const { return degree_; }
  std::vector<AgentIndex> neighbors(AgentIndex i) const;
  /// Edges in ascending (i, j) order.
  std::vector<Edge> edges() const;

  /// Inserting an existing edge or removing a missing one is an error.
  void add_edge(AgentIndex i, AgentIndex j);
  void remove_edge(AgentIndex i, AgentIndex j);
  Network with_edge(AgentIndex i, AgentIndex j) const;
  Network without_edge(AgentIndex i, AgentIndex j) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void check_index(AgentIndex i) const;
  void check_pair(AgentIndex i, AgentIndex j) const;

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::size_t> degree_;
};

enum class NetworkClass { SVN, SRN, SV_SRN, General };

std::string_view to_string(NetworkClass cls);

/// Number of neighbors of agent i.
std::size_t degree(const Network& net, AgentIndex i);

/// Utility of agent i at an arbitrary neighborhood size.
double utility_at_degree(const GameConfig& cfg, AgentIndex i,
                         std::size_t degree);

/// MO: beta_i (1 - lambda^eta) - c eta.  SO: beta_i (1 - lambda^eta).
double utility(const GameConfig& cfg, const Network& net, AgentIndex i);

double total_welfare(const GameConfig& cfg, const Network& net);

/// Most specific symmetric class, by exact parameter equality.
NetworkClass classify(const GameConfig& cfg);

/// Connected components ordered by smallest member; members ascending.
std::vector<std::vector<AgentIndex>> components(const Network& net);

/// Throws std::invalid_argument unless net and cfg describe the same agents.
void require_consistent(const GameConfig& cfg, const Network& net);

}  // namespace netform
