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
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "netform/model.hpp"
#include "netform/stability.hpp"
#include "netform/structure.hpp"

namespace netform {

/// Exhaustive enumeration is limited to 2^21 labeled graphs.
inline constexpr std::size_t kMaxEnumerationAgents = 7;

/// C(n, 2).
std::size_t pair_count(std::size_t n);

/// Bit k of the mask is the k-th pair in row-major (i < j) order:
/// (0,1), (0,2), ..., (0,n-1), (1,2), ...
Network network_from_mask(std::size_t n, std::uint64_t mask);
std::uint64_t mask_from_network(const Network& net);

/// Visits every labeled simple graph on n agents once, in ascending mask
/// order. Throws UnsupportedError when n > kMaxEnumerationAgents.
void for_each_graph(std::size_t n,
                    const std::function<void(std::uint64_t, const Network&)>& visit);

/// Forward range over all labeled graphs on n agents.
class GraphRange {
 public:
  explicit GraphRange(std::size_t n);

  class iterator {
   public:
    using value_type = Network;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    Network operator*() const { return network_from_mask(n_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++mask_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }
    std::uint64_t mask() const { return mask_; }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, std::uint64_t{1} << pair_count(n_)}; }
  std::uint64_t size() const { return std::uint64_t{1} << pair_count(n_); }

 private:
  std::size_t n_;
};

GraphRange enumerate_graphs(std::size_t n);

/// Pairwise stability with unilateral deletion: no agent gains by dropping a
/// link on its own, and no missing link is wanted by both sides. Used only
/// to compare against bilateral stability.
bool is_pairwise_stable(const GameConfig& cfg, const Network& net,
                        StabilityMode mode);

struct EnumerationSummary {
  std::size_t n = 0;
  std::uint64_t total_graphs = 0;
  std::uint64_t feasible_graphs = 0;
  std::uint64_t stable_count = 0;
  std::set<DegreeSequence> stable_degree_sequences;
  double max_welfare = 0.0;
  std::uint64_t efficient_count = 0;
  std::set<DegreeSequence> efficient_degree_sequences;
  std::uint64_t contented_count = 0;
  /// Efficient graphs that are not bilaterally stable (expected zero).
  std::uint64_t efficient_but_unstable = 0;
  /// Contented graphs that are not efficient.
  std::uint64_t contented_but_inefficient = 0;
  std::uint64_t pairwise_stable_count = 0;
};

/// Classifies every graph on cfg.size() agents: stability in `mode`,
/// efficiency against the brute-force maximum over feasible graphs, and
/// contentment.
EnumerationSummary classify_all(const GameConfig& cfg, StabilityMode mode);

/// Maximum total welfare over all resource-feasible graphs, plus the masks
/// that attain it.
struct BruteForceWelfare {
  double max_welfare = 0.0;
  std::vector<std::uint64_t> argmax_masks;
};
BruteForceWelfare brute_force_max_welfare(const GameConfig& cfg);

/// Stable graphs on cfg.size() agents in `mode`, as masks.
std::vector<std::uint64_t> stable_masks(const GameConfig& cfg, StabilityMode mode);

/// Smallest degree at which adding a link stops paying, found by scanning
/// utility differences upward with no population or resource limit.
/// nullopt when no flip occurs below `limit`.
std::optional<std::size_t> sign_flip_degree(const GameConfig& cfg, AgentIndex i,
                                            std::size_t limit = 4096);

struct CheckResult {
  std::string result;  // e.g. "Theorem 4", "Claim 2"
  std::string config;  // label of the config under test
  bool passed = true;
  std::string detail;  // counterexample or summary
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct GridEntry {
  std::string label;
  GameConfig config;
};

/// Cross-checks every closed-form result against enumeration for each
/// symmetric config (N <= 6): definition vs closed-form stability on all
/// graphs, stability point vs sign-flip degree, the small-component claim,
/// uniqueness counts, and the welfare-optimal degree profile.
VerificationReport verify_theorems(const std::vector<GridEntry>& grid);

/// Built-in sweep: symmetric configs for N in 3..6 covering stability points
/// 0, 1, 2, 3 and 5 (plus a boundary tie) under both frameworks.
std::vector<GridEntry> default_grid();

}  // namespace netform
