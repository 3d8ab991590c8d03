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

#include "netform/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "netform/stability_point.hpp"

namespace netform {

std::string_view to_string(StartKind start) {
  switch (start) {
    case StartKind::Null: return "null";
    case StartKind::Complete: return "complete";
    case StartKind::Given: return "given";
  }
  return "null";
}

Protocol Protocol::from_null(std::uint64_t seed) {
  Protocol p;
  p.start = StartKind::Null;
  p.seed = seed;
  return p;
}

Protocol Protocol::from_complete(std::uint64_t seed) {
  Protocol p;
  p.start = StartKind::Complete;
  p.seed = seed;
  return p;
}

Protocol Protocol::from_network(Network net, std::uint64_t seed) {
  Protocol p;
  p.start = StartKind::Given;
  p.given = std::move(net);
  p.seed = seed;
  return p;
}

namespace {

// Unbiased draw from [0, bound) by rejecting the tail of the 64-bit range.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return x % bound;
}

void shuffle_pairs(std::vector<Edge>& pairs, std::mt19937_64& engine) {
  for (std::size_t k = pairs.size(); k > 1; --k) {
    const auto pick = static_cast<std::size_t>(uniform_below(engine, k));
    std::swap(pairs[k - 1], pairs[pick]);
  }
}

Network starting_network(const GameConfig& cfg, const Protocol& protocol) {
  switch (protocol.start) {
    case StartKind::Null: return Network::null(cfg.size());
    case StartKind::Complete: return Network::complete(cfg.size());
    case StartKind::Given:
      require_consistent(cfg, protocol.given);
      return protocol.given;
  }
  return Network::null(cfg.size());
}

}  // namespace

EvolutionTrace evolve(const GameConfig& cfg, const Protocol& protocol,
                      StabilityMode mode) {
  cfg.validate();
  const std::size_t n = cfg.size();
  const std::size_t max_rounds = protocol.max_rounds.value_or(10 * n);
  if (max_rounds == 0) throw std::invalid_argument("max_rounds must be >= 1");

  EvolutionTrace trace;
  trace.seed = protocol.seed;
  Network net = starting_network(cfg, protocol);

  std::vector<Edge> pairs;
  pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  std::mt19937_64 engine(protocol.seed);
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    trace.rounds = round;
    shuffle_pairs(pairs, engine);
    bool moved = false;
    for (const Edge& pair : pairs) {
      TraceStep step;
      step.round = round;
      step.pair = pair;
      if (net.has_edge(pair.i, pair.j)) {
        step.kind = MoveKind::Delete;
        step.gain_i = gain_from_delete(cfg, net, pair.i, pair.j);
        step.gain_j = gain_from_delete(cfg, net, pair.j, pair.i);
      } else {
        step.kind = MoveKind::Add;
        step.gain_i = gain_from_add(cfg, net, pair.i, pair.j);
        step.gain_j = gain_from_add(cfg, net, pair.j, pair.i);
        step.feasible_i = add_feasible(cfg, net, pair.i, pair.j, mode);
        step.feasible_j = add_feasible(cfg, net, pair.j, pair.i, mode);
      }
      const bool wants_i = strictly_beneficial(cfg, step.gain_i);
      const bool wants_j = strictly_beneficial(cfg, step.gain_j);
      if (!wants_i && !wants_j) continue;
      step.accepted = wants_i && wants_j && step.feasible_i && step.feasible_j;
      if (step.accepted) {
        if (step.kind == MoveKind::Add) {
          net.add_edge(pair.i, pair.j);
        } else {
          net.remove_edge(pair.i, pair.j);
        }
        moved = true;
      }
      trace.steps.push_back(step);
    }
    if (!moved) {
      trace.converged = true;
      break;
    }
  }
  trace.final_network = std::move(net);
  return trace;
}

std::size_t own_degree_cap(const GameConfig& cfg, AgentIndex i,
                           StabilityMode mode) {
  cfg.validate();
  if (i >= cfg.size()) throw std::invalid_argument("agent index out of range");
  std::size_t cap = cfg.size() - 1;
  if (mode == StabilityMode::Plain) return cap;

  // Host the smallest partners first.
  std::vector<double> partner_data;
  for (AgentIndex j = 0; j < cfg.size(); ++j) {
    if (j != i) partner_data.push_back(cfg.agents[j].d);
  }
  std::sort(partner_data.begin(), partner_data.end());
  std::size_t hosted = 0;
  double used = 0.0;
  for (double d : partner_data) {
    if (used + d > cfg.agents[i].s + cfg.epsilon) break;
    used += d;
    ++hosted;
  }
  cap = std::min(cap, hosted);

  if (mode == StabilityMode::StorageAndBudgetConstrained) {
    cap = std::min(cap, capacity_count(cfg.agents[i].b, cfg.c, cfg.epsilon)
                            .value_or(cap));
  }
  return cap;
}

DegreeRange best_response_degree(const GameConfig& cfg, AgentIndex i,
                                 StabilityMode mode) {
  const std::size_t cap = own_degree_cap(cfg, i, mode);
  std::optional<DegreeRange> range;
  for (std::size_t eta = 0; eta <= cap; ++eta) {
    const double u = utility_at_degree(cfg, i, eta);
    const bool wants_more =
        eta < cap &&
        strictly_beneficial(cfg, utility_at_degree(cfg, i, eta + 1) - u);
    const bool wants_fewer =
        eta > 0 &&
        strictly_beneficial(cfg, utility_at_degree(cfg, i, eta - 1) - u);
    if (wants_more || wants_fewer) continue;
    if (!range) {
      range = DegreeRange{eta, eta};
    } else {
      range->high = eta;
    }
  }
  // Utilities are concave (MO) or increasing (SO), so some degree qualifies.
  return range.value_or(DegreeRange{cap, cap});
}

}  // namespace netform
