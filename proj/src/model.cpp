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

#include "netform/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace netform {

namespace {

bool finite_non_negative(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void AgentParams::validate() const {
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw std::invalid_argument("agent beta must be finite and > 0");
  }
  if (!finite_non_negative(s) || !finite_non_negative(d) ||
      !finite_non_negative(b)) {
    throw std::invalid_argument("agent s, d, b must be finite and >= 0");
  }
}

std::string_view to_string(Framework framework) {
  return framework == Framework::MO ? "MO" : "SO";
}

Framework parse_framework(std::string_view text) {
  if (text == "MO") return Framework::MO;
  if (text == "SO") return Framework::SO;
  throw std::invalid_argument("unknown framework '" + std::string(text) +
                              "' (expected MO or SO)");
}

void GameConfig::validate() const {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("lambda must lie in (0, 1)");
  }
  if (!std::isfinite(c) || c <= 0.0) {
    throw std::invalid_argument("c must be finite and > 0");
  }
  if (agents.empty()) {
    throw std::invalid_argument("config needs at least one agent");
  }
  if (!finite_non_negative(epsilon)) {
    throw std::invalid_argument("epsilon must be finite and >= 0");
  }
  for (const auto& agent : agents) agent.validate();
}

GameConfig GameConfig::symmetric(Framework framework, double lambda, double c,
                                 const AgentParams& params, std::size_t n) {
  GameConfig cfg;
  cfg.framework = framework;
  cfg.lambda = lambda;
  cfg.c = c;
  cfg.agents.assign(n, params);
  cfg.validate();
  return cfg;
}

GameConfig GameConfig::with_size(std::size_t n) const {
  if (agents.empty()) throw std::invalid_argument("config has no agents");
  GameConfig out = *this;
  out.agents.assign(n, agents.front());
  return out;
}

Edge::Edge(AgentIndex a, AgentIndex b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("self-loop is not a valid pair");
}

Network::Network(std::size_t n)
    : n_(n), adjacency_(n * n, 0), degree_(n, 0) {}

Network Network::complete(std::size_t n) {
  Network net(n);
  for (AgentIndex i = 0; i < n; ++i) {
    for (AgentIndex j = i + 1; j < n; ++j) net.add_edge(i, j);
  }
  return net;
}

Network Network::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Network net(n);
  for (const auto& e : edges) net.add_edge(e.i, e.j);
  return net;
}

void Network::check_index(AgentIndex i) const {
  if (i >= n_) {
    std::ostringstream msg;
    msg << "agent index " << i << " out of range for network of size " << n_;
    throw std::invalid_argument(msg.str());
  }
}

void Network::check_pair(AgentIndex i, AgentIndex j) const {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("self-loop is not a valid pair");
}

bool Network::has_edge(AgentIndex i, AgentIndex j) const {
  check_index(i);
  check_index(j);
  return adjacency_[i * n_ + j] != 0;
}

std::size_t Network::degree(AgentIndex i) const {
  check_index(i);
  return degree_[i];
}

std::vector<AgentIndex> Network::neighbors(AgentIndex i) const {
  check_index(i);
  std::vector<AgentIndex> out;
  out.reserve(degree_[i]);
  for (AgentIndex j = 0; j < n_; ++j) {
    if (adjacency_[i * n_ + j]) out.push_back(j);
  }
  return out;
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (AgentIndex i = 0; i < n_; ++i) {
    for (AgentIndex j = i + 1; j < n_; ++j) {
      if (adjacency_[i * n_ + j]) out.emplace_back(i, j);
    }
  }
  return out;
}

void Network::add_edge(AgentIndex i, AgentIndex j) {
  check_pair(i, j);
  if (adjacency_[i * n_ + j]) {
    std::ostringstream msg;
    msg << "duplicate edge {" << i << "," << j << "}";
    throw std::invalid_argument(msg.str());
  }
  adjacency_[i * n_ + j] = adjacency_[j * n_ + i] = 1;
  ++degree_[i];
  ++degree_[j];
  ++edge_count_;
}

void Network::remove_edge(AgentIndex i, AgentIndex j) {
  check_pair(i, j);
  if (!adjacency_[i * n_ + j]) {
    std::ostringstream msg;
    msg << "edge {" << i << "," << j << "} is not present";
    throw std::invalid_argument(msg.str());
  }
  adjacency_[i * n_ + j] = adjacency_[j * n_ + i] = 0;
  --degree_[i];
  --degree_[j];
  --edge_count_;
}

Network Network::with_edge(AgentIndex i, AgentIndex j) const {
  Network out = *this;
  out.add_edge(i, j);
  return out;
}

Network Network::without_edge(AgentIndex i, AgentIndex j) const {
  Network out = *this;
  out.remove_edge(i, j);
  return out;
}

std::string_view to_string(NetworkClass cls) {
  switch (cls) {
    case NetworkClass::SVN: return "SVN";
    case NetworkClass::SRN: return "SRN";
    case NetworkClass::SV_SRN: return "SV-SRN";
    case NetworkClass::General: return "General";
  }
  return "General";
}

std::size_t degree(const Network& net, AgentIndex i) { return net.degree(i); }

void require_consistent(const GameConfig& cfg, const Network& net) {
  if (cfg.size() != net.size()) {
    std::ostringstream msg;
    msg << "config has " << cfg.size() << " agents but network has "
        << net.size();
    throw std::invalid_argument(msg.str());
  }
}

double utility_at_degree(const GameConfig& cfg, AgentIndex i,
                         std::size_t degree) {
  if (i >= cfg.size()) {
    throw std::invalid_argument("agent index out of range for config");
  }
  if (degree == 0) return 0.0;
  const double eta = static_cast<double>(degree);
  const double backup = cfg.agents[i].beta * (1.0 - std::pow(cfg.lambda, eta));
  return cfg.framework == Framework::MO ? backup - cfg.c * eta : backup;
}

double utility(const GameConfig& cfg, const Network& net, AgentIndex i) {
  require_consistent(cfg, net);
  return utility_at_degree(cfg, i, net.degree(i));
}

double total_welfare(const GameConfig& cfg, const Network& net) {
  require_consistent(cfg, net);
  double sum = 0.0;
  for (AgentIndex i = 0; i < net.size(); ++i) sum += utility(cfg, net, i);
  return sum;
}

NetworkClass classify(const GameConfig& cfg) {
  const auto& agents = cfg.agents;
  if (agents.empty()) return NetworkClass::SV_SRN;
  const auto& first = agents.front();
  const bool same_value = std::all_of(
      agents.begin(), agents.end(),
      [&](const AgentParams& a) { return a.beta == first.beta; });
  const bool same_resources =
      std::all_of(agents.begin(), agents.end(), [&](const AgentParams& a) {
        return a.s == first.s && a.d == first.d && a.b == first.b;
      });
  if (same_value && same_resources) return NetworkClass::SV_SRN;
  if (same_value) return NetworkClass::SVN;
  if (same_resources) return NetworkClass::SRN;
  return NetworkClass::General;
}

std::vector<std::vector<AgentIndex>> components(const Network& net) {
  const std::size_t n = net.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<AgentIndex>> out;
  std::vector<AgentIndex> stack;
  for (AgentIndex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<AgentIndex> members;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const AgentIndex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (AgentIndex w = 0; w < n; ++w) {
        if (!seen[w] && net.has_edge(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace netform
