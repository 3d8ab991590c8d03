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

#include "netform/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "netform/stability.hpp"

namespace netform {

DegreeSequence::DegreeSequence(std::vector<std::size_t> degrees)
    : values(std::move(degrees)) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

std::size_t DegreeSequence::sum() const {
  return std::accumulate(values.begin(), values.end(), std::size_t{0});
}

DegreeSequence degree_sequence(const Network& net) {
  return DegreeSequence(net.degrees());
}

bool is_graphical(const DegreeSequence& seq) {
  const auto& d = seq.values;
  const std::size_t n = d.size();
  if (seq.sum() % 2 != 0) return false;
  if (n > 0 && d.front() >= n) return false;
  // sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k) for every k.
  std::size_t prefix = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    prefix += d[k - 1];
    std::size_t tail = 0;
    for (std::size_t i = k; i < n; ++i) tail += std::min(d[i], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

Network construct_regular(std::size_t n, std::size_t r) {
  if (r >= n && !(n == 0 && r == 0)) {
    std::ostringstream msg;
    msg << "no " << r << "-regular network on " << n << " agents (need r < n)";
    throw InfeasibleError(msg.str());
  }
  if ((n * r) % 2 != 0) {
    std::ostringstream msg;
    msg << "no " << r << "-regular network on " << n
        << " agents: n*r is odd (handshake parity)";
    throw InfeasibleError(msg.str());
  }
  Network net(n);
  for (AgentIndex i = 0; i < n; ++i) {
    for (std::size_t k = 1; k <= r / 2; ++k) {
      const AgentIndex j = (i + k) % n;
      if (!net.has_edge(i, j)) net.add_edge(i, j);
    }
    if (r % 2 == 1) {
      const AgentIndex j = (i + n / 2) % n;
      if (!net.has_edge(i, j)) net.add_edge(i, j);
    }
  }
  return net;
}

std::optional<Network> realize_degree_sequence(const DegreeSequence& seq) {
  if (!is_graphical(seq)) return std::nullopt;
  const std::size_t n = seq.values.size();
  Network net(n);
  std::vector<std::size_t> residual = seq.values;
  std::vector<AgentIndex> order(n);
  for (;;) {
    std::iota(order.begin(), order.end(), AgentIndex{0});
    // Largest residual first; ties broken by label for determinism.
    std::stable_sort(order.begin(), order.end(), [&](AgentIndex a, AgentIndex b) {
      return residual[a] > residual[b];
    });
    const AgentIndex v = order.front();
    if (residual[v] == 0) break;
    std::size_t need = residual[v];
    residual[v] = 0;
    for (std::size_t k = 1; k < n && need > 0; ++k) {
      const AgentIndex w = order[k];
      if (residual[w] == 0) return std::nullopt;
      net.add_edge(v, w);
      --residual[w];
      --need;
    }
    if (need > 0) return std::nullopt;
  }
  return net;
}

namespace {

bool reachable_without(const Network& net, const Edge& removed) {
  const Network cut = net.without_edge(removed.i, removed.j);
  for (const auto& comp : components(cut)) {
    const bool has_i = std::binary_search(comp.begin(), comp.end(), removed.i);
    const bool has_j = std::binary_search(comp.begin(), comp.end(), removed.j);
    if (has_i || has_j) return has_i && has_j;
  }
  return false;
}

Edge pick_rewire_edge(const Network& net, const std::vector<AgentIndex>& comp) {
  std::optional<Edge> fallback;
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      if (!net.has_edge(comp[a], comp[b])) continue;
      const Edge e(comp[a], comp[b]);
      if (reachable_without(net, e)) return e;
      if (!fallback) fallback = e;
    }
  }
  if (!fallback) throw std::invalid_argument("component has no link to rewire");
  return *fallback;
}

}  // namespace

Network rewire_join(const Network& net, const std::vector<AgentIndex>& first,
                    const std::vector<AgentIndex>& second) {
  const Edge a = pick_rewire_edge(net, first);
  const Edge b = pick_rewire_edge(net, second);
  Network out = net;
  out.remove_edge(a.i, a.j);
  out.remove_edge(b.i, b.j);
  out.add_edge(a.i, b.j);
  out.add_edge(b.i, a.j);
  return out;
}

Network connect_by_rewiring(Network net) {
  for (;;) {
    std::vector<std::vector<AgentIndex>> nontrivial;
    for (auto& comp : components(net)) {
      if (comp.size() >= 2) nontrivial.push_back(std::move(comp));
    }
    if (nontrivial.size() < 2) return net;
    const std::size_t before = components(net).size();
    Network joined = rewire_join(net, nontrivial[0], nontrivial[1]);
    // Two trees cannot be merged this way; give up rather than loop.
    if (components(joined).size() >= before) return net;
    net = std::move(joined);
  }
}

Network construct_near_regular(std::size_t n, std::size_t r, NearRegular mode) {
  if (n % 2 == 0 || r % 2 == 0 || r >= n) {
    std::ostringstream msg;
    msg << "near-regular construction needs odd n, odd r, r < n (got n=" << n
        << ", r=" << r << ")";
    throw InfeasibleError(msg.str());
  }
  std::vector<std::size_t> degrees(n, r);
  if (mode == NearRegular::OneBelow) {
    degrees.back() = r - 1;
  } else {
    degrees.front() = r + 1;
  }
  auto realized = realize_degree_sequence(DegreeSequence(degrees));
  if (!realized) {
    throw InfeasibleError("near-regular degree sequence is not graphical");
  }
  return connect_by_rewiring(std::move(*realized));
}

Network disjoint_union(const std::vector<Network>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  Network out(total);
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& e : p.edges()) out.add_edge(e.i + offset, e.j + offset);
    offset += p.size();
  }
  return out;
}

SmallComponentCheck check_small_component_claim(const Network& net,
                                                std::size_t eta_hat) {
  SmallComponentCheck check;
  for (const auto& comp : components(net)) {
    if (comp.size() <= eta_hat) check.offending.push_back(comp);
  }
  check.holds = check.offending.size() <= 1;
  if (check.holds) check.offending.clear();
  return check;
}

std::string_view to_string(InstabilityVerdict verdict) {
  return verdict == InstabilityVerdict::MustBeUnstable ? "must-be-unstable"
                                                       : "no-conclusion";
}

InstabilityCheck check_multi_component_instability(const GameConfig& cfg,
                                                   const Network& net,
                                                   std::size_t eta_hat,
                                                   bool evolved_from_null) {
  require_consistent(cfg, net);
  InstabilityCheck check;
  const auto comps = components(net);
  if (!evolved_from_null || eta_hat % 2 == 0 || comps.size() < 2) return check;

  // Components that cannot have every member at eta_hat.
  std::vector<std::vector<AgentIndex>> deficient;
  for (const auto& comp : comps) {
    const bool small = comp.size() <= eta_hat;
    const bool odd_large = comp.size() > eta_hat && comp.size() % 2 == 1;
    if (!small && !odd_large) continue;
    std::vector<AgentIndex> short_agents;
    for (AgentIndex v : comp) {
      if (net.degree(v) < eta_hat) short_agents.push_back(v);
    }
    deficient.push_back(std::move(short_agents));
  }
  if (deficient.size() < 2) return check;

  const StabilityMode mode = default_mode(cfg.framework);
  for (std::size_t a = 0; a < deficient.size(); ++a) {
    for (std::size_t b = a + 1; b < deficient.size(); ++b) {
      for (AgentIndex p : deficient[a]) {
        for (AgentIndex q : deficient[b]) {
          const bool mutual =
              strictly_beneficial(cfg, gain_from_add(cfg, net, p, q)) &&
              strictly_beneficial(cfg, gain_from_add(cfg, net, q, p)) &&
              add_feasible(cfg, net, p, q, mode) &&
              add_feasible(cfg, net, q, p, mode);
          if (mutual) {
            check.verdict = InstabilityVerdict::MustBeUnstable;
            check.witness = Edge(p, q);
            return check;
          }
        }
      }
    }
  }
  return check;
}

std::string_view to_string(Uniqueness u) {
  return u == Uniqueness::UniqueComplete ? "unique-complete" : "multiple-stable";
}

Uniqueness uniqueness_class(std::size_t n, std::size_t eta_hat) {
  return (n == eta_hat + 1 || eta_hat >= n) ? Uniqueness::UniqueComplete
                                            : Uniqueness::MultipleStable;
}

std::vector<std::vector<AgentIndex>> star_components(const Network& net,
                                                     std::size_t min_agents) {
  std::vector<std::vector<AgentIndex>> stars;
  for (const auto& comp : components(net)) {
    if (comp.size() < std::max<std::size_t>(min_agents, 2)) continue;
    const std::size_t hubs = static_cast<std::size_t>(
        std::count_if(comp.begin(), comp.end(), [&](AgentIndex v) {
          return net.degree(v) == comp.size() - 1;
        }));
    const std::size_t leaves = static_cast<std::size_t>(std::count_if(
        comp.begin(), comp.end(), [&](AgentIndex v) { return net.degree(v) == 1; }));
    const bool is_star = comp.size() == 2 ? true
                                          : hubs == 1 && leaves == comp.size() - 1;
    if (is_star) stars.push_back(comp);
  }
  return stars;
}

}  // namespace netform
