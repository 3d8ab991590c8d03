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

#include "netform/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

#include "netform/dynamics.hpp"
#include "netform/oracle.hpp"
#include "netform/stability.hpp"

namespace netform {

std::size_t feasible_degree_cap(const GameConfig& cfg, AgentIndex i) {
  return own_degree_cap(cfg, i, default_mode(cfg.framework));
}

bool is_resource_feasible(const GameConfig& cfg, const Network& net) {
  require_consistent(cfg, net);
  for (AgentIndex i = 0; i < net.size(); ++i) {
    if (remaining_storage(cfg, net, i) < -cfg.epsilon) return false;
    if (cfg.framework == Framework::SO &&
        remaining_budget(cfg, net, i) < -cfg.epsilon) {
      return false;
    }
  }
  return true;
}

namespace {

// Smallest degree in [0, cap] attaining the agent's maximum utility.
std::size_t target_degree(const GameConfig& cfg, AgentIndex i, std::size_t cap) {
  std::size_t best = 0;
  double best_u = utility_at_degree(cfg, i, 0);
  for (std::size_t eta = 1; eta <= cap; ++eta) {
    const double u = utility_at_degree(cfg, i, eta);
    if (u > best_u + cfg.epsilon) {
      best = eta;
      best_u = u;
    }
  }
  return best;
}

struct ClosedForm {
  std::vector<DegreeSequence> profiles;
  double max_welfare = 0.0;
};

// Applies when every agent shares the same degree cap and target degree.
std::optional<ClosedForm> closed_form(const GameConfig& cfg) {
  const std::size_t n = cfg.size();
  const std::size_t cap = feasible_degree_cap(cfg, 0);
  const std::size_t target = target_degree(cfg, 0, cap);
  for (AgentIndex i = 1; i < n; ++i) {
    const std::size_t cap_i = feasible_degree_cap(cfg, i);
    if (cap_i != cap || target_degree(cfg, i, cap_i) != target) {
      return std::nullopt;
    }
  }

  double base = 0.0;
  for (AgentIndex i = 0; i < n; ++i) base += utility_at_degree(cfg, i, target);

  ClosedForm out;
  // Flat top: every degree in [target, top] attains the maximum.
  std::size_t top = target;
  while (top < cap) {
    bool flat = true;
    for (AgentIndex i = 0; i < n && flat; ++i) {
      flat = std::fabs(utility_at_degree(cfg, i, top + 1) -
                       utility_at_degree(cfg, i, target)) <= cfg.epsilon;
    }
    if (!flat) break;
    ++top;
  }
  if (top > target) {
    std::vector<std::size_t> current;
    std::function<void(std::size_t)> extend = [&](std::size_t hi) {
      if (current.size() == n) {
        DegreeSequence seq(current);
        if (is_graphical(seq)) out.profiles.push_back(std::move(seq));
        return;
      }
      for (std::size_t v = hi + 1; v-- > target;) {
        current.push_back(v);
        extend(v);
        current.pop_back();
      }
    };
    extend(top);
    if (!out.profiles.empty()) {
      std::sort(out.profiles.begin(), out.profiles.end());
      out.max_welfare = base;
      return out;
    }
  }

  if ((n * target) % 2 == 0) {
    out.profiles.emplace_back(std::vector<std::size_t>(n, target));
    out.max_welfare = base;
    return out;
  }

  // Odd degree sum: one agent leaves the target by one.
  auto best_shift = [&](std::size_t degree) {
    double best = -std::numeric_limits<double>::infinity();
    for (AgentIndex i = 0; i < n; ++i) {
      best = std::max(best, utility_at_degree(cfg, i, degree) -
                                utility_at_degree(cfg, i, target));
    }
    return best;
  };
  const bool can_go_down = target >= 1;
  const bool can_go_up = target + 1 <= cap;
  bool go_up = false;
  bool go_down = false;
  const NetworkClass cls = classify(cfg);
  if (can_go_up && can_go_down && cfg.framework == Framework::MO &&
      (cls == NetworkClass::SVN || cls == NetworkClass::SV_SRN)) {
    const double threshold =
        efficiency_threshold(cfg.agents.front().beta, cfg.lambda, target);
    go_up = cfg.c < threshold + cfg.epsilon;
    go_down = cfg.c > threshold - cfg.epsilon;
  } else if (can_go_up && can_go_down) {
    const double up = best_shift(target + 1);
    const double down = best_shift(target - 1);
    go_up = up >= down - cfg.epsilon;
    go_down = down >= up - cfg.epsilon;
  } else {
    go_up = can_go_up;
    go_down = can_go_down;
  }

  double best = -std::numeric_limits<double>::infinity();
  auto add_profile = [&](std::size_t odd_degree) {
    std::vector<std::size_t> degrees(n, target);
    degrees.back() = odd_degree;
    DegreeSequence seq(std::move(degrees));
    if (!realize_degree_sequence(seq)) return;
    out.profiles.push_back(std::move(seq));
    best = std::max(best, base + best_shift(odd_degree));
  };
  if (go_up) add_profile(target + 1);
  if (go_down) add_profile(target - 1);
  if (out.profiles.empty()) return std::nullopt;
  out.max_welfare = best;
  return out;
}

}  // namespace

double per_agent_max_utility(const GameConfig& cfg, AgentIndex i) {
  const std::size_t cap = feasible_degree_cap(cfg, i);
  return utility_at_degree(cfg, i, target_degree(cfg, i, cap));
}

double efficiency_threshold(double beta, double lambda, std::size_t eta_hat) {
  return beta * std::pow(lambda, static_cast<double>(eta_hat)) / 2.0 *
         (1.0 / lambda - lambda);
}

std::vector<DegreeSequence> optimal_degree_profiles(const GameConfig& cfg) {
  cfg.validate();
  if (classify(cfg) == NetworkClass::General) {
    throw UnsupportedError("closed-form welfare profile needs a symmetric class");
  }
  auto form = closed_form(cfg);
  if (!form) {
    throw UnsupportedError(
        "agents differ in degree cap or target degree; no closed-form profile");
  }
  return form->profiles;
}

ContentmentReport is_contented(const GameConfig& cfg, const Network& net) {
  require_consistent(cfg, net);
  ContentmentReport report;
  report.contented = true;
  for (AgentIndex i = 0; i < net.size(); ++i) {
    const double gap = per_agent_max_utility(cfg, i) - utility(cfg, net, i);
    report.gaps.push_back(gap);
    if (std::fabs(gap) > cfg.epsilon) report.contented = false;
  }
  return report;
}

WelfareReport is_efficient(const GameConfig& cfg, const Network& net) {
  cfg.validate();
  require_consistent(cfg, net);
  WelfareReport report;
  report.welfare = total_welfare(cfg, net);

  std::optional<ClosedForm> form;
  if (classify(cfg) != NetworkClass::General) form = closed_form(cfg);
  if (form) {
    report.max_welfare = form->max_welfare;
    report.optimal_degree_profiles = form->profiles;
  } else {
    if (cfg.size() > 6) {
      throw UnsupportedError(
          "efficiency for heterogeneous agents is computed by enumeration and "
          "is limited to 6 agents");
    }
    const BruteForceWelfare brute = brute_force_max_welfare(cfg);
    report.max_welfare = brute.max_welfare;
    report.brute_force = true;
    std::set<DegreeSequence> seen;
    for (std::uint64_t mask : brute.argmax_masks) {
      seen.insert(degree_sequence(network_from_mask(cfg.size(), mask)));
    }
    report.optimal_degree_profiles.assign(seen.begin(), seen.end());
  }
  report.efficient = is_resource_feasible(cfg, net) &&
                     report.welfare >= report.max_welfare - cfg.epsilon;
  const ContentmentReport content = is_contented(cfg, net);
  report.contented = content.contented;
  report.per_agent_gap = content.gaps;
  return report;
}

PerturbationPlan suggest_dummies(const GameConfig& cfg, const Network& net,
                                 std::optional<double> capacity) {
  require_consistent(cfg, net);
  PerturbationPlan plan;

  struct Need {
    AgentIndex agent;
    std::size_t links;
  };
  std::vector<Need> needs;
  for (AgentIndex i = 0; i < net.size(); ++i) {
    const double best = per_agent_max_utility(cfg, i);
    const std::size_t eta = net.degree(i);
    if (std::fabs(best - utility_at_degree(cfg, i, eta)) <= cfg.epsilon) continue;
    // Smallest degree above the current one that reaches the maximum.
    const std::size_t cap = feasible_degree_cap(cfg, i);
    std::optional<std::size_t> reach;
    for (std::size_t k = eta + 1; k <= cap; ++k) {
      if (std::fabs(best - utility_at_degree(cfg, i, k)) <= cfg.epsilon) {
        reach = k;
        break;
      }
    }
    if (!reach) {
      plan.unresolved.push_back(i);
      continue;
    }
    needs.push_back({i, *reach - eta});
  }

  // Largest data first; each agent uses distinct devices.
  std::stable_sort(needs.begin(), needs.end(), [&](const Need& a, const Need& b) {
    return cfg.agents[a.agent].d > cfg.agents[b.agent].d;
  });
  std::vector<double> used;
  for (const Need& need : needs) {
    const double size = cfg.agents[need.agent].d;
    if (capacity && size > *capacity + cfg.epsilon) {
      plan.unresolved.push_back(need.agent);
      continue;
    }
    std::size_t placed = 0;
    for (std::size_t k = 0; k < plan.dummies.size() && placed < need.links; ++k) {
      if (capacity && used[k] + size > *capacity + cfg.epsilon) continue;
      plan.dummies[k].links.push_back(need.agent);
      used[k] += size;
      ++placed;
    }
    while (placed < need.links) {
      plan.dummies.push_back({capacity, {need.agent}});
      used.push_back(size);
      ++placed;
    }
  }
  for (auto& dummy : plan.dummies) {
    std::sort(dummy.links.begin(), dummy.links.end());
  }
  std::sort(plan.unresolved.begin(), plan.unresolved.end());
  return plan;
}

std::vector<double> utilities_with_plan(const GameConfig& cfg,
                                        const Network& net,
                                        const PerturbationPlan& plan) {
  require_consistent(cfg, net);
  std::vector<std::size_t> degrees = net.degrees();
  for (const auto& dummy : plan.dummies) {
    for (AgentIndex i : dummy.links) ++degrees.at(i);
  }
  std::vector<double> out;
  for (AgentIndex i = 0; i < net.size(); ++i) {
    out.push_back(utility_at_degree(cfg, i, degrees[i]));
  }
  return out;
}

}  // namespace netform
