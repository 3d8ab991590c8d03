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

#include "netform/stability_point.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace netform {

std::string_view to_string(Binding binding) {
  switch (binding) {
    case Binding::LogFormula: return "log-formula";
    case Binding::StorageCap: return "storage-cap";
    case Binding::BudgetCap: return "budget-cap";
    case Binding::AllOthers: return "all-others";
  }
  return "log-formula";
}

double signed_lower_bound(double beta, double lambda, double c) {
  return std::log(c / (beta * (1.0 - lambda))) / std::log(lambda);
}

std::optional<LogBounds> log_bounds(double beta, double lambda, double c) {
  if (!(lambda > 0.0 && lambda < 1.0) || !(c > 0.0) || !(beta > 0.0)) {
    throw std::invalid_argument("log_bounds: need 0 < lambda < 1, c > 0, beta > 0");
  }
  if (c >= beta * (1.0 - lambda)) return std::nullopt;
  const double log_lambda = std::fabs(std::log(lambda));
  LogBounds bounds;
  bounds.lower = std::fabs(std::log(c / (beta * (1.0 - lambda)))) / log_lambda;
  bounds.upper =
      std::fabs(std::log(c * lambda / (beta * (1.0 - lambda)))) / log_lambda;
  assert(std::fabs(bounds.upper - bounds.lower - 1.0) <= 1e-9);
  return bounds;
}

std::size_t StabilityPointReport::achievable() const {
  if (population == 0) return 0;
  return std::min(eta_hat, population - 1);
}

std::optional<std::size_t> capacity_count(double total, double unit,
                                          double eps) {
  if (unit <= 0.0) return std::nullopt;
  if (total < -eps) return 0;
  auto k = static_cast<std::size_t>(std::floor(std::max(total, 0.0) / unit));
  while (static_cast<double>(k + 1) * unit <= total + eps) ++k;
  while (k > 0 && static_cast<double>(k) * unit > total + eps) --k;
  return k;
}

namespace {

void require(bool ok, const GameConfig& cfg, const char* what) {
  if (!ok) {
    throw UnsupportedError(std::string(what) + " does not apply to class " +
                           std::string(to_string(classify(cfg))) + " under " +
                           std::string(to_string(cfg.framework)));
  }
}

void finish(StabilityPointReport& report, const GameConfig& cfg) {
  report.population = cfg.size();
  report.capped_by_population =
      cfg.size() == 0 || report.eta_hat > cfg.size() - 1;
}

}  // namespace

StabilityPointReport stability_point_svn_mo(const GameConfig& cfg) {
  cfg.validate();
  const NetworkClass cls = classify(cfg);
  require(cfg.framework == Framework::MO &&
              (cls == NetworkClass::SVN || cls == NetworkClass::SV_SRN),
          cfg, "log-formula stability point");

  const double beta = cfg.agents.front().beta;
  const double lambda = cfg.lambda;
  const double c = cfg.c;
  const double eps = cfg.epsilon;

  StabilityPointReport report;
  report.binding = Binding::LogFormula;
  report.lower_L = signed_lower_bound(beta, lambda, c);
  report.upper_U = report.lower_L + 1.0;
  if (auto bounds = log_bounds(beta, lambda, c)) {
    report.lower_L = bounds->lower;
    report.upper_U = bounds->upper;
  }

  // Value of the (k+1)-th link net of its cost. The point is where this
  // changes sign; a value within eps of zero at an integer is a tie.
  auto add_margin = [&](double k) {
    return beta * std::pow(lambda, k) * (1.0 - lambda) - c;
  };

  if (report.lower_L <= 0.0) {
    report.eta_hat = 0;
    report.boundary_tie = std::fabs(add_margin(0.0)) <= eps;
  } else {
    const double nearest = std::round(report.lower_L);
    if (std::fabs(add_margin(nearest)) <= eps) {
      report.eta_hat = static_cast<std::size_t>(nearest);
      report.boundary_tie = true;
    } else {
      report.eta_hat = static_cast<std::size_t>(std::ceil(report.lower_L));
    }
  }
  finish(report, cfg);
  return report;
}

StabilityPointReport stability_point_svsrn_mo(const GameConfig& cfg) {
  require(cfg.framework == Framework::MO &&
              classify(cfg) == NetworkClass::SV_SRN,
          cfg, "storage-capped stability point");
  StabilityPointReport report = stability_point_svn_mo(cfg);
  const auto& agent = cfg.agents.front();
  if (auto cap = capacity_count(agent.s, agent.d, cfg.epsilon)) {
    if (*cap < report.eta_hat) {
      report.eta_hat = *cap;
      report.binding = Binding::StorageCap;
      report.boundary_tie = false;
    } else if (*cap == report.eta_hat) {
      // The upper tie candidate is out of storage reach.
      report.boundary_tie = false;
    }
  }
  finish(report, cfg);
  return report;
}

StabilityPointReport stability_point_svn_so(const GameConfig& cfg) {
  cfg.validate();
  const NetworkClass cls = classify(cfg);
  require(cfg.framework == Framework::SO &&
              (cls == NetworkClass::SVN || cls == NetworkClass::SV_SRN),
          cfg, "complete-network stability point");
  StabilityPointReport report;
  report.eta_hat = cfg.size() - 1;
  report.binding = Binding::AllOthers;
  finish(report, cfg);
  return report;
}

StabilityPointReport stability_point_srn_so(const GameConfig& cfg) {
  cfg.validate();
  const NetworkClass cls = classify(cfg);
  require(cfg.framework == Framework::SO &&
              (cls == NetworkClass::SRN || cls == NetworkClass::SV_SRN),
          cfg, "resource-capped stability point");
  const auto& agent = cfg.agents.front();
  const auto storage_cap = capacity_count(agent.s, agent.d, cfg.epsilon);
  const auto budget_cap = capacity_count(agent.b, cfg.c, cfg.epsilon);

  StabilityPointReport report;
  if (storage_cap && (!budget_cap || *storage_cap <= *budget_cap)) {
    report.eta_hat = *storage_cap;
    report.binding = Binding::StorageCap;
  } else {
    report.eta_hat = budget_cap.value_or(0);
    report.binding = Binding::BudgetCap;
  }
  finish(report, cfg);
  return report;
}

StabilityPointReport stability_point(const GameConfig& cfg) {
  const NetworkClass cls = classify(cfg);
  if (cfg.framework == Framework::MO) {
    if (cls == NetworkClass::SV_SRN) return stability_point_svsrn_mo(cfg);
    if (cls == NetworkClass::SVN) return stability_point_svn_mo(cfg);
  } else {
    if (cls == NetworkClass::SRN || cls == NetworkClass::SV_SRN) {
      return stability_point_srn_so(cfg);
    }
    if (cls == NetworkClass::SVN) return stability_point_svn_so(cfg);
  }
  throw UnsupportedError("no closed-form stability point for class " +
                         std::string(to_string(cls)) + " under " +
                         std::string(to_string(cfg.framework)));
}

}  // namespace netform
