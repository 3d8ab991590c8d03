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
#include <optional>
#include <string_view>

#include "netform/model.hpp"

namespace netform {

/// What determined the stability point.
enum class Binding { LogFormula, StorageCap, BudgetCap, AllOthers };

std::string_view to_string(Binding binding);

struct LogBounds {
  double lower = 0.0;  // no incentive to add at or above this degree
  double upper = 0.0;  // no incentive to delete at or below this degree
};

/// Degree bounds from the add/delete marginal conditions under MO:
///   lower = |ln(c / (beta (1 - lambda)))| / |ln lambda|
///   upper = |ln(c lambda / (beta (1 - lambda)))| / |ln lambda| = lower + 1
/// Returns nullopt when c >= beta (1 - lambda): no link is ever worth its
/// cost and the absolute-value form no longer inverts the inequality.
std::optional<LogBounds> log_bounds(double beta, double lambda, double c);

/// Signed form ln(c / (beta (1 - lambda))) / ln(lambda). Equals
/// log_bounds().lower inside the valid regime and is <= 0 outside it.
double signed_lower_bound(double beta, double lambda, double c);

struct StabilityPointReport {
  /// Raw stability point, not capped at N - 1.
  std::size_t eta_hat = 0;
  double lower_L = 0.0;
  double upper_U = 0.0;
  Binding binding = Binding::LogFormula;
  /// lower_L is an integer within epsilon: both eta_hat and eta_hat + 1 leave
  /// every agent without a strict incentive to move.
  bool boundary_tie = false;
  bool capped_by_population = false;
  std::size_t population = 0;

  /// min(eta_hat, N - 1): the largest degree actually reachable.
  std::size_t achievable() const;
};

/// Largest k with k * unit <= total (within eps). unit == 0 means unbounded
/// and yields nullopt.
std::optional<std::size_t> capacity_count(double total, double unit,
                                          double eps);

/// SVN (or SV-SRN) under MO with sufficient storage.
StabilityPointReport stability_point_svn_mo(const GameConfig& cfg);

/// SV-SRN under MO: min(SVN point, floor(s / d)).
StabilityPointReport stability_point_svsrn_mo(const GameConfig& cfg);

/// SVN under SO with sufficient resources: N - 1.
StabilityPointReport stability_point_svn_so(const GameConfig& cfg);

/// SRN (or SV-SRN) under SO: min(floor(s / d), floor(b / c)).
StabilityPointReport stability_point_srn_so(const GameConfig& cfg);

/// Dispatches on (classify(cfg), framework). SV-SRN under MO uses the
/// storage-capped point; SVN under MO assumes sufficient storage.
/// Throws UnsupportedError for General and for SRN under MO.
StabilityPointReport stability_point(const GameConfig& cfg);

}  // namespace netform
