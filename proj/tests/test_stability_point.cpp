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

#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "netform/oracle.hpp"
#include "netform/stability.hpp"
#include "netform/stability_point.hpp"

using namespace netform;

namespace {

GameConfig mo(double c, double s = 1000.0, double d = 1.0, std::size_t n = 6) {
  return GameConfig::symmetric(Framework::MO, 0.2, c, {0.6, s, d, 1000.0}, n);
}

}  // namespace

TEST_CASE("log bounds") {
  const auto b = log_bounds(0.6, 0.2, 0.0055);
  REQUIRE(b);
  CHECK(b->lower == doctest::Approx(std::log(0.0055 / 0.48) / std::log(0.2)).epsilon(1e-12));
  CHECK(b->lower == doctest::Approx(2.7768).epsilon(1e-4));
  CHECK(b->upper - b->lower == doctest::Approx(1.0).epsilon(1e-12));

  const auto tie = log_bounds(0.6, 0.2, 0.096);
  REQUIRE(tie);
  CHECK(tie->lower == doctest::Approx(1.0).epsilon(1e-12));

  const double c5 = 0.6 * 0.8 * std::pow(0.2, 5);
  const auto five = log_bounds(0.6, 0.2, c5);
  REQUIRE(five);
  CHECK(five->lower == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(five->upper == doctest::Approx(6.0).epsilon(1e-12));

  CHECK_FALSE(log_bounds(0.6, 0.2, 0.5));
  CHECK_FALSE(log_bounds(0.6, 0.2, 0.48));
}

TEST_CASE("U - L = 1 over random triples") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(1e-3, 1.0 - 1e-3);
  int checked = 0;
  while (checked < 10000) {
    const double beta = 0.01 + 10.0 * unit(rng);
    const double lambda = unit(rng);
    const double c = beta * (1.0 - lambda) * unit(rng);
    const auto b = log_bounds(beta, lambda, c);
    REQUIRE(b);
    CHECK(std::fabs(b->upper - b->lower - 1.0) <= 1e-9);
    if (std::fabs(b->lower - std::round(b->lower)) > 1e-9) {
      CHECK(std::ceil(b->lower) == std::floor(b->upper));
    }
    ++checked;
  }
}

TEST_CASE("SVN MO stability point") {
  const StabilityPointReport r = stability_point_svn_mo(fixtures::base_config_svn(6));
  CHECK(r.eta_hat == 3);
  CHECK(r.binding == Binding::LogFormula);
  CHECK_FALSE(r.boundary_tie);

  const StabilityPointReport zero = stability_point_svn_mo(mo(0.5));
  CHECK(zero.eta_hat == 0);
  CHECK(gain_from_add(mo(0.5), Network::null(6), 0, 1) < 0);

  const StabilityPointReport tie = stability_point_svn_mo(mo(0.096));
  CHECK(tie.eta_hat == 1);
  CHECK(tie.boundary_tie);

  const StabilityPointReport capped = stability_point_svn_mo(mo(0.0003, 1000, 1, 4));
  CHECK(capped.eta_hat == 5);
  CHECK(capped.capped_by_population);
  CHECK(capped.achievable() == 3);
}

TEST_CASE("tie point: neither L nor L + 1 wants to move") {
  const GameConfig cfg = mo(0.096);
  const Network star1 = Network::from_edges(6, {{0, 1}});
  const Network star2 = Network::from_edges(6, {{0, 1}, {0, 2}});
  CHECK_FALSE(strictly_beneficial(cfg, gain_from_add(cfg, star1, 0, 3)));
  CHECK_FALSE(strictly_beneficial(cfg, gain_from_delete(cfg, star2, 0, 1)));
  CHECK(strictly_beneficial(cfg, gain_from_add(cfg, Network::null(6), 0, 1)));
}

TEST_CASE("sandwich around the stability point") {
  for (double c : {0.2, 0.05, 0.0055, 0.0003}) {
    const GameConfig cfg = mo(c, 1000, 1, 8);
    const std::size_t eta = stability_point(cfg).eta_hat;
    auto gain_add = [&](std::size_t k) {
      return utility_at_degree(cfg, 0, k + 1) - utility_at_degree(cfg, 0, k);
    };
    auto gain_delete = [&](std::size_t k) {
      return utility_at_degree(cfg, 0, k - 1) - utility_at_degree(cfg, 0, k);
    };
    CHECK(gain_add(eta) <= 0);
    CHECK(gain_delete(eta) <= 0);
    CHECK(gain_add(eta - 1) > 0);
    CHECK(gain_delete(eta + 1) > 0);
  }
}

TEST_CASE("SV-SRN MO stability point") {
  auto point = [](double s) { return stability_point_svsrn_mo(mo(0.0055, s, 20)); };
  CHECK(point(60).eta_hat == 3);
  CHECK(point(40).eta_hat == 2);
  CHECK(point(40).binding == Binding::StorageCap);
  CHECK(point(200).eta_hat == 3);
  CHECK(point(200).binding == Binding::LogFormula);
  CHECK_THROWS_AS(stability_point_svsrn_mo(fixtures::base_config_svn(4)), UnsupportedError);
}

TEST_CASE("SVN SO stability point") {
  for (std::size_t n : {1, 2, 7}) {
    GameConfig cfg = fixtures::base_config(n, Framework::SO);
    if (n > 1) cfg.agents[1].s = 3;
    CHECK(stability_point_svn_so(cfg).eta_hat == n - 1);
  }
  CHECK(stability_point_svn_so(fixtures::base_config(7, Framework::SO)).binding ==
        Binding::AllOthers);
}

TEST_CASE("SRN SO stability point") {
  const auto a = stability_point_srn_so(fixtures::srn_so(60, 20, 0.5, 0.1, 6));
  CHECK(a.eta_hat == 3);
  CHECK(a.binding == Binding::StorageCap);
  const auto b = stability_point_srn_so(fixtures::srn_so(60, 10, 0.4, 0.1, 6));
  CHECK(b.eta_hat == 4);
  CHECK(b.binding == Binding::BudgetCap);
  CHECK(stability_point_srn_so(fixtures::srn_so(60, 60, 10, 0.1, 6)).eta_hat == 1);
  CHECK(stability_point_srn_so(fixtures::srn_so(60, 0, 0.5, 0.1, 6)).eta_hat == 5);
}

TEST_CASE("stability point does not depend on N except under SVN/SO") {
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto a = stability_point(mo(0.0055, 60, 20, n));
    CHECK(a.eta_hat == 3);
    CHECK(a.lower_L == stability_point(mo(0.0055, 60, 20, 2)).lower_L);
    CHECK(stability_point(fixtures::srn_so(60, 10, 0.4, 0.1, n)).eta_hat == 4);
  }
}

TEST_CASE("stability point equals the sign-flip degree") {
  for (double c : {0.5, 0.2, 0.096, 0.05, 0.0055, 0.0003}) {
    const GameConfig cfg = mo(c);
    CHECK(sign_flip_degree(cfg, 0) == stability_point(cfg).eta_hat);
  }
  // Without a cost the gain only drops below epsilon far out.
  CHECK_FALSE(sign_flip_degree(fixtures::base_config(4, Framework::SO), 0, 8));
}

TEST_CASE("capacity count") {
  CHECK(capacity_count(60, 20, 1e-12) == 3u);
  CHECK(capacity_count(0.3, 0.1, 1e-12) == 3u);
  CHECK(capacity_count(59.9, 20, 1e-12) == 2u);
  CHECK_FALSE(capacity_count(60, 0, 1e-12));
}
