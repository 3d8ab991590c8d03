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

#include "fixtures.hpp"
#include "netform/oracle.hpp"
#include "netform/stability.hpp"
#include "netform/welfare.hpp"

using namespace netform;

TEST_CASE("efficiency of the six-agent examples") {
  const GameConfig cfg = fixtures::base_config(6);
  const WelfareReport g2 = is_efficient(cfg, fixtures::regular6());
  CHECK(g2.efficient);
  CHECK(g2.contented);
  CHECK(g2.max_welfare == doctest::Approx(6 * fixtures::mo_utility(0.6, 0.2, 0.0055, 3)));
  CHECK_FALSE(g2.brute_force);
  for (const Network& net : {fixtures::welfare_g1(), fixtures::welfare_g3()}) {
    CHECK(is_bilaterally_stable(cfg, net, StabilityMode::Plain).stable);
    const WelfareReport r = is_efficient(cfg, net);
    CHECK_FALSE(r.efficient);
    CHECK_FALSE(r.contented);
  }
}

TEST_CASE("odd population picks the side given by the threshold") {
  const double threshold = efficiency_threshold(0.6, 0.2, 3);
  CHECK(threshold == doctest::Approx(0.01152).epsilon(1e-9));
  CHECK(std::fabs(threshold - 0.01152) <= 1e-9);

  const auto up = optimal_degree_profiles(fixtures::base_config(7));
  REQUIRE(up.size() == 1);
  CHECK(up.front() == DegreeSequence({4, 3, 3, 3, 3, 3, 3}));

  GameConfig high = fixtures::base_config(7);
  high.c = 0.012;  // still eta_hat = 3, above the threshold
  const auto down = optimal_degree_profiles(high);
  REQUIRE(down.size() == 1);
  CHECK(down.front() == DegreeSequence({3, 3, 3, 3, 3, 3, 2}));

  GameConfig equal = fixtures::base_config(7);
  equal.c = threshold;
  CHECK(optimal_degree_profiles(equal).size() == 2);
  const double w_up = 6 * utility_at_degree(equal, 0, 3) + utility_at_degree(equal, 0, 4);
  const double w_down = 6 * utility_at_degree(equal, 0, 3) + utility_at_degree(equal, 0, 2);
  CHECK(std::fabs(w_up - w_down) <= 1e-9);
}

TEST_CASE("closed-form maximum matches brute force at N = 5") {
  for (double c : {0.0055, 0.012, 0.05, 0.2}) {
    GameConfig cfg = fixtures::base_config(5);
    cfg.c = c;
    const BruteForceWelfare brute = brute_force_max_welfare(cfg);
    const WelfareReport r = is_efficient(cfg, network_from_mask(5, brute.argmax_masks.front()));
    CHECK(r.efficient);
    CHECK(r.max_welfare == doctest::Approx(brute.max_welfare).epsilon(1e-12));
  }
}

TEST_CASE("SO classes") {
  GameConfig svn = fixtures::base_config(5, Framework::SO);
  svn.agents[2].s = 5;
  CHECK(optimal_degree_profiles(svn).front() == DegreeSequence({4, 4, 4, 4, 4}));
  CHECK(is_efficient(svn, Network::complete(5)).efficient);

  const GameConfig srn = fixtures::srn_so(60, 20, 0.5, 0.1, 5);
  CHECK(optimal_degree_profiles(srn).front() == DegreeSequence({3, 3, 3, 3, 2}));
  CHECK(is_efficient(srn, fixtures::five_with_e_short()).efficient);
  // Overdrawn networks are never efficient.
  CHECK_FALSE(is_efficient(srn, Network::complete(5)).efficient);
}

TEST_CASE("general class uses enumeration and has a size limit") {
  GameConfig cfg = fixtures::base_config(4);
  cfg.agents[0].beta = 0.9;
  cfg.agents[1].d = 2;
  REQUIRE(classify(cfg) == NetworkClass::General);
  const WelfareReport r = is_efficient(cfg, Network::complete(4));
  CHECK(r.brute_force);
  CHECK_THROWS_AS(optimal_degree_profiles(cfg), UnsupportedError);
  GameConfig big = fixtures::base_config(7);
  big.agents[0].beta = 0.9;
  big.agents[1].d = 2;
  CHECK_THROWS_AS(is_efficient(big, Network::null(7)), UnsupportedError);
}

TEST_CASE("contentment") {
  const GameConfig six = fixtures::base_config(6);
  const ContentmentReport ok = is_contented(six, fixtures::regular6());
  CHECK(ok.contented);
  for (double g : ok.gaps) CHECK(std::fabs(g) <= 1e-12);

  const GameConfig five = fixtures::base_config(5);
  const ContentmentReport short_e = is_contented(five, fixtures::five_with_e_short());
  CHECK_FALSE(short_e.contented);
  CHECK(short_e.gaps[4] > 0);
  CHECK(std::fabs(short_e.gaps[0]) <= 1e-12);
}

TEST_CASE("no contented network when N and eta_hat are both odd") {
  const GameConfig cfg = fixtures::base_config(5);
  std::size_t contented = 0;
  for_each_graph(5, [&](std::uint64_t, const Network& net) {
    if (is_contented(cfg, net).contented) ++contented;
  });
  CHECK(contented == 0);
}

TEST_CASE("dummy devices") {
  const GameConfig cfg = fixtures::base_config(5);
  const Network net = fixtures::five_with_e_short();
  const PerturbationPlan plan = suggest_dummies(cfg, net);
  REQUIRE(plan.dummies.size() == 1);
  CHECK(plan.dummies.front().links == std::vector<AgentIndex>{4});
  CHECK_FALSE(plan.dummies.front().capacity);
  CHECK(plan.unresolved.empty());
  const auto after = utilities_with_plan(cfg, net, plan);
  for (AgentIndex i = 0; i < 5; ++i) {
    CHECK(after[i] == doctest::Approx(per_agent_max_utility(cfg, i)).epsilon(1e-12));
  }

  CHECK(suggest_dummies(fixtures::base_config(6), fixtures::regular6()).dummies.empty());

  // Every agent is short by two links: two devices shared by all four.
  const Network sparse = Network::from_edges(4, {{0, 1}, {2, 3}});
  const PerturbationPlan two = suggest_dummies(fixtures::base_config(4), sparse);
  CHECK(two.dummies.size() == 2);

  // A capacity of one data unit forces one device per link.
  const PerturbationPlan packed = suggest_dummies(fixtures::base_config(4), sparse, 1.0);
  CHECK(packed.dummies.size() == 8);
  CHECK(*packed.dummies.front().capacity == 1.0);

  // Agents above their target cannot be fixed by adding links.
  const PerturbationPlan over = suggest_dummies(fixtures::base_config(5), Network::complete(5));
  CHECK(over.unresolved.size() == 5);
}

TEST_CASE("efficient implies stable on every six-agent graph") {
  const GameConfig cfg = fixtures::base_config(6);
  const BruteForceWelfare brute = brute_force_max_welfare(cfg);
  for (std::uint64_t mask : brute.argmax_masks) {
    CHECK(is_bilaterally_stable(cfg, network_from_mask(6, mask), StabilityMode::Plain).stable);
  }
}
