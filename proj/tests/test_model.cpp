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

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "netform/model.hpp"

using namespace netform;

TEST_CASE("degree") {
  CHECK(degree(Network::null(3), 0) == 0);
  CHECK(degree(Network::complete(5), 2) == 4);
  CHECK(degree(fixtures::seven_one_short(), 6) == 2);
  CHECK_THROWS_AS(degree(Network::null(3), 3), std::invalid_argument);
}

TEST_CASE("network invariants") {
  Network net(4);
  net.add_edge(2, 1);
  CHECK(net.has_edge(1, 2));
  CHECK(net.edges().front() == Edge(1, 2));
  CHECK_THROWS_AS(net.add_edge(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(net.add_edge(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(net.remove_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(net.add_edge(0, 4), std::invalid_argument);
  CHECK(Network::complete(6).edge_count() == 15);
}

TEST_CASE("utility values") {
  const GameConfig mo = fixtures::base_config(6);
  const GameConfig so = fixtures::base_config(6, Framework::SO);
  CHECK(utility_at_degree(mo, 0, 0) == 0.0);
  CHECK(utility_at_degree(so, 0, 0) == 0.0);
  CHECK(utility_at_degree(mo, 0, 3) == doctest::Approx(0.5787).epsilon(1e-12));
  CHECK(utility_at_degree(so, 0, 3) == doctest::Approx(0.5952).epsilon(1e-12));
  for (int eta = 0; eta < 6; ++eta) {
    CHECK(utility_at_degree(mo, 0, eta) ==
          doctest::Approx(fixtures::mo_utility(0.6, 0.2, 0.0055, eta)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(utility(mo, Network::null(5), 0), std::invalid_argument);
}

TEST_CASE("total welfare") {
  CHECK(total_welfare(fixtures::base_config(4), Network::null(4)) == 0.0);
  CHECK(total_welfare(fixtures::base_config(6), fixtures::regular6()) ==
        doctest::Approx(3.4722).epsilon(1e-12));
  CHECK(total_welfare(fixtures::base_config(4, Framework::SO), Network::complete(4)) ==
        doctest::Approx(2.3808).epsilon(1e-12));
}

TEST_CASE("classify") {
  GameConfig cfg = GameConfig::symmetric(Framework::MO, 0.2, 0.1, {0.6, 60, 20, 0.5}, 2);
  CHECK(classify(cfg) == NetworkClass::SV_SRN);
  cfg.agents[1].s = 50;
  CHECK(classify(cfg) == NetworkClass::SVN);
  cfg.agents[1] = cfg.agents[0];
  cfg.agents[1].beta = 0.7;
  CHECK(classify(cfg) == NetworkClass::SRN);
  cfg.agents[1].d = 1;
  CHECK(classify(cfg) == NetworkClass::General);
  CHECK(to_string(NetworkClass::SV_SRN) == "SV-SRN");
}

TEST_CASE("config validation") {
  GameConfig cfg = fixtures::base_config(3);
  cfg.lambda = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = fixtures::base_config(3);
  cfg.c = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = fixtures::base_config(3);
  cfg.agents[0].beta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = fixtures::base_config(3);
  cfg.agents.clear();
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(parse_framework("SO") == Framework::SO);
  CHECK_THROWS_AS(parse_framework("XX"), std::invalid_argument);
}

TEST_CASE("components") {
  CHECK(components(Network::null(4)).size() == 4);
  CHECK(components(Network::complete(6)).size() == 1);
  const auto three_components15 = components(fixtures::three_components15());
  REQUIRE(three_components15.size() == 3);
  for (const auto& comp : three_components15) CHECK(comp.size() == 5);
}

TEST_CASE("components form a partition of connected sets") {
  const Network net = Network::from_edges(8, {{0, 5}, {5, 7}, {1, 2}, {3, 4}});
  const auto comps = components(net);
  std::set<AgentIndex> seen;
  std::vector<int> label(8, -1);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (AgentIndex v : comps[k]) {
      CHECK(seen.insert(v).second);
      label[v] = static_cast<int>(k);
    }
  }
  CHECK(seen.size() == 8);
  for (const Edge& e : net.edges()) CHECK(label[e.i] == label[e.j]);
  CHECK(comps.front() == std::vector<AgentIndex>{0, 5, 7});
}

TEST_CASE("SO utility increases and MO marginal decreases") {
  const GameConfig mo = fixtures::base_config(30);
  const GameConfig so = fixtures::base_config(30, Framework::SO);
  double prev_gain = 1e9;
  for (std::size_t eta = 0; eta < 20; ++eta) {
    CHECK(utility_at_degree(so, 0, eta + 1) > utility_at_degree(so, 0, eta));
    const double gain = utility_at_degree(mo, 0, eta + 1) - utility_at_degree(mo, 0, eta);
    CHECK(gain < prev_gain);
    CHECK(gain == doctest::Approx(0.6 * std::pow(0.2, eta) * 0.8 - 0.0055).epsilon(1e-9));
    prev_gain = gain;
  }
}

TEST_CASE("utility depends only on degree") {
  const GameConfig cfg = fixtures::base_config(6);
  const Network a = fixtures::regular6();
  const Network b = Network::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                                            {5, 0}, {0, 3}, {1, 4}, {2, 5}});
  for (AgentIndex i = 0; i < 6; ++i) CHECK(utility(cfg, a, i) == utility(cfg, b, i));
}
