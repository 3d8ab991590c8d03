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

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "netform/oracle.hpp"
#include "netform/stability.hpp"

using namespace netform;

namespace {

// Star centred on agent 0 with `leaves` leaves, inside n agents.
Network star(std::size_t n, std::size_t leaves) {
  Network net(n);
  for (std::size_t k = 1; k <= leaves; ++k) net.add_edge(0, k);
  return net;
}

}  // namespace

TEST_CASE("remaining storage and budget") {
  const GameConfig a = fixtures::srn_so(60, 20, 0.5, 0.1, 6);
  const GameConfig b = fixtures::srn_so(60, 10, 0.4, 0.1, 6);
  CHECK(remaining_storage(a, Network::null(6), 0) == 60);
  CHECK(remaining_storage(a, star(6, 3), 0) == doctest::Approx(0.0));
  CHECK(remaining_storage(b, star(6, 4), 0) == doctest::Approx(20.0));
  CHECK(remaining_budget(a, Network::null(6), 0) == doctest::Approx(0.5));
  CHECK(remaining_budget(a, star(6, 3), 0) == doctest::Approx(0.2));
  CHECK(remaining_budget(b, star(6, 4), 0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gain predicates reproduce the worked marginals") {
  const GameConfig cfg = fixtures::base_config(7);
  const Network s = fixtures::seven_one_short();
  // Agent a (0) at degree 3, g (6) at degree 2.
  CHECK(gain_from_add(cfg, s, 0, 6) == doctest::Approx(0.00384 - 0.0055).epsilon(1e-9));
  CHECK(gain_from_add(cfg, s, 6, 0) == doctest::Approx(0.0192 - 0.0055).epsilon(1e-9));
  CHECK(gain_from_delete(cfg, s, 0, 1) == doctest::Approx(0.0055 - 0.0192).epsilon(1e-9));
  CHECK(gain_from_delete(cfg, star(7, 2), 0, 1) ==
        doctest::Approx(0.0055 - 0.096).epsilon(1e-9));
  CHECK_THROWS_AS(gain_from_add(cfg, s, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(gain_from_delete(cfg, s, 0, 6), std::invalid_argument);

  const GameConfig so = fixtures::base_config(7, Framework::SO);
  for (std::size_t leaves = 0; leaves < 6; ++leaves) {
    const double expect = 0.6 * std::pow(0.2, leaves) * 0.8;
    CHECK(gain_from_add(so, star(7, leaves), 0, 6) == doctest::Approx(expect).epsilon(1e-12));
  }
  CHECK(gain_from_delete(so, star(7, 3), 0, 1) ==
        doctest::Approx(-0.6 * (0.04 - 0.008)).epsilon(1e-12));
}

TEST_CASE("gain from adding ignores the partner") {
  const GameConfig cfg = fixtures::base_config(6);
  const Network net = star(6, 2);
  for (AgentIndex j = 3; j < 6; ++j) {
    CHECK(gain_from_add(cfg, net, 1, j) == gain_from_add(cfg, net, 1, 3));
  }
}

TEST_CASE("add feasibility") {
  const GameConfig a = fixtures::srn_so(60, 20, 0.5, 0.1, 6);
  const GameConfig b = fixtures::srn_so(60, 10, 0.4, 0.1, 6);
  CHECK(add_feasible(a, star(6, 3), 1, 4, StabilityMode::Plain));
  // Agent 4 asks: does 0 have room? 0 already hosts three.
  CHECK_FALSE(add_feasible(a, star(6, 3), 4, 0, StabilityMode::StorageConstrained));
  CHECK(add_feasible(a, star(6, 3), 0, 4, StabilityMode::StorageConstrained));
  CHECK_FALSE(add_feasible(b, star(6, 4), 0, 5, StabilityMode::StorageAndBudgetConstrained));
  CHECK(add_feasible(b, star(6, 4), 0, 5, StabilityMode::StorageConstrained));
}

TEST_CASE("worked stability verdicts") {
  CHECK(is_bilaterally_stable(fixtures::base_config(6), fixtures::regular6(), StabilityMode::Plain).stable);
  CHECK(is_bilaterally_stable(fixtures::base_config(7), fixtures::seven_one_short(), StabilityMode::Plain).stable);

  const StabilityReport r = is_bilaterally_stable(
      fixtures::base_config(6), fixtures::two_triangles(), StabilityMode::Plain);
  CHECK_FALSE(r.stable);
  CHECK(r.violations.size() == 9);
  for (const auto& v : r.violations) {
    CHECK(v.kind == MoveKind::Add);
    CHECK(v.pair.i < 3);
    CHECK(v.pair.j >= 3);
  }
}

TEST_CASE("closed-form conditions") {
  const GameConfig svn_so = [] {
    GameConfig cfg = fixtures::base_config(5, Framework::SO);
    cfg.agents[1].s = 7;
    return cfg;
  }();
  CHECK(classify(svn_so) == NetworkClass::SVN);
  CHECK(check_theorem_conditions(svn_so, Network::complete(5)).stable);
  Network almost = Network::complete(5);
  almost.remove_edge(1, 3);
  CHECK_FALSE(check_theorem_conditions(svn_so, almost).stable);

  CHECK(check_theorem_conditions(fixtures::srn_so(60, 20, 0.5, 0.1, 6), fixtures::regular6()).stable);
  CHECK(check_theorem_conditions(fixtures::srn_so(60, 10, 0.4, 0.1, 6),
                                 fixtures::four_regular6()).stable);

  GameConfig general = fixtures::base_config(3);
  general.agents[0].beta = 0.9;
  general.agents[1].d = 3;
  CHECK_THROWS_AS(check_theorem_conditions(general, Network::null(3)), UnsupportedError);
  GameConfig srn_mo = fixtures::base_config(3);
  srn_mo.agents[0].beta = 0.9;
  CHECK_THROWS_AS(check_theorem_conditions(srn_mo, Network::null(3)), UnsupportedError);
}

TEST_CASE("closed form agrees with the definition on every 5-agent graph") {
  const std::vector<GameConfig> configs = {
      fixtures::base_config_svn(5),
      GameConfig::symmetric(Framework::MO, 0.2, 0.0055, {0.6, 40, 20, 1}, 5),
      fixtures::srn_so(60, 20, 0.5, 0.1, 5),
      fixtures::srn_so(60, 10, 0.25, 0.1, 5),
  };
  for (const auto& cfg : configs) {
    std::size_t disagreements = 0;
    for_each_graph(5, [&](std::uint64_t, const Network& net) {
      const StabilityReport closed = check_theorem_conditions(cfg, net);
      if (closed.stable != is_bilaterally_stable(cfg, net, closed.mode).stable) {
        ++disagreements;
      }
    });
    CHECK(disagreements == 0);
  }
}

TEST_CASE("SO complete network is stable; MO null network stability threshold") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_bilaterally_stable(fixtures::base_config(n, Framework::SO), Network::complete(n),
                                StabilityMode::Plain).stable);
  }
  GameConfig cfg = fixtures::base_config(4);
  cfg.c = 0.48;  // beta (1 - lambda)
  CHECK(is_bilaterally_stable(cfg, Network::null(4), StabilityMode::Plain).stable);
  cfg.c = 0.47;
  CHECK_FALSE(is_bilaterally_stable(cfg, Network::null(4), StabilityMode::Plain).stable);
}

TEST_CASE("verdict is invariant under relabeling") {
  const GameConfig cfg = fixtures::base_config(6);
  std::vector<AgentIndex> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  for (std::uint64_t mask = 0; mask < 2000; mask += 7) {
    const Network net = network_from_mask(6, mask * 13 % 32768);
    std::shuffle(perm.begin(), perm.end(), rng);
    Network moved(6);
    for (const Edge& e : net.edges()) moved.add_edge(perm[e.i], perm[e.j]);
    CHECK(is_bilaterally_stable(cfg, net, StabilityMode::Plain).stable ==
          is_bilaterally_stable(cfg, moved, StabilityMode::Plain).stable);
  }
}

TEST_CASE("overdrawn networks are analyzed and flagged") {
  const GameConfig cfg = fixtures::srn_so(60, 20, 0.5, 0.1, 6);
  const StabilityReport r =
      is_bilaterally_stable(cfg, star(6, 5), StabilityMode::StorageAndBudgetConstrained);
  CHECK(r.overdrawn_agents == std::vector<AgentIndex>{0});
  CHECK(parse_mode("storage-budget") == StabilityMode::StorageAndBudgetConstrained);
  CHECK_THROWS_AS(parse_mode("loose"), std::invalid_argument);
  CHECK(default_mode(Framework::MO) == StabilityMode::StorageConstrained);
}
