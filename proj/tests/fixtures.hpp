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

#include <cmath>

#include "netform/model.hpp"
#include "netform/structure.hpp"

namespace fixtures {

using netform::Edge;
using netform::Framework;
using netform::GameConfig;
using netform::Network;

inline constexpr double kBeta = 0.6;
inline constexpr double kLambda = 0.2;
inline constexpr double kCost = 0.0055;

// Beta 0.6, lambda 0.2, c 0.0055 with storage that never binds.
inline GameConfig base_config(std::size_t n, Framework fw = Framework::MO) {
  return GameConfig::symmetric(fw, kLambda, kCost, {kBeta, 1000.0, 1.0, 1000.0}, n);
}

// Same values but with storage varying by agent: an SVN config.
inline GameConfig base_config_svn(std::size_t n) {
  GameConfig cfg = base_config(n);
  for (std::size_t i = 0; i < n; ++i) cfg.agents[i].s += static_cast<double>(i);
  return cfg;
}

inline GameConfig srn_so(double s, double d, double b, double c, std::size_t n) {
  return GameConfig::symmetric(Framework::SO, kLambda, c, {kBeta, s, d, b}, n);
}

// a..f = 0..5: ab ac af bd be cd ce df ef.
inline Network regular6() {
  return Network::from_edges(6, {{0, 1}, {0, 2}, {0, 5}, {1, 3}, {1, 4},
                                 {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

// regular6 without ef, plus g (6) linked to e and f.
inline Network seven_one_short() {
  Network net(7);
  for (const Edge& e : regular6().edges()) net.add_edge(e.i, e.j);
  net.remove_edge(4, 5);
  net.add_edge(6, 4);
  net.add_edge(6, 5);
  return net;
}

// 4-regular on 6: complement of a perfect matching.
inline Network four_regular6() {
  Network net = Network::complete(6);
  net.remove_edge(0, 1);
  net.remove_edge(2, 3);
  net.remove_edge(4, 5);
  return net;
}

// Three 5-agent components, each with agent 0 of the block at degree 4.
inline Network three_components15() {
  const Network part = netform::construct_near_regular(5, 3, netform::NearRegular::OneAbove);
  return netform::disjoint_union({part, part, part});
}

// Five agents, e (4) at degree 2, the rest at 3.
inline Network five_with_e_short() {
  return Network::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

inline Network two_triangles() {
  return Network::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// Stable but inefficient six-agent networks for the welfare example.
inline Network welfare_g1() {  // e at degree 1
  return Network::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}});
}
inline Network welfare_g3() {  // e and f at degree 2
  return Network::from_edges(6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 5}});
}

// Independent utility arithmetic.
inline double mo_utility(double beta, double lambda, double c, int eta) {
  double fail = 1.0;
  for (int k = 0; k < eta; ++k) fail *= lambda;
  return beta * (1.0 - fail) - c * eta;
}

}  // namespace fixtures
