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

#include <json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netform/dynamics.hpp"
#include "netform/model.hpp"
#include "netform/oracle.hpp"
#include "netform/stability.hpp"
#include "netform/stability_point.hpp"
#include "netform/welfare.hpp"

namespace netform::io {

using Json = nlohmann::ordered_json;

/// Malformed input. The message carries "line L, column C" when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Network with optional display names.
struct NamedNetwork {
  Network network;
  std::vector<std::string> names;  // empty, or one per agent
};

/// Parses text; syntax errors are reported with line and column.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

NamedNetwork network_from_json(const Json& j);
Json to_json(const Network& net, const std::vector<std::string>& names = {});

/// Accepts an "agents" list or the "symmetric" shorthand (which carries n).
GameConfig config_from_json(const Json& j);
Json to_json(const GameConfig& cfg);

Json to_json(const StabilityReport& report);
Json to_json(const StabilityPointReport& report);
Json to_json(const WelfareReport& report);
Json to_json(const PerturbationPlan& plan);
Json to_json(const EnumerationSummary& summary);
Json to_json(const VerificationReport& report);
Json to_json(const DegreeSequence& seq);

/// Grid file: a JSON array of configs, each optionally carrying "label".
std::vector<GridEntry> grid_from_json(const Json& j);

inline constexpr const char* kTraceHeader =
    "round,kind,i,j,accepted,gain_i,gain_j,feasible_i,feasible_j";

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

/// Undirected DOT graph; names label the nodes when given.
void write_dot(std::ostream& out, const Network& net,
               const std::vector<std::string>& names = {});

}  // namespace netform::io
