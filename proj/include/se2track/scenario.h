// Copyright 2026 The se2track Authors
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

#ifndef SE2TRACK_SCENARIO_H_
#define SE2TRACK_SCENARIO_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "se2track/controllers.h"
#include "se2track/formation.h"
#include "se2track/input_program.h"
#include "se2track/network.h"

namespace se2track {

enum class Mode { kTrack, kConsensus, kFormation };

// Initial condition of one robot. The lateral velocity is structurally zero.
struct NodeInit {
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
  double omega = 0.0;
  double vx = 0.0;
};

// A complete, validated simulation description. See docs in README.md for
// the file schema.
struct Scenario {
  Mode mode = Mode::kTrack;
  double duration = 10.0;
  double dt = 1e-3;
  LogBranch branch = LogBranch::kPlusPi;
  Gains gains;
  Topology topology;
  std::vector<NodeInit> nodes;
  InputProgram leader_program;
  FormationSpec formation;  // populated in formation mode
  std::string output_name;  // CSV file name; defaults from the scenario stem
  std::string name;         // scenario stem, for reporting
};

// Parse or validation failure; the message carries the file, line and field.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Loads and fully validates a scenario file (topology checked, weights
// checked, mode-specific sections present). Throws ScenarioError.
Scenario LoadScenario(const std::string& path);

// Parses scenario text; `source_name` labels error messages.
Scenario ParseScenario(const std::string& text, const std::string& source_name);

// Re-checks the cross-field invariants of an in-memory scenario (positive
// dt, duration >= dt, gains positive, node table complete, offsets present
// in formation mode). Returns the validated topology.
TopologyInfo ValidateScenario(const Scenario& scenario);

}  // namespace se2track

#endif  // SE2TRACK_SCENARIO_H_
