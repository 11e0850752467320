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

#ifndef SE2TRACK_SIMULATION_H_
#define SE2TRACK_SIMULATION_H_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "se2track/scenario.h"

namespace se2track {

// One logged sample: state, applied input and tracking errors of one node at
// one instant. err_pose is the norm of the log of the relative-to-target
// pose, err_twist the norm of the relative velocity with respect to the
// target (the global leader in track/consensus mode, the transformed virtual
// leader in formation mode).
struct LogRow {
  double t = 0.0;
  int node = 0;
  double theta = 0.0;
  double x = 0.0;
  double y = 0.0;
  double omega = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  double u_theta = 0.0;
  double u_x = 0.0;
  double err_pose = 0.0;
  double err_twist = 0.0;
};

struct TrajectoryLog {
  std::vector<LogRow> rows;  // (steps+1) * node_count, grouped per instant
};

// Scalar outcomes of one run. `verify` checks these against a tolerance.
struct Summary {
  double terminal_err = 0.0;      // max over followers, full log norm at T
  double terminal_pos_err = 0.0;  // max over followers, position part at T
  double max_vy = 0.0;            // max |vy| over all nodes and steps
  // First time after which every follower's err_pose stays below 1% of its
  // initial value; -1 when that never happens.
  double conv_time = -1.0;
  // Formation mode: max |side velocity| of any transformed leader.
  double max_transformed_vy = 0.0;
  // Max gap between the tracking law and its subsystem-assembled form over
  // the commanded (torque, force) channels.
  double max_law_gap = 0.0;
  std::vector<double> follower_terminal_err;  // indexed by node, 0 for node 0
};

struct RunResult {
  TrajectoryLog log;
  Summary summary;
};

// A state component left the sane range (non-finite or beyond 1e9);
// gain or step-size misconfiguration.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(double t, const std::string& message)
      : std::runtime_error(message), t_(t) {}
  double t() const { return t_; }

 private:
  double t_ = 0.0;
};

// Fixed-step closed-loop run of a validated scenario. Throws DivergenceError
// (see above) or ScenarioError (validation).
RunResult Run(const Scenario& scenario);

// Writes the log as CSV: header
//   t,node,theta,x,y,omega,vx,vy,u_theta,u_x,err_pose,err_twist
// and one row per (step, node), numbers with 9 significant digits.
void WriteCsv(const TrajectoryLog& log, std::ostream& out);

// Looks up a summary metric by its `verify --check` name (terminal_err,
// terminal_pos_err, max_vy, conv_time, max_transformed_vy, max_law_gap).
// Throws std::out_of_range for unknown names.
double SummaryMetric(const Summary& summary, const std::string& name);

}  // namespace se2track

#endif  // SE2TRACK_SIMULATION_H_
