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

#include "se2track/simulation.h"

#include <cmath>
#include <cstdio>
#include <map>

namespace se2track {

namespace {

constexpr double kDivergenceLimit = 1e9;
// Below this virtual-leader speed the formation attitude is degenerate and
// the pose error is scored on position alone.
constexpr double kStoppedLeaderTolerance = 1e-6;

bool Sane(double value) {
  return std::isfinite(value) && std::abs(value) <= kDivergenceLimit;
}

void CheckDivergence(const std::vector<RobotState>& states, double t) {
  for (std::size_t i = 0; i < states.size(); ++i) {
    const RobotState& s = states[i];
    if (!Sane(s.pose.x()) || !Sane(s.pose.y()) || !std::isfinite(s.pose.theta()) ||
        !Sane(s.twist.omega) || !Sane(s.twist.vx) || !Sane(s.twist.vy)) {
      throw DivergenceError(
          t, "numerical divergence at node " + std::to_string(i) + ", t = " +
                 std::to_string(t));
    }
  }
}

struct NodeErrors {
  double err_pose = 0.0;
  double err_twist = 0.0;
};

}  // namespace

RunResult Run(const Scenario& scenario) {
  const TopologyInfo info = ValidateScenario(scenario);
  const int node_count = scenario.topology.node_count;
  const long long steps = std::llround(scenario.duration / scenario.dt);

  std::vector<RobotState> states(node_count);
  for (int i = 0; i < node_count; ++i) {
    const NodeInit& init = scenario.nodes[i];
    states[i] = {Pose(init.theta, init.x, init.y),
                 Twist{init.omega, init.vx, 0.0}};
  }

  RunResult result;
  result.log.rows.reserve(static_cast<std::size_t>(steps + 1) * node_count);
  Summary& summary = result.summary;
  summary.follower_terminal_err.assign(node_count, 0.0);

  const bool formation_mode = scenario.mode == Mode::kFormation;
  std::vector<NodeErrors> errors(node_count);

  for (long long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * scenario.dt;
    const ControlInput leader_input = scenario.leader_program.Eval(t);
    const std::vector<ControlInput> inputs =
        formation_mode
            ? FormationStepInputs(info, states, scenario.formation,
                                  leader_input, scenario.gains, scenario.branch)
            : ConsensusStepInputs(info, states, leader_input, scenario.gains,
                                  scenario.branch);

    // Per-node tracking errors and the law-gap diagnostic.
    errors[0] = {0.0, 0.0};
    for (int i = 1; i < node_count; ++i) {
      Pose target_pose;
      Twist target_twist;
      VirtualLeader control_target;
      bool position_only = false;
      if (formation_mode) {
        const VirtualLeader virtual_leader =
            BuildVirtualLeader(info, i, states, inputs, scenario.branch);
        control_target =
            TransformLeader(virtual_leader, scenario.formation.offsets[i]);
        target_pose = control_target.pose;
        target_twist = control_target.twist;
        summary.max_transformed_vy = std::max(
            summary.max_transformed_vy, std::abs(control_target.twist.vy));
        // When the leader is stopped the desired attitude is degenerate, so
        // the pose error is scored on position alone.
        position_only = virtual_leader.twist.norm() < kStoppedLeaderTolerance;
      } else {
        control_target =
            BuildVirtualLeader(info, i, states, inputs, scenario.branch);
        target_pose = states[0].pose;
        target_twist = states[0].twist;
      }
      const Pose relative = Inverse(target_pose) * states[i].pose;
      errors[i].err_pose = position_only
                               ? relative.translation().norm()
                               : LogSe2(relative, scenario.branch).norm();
      errors[i].err_twist =
          (states[i].twist - Adjoint(Inverse(relative), target_twist)).norm();

      const TrackingContext context = MakeTrackingContext(
          control_target.pose, control_target.twist, control_target.input,
          states[i], scenario.branch);
      const ControlInput assembled =
          AssembledTrackingInput(context, scenario.gains, scenario.branch);
      summary.max_law_gap = std::max(
          summary.max_law_gap,
          std::max(std::abs(inputs[i].u_theta - assembled.u_theta),
                   std::abs(inputs[i].u_x - assembled.u_x)));
    }

    for (int i = 0; i < node_count; ++i) {
      const RobotState& s = states[i];
      result.log.rows.push_back({t, i, s.pose.theta(), s.pose.x(), s.pose.y(),
                                 s.twist.omega, s.twist.vx, s.twist.vy,
                                 inputs[i].u_theta, inputs[i].u_x,
                                 errors[i].err_pose, errors[i].err_twist});
      summary.max_vy = std::max(summary.max_vy, std::abs(s.twist.vy));
    }

    if (k < steps) {
      for (int i = 0; i < node_count; ++i) {
        states[i] = Step(states[i], inputs[i], scenario.dt);
      }
      CheckDivergence(states, t + scenario.dt);
    }
  }

  // Terminal metrics and convergence time from the log.
  const std::size_t last_instant =
      result.log.rows.size() - static_cast<std::size_t>(node_count);
  for (int i = 1; i < node_count; ++i) {
    const LogRow& row = result.log.rows[last_instant + i];
    summary.follower_terminal_err[i] = row.err_pose;
    summary.terminal_err = std::max(summary.terminal_err, row.err_pose);
  }
  {
    std::vector<RobotState> finals(node_count);
    for (int i = 0; i < node_count; ++i) {
      const LogRow& row = result.log.rows[last_instant + i];
      finals[i] = {Pose(row.theta, row.x, row.y), {row.omega, row.vx, row.vy}};
    }
    // Position part of the terminal error against the same target used for
    // err_pose.
    for (int i = 1; i < node_count; ++i) {
      Pose target_pose;
      if (formation_mode) {
        std::vector<ControlInput> zero(node_count);
        // Inputs do not affect the target pose; reuse the builder with zeros.
        const VirtualLeader virtual_leader =
            BuildVirtualLeader(info, i, finals, zero, scenario.branch);
        target_pose =
            TransformLeader(virtual_leader, scenario.formation.offsets[i]).pose;
      } else {
        target_pose = finals[0].pose;
      }
      const Pose relative = Inverse(target_pose) * finals[i].pose;
      summary.terminal_pos_err =
          std::max(summary.terminal_pos_err, relative.translation().norm());
    }
  }

  // conv_time: last instant any follower exceeds 1% of its own initial
  // error, then the next logged time.
  {
    std::vector<double> thresholds(node_count, 0.0);
    for (int i = 1; i < node_count; ++i) {
      thresholds[i] = std::max(0.01 * result.log.rows[i].err_pose, 1e-12);
    }
    long long last_exceed = -1;
    for (long long k = 0; k <= steps; ++k) {
      for (int i = 1; i < node_count; ++i) {
        const LogRow& row =
            result.log.rows[static_cast<std::size_t>(k) * node_count + i];
        if (row.err_pose > thresholds[i]) last_exceed = k;
      }
    }
    if (last_exceed >= steps) {
      summary.conv_time = -1.0;
    } else {
      summary.conv_time = static_cast<double>(last_exceed + 1) * scenario.dt;
    }
  }
  return result;
}

void WriteCsv(const TrajectoryLog& log, std::ostream& out) {
  out << "t,node,theta,x,y,omega,vx,vy,u_theta,u_x,err_pose,err_twist\n";
  char buffer[360];
  for (const LogRow& row : log.rows) {
    std::snprintf(buffer, sizeof(buffer),
                  "%.9g,%d,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  row.t, row.node, row.theta, row.x, row.y, row.omega, row.vx,
                  row.vy, row.u_theta, row.u_x, row.err_pose, row.err_twist);
    out << buffer;
  }
}

double SummaryMetric(const Summary& summary, const std::string& name) {
  if (name == "terminal_err") return summary.terminal_err;
  if (name == "terminal_pos_err") return summary.terminal_pos_err;
  if (name == "max_vy") return summary.max_vy;
  if (name == "conv_time") return summary.conv_time;
  if (name == "max_transformed_vy") return summary.max_transformed_vy;
  if (name == "max_law_gap") return summary.max_law_gap;
  throw std::out_of_range("unknown metric '" + name + "'");
}

}  // namespace se2track
