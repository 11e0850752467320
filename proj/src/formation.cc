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

#include "se2track/formation.h"

#include <cmath>

namespace se2track {

namespace {
constexpr double kDegenerateTolerance = 1e-12;
}  // namespace

double DesiredAttitude(const Vec2& offset, const Twist& leader_twist) {
  const double numerator = leader_twist.omega * offset.x;
  const double denominator = leader_twist.vx - leader_twist.omega * offset.y;
  if (std::abs(numerator) < kDegenerateTolerance &&
      std::abs(denominator) < kDegenerateTolerance) {
    return 0.0;
  }
  return std::atan2(numerator, denominator);
}

VirtualLeader TransformLeader(const VirtualLeader& leader, const Vec2& offset) {
  if (offset.x == 0.0 && offset.y == 0.0) {
    return leader;
  }
  const Pose offset_pose(DesiredAttitude(offset, leader.twist), offset);
  const Pose inverse_offset = Inverse(offset_pose);
  const Twist twist = Adjoint(inverse_offset, leader.twist);
  const Twist input = Adjoint(
      inverse_offset,
      {leader.input.u_theta, leader.input.u_x, leader.input.u_y});
  return {leader.pose * offset_pose, twist,
          {input.omega, input.vx, input.vy}};
}

std::vector<ControlInput> FormationStepInputs(
    const TopologyInfo& info, std::span<const RobotState> states,
    const FormationSpec& spec, const ControlInput& leader_input,
    const Gains& gains, LogBranch branch) {
  std::vector<ControlInput> inputs(states.size());
  for (int node : info.order) {
    if (node == 0) {
      inputs[node] = leader_input;
      continue;
    }
    const VirtualLeader virtual_leader =
        BuildVirtualLeader(info, node, states, inputs, branch);
    const VirtualLeader target =
        TransformLeader(virtual_leader, spec.offsets[node]);
    const TrackingContext context = MakeTrackingContext(
        target.pose, target.twist, target.input, states[node], branch);
    inputs[node] = SingleFollowerTracking(context, gains, branch);
  }
  return inputs;
}

}  // namespace se2track
