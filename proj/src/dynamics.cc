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

#include "se2track/dynamics.h"

#include <cmath>
#include <stdexcept>

namespace se2track {

RelativeState ComputeRelativeState(const RobotState& leader,
                                   const RobotState& follower) {
  const Pose relative_pose = Inverse(leader.pose) * follower.pose;
  const Twist transported = Adjoint(Inverse(relative_pose), leader.twist);
  return {relative_pose, follower.twist - transported};
}

RobotState Step(const RobotState& state, const ControlInput& input, double dt,
                bool nonholonomic) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("Step: dt must be positive");
  }
  if (nonholonomic && input.u_y != 0.0) {
    throw std::invalid_argument(
        "Step: nonzero lateral input on a nonholonomic robot");
  }
  Twist next_twist{state.twist.omega + dt * input.u_theta,
                   state.twist.vx + dt * input.u_x,
                   state.twist.vy + dt * input.u_y};
  const Pose increment =
      ExpSe2({dt * next_twist.omega, dt * next_twist.vx, dt * next_twist.vy});
  return {state.pose * increment, next_twist};
}

GeneralizedForce RecoverForce(const ControlInput& input, const Twist& twist,
                              const InertiaParams& params) {
  if (!(params.moment_of_inertia > 0.0) || !(params.mass > 0.0)) {
    throw std::invalid_argument("RecoverForce: inertia and mass must be positive");
  }
  const double j = params.moment_of_inertia;
  const double m = params.mass;
  const Vec3 inertia_twist{{j * twist.omega, m * twist.vx, m * twist.vy}};
  const Vec3 drift = AdOperatorMatrix(twist).transpose() * inertia_twist;
  return {j * input.u_theta - drift[0], m * input.u_x - drift[1],
          m * input.u_y - drift[2]};
}

bool CheckNonholonomic(const RobotState& state, double tol) {
  return std::abs(state.twist.vy) <= tol;
}

}  // namespace se2track
