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

#ifndef SE2TRACK_DYNAMICS_H_
#define SE2TRACK_DYNAMICS_H_

#include "se2track/liegroup_se2.h"
#include "se2track/matrix.h"

namespace se2track {

// Force/torque-level command for the double-integrator model. u_y is
// structurally zero for nonholonomic robots: there is no lateral actuator.
struct ControlInput {
  double u_theta = 0.0;
  double u_x = 0.0;
  double u_y = 0.0;

  friend ControlInput operator+(const ControlInput& a, const ControlInput& b) {
    return {a.u_theta + b.u_theta, a.u_x + b.u_x, a.u_y + b.u_y};
  }
  friend ControlInput operator-(const ControlInput& a, const ControlInput& b) {
    return {a.u_theta - b.u_theta, a.u_x - b.u_x, a.u_y - b.u_y};
  }
  friend ControlInput operator*(double s, const ControlInput& u) {
    return {s * u.u_theta, s * u.u_x, s * u.u_y};
  }
};

// Full second-order state of one robot.
struct RobotState {
  Pose pose;
  Twist twist;
};

// Relative configuration and relative velocity of a follower with respect
// to a leader. The twist is always recomputed from the pair of absolute
// states, never integrated on its own.
struct RelativeState {
  Pose pose;    // leader^{-1} * follower
  Twist twist;  // xi_follower - Ad_{pose^{-1}} xi_leader
};

// Rigid-body inertia: diag(J, m, m) in (omega, vx, vy) coordinates.
struct InertiaParams {
  double moment_of_inertia = 1.0;  // J > 0, kg m^2
  double mass = 1.0;               // m > 0, kg
};

// Torque and planar force recovered from an integrator-level input.
struct GeneralizedForce {
  double torque = 0.0;
  double fx = 0.0;
  double fy = 0.0;
};

// Builds the relative system of `follower` with respect to `leader`.
RelativeState ComputeRelativeState(const RobotState& leader,
                                   const RobotState& follower);

// Advances one robot by dt: velocity first (xi += dt u), then a group-exact
// pose update pose * exp(dt xi). Throws std::invalid_argument on dt <= 0 and,
// when `nonholonomic` is set, on a nonzero lateral input (that is a
// controller bug, not a recoverable condition).
RobotState Step(const RobotState& state, const ControlInput& input, double dt,
                bool nonholonomic = true);

// F = [I] u - [ad_xi]^T [I] xi: the physical torque/force that realizes an
// integrator-level input at the current velocity.
GeneralizedForce RecoverForce(const ControlInput& input, const Twist& twist,
                              const InertiaParams& params);

// True iff the body-frame lateral velocity is within tol of zero.
bool CheckNonholonomic(const RobotState& state, double tol);

}  // namespace se2track

#endif  // SE2TRACK_DYNAMICS_H_
