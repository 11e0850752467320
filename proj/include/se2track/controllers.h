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

#ifndef SE2TRACK_CONTROLLERS_H_
#define SE2TRACK_CONTROLLERS_H_

#include "se2track/dynamics.h"
#include "se2track/liegroup_se2.h"

namespace se2track {

// Scalar control gains. kp/kd shape the relative-system stabilizer, k weighs
// the approach-direction term, ke drives the heading-alignment channel.
struct Gains {
  double kp = 1.0;
  double kd = 2.0;
  double k = 1.0;
  double ke = 5.0;

  bool valid() const { return kp > 0.0 && kd > 0.0 && k > 0.0 && ke > 0.0; }
};

// Everything the tracking law needs about one leader/follower pair at one
// instant. Built fresh every step; nothing here is integrated.
struct TrackingContext {
  RelativeState relative;     // g_{01}, xi_{01}
  Twist leader_twist;         // xi_0
  ControlInput leader_input;  // u_0
  double adjoint_attitude = 0.0;  // heading that puts the relative system on
                                  // the zero-side-velocity orbit
  double heading_error = 0.0;     // follower heading minus the adjoint
                                  // heading, wrapped to (-pi, pi]
};

// Decomposition of the relative system into the adjoint-attitude factor and
// the residual heading rotation: relative pose = adjoint_relative_pose *
// heading_error_pose, with the matching twist split.
struct SubsystemDecomposition {
  Pose adjoint_relative_pose;    // adjoint heading with the true relative position
  Pose heading_error_pose;       // pure rotation, zero translation
  Twist adjoint_relative_twist;
  Twist heading_error_twist;     // zero by the auxiliary-velocity choice
};

// Point stabilizer for a nonholonomic double integrator in exponential
// coordinates:
//   u = -kp [theta + k*beta; qx; 0] - kd [omega; vx; 0],
// with beta = -atan2(qy, qx) (zero when q = 0).
ControlInput NonholonomicStabilizer(const ExpCoords& coords, const Twist& twist,
                                    const Gains& gains);

// Point stabilizer for the fully actuated case: u = -kp log(g) - kd xi.
// At the log cut the branch default applies.
ControlInput FullyActuatedStabilizer(const Pose& g, const Twist& twist,
                                     double kp, double kd,
                                     LogBranch branch = LogBranch::kPlusPi);

// Four-quadrant angle of (vx_leader - omega_leader * r_y, omega_leader * r_x),
// the heading that zeroes the relative side velocity. Returns 0 when both
// components are below 1e-12 (stationary leader: tracking degenerates to
// stabilization).
double AdjointAttitude(const RelativeState& relative, const Twist& leader_twist);

// Assembles the context for one control step. The leader may be a physical
// robot, a convex-combination virtual leader, or a formation-transformed
// leader; only its pose, twist and input enter.
TrackingContext MakeTrackingContext(const Pose& leader_pose,
                                    const Twist& leader_twist,
                                    const ControlInput& leader_input,
                                    const RobotState& follower,
                                    LogBranch branch = LogBranch::kPlusPi);

// The tracking law, rotation and translation channels:
//   u_theta = -ke (heading error) - kp (theta01 + k beta01) - kd omega01 + u_theta0
//   u_x     = -kp qx01 - kd vx01
//             + (u_x0 - u_theta0 r_y01) cos(theta01) + u_theta0 r_x01 sin(theta01)
// and u_y = 0.
ControlInput SingleFollowerTracking(const TrackingContext& context,
                                    const Gains& gains,
                                    LogBranch branch = LogBranch::kPlusPi);

// The same command assembled from its subsystem pieces,
//   u = u_e + u_tilde01 + Ad_{g01^{-1}} u_0 + [xi_1, xi_01],
// kept as an independent route for cross-checking SingleFollowerTracking.
// The two differ exactly by the bracket term in the translation channels;
// simulation summaries report the gap.
ControlInput AssembledTrackingInput(const TrackingContext& context,
                                    const Gains& gains,
                                    LogBranch branch = LogBranch::kPlusPi);

// Splits the relative system into its two stabilized factors (diagnostic).
SubsystemDecomposition ComputeSubsystemDecomposition(
    const TrackingContext& context);

}  // namespace se2track

#endif  // SE2TRACK_CONTROLLERS_H_
