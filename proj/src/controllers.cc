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

#include "se2track/controllers.h"

#include <cmath>

namespace se2track {

namespace {
// Both atan2 arguments below this magnitude count as a degenerate
// (stationary-leader) configuration.
constexpr double kDegenerateTolerance = 1e-12;

// beta = -arctan(qy/qx), deliberately single-argument: beta flips sign when
// qx crosses zero, and that half-plane structure steers the robot through
// the qx = 0 set instead of resting near it. qx that is pure rounding dust
// relative to qy counts as zero so the sign of the limit value does not
// depend on noise; the origin maps to 0.
double ApproachAngle(double qx, double qy) {
  if (qy == 0.0) return 0.0;
  if (std::abs(qx) < 1e-12 * std::abs(qy)) {
    return qy > 0.0 ? -0.5 * kPi : 0.5 * kPi;
  }
  return -std::atan(qy / qx);
}
}  // namespace

ControlInput NonholonomicStabilizer(const ExpCoords& coords, const Twist& twist,
                                    const Gains& gains) {
  const double beta = ApproachAngle(coords.qx, coords.qy);
  return {-gains.kp * (coords.theta + gains.k * beta) - gains.kd * twist.omega,
          -gains.kp * coords.qx - gains.kd * twist.vx, 0.0};
}

ControlInput FullyActuatedStabilizer(const Pose& g, const Twist& twist,
                                     double kp, double kd, LogBranch branch) {
  const ExpCoords x = LogSe2(g, branch);
  return {-kp * x.theta - kd * twist.omega, -kp * x.qx - kd * twist.vx,
          -kp * x.qy - kd * twist.vy};
}

double AdjointAttitude(const RelativeState& relative,
                       const Twist& leader_twist) {
  const Vec2 r = relative.pose.translation();
  const double denominator = leader_twist.vx - leader_twist.omega * r.y;
  const double numerator = leader_twist.omega * r.x;
  if (std::abs(numerator) < kDegenerateTolerance &&
      std::abs(denominator) < kDegenerateTolerance) {
    return 0.0;
  }
  return std::atan2(numerator, denominator);
}

TrackingContext MakeTrackingContext(const Pose& leader_pose,
                                    const Twist& leader_twist,
                                    const ControlInput& leader_input,
                                    const RobotState& follower,
                                    LogBranch branch) {
  TrackingContext context;
  context.relative =
      ComputeRelativeState({leader_pose, leader_twist}, follower);
  context.leader_twist = leader_twist;
  context.leader_input = leader_input;
  context.adjoint_attitude = AdjointAttitude(context.relative, leader_twist);
  context.heading_error = NormalizeAngleOnBranch(
      follower.pose.theta() - (leader_pose.theta() + context.adjoint_attitude),
      branch);
  return context;
}

ControlInput SingleFollowerTracking(const TrackingContext& context,
                                    const Gains& gains, LogBranch branch) {
  const ExpCoords x = LogSe2(context.relative.pose, branch);
  const double beta = ApproachAngle(x.qx, x.qy);
  const Twist& rel = context.relative.twist;
  const Vec2 r = context.relative.pose.translation();
  const double theta_rel = x.theta;
  const double u_theta0 = context.leader_input.u_theta;
  const double u_x0 = context.leader_input.u_x;

  const double u_theta = -gains.ke * context.heading_error -
                         gains.kp * (theta_rel + gains.k * beta) -
                         gains.kd * rel.omega + u_theta0;
  const double u_x = -gains.kp * x.qx - gains.kd * rel.vx +
                     (u_x0 - u_theta0 * r.y) * std::cos(theta_rel) +
                     u_theta0 * r.x * std::sin(theta_rel);
  return {u_theta, u_x, 0.0};
}

ControlInput AssembledTrackingInput(const TrackingContext& context,
                                    const Gains& gains, LogBranch branch) {
  const ExpCoords x = LogSe2(context.relative.pose, branch);
  const Twist& rel = context.relative.twist;

  const ControlInput heading_term{-gains.ke * context.heading_error, 0.0, 0.0};
  const ControlInput stabilizer = NonholonomicStabilizer(x, rel, gains);

  // Leader input transported into the follower frame, treated as an algebra
  // element under the same adjoint action as a twist.
  const Twist u0{context.leader_input.u_theta, context.leader_input.u_x,
                 context.leader_input.u_y};
  const Twist transported = Adjoint(Inverse(context.relative.pose), u0);

  // Absolute follower twist recovered from the relative one.
  const Twist follower_twist =
      rel + Adjoint(Inverse(context.relative.pose), context.leader_twist);
  const Twist bracket = LieBracket(follower_twist, rel);

  return {heading_term.u_theta + stabilizer.u_theta + transported.omega +
              bracket.omega,
          stabilizer.u_x + transported.vx + bracket.vx,
          transported.vy + bracket.vy};
}

SubsystemDecomposition ComputeSubsystemDecomposition(
    const TrackingContext& context) {
  SubsystemDecomposition d;
  d.adjoint_relative_pose =
      Pose(context.adjoint_attitude, context.relative.pose.translation());
  d.heading_error_pose =
      Inverse(d.adjoint_relative_pose) * context.relative.pose;

  const Twist follower_twist =
      context.relative.twist +
      Adjoint(Inverse(context.relative.pose), context.leader_twist);
  // Auxiliary system velocity: follower twist seen through the residual
  // rotation. This choice makes the residual subsystem's twist vanish.
  const Twist auxiliary_twist = Adjoint(d.heading_error_pose, follower_twist);
  d.adjoint_relative_twist =
      auxiliary_twist -
      Adjoint(Inverse(d.adjoint_relative_pose), context.leader_twist);
  d.heading_error_twist =
      follower_twist - Adjoint(Inverse(d.heading_error_pose), auxiliary_twist);
  return d;
}

}  // namespace se2track
