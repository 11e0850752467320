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

#include "se2track/liegroup_se2.h"

#include <cmath>

namespace se2track {

namespace {
// Below this |theta| the closed forms for A, A^{-1} and alpha divide by a
// quantity that underflows to 0/0; a 4th-order series takes over.
constexpr double kSeriesThreshold = 1e-4;
}  // namespace

double NormalizeAngle(double angle) {
  if (angle > -kPi && angle <= kPi) return angle;
  double wrapped = std::fmod(angle + kPi, 2.0 * kPi);
  if (wrapped <= 0.0) wrapped += 2.0 * kPi;
  return wrapped - kPi;
}

double NormalizeAngleOnBranch(double angle, LogBranch branch) {
  const double principal = NormalizeAngle(angle);
  if (std::abs(std::cos(principal) + 1.0) < kLogBranchTolerance) {
    const double magnitude = std::abs(principal);
    return branch == LogBranch::kPlusPi ? magnitude : -magnitude;
  }
  return principal;
}

Mat2 Pose::rotation() const {
  const double c = std::cos(theta_);
  const double s = std::sin(theta_);
  return {{{c, -s}, {s, c}}};
}

Mat3 Pose::matrix() const {
  const double c = std::cos(theta_);
  const double s = std::sin(theta_);
  return {{{c, -s, p_.x}, {s, c, p_.y}, {0.0, 0.0, 1.0}}};
}

Mat3 Twist::hat() const {
  return {{{0.0, -omega, vx}, {omega, 0.0, vy}, {0.0, 0.0, 0.0}}};
}

Twist Vee(const Mat3& xi_hat) {
  return {xi_hat.m[1][0], xi_hat.m[0][2], xi_hat.m[1][2]};
}

Pose Compose(const Pose& a, const Pose& b) {
  return Pose(a.theta() + b.theta(), a.translation() + a.rotation() * b.translation());
}

Pose Inverse(const Pose& g) {
  const Mat2 rt = g.rotation().transpose();
  return Pose(-g.theta(), -(rt * g.translation()));
}

double AlphaFactor(double theta) {
  if (std::abs(theta) < kSeriesThreshold) {
    const double t2 = theta * theta;
    return 1.0 - t2 / 12.0 - t2 * t2 / 720.0;
  }
  const double half = 0.5 * theta;
  return half * std::cos(half) / std::sin(half);
}

Mat2 AJacobian(double theta) {
  double sinc;       // sin(theta)/theta
  double versine_t;  // (1 - cos(theta))/theta
  if (std::abs(theta) < kSeriesThreshold) {
    const double t2 = theta * theta;
    sinc = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    versine_t = theta / 2.0 - theta * t2 / 24.0;
  } else {
    sinc = std::sin(theta) / theta;
    const double sh = std::sin(0.5 * theta);
    versine_t = 2.0 * sh * sh / theta;  // 1 - cos = 2 sin^2(theta/2), no cancellation
  }
  return {{{sinc, -versine_t}, {versine_t, sinc}}};
}

Mat2 AJacobianInverse(double theta) {
  const double alpha = AlphaFactor(theta);
  const double half = 0.5 * theta;
  return {{{alpha, half}, {-half, alpha}}};
}

Pose ExpSe2(const ExpCoords& coords) {
  // A evaluated at the raw theta, before normalization: the closed form is
  // valid for any theta and must stay paired with the un-wrapped angle.
  const Vec2 p = AJacobian(coords.theta) * Vec2{coords.qx, coords.qy};
  return Pose(coords.theta, p);
}

ExpCoords LogSe2(const Pose& g, LogBranch branch) {
  double theta = g.theta();
  if (std::abs(std::cos(theta) + 1.0) < kLogBranchTolerance) {
    // On the cut the log is two-valued; lift theta onto the requested leaf
    // (just past +pi or -pi) so exp of the result reproduces g exactly.
    if (branch == LogBranch::kPlusPi && theta <= 0.0) {
      theta += 2.0 * kPi;
    } else if (branch == LogBranch::kMinusPi && theta > 0.0) {
      theta -= 2.0 * kPi;
    }
  }
  const Vec2 q = AJacobianInverse(theta) * g.translation();
  return {theta, q.x, q.y};
}

Twist Adjoint(const Pose& g, const Twist& xi) {
  // Vector form of g xi^ g^{-1}: the linear part is R v - omega S p with S
  // the so(2) generator, the angular part is unchanged.
  const Vec2 v = g.rotation() * Vec2{xi.vx, xi.vy};
  const Vec2 sp{-g.y(), g.x()};  // S p
  return {xi.omega, v.x - xi.omega * sp.x, v.y - xi.omega * sp.y};
}

Twist LieBracket(const Twist& a, const Twist& b) {
  // [a^, b^] = (0, omega_a S v_b - omega_b S v_a).
  return {0.0, -a.omega * b.vy + b.omega * a.vy, a.omega * b.vx - b.omega * a.vx};
}

Mat3 AdOperatorMatrix(const Twist& xi) {
  return {{{0.0, 0.0, 0.0},
           {xi.vy, 0.0, -xi.omega},
           {-xi.vx, xi.omega, 0.0}}};
}

}  // namespace se2track
