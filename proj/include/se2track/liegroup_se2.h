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

#ifndef SE2TRACK_LIEGROUP_SE2_H_
#define SE2TRACK_LIEGROUP_SE2_H_

#include "se2track/matrix.h"

namespace se2track {

inline constexpr double kPi = 3.14159265358979323846;

// Maps an angle into (-pi, pi]. Angles already in range pass through
// unchanged (bitwise).
double NormalizeAngle(double angle);

// Branch selector for the two-valued logarithm at the rotation cut
// (heading at +/-pi, i.e. trace of the pose matrix equal to -1).
enum class LogBranch { kPlusPi, kMinusPi };

// |cos(theta) + 1| below this means the pose sits on the log cut and the
// requested LogBranch decides which leaf the logarithm takes.
inline constexpr double kLogBranchTolerance = 1e-9;

// Like NormalizeAngle, but when the angle lands on the cut the branch picks
// the sign of the result.
double NormalizeAngleOnBranch(double angle, LogBranch branch);

// A planar rigid transform: heading plus position. The heading is kept in
// (-pi, pi] by construction; the 3x3 homogeneous matrix is produced on
// demand rather than stored, so repeated composition cannot drift off the
// group.
class Pose {
 public:
  Pose() = default;
  Pose(double theta, Vec2 translation)
      : theta_(NormalizeAngle(theta)), p_(translation) {}
  Pose(double theta, double x, double y) : Pose(theta, Vec2{x, y}) {}

  static Pose Identity() { return Pose(); }

  double theta() const { return theta_; }
  Vec2 translation() const { return p_; }
  double x() const { return p_.x; }
  double y() const { return p_.y; }

  Mat2 rotation() const;
  Mat3 matrix() const;

 private:
  double theta_ = 0.0;
  Vec2 p_;
};

// A body-frame velocity (or any se(2) algebra element in vector form):
// angular rate plus linear velocity along the body axes.
struct Twist {
  double omega = 0.0;
  double vx = 0.0;
  double vy = 0.0;

  Mat3 hat() const;
  double norm() const { return std::sqrt(omega * omega + vx * vx + vy * vy); }

  friend Twist operator+(const Twist& a, const Twist& b) {
    return {a.omega + b.omega, a.vx + b.vx, a.vy + b.vy};
  }
  friend Twist operator-(const Twist& a, const Twist& b) {
    return {a.omega - b.omega, a.vx - b.vx, a.vy - b.vy};
  }
  friend Twist operator*(double s, const Twist& t) {
    return {s * t.omega, s * t.vx, s * t.vy};
  }
};

// Recovers the vector form from a hatted algebra element.
Twist Vee(const Mat3& xi_hat);

// Exponential coordinates of a pose: the (theta, q) vector whose group
// exponential reproduces it. theta is not restricted to the principal range;
// at the log cut it carries the branch choice (just past +/-pi).
struct ExpCoords {
  double theta = 0.0;
  double qx = 0.0;
  double qy = 0.0;

  double norm() const { return std::sqrt(theta * theta + qx * qx + qy * qy); }

  friend ExpCoords operator*(double s, const ExpCoords& x) {
    return {s * x.theta, s * x.qx, s * x.qy};
  }
};

// Group composition (homogeneous-matrix product with re-normalized heading).
Pose Compose(const Pose& a, const Pose& b);
inline Pose operator*(const Pose& a, const Pose& b) { return Compose(a, b); }

// Group inverse: rotation transposed, translation -R^T p.
Pose Inverse(const Pose& g);

// The translation Jacobian of the SE(2) exponential,
//   A(theta) = (1/theta) [sin(theta), -(1-cos(theta)); 1-cos(theta), sin(theta)],
// and its closed-form inverse [alpha, theta/2; -theta/2, alpha] with
// alpha = (theta/2) cot(theta/2). Both switch to series below a small-angle
// threshold; at theta = 0 they return identity.
Mat2 AJacobian(double theta);
Mat2 AJacobianInverse(double theta);

// alpha(theta) = (theta/2) cot(theta/2), series-expanded near zero.
double AlphaFactor(double theta);

// exp: algebra -> group. Rotation by theta, translation A(theta) q.
Pose ExpSe2(const ExpCoords& coords);

// log: group -> algebra. Two-valued at the cut; `branch` picks the leaf.
// ExpSe2(LogSe2(g, b)) reproduces g for every g and either branch.
ExpCoords LogSe2(const Pose& g, LogBranch branch = LogBranch::kPlusPi);

// Frame change of a twist: vector form of g xi^ g^{-1}.
Twist Adjoint(const Pose& g, const Twist& xi);

// Commutator [x^, y^] in vector form. The angular component is always zero
// (planar rotations commute).
Twist LieBracket(const Twist& a, const Twist& b);

// Matrix of ad_xi acting on twist vectors ordered (omega, vx, vy):
//   [0 0 0; vy 0 -omega; -vx omega 0].
// Its transpose appears in the force recovery map.
Mat3 AdOperatorMatrix(const Twist& xi);

}  // namespace se2track

#endif  // SE2TRACK_LIEGROUP_SE2_H_
