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

#ifndef SE2TRACK_TESTS_ORACLES_H_
#define SE2TRACK_TESTS_ORACLES_H_

// Brute-force reference computations for the closed forms under test. These
// work on raw 3x3 homogeneous matrices only and stay independent of the
// group operations they check.

#include <cmath>
#include <random>

#include "se2track/liegroup_se2.h"
#include "se2track/matrix.h"

namespace se2track::testing {

// Truncated matrix power series sum_{k<terms} A^k / k!.
inline Mat3 MatrixExpSeries(const Mat3& a, int terms) {
  Mat3 result = Mat3::Identity();
  Mat3 power = Mat3::Identity();
  double factorial = 1.0;
  for (int k = 1; k < terms; ++k) {
    power = power * a;
    factorial *= static_cast<double>(k);
    result = result + (1.0 / factorial) * power;
  }
  return result;
}

// Reads a homogeneous matrix back into (theta, x, y).
inline Pose PoseFromMatrix(const Mat3& m) {
  return Pose(std::atan2(m.m[1][0], m.m[0][0]), m.m[0][2], m.m[1][2]);
}

// 3x3 inverse of a rigid transform, done blockwise on raw entries.
inline Mat3 HomogeneousInverse(const Mat3& g) {
  Mat3 r = Mat3::Identity();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.m[i][j] = g.m[j][i];
  }
  r.m[0][2] = -(r.m[0][0] * g.m[0][2] + r.m[0][1] * g.m[1][2]);
  r.m[1][2] = -(r.m[1][0] * g.m[0][2] + r.m[1][1] * g.m[1][2]);
  return r;
}

inline std::mt19937& Rng(unsigned seed = 0) {
  static std::mt19937 rng(seed == 0 ? 20260808u : seed);
  return rng;
}

inline double Uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Pose RandomPose(std::mt19937& rng, double heading_margin = 0.0,
                       double translation_range = 10.0) {
  return Pose(Uniform(rng, -kPi + heading_margin, kPi - heading_margin),
              Uniform(rng, -translation_range, translation_range),
              Uniform(rng, -translation_range, translation_range));
}

inline Twist RandomTwist(std::mt19937& rng, double range = 5.0) {
  return {Uniform(rng, -range, range), Uniform(rng, -range, range),
          Uniform(rng, -range, range)};
}

}  // namespace se2track::testing

#endif  // SE2TRACK_TESTS_ORACLES_H_
