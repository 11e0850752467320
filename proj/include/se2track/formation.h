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

#ifndef SE2TRACK_FORMATION_H_
#define SE2TRACK_FORMATION_H_

#include <span>
#include <vector>

#include "se2track/network.h"

namespace se2track {

// Desired body-frame offsets of each follower with respect to its (virtual)
// local leader, indexed by node id; the entry for node 0 is ignored. The
// desired relative attitude is never stored: it follows from the leader's
// current velocity each step.
struct FormationSpec {
  std::vector<Vec2> offsets;
};

// The attitude that pairs with `offset` so the offset pose can be held
// without lateral slip: atan2(omega * x_off, vx - omega * y_off). Returns 0
// when both arguments are below 1e-12 (stationary leader).
double DesiredAttitude(const Vec2& offset, const Twist& leader_twist);

// The virtual leader shifted by the desired offset: pose composed with the
// offset pose, twist and input transported by its inverse adjoint. The
// transported twist has (numerically) zero side velocity whenever the
// leader itself has none. A zero offset passes the leader through untouched.
VirtualLeader TransformLeader(const VirtualLeader& leader, const Vec2& offset);

// Formation counterpart of ConsensusStepInputs: identical pipeline with each
// follower's virtual leader replaced by its transformed leader. With all
// offsets zero the outputs match ConsensusStepInputs bitwise.
std::vector<ControlInput> FormationStepInputs(
    const TopologyInfo& info, std::span<const RobotState> states,
    const FormationSpec& spec, const ControlInput& leader_input,
    const Gains& gains, LogBranch branch = LogBranch::kPlusPi);

}  // namespace se2track

#endif  // SE2TRACK_FORMATION_H_
