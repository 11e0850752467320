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

#ifndef SE2TRACK_NETWORK_H_
#define SE2TRACK_NETWORK_H_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "se2track/controllers.h"
#include "se2track/dynamics.h"
#include "se2track/liegroup_se2.h"

namespace se2track {

// Communication graph over nodes 0..node_count-1. Node 0 is the root
// (global leader). Each directed edge runs parent -> child; a child's
// parents are ordered by edge listing order, and its interpolation weights
// (one fewer than parents) follow that order. The iterated pose combination
// is order-dependent, so the listing order is part of the configuration.
struct Topology {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // (parent, child)
  // weights[i] are node i's convex-combination coefficients; empty means the
  // uniform iterative choice 1/2, 1/3, ... is used.
  std::vector<std::vector<double>> weights;
};

enum class TopologyErrorKind {
  kCycleDetected,
  kMultipleRoots,
  kUnreachableNode,
  kWeightOutOfRange,
  kBadEdge,
};

class TopologyError : public std::runtime_error {
 public:
  TopologyError(TopologyErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  TopologyErrorKind kind() const { return kind_; }

 private:
  TopologyErrorKind kind_;
};

// Validated topology ready for per-step evaluation.
struct TopologyInfo {
  int node_count = 0;
  std::vector<int> order;                    // topological, root first
  std::vector<std::vector<int>> parents;     // per node, listing order
  std::vector<std::vector<double>> weights;  // per node, size parents-1
};

// Checks the graph invariants (acyclic, single root at node 0, every node
// reachable, weights in [0,1] with the right count) and produces the
// evaluation order. Throws TopologyError naming the offending node or edge.
TopologyInfo ValidateTopology(const Topology& topology);

// The state a follower tracks: the convex combination of its parents.
struct VirtualLeader {
  Pose pose;
  Twist twist;
  ControlInput input;
};

// Iterated geodesic interpolation
//   g^{1,2} = g^1 exp(w_1 log((g^1)^{-1} g^2)), folded left to right.
// A single parent passes through unchanged. Pairwise relative poses on the
// log cut take the branch default.
Pose ConvexPose(std::span<const Pose> parents, std::span<const double> weights,
                LogBranch branch = LogBranch::kPlusPi);

// The linear counterparts of ConvexPose, same fold order.
Twist ConvexTwist(std::span<const Twist> parents,
                  std::span<const double> weights);
ControlInput ConvexInput(std::span<const ControlInput> parents,
                         std::span<const double> weights);

// Builds node's virtual leader from its parents' current poses, twists and
// already-computed inputs for this step.
VirtualLeader BuildVirtualLeader(const TopologyInfo& info, int node,
                                 std::span<const RobotState> states,
                                 std::span<const ControlInput> inputs,
                                 LogBranch branch = LogBranch::kPlusPi);

// One control step over the whole network: the root takes `leader_input`,
// every follower tracks its virtual leader. Followers are evaluated in
// topological order so parent inputs from the same instant are available.
// Returns one input per node (index 0 echoes leader_input).
std::vector<ControlInput> ConsensusStepInputs(
    const TopologyInfo& info, std::span<const RobotState> states,
    const ControlInput& leader_input, const Gains& gains,
    LogBranch branch = LogBranch::kPlusPi);

}  // namespace se2track

#endif  // SE2TRACK_NETWORK_H_
