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

#include "se2track/network.h"

#include <queue>
#include <string>

namespace se2track {

TopologyInfo ValidateTopology(const Topology& topology) {
  const int n = topology.node_count;
  if (n < 1) {
    throw TopologyError(TopologyErrorKind::kBadEdge, "topology has no nodes");
  }
  TopologyInfo info;
  info.node_count = n;
  info.parents.resize(n);
  info.weights.resize(n);

  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> children(n);
  for (const auto& [parent, child] : topology.edges) {
    if (parent < 0 || parent >= n || child < 0 || child >= n) {
      throw TopologyError(TopologyErrorKind::kBadEdge,
                          "edge " + std::to_string(parent) + "->" +
                              std::to_string(child) + " references an unknown node");
    }
    if (parent == child) {
      throw TopologyError(TopologyErrorKind::kCycleDetected,
                          "self edge " + std::to_string(parent) + "->" +
                              std::to_string(child));
    }
    for (int existing : info.parents[child]) {
      if (existing == parent) {
        throw TopologyError(TopologyErrorKind::kBadEdge,
                            "duplicate edge " + std::to_string(parent) + "->" +
                                std::to_string(child));
      }
    }
    info.parents[child].push_back(parent);
    children[parent].push_back(child);
    ++indegree[child];
  }

  if (!info.parents[0].empty()) {
    throw TopologyError(TopologyErrorKind::kMultipleRoots,
                        "node 0 must be the root but has a parent");
  }
  for (int i = 1; i < n; ++i) {
    if (info.parents[i].empty()) {
      throw TopologyError(TopologyErrorKind::kMultipleRoots,
                          "node " + std::to_string(i) +
                              " has no parents; only node 0 may be a root");
    }
  }

  // Kahn's algorithm; a leftover node means a cycle.
  std::queue<int> ready;
  std::vector<int> remaining = indegree;
  ready.push(0);
  while (!ready.empty()) {
    const int node = ready.front();
    ready.pop();
    info.order.push_back(node);
    for (int child : children[node]) {
      if (--remaining[child] == 0) ready.push(child);
    }
  }
  if (static_cast<int>(info.order.size()) != n) {
    for (int i = 0; i < n; ++i) {
      if (remaining[i] > 0) {
        throw TopologyError(TopologyErrorKind::kCycleDetected,
                            "cycle through node " + std::to_string(i));
      }
    }
  }

  // Reachability from the root (a parentless-node check does not cover
  // disconnected cycles, but those were rejected above; this guards
  // forests hanging off nothing).
  std::vector<bool> reached(n, false);
  std::queue<int> frontier;
  frontier.push(0);
  reached[0] = true;
  while (!frontier.empty()) {
    const int node = frontier.front();
    frontier.pop();
    for (int child : children[node]) {
      if (!reached[child]) {
        reached[child] = true;
        frontier.push(child);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!reached[i]) {
      throw TopologyError(TopologyErrorKind::kUnreachableNode,
                          "node " + std::to_string(i) +
                              " is not reachable from the root");
    }
  }

  for (int i = 0; i < n; ++i) {
    const std::size_t parent_count = info.parents[i].size();
    const std::size_t expected =
        parent_count == 0 ? 0 : parent_count - 1;
    if (i < static_cast<int>(topology.weights.size()) &&
        !topology.weights[i].empty()) {
      const auto& w = topology.weights[i];
      if (w.size() != expected) {
        throw TopologyError(TopologyErrorKind::kWeightOutOfRange,
                            "node " + std::to_string(i) + " needs " +
                                std::to_string(expected) + " weights, got " +
                                std::to_string(w.size()));
      }
      for (double value : w) {
        if (!(value >= 0.0 && value <= 1.0)) {
          throw TopologyError(TopologyErrorKind::kWeightOutOfRange,
                              "node " + std::to_string(i) +
                                  " has weight outside [0, 1]");
        }
      }
      info.weights[i] = w;
    } else {
      // Uniform iterative weights 1/2, 1/3, ...: every parent ends up with
      // equal effective weight.
      info.weights[i].resize(expected);
      for (std::size_t j = 0; j < expected; ++j) {
        info.weights[i][j] = 1.0 / static_cast<double>(j + 2);
      }
    }
  }
  return info;
}

Pose ConvexPose(std::span<const Pose> parents, std::span<const double> weights,
                LogBranch branch) {
  Pose combined = parents[0];
  for (std::size_t i = 1; i < parents.size(); ++i) {
    const Pose relative = Inverse(combined) * parents[i];
    const ExpCoords step = weights[i - 1] * LogSe2(relative, branch);
    combined = combined * ExpSe2(step);
  }
  return combined;
}

Twist ConvexTwist(std::span<const Twist> parents,
                  std::span<const double> weights) {
  Twist combined = parents[0];
  for (std::size_t i = 1; i < parents.size(); ++i) {
    const double w = weights[i - 1];
    combined = (1.0 - w) * combined + w * parents[i];
  }
  return combined;
}

ControlInput ConvexInput(std::span<const ControlInput> parents,
                         std::span<const double> weights) {
  ControlInput combined = parents[0];
  for (std::size_t i = 1; i < parents.size(); ++i) {
    const double w = weights[i - 1];
    combined = (1.0 - w) * combined + w * parents[i];
  }
  return combined;
}

VirtualLeader BuildVirtualLeader(const TopologyInfo& info, int node,
                                 std::span<const RobotState> states,
                                 std::span<const ControlInput> inputs,
                                 LogBranch branch) {
  const auto& parents = info.parents[node];
  if (parents.size() == 1) {
    // Single local leader: exact passthrough.
    const int p = parents[0];
    return {states[p].pose, states[p].twist, inputs[p]};
  }
  std::vector<Pose> poses;
  std::vector<Twist> twists;
  std::vector<ControlInput> parent_inputs;
  poses.reserve(parents.size());
  twists.reserve(parents.size());
  parent_inputs.reserve(parents.size());
  for (int p : parents) {
    poses.push_back(states[p].pose);
    twists.push_back(states[p].twist);
    parent_inputs.push_back(inputs[p]);
  }
  return {ConvexPose(poses, info.weights[node], branch),
          ConvexTwist(twists, info.weights[node]),
          ConvexInput(parent_inputs, info.weights[node])};
}

std::vector<ControlInput> ConsensusStepInputs(
    const TopologyInfo& info, std::span<const RobotState> states,
    const ControlInput& leader_input, const Gains& gains, LogBranch branch) {
  std::vector<ControlInput> inputs(states.size());
  for (int node : info.order) {
    if (node == 0) {
      inputs[node] = leader_input;
      continue;
    }
    const VirtualLeader leader =
        BuildVirtualLeader(info, node, states, inputs, branch);
    const TrackingContext context = MakeTrackingContext(
        leader.pose, leader.twist, leader.input, states[node], branch);
    inputs[node] = SingleFollowerTracking(context, gains, branch);
  }
  return inputs;
}

}  // namespace se2track
