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

#include "se2track/scenario.h"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace se2track {

namespace {

std::string Trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

struct LineContext {
  const std::string& source;
  int line = 0;

  [[noreturn]] void Fail(const std::string& message) const {
    throw ScenarioError(source + ":" + std::to_string(line) + ": " + message);
  }
};

double ParseDouble(const std::string& text, const LineContext& ctx) {
  const std::string t = Trim(text);
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) {
    ctx.Fail("expected a number, got '" + t + "'");
  }
  return value;
}

int ParseInt(const std::string& text, const LineContext& ctx) {
  const std::string t = Trim(text);
  char* end = nullptr;
  const long value = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size()) {
    ctx.Fail("expected an integer, got '" + t + "'");
  }
  return static_cast<int>(value);
}

std::vector<std::string> SplitOn(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

std::vector<double> ParseDoubleList(const std::string& text,
                                    const LineContext& ctx) {
  std::vector<double> values;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    // Allow comma separators too.
    for (std::string& piece : SplitOn(token, ',')) {
      piece = Trim(piece);
      if (!piece.empty()) values.push_back(ParseDouble(piece, ctx));
    }
  }
  return values;
}

std::string Stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

}  // namespace

Scenario ParseScenario(const std::string& text, const std::string& source_name) {
  Scenario scenario;
  scenario.name = Stem(source_name);

  std::map<int, NodeInit> nodes;
  std::map<int, Vec2> offsets;
  std::map<int, std::vector<double>> weights;
  bool saw_scenario_section = false;
  bool saw_edges = false;

  std::istringstream stream(text);
  std::string raw_line;
  std::string section;
  LineContext ctx{source_name, 0};

  while (std::getline(stream, raw_line)) {
    ++ctx.line;
    std::string line = raw_line;
    const std::size_t comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = Trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') ctx.Fail("unterminated section header");
      section = Trim(line.substr(1, line.size() - 2));
      if (section != "scenario" && section != "gains" && section != "topology" &&
          section != "nodes" && section != "inputs" && section != "formation") {
        ctx.Fail("unknown section '" + section + "'");
      }
      if (section == "scenario") saw_scenario_section = true;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) ctx.Fail("expected 'key = value'");
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.empty()) ctx.Fail("missing key");

    if (section == "scenario") {
      if (key == "mode") {
        if (value == "track") {
          scenario.mode = Mode::kTrack;
        } else if (value == "consensus") {
          scenario.mode = Mode::kConsensus;
        } else if (value == "formation") {
          scenario.mode = Mode::kFormation;
        } else {
          ctx.Fail("mode must be track, consensus or formation");
        }
      } else if (key == "duration") {
        scenario.duration = ParseDouble(value, ctx);
      } else if (key == "dt") {
        scenario.dt = ParseDouble(value, ctx);
      } else if (key == "log_branch") {
        if (value == "plus_pi") {
          scenario.branch = LogBranch::kPlusPi;
        } else if (value == "minus_pi") {
          scenario.branch = LogBranch::kMinusPi;
        } else {
          ctx.Fail("log_branch must be plus_pi or minus_pi");
        }
      } else if (key == "out") {
        scenario.output_name = value;
      } else {
        ctx.Fail("unknown scenario key '" + key + "'");
      }
    } else if (section == "gains") {
      const double gain = ParseDouble(value, ctx);
      if (key == "kp") {
        scenario.gains.kp = gain;
      } else if (key == "kd") {
        scenario.gains.kd = gain;
      } else if (key == "k") {
        scenario.gains.k = gain;
      } else if (key == "ke") {
        scenario.gains.ke = gain;
      } else {
        ctx.Fail("unknown gain '" + key + "'");
      }
    } else if (section == "topology") {
      if (key == "edges") {
        saw_edges = true;
        for (const std::string& piece : SplitOn(value, ',')) {
          const std::string edge = Trim(piece);
          if (edge.empty()) continue;
          const std::size_t arrow = edge.find("->");
          if (arrow == std::string::npos) {
            ctx.Fail("edge must look like parent->child: '" + edge + "'");
          }
          const int parent = ParseInt(edge.substr(0, arrow), ctx);
          const int child = ParseInt(edge.substr(arrow + 2), ctx);
          scenario.topology.edges.emplace_back(parent, child);
        }
      } else if (key.rfind("weights.", 0) == 0) {
        const int node = ParseInt(key.substr(8), ctx);
        weights[node] = ParseDoubleList(value, ctx);
      } else {
        ctx.Fail("unknown topology key '" + key + "'");
      }
    } else if (section == "nodes") {
      const int node = ParseInt(key, ctx);
      const std::vector<double> fields = ParseDoubleList(value, ctx);
      if (fields.size() != 5) {
        ctx.Fail("node line must be 'id = theta x y omega vx'");
      }
      if (nodes.count(node) != 0) {
        ctx.Fail("node " + std::to_string(node) + " defined twice");
      }
      nodes[node] = {fields[0], fields[1], fields[2], fields[3], fields[4]};
    } else if (section == "inputs") {
      try {
        if (key == "u_theta") {
          scenario.leader_program.u_theta = ChannelProgram::Parse(value);
        } else if (key == "u_x") {
          scenario.leader_program.u_x = ChannelProgram::Parse(value);
        } else {
          ctx.Fail("unknown input channel '" + key + "'");
        }
      } catch (const InputProgramError& e) {
        ctx.Fail(e.what());
      }
    } else if (section == "formation") {
      const int node = ParseInt(key, ctx);
      const std::vector<double> fields = ParseDoubleList(value, ctx);
      if (fields.size() != 2) {
        ctx.Fail("offset line must be 'id = x_offset y_offset'");
      }
      offsets[node] = {fields[0], fields[1]};
    } else {
      ctx.Fail("key outside of any section");
    }
  }

  ctx.line = 0;  // validation errors below are file-level
  if (!saw_scenario_section) {
    throw ScenarioError(source_name + ": missing [scenario] section");
  }
  if (!saw_edges) {
    throw ScenarioError(source_name + ": missing topology edges");
  }
  if (nodes.empty()) {
    throw ScenarioError(source_name + ": missing [nodes] section");
  }

  const int node_count = nodes.rbegin()->first + 1;
  scenario.topology.node_count = node_count;
  scenario.nodes.resize(node_count);
  for (int i = 0; i < node_count; ++i) {
    const auto it = nodes.find(i);
    if (it == nodes.end()) {
      throw ScenarioError(source_name + ": node " + std::to_string(i) +
                          " has no initial state");
    }
    scenario.nodes[i] = it->second;
  }

  scenario.topology.weights.resize(node_count);
  for (const auto& [node, w] : weights) {
    if (node < 0 || node >= node_count) {
      throw ScenarioError(source_name + ": weights for unknown node " +
                          std::to_string(node));
    }
    scenario.topology.weights[node] = w;
  }

  scenario.formation.offsets.assign(node_count, Vec2{});
  for (const auto& [node, offset] : offsets) {
    if (node <= 0 || node >= node_count) {
      throw ScenarioError(source_name + ": offset for invalid node " +
                          std::to_string(node));
    }
    scenario.formation.offsets[node] = offset;
  }
  if (scenario.mode == Mode::kFormation) {
    for (int i = 1; i < node_count; ++i) {
      if (offsets.count(i) == 0) {
        throw ScenarioError(source_name + ": formation mode needs an offset "
                            "for node " + std::to_string(i));
      }
    }
  }

  if (scenario.output_name.empty()) {
    scenario.output_name = scenario.name + ".csv";
  }

  ValidateScenario(scenario);
  return scenario;
}

TopologyInfo ValidateScenario(const Scenario& scenario) {
  if (!(scenario.dt > 0.0)) {
    throw ScenarioError(scenario.name + ": dt must be positive");
  }
  if (!(scenario.duration >= scenario.dt)) {
    throw ScenarioError(scenario.name + ": duration must be at least dt");
  }
  if (!scenario.gains.valid()) {
    throw ScenarioError(scenario.name + ": gains must all be positive");
  }
  if (scenario.mode == Mode::kFormation &&
      scenario.formation.offsets.size() !=
          static_cast<std::size_t>(scenario.topology.node_count)) {
    throw ScenarioError(scenario.name + ": formation offsets incomplete");
  }
  try {
    return ValidateTopology(scenario.topology);
  } catch (const TopologyError& e) {
    throw ScenarioError(scenario.name + ": " + e.what());
  }
}

Scenario LoadScenario(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ScenarioError("cannot open scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return ParseScenario(buffer.str(), path);
}

}  // namespace se2track
