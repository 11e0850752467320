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

#include "se2track/input_program.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace se2track {

namespace {

std::string Trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

double ParseNumber(const std::string& text) {
  const std::string t = Trim(text);
  if (t.empty()) throw InputProgramError("empty number");
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    throw InputProgramError("bad number: '" + t + "'");
  }
  return value;
}

// Splits "name(body)" and returns {name, body}.
std::pair<std::string, std::string> SplitCall(const std::string& text) {
  const std::string t = Trim(text);
  const std::size_t open = t.find('(');
  if (open == std::string::npos || t.back() != ')') {
    throw InputProgramError("expected name(...): '" + t + "'");
  }
  return {Trim(t.substr(0, open)), t.substr(open + 1, t.size() - open - 2)};
}

std::vector<std::string> SplitList(const std::string& body, char sep) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

ChannelProgram::ChannelProgram() { segments_.push_back({0.0, Term{}}); }

ChannelProgram ChannelProgram::Constant(double value) {
  ChannelProgram p;
  p.segments_[0].term.value = value;
  return p;
}

ChannelProgram ChannelProgram::Parse(const std::string& text) {
  const auto [name, body] = SplitCall(text);

  auto parse_term = [](const std::string& term_text) -> Term {
    const auto [term_name, term_body] = SplitCall(term_text);
    Term term;
    const std::vector<std::string> args = SplitList(term_body, ',');
    if (term_name == "const") {
      if (args.size() != 1) throw InputProgramError("const expects one value");
      term.kind = Term::Kind::kConstant;
      term.value = ParseNumber(args[0]);
    } else if (term_name == "sin" || term_name == "cos") {
      if (args.size() != 2 && args.size() != 3) {
        throw InputProgramError(term_name + " expects (A, w[, phi])");
      }
      term.kind = term_name == "sin" ? Term::Kind::kSin : Term::Kind::kCos;
      term.amplitude = ParseNumber(args[0]);
      term.frequency = ParseNumber(args[1]);
      term.phase = args.size() == 3 ? ParseNumber(args[2]) : 0.0;
    } else {
      throw InputProgramError("unknown expression '" + term_name + "'");
    }
    return term;
  };

  ChannelProgram program;
  program.segments_.clear();

  if (name == "piecewise" || name == "table") {
    for (const std::string& part : SplitList(body, ';')) {
      const std::size_t colon = part.find(':');
      if (colon == std::string::npos) {
        throw InputProgramError(name + " segments need 'time: value'");
      }
      Segment segment;
      segment.start = ParseNumber(part.substr(0, colon));
      const std::string rhs = Trim(part.substr(colon + 1));
      if (name == "table") {
        segment.term.kind = Term::Kind::kConstant;
        segment.term.value = ParseNumber(rhs);
      } else {
        segment.term = parse_term(rhs);
      }
      program.segments_.push_back(segment);
    }
    if (program.segments_.empty()) {
      throw InputProgramError(name + " needs at least one segment");
    }
    if (program.segments_.front().start != 0.0) {
      throw InputProgramError(name + " must start at t = 0");
    }
    for (std::size_t i = 1; i < program.segments_.size(); ++i) {
      if (!(program.segments_[i].start > program.segments_[i - 1].start)) {
        throw InputProgramError(name + " segment times must be increasing");
      }
    }
  } else {
    program.segments_.push_back({0.0, parse_term(text)});
  }
  return program;
}

double ChannelProgram::Eval(double t) const {
  // Last segment whose start is <= t; before t = 0 the first segment holds.
  std::size_t index = 0;
  while (index + 1 < segments_.size() && segments_[index + 1].start <= t) {
    ++index;
  }
  const Term& term = segments_[index].term;
  switch (term.kind) {
    case Term::Kind::kConstant:
      return term.value;
    case Term::Kind::kSin:
      return term.amplitude * std::sin(term.frequency * t + term.phase);
    case Term::Kind::kCos:
      return term.amplitude * std::cos(term.frequency * t + term.phase);
  }
  return 0.0;
}

}  // namespace se2track
