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

#ifndef SE2TRACK_INPUT_PROGRAM_H_
#define SE2TRACK_INPUT_PROGRAM_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "se2track/dynamics.h"

namespace se2track {

// One channel of the leader's reference input as a function of time.
//
// Textual forms accepted by Parse:
//   const(c)                      constant c
//   sin(A, w[, phi])              A * sin(w t + phi)
//   cos(A, w[, phi])              A * cos(w t + phi)
//   piecewise(t0: expr; t1: expr; ...)
//                                 segments by start time (t0 must be 0,
//                                 ascending); expr is const/sin/cos
//   table(t0: v0; t1: v1; ...)    zero-order hold over samples (t0 must be
//                                 0, ascending)
//
// Sinusoid phases are in absolute time, not segment-relative.
class ChannelProgram {
 public:
  // Defaults to const(0).
  ChannelProgram();

  static ChannelProgram Parse(const std::string& text);
  static ChannelProgram Constant(double value);

  double Eval(double t) const;

 private:
  struct Term {
    enum class Kind { kConstant, kSin, kCos } kind = Kind::kConstant;
    double value = 0.0;      // constant
    double amplitude = 0.0;  // sinusoids
    double frequency = 0.0;
    double phase = 0.0;
  };
  struct Segment {
    double start = 0.0;
    Term term;
  };
  // Piecewise over terms covers all forms: a plain expression is one segment
  // starting at 0, a table is many constant segments.
  std::vector<Segment> segments_;
};

// The leader's full input program: u_theta and u_x channels, u_y pinned to
// zero.
struct InputProgram {
  ChannelProgram u_theta;
  ChannelProgram u_x;

  ControlInput Eval(double t) const {
    return {u_theta.Eval(t), u_x.Eval(t), 0.0};
  }
};

// Raised on malformed program text.
class InputProgramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace se2track

#endif  // SE2TRACK_INPUT_PROGRAM_H_
