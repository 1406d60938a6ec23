// Copyright 2026 The sysfiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYSF_VERIFY_HPP_
#define SYSF_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sysf/engine.hpp"
#include "sysf/formula.hpp"
#include "sysf/iso.hpp"
#include "sysf/term.hpp"

namespace sysf {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct WitnessReport {
  bool found = false;  // false: no trace within the depth (inconclusive)
  Trace trace;
  std::optional<Term> forward, backward;
  std::vector<CheckLine> checks;
  bool inconclusive = false;  // fuel exhausted during checking
  std::string diagnostic;

  bool all_pass() const;
};

// Trace search plus witness terms, without engine checks.
WitnessReport find_witness(const Formula& a, const Formula& b, int depth);

// find_witness, then in the engine over the erased moves of the arrow games:
// fwd;bwd = id on A -> A, bwd;fwd = id on B -> B, every explored play of
// either witness is zig-zag, and both are total on the arrow shape.
WitnessReport verify_witness(const Formula& a, const Formula& b, int depth,
                             const Bounds& bounds);

}  // namespace sysf

#endif  // SYSF_VERIFY_HPP_
