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

#include "doctest.h"
#include "sysf/engine.hpp"
#include "sysf/formula.hpp"
#include "sysf/term.hpp"
#include "sysf/verify.hpp"

using namespace sysf;

TEST_CASE("witness search") {
  WitnessReport r = find_witness(parse_formula("forall X1. bot -> X1"),
                                 parse_formula("bot -> forall X1. X1"), 2);
  REQUIRE(r.found);
  CHECK(r.trace.size() == 1);
  CHECK(term_alpha_eq(*r.forward, parse_term("\\x. x")));
  CHECK(term_alpha_eq(*r.backward, parse_term("\\x. x")));
  CHECK_FALSE(find_witness(parse_formula("X1"), parse_formula("X2"), 3).found);
}

TEST_CASE("witness verification") {
  WitnessReport r = verify_witness(parse_formula("X1 -> X2 -> X3"),
                                   parse_formula("X1 * X2 -> X3"), 2, Bounds{});
  REQUIRE(r.found);
  CHECK_FALSE(r.inconclusive);
  CHECK(r.checks.size() == 6);
  CHECK(r.all_pass());

  Bounds starved;
  starved.interaction_fuel = 1;
  WitnessReport s = verify_witness(parse_formula("X1 -> X2 -> X3"),
                                   parse_formula("X1 * X2 -> X3"), 2, starved);
  CHECK(s.inconclusive);
  CHECK_FALSE(s.all_pass());
}
