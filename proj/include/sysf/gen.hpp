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

#ifndef SYSF_GEN_HPP_
#define SYSF_GEN_HPP_

#include <random>
#include <string>
#include <utility>

#include "sysf/formula.hpp"
#include "sysf/term.hpp"

namespace sysf {

using Rng = std::mt19937_64;

// Formula of depth <= max_depth over X1..X{num_vars} (free or bound) and bot.
Formula random_formula(Rng& rng, int max_depth, int num_vars);

// Both sides of an instance of axiom 1..8 (left-to-right reading) whose
// metavariables are random formulas of depth <= max_depth; side conditions
// hold by construction or by resampling.
std::pair<Formula, Formula> random_axiom_instance(Rng& rng, int axiom, int max_depth,
                                                  int num_vars);

// A random isomorphic variant of f: `steps` axiom rewrites at random
// positions, in either direction.
Formula random_iso_walk(Rng& rng, const Formula& f, int steps);

// Random position in f, as a path for subterm_at/replace_at.
std::string random_path(Rng& rng, const Formula& f);

// Closed term of size between 2 and max_size.
Term random_closed_term(Rng& rng, int max_size);

}  // namespace sysf

#endif  // SYSF_GEN_HPP_
