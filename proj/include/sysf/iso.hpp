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

#ifndef SYSF_ISO_HPP_
#define SYSF_ISO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sysf/formula.hpp"
#include "sysf/hyperforest.hpp"
#include "sysf/term.hpp"

namespace sysf {

// f[i] is the image of node i of the first hyperforest.
using Bijection = std::vector<int>;

std::optional<Bijection> church_iso(const Hyperforest& h1, const Hyperforest& h2);
std::optional<Bijection> curry_iso(const Hyperforest& h1, const Hyperforest& h2);

// Direct checks of a candidate bijection against the definitions.
bool is_church_bijection(const Hyperforest& h1, const Hyperforest& h2,
                         const Bijection& f);
bool is_curry_bijection(const Hyperforest& h1, const Hyperforest& h2,
                        const Bijection& f);

// A hyperedge is mixed when some span member differs in polarity from the
// target.
bool is_mixed(const Hyperforest& h, const Hyperedge& e);

Formula normalize(const Formula& f);

bool decide_iso(const Formula& a, const Formula& b);
// Independent route: normalize both sides, then Church-isomorphism.
bool decide_iso_church_route(const Formula& a, const Formula& b);

enum class Dir { kLtr, kRtl };
inline Dir flip(Dir d) { return d == Dir::kLtr ? Dir::kRtl : Dir::kLtr; }

// One rewrite by an axiom at a position. Path letters: l/r product sides,
// d/c arrow domain/codomain, b quantifier body. `result` is the subterm at
// the position after the step.
struct TraceStep {
  int axiom = 0;
  Dir dir = Dir::kLtr;
  std::string path;
  Formula result;
};
using Trace = std::vector<TraceStep>;

constexpr int kNumAxioms = 8;

// Rewrites of f at its root by one axiom in one direction (empty when the
// axiom does not apply). Axiom 8 has no right-to-left rewrites.
std::vector<Formula> axiom_rewrites(int axiom, Dir dir, const Formula& f);
bool is_axiom_instance(int axiom, Dir dir, const Formula& before,
                       const Formula& after);

// Throws std::out_of_range on a bad path.
const Formula& subterm_at(const Formula& f, const std::string& path);
Formula replace_at(const Formula& f, const std::string& path, const Formula& sub);

// Applies the trace; throws std::invalid_argument on an invalid step.
Formula replay(const Formula& a, const Trace& tr);

struct TraceSearchLimits {
  std::size_t max_states = 200000;
};
// nullopt means inconclusive, never a disproof.
std::optional<Trace> find_trace(const Formula& a, const Formula& b, int max_depth,
                                const TraceSearchLimits& limits = {});

std::pair<Term, Term> axiom_witness(int axiom, Dir dir);
// (forward, backward), beta/projection/eta normalized.
std::pair<Term, Term> witness(const Trace& tr);

std::string dir_string(Dir d);
std::string trace_json(const Trace& tr);
Trace trace_from_json(const std::string& text);

}  // namespace sysf

#endif  // SYSF_ISO_HPP_
