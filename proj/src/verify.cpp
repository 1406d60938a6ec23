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

#include "sysf/verify.hpp"

#include <algorithm>
#include <string>

#include "sysf/game.hpp"

namespace sysf {

namespace {

CheckLine identity_check(const std::string& name, const Strategy& first,
                         const Strategy& second, const Formula& side, const Bounds& b) {
  GameUniverse u(game_of_formula(Formula::Arrow(side, side)), b);
  EqualResult r = equal_bounded(compose(first, second, b), strat_id(), b, u);
  CheckLine line{name, r.equal, std::to_string(r.plays) + " plays"};
  if (r.divergence) line.detail = describe(*r.divergence);
  return line;
}

CheckLine zigzag_check(const std::string& name, const Strategy& s, const Formula& from,
                       const Formula& to, const Bounds& b) {
  GameUniverse u(game_of_formula(Formula::Arrow(from, to)), b);
  std::size_t count = 0;
  std::optional<Play> bad;
  explore(s, u, b, [&](const Play& p) {
    ++count;
    if (!bad && !is_zigzag(p)) bad = p;
  });
  CheckLine line{name, !bad, std::to_string(count) + " plays"};
  if (bad) line.detail = "not zig-zag: " + play_inline(*bad);
  return line;
}

CheckLine total_check(const std::string& name, const Strategy& s, const Formula& from,
                      const Formula& to, const Bounds& b) {
  GameUniverse u(game_of_formula(Formula::Arrow(from, to)), b);
  auto missing = check_total_arrow(s, b, u, 1);
  CheckLine line{name, missing.empty(), ""};
  if (!missing.empty()) {
    const Unanswered& m = missing.front();
    line.detail = m.reason + " after " + play_inline(m.prefix) + " on " + to_string(m.o);
  }
  return line;
}

}  // namespace

bool WitnessReport::all_pass() const {
  return found && !inconclusive &&
         std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

WitnessReport find_witness(const Formula& a, const Formula& b, int depth) {
  WitnessReport rep;
  auto tr = find_trace(a, b, depth);
  if (!tr) return rep;
  rep.found = true;
  rep.trace = *tr;
  auto [f, g] = witness(*tr);
  rep.forward = f;
  rep.backward = g;
  return rep;
}

WitnessReport verify_witness(const Formula& a, const Formula& b, int depth,
                             const Bounds& bounds) {
  WitnessReport rep = find_witness(a, b, depth);
  if (!rep.found) return rep;
  try {
    Strategy f = interpret({}, *rep.forward, bounds);
    Strategy g = interpret({}, *rep.backward, bounds);
    rep.checks.push_back(identity_check("fwd;bwd = id", f, g, a, bounds));
    rep.checks.push_back(identity_check("bwd;fwd = id", g, f, b, bounds));
    rep.checks.push_back(zigzag_check("fwd zig-zag", f, a, b, bounds));
    rep.checks.push_back(zigzag_check("bwd zig-zag", g, b, a, bounds));
    rep.checks.push_back(total_check("fwd total", f, a, b, bounds));
    rep.checks.push_back(total_check("bwd total", g, b, a, bounds));
  } catch (const FuelExhausted& e) {
    rep.inconclusive = true;
    rep.diagnostic = e.what();
  }
  return rep;
}

}  // namespace sysf
