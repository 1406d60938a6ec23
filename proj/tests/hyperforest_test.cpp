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

#include <string>
#include <vector>

#include "doctest.h"
#include "sysf/formula.hpp"
#include "sysf/game.hpp"
#include "sysf/gen.hpp"
#include "sysf/hyperforest.hpp"

using namespace sysf;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Move M(const char* s) { return parse_move(s); }

std::vector<std::string> path_strings(const Hyperforest& h) {
  std::vector<std::string> out;
  for (const auto& p : h.nodes) out.push_back(path_string(p));
  return out;
}

const char* kExample = "forall X1. (X1 * X2) -> (X1 * bot)";

}  // namespace

TEST_CASE("paths of small games") {
  Hyperforest h = paths_of(game_of_formula(F("X1 -> X2")));
  CHECK(path_strings(h) == std::vector<std::string>{"^2", "^2 . v1"});
  CHECK(h.parent == std::vector<int>{-1, 0});
  CHECK(path_strings(paths_of(game_of_formula(F("bot")))) == std::vector<std::string>{"0"});
  CHECK(origin(h.nodes[1]) == M("v1"));
  CHECK(origin(Path{M("0")}) == M("0"));
}

TEST_CASE("hyperforest of the worked example") {
  Hyperforest h = hyperforest_of_formula(F(kExample));
  // a b c d e f
  CHECK(path_strings(h) == std::vector<std::string>{"*^l0", "*^l0 . *vl0", "*^l0 . *vr2",
                                                    "*^r0", "*^r0 . *vl0", "*^r0 . *vr2"});
  CHECK(h.parent == std::vector<int>{-1, 0, 0, -1, 3, 3});
  CHECK(h.hyperedges == std::vector<Hyperedge>{{0, {0, 1}}, {3, {4}}});
  CHECK(h.decoration == std::vector<int>{0, 0, 2, 0, 0, 2});
  CHECK(validate_hyperforest(h).empty());
  CHECK(origin(h.nodes[1]) == M("*vl0"));
  CHECK(node_polarity(h, 1) == Polarity::P);

  auto b = ref_fr(h, 1);
  REQUIRE(b);
  CHECK(b->reference == 0);
  CHECK(b->friends == std::vector<int>{0});
  auto e = ref_fr(h, 4);
  REQUIRE(e);
  CHECK(e->reference == 3);
  CHECK(e->friends.empty());
  CHECK_FALSE(ref_fr(h, 2));
  CHECK_THROWS(ref_fr(h, 6));
}

TEST_CASE("hyperforests of atoms and a collapsing quantifier") {
  Hyperforest bot = hyperforest_of_formula(F("bot"));
  CHECK(bot.hyperedges.empty());
  CHECK(bot.decoration == std::vector<int>{0});
  Hyperforest h = hyperforest_of_formula(F("forall X1. bot -> X1"));
  CHECK(path_strings(h) == std::vector<std::string>{"*^0", "*^0 . *v0"});
  CHECK(h.hyperedges == std::vector<Hyperedge>{{0, {0}}});
  CHECK(h.decoration == std::vector<int>{0, 0});
}

TEST_CASE("validate_hyperforest reports violations") {
  Hyperforest h = hyperforest_of_formula(F(kExample));
  Hyperforest below = h;
  below.hyperedges = {{1, {0, 1}}};
  CHECK_FALSE(validate_hyperforest(below).empty());
  Hyperforest overlap = h;
  overlap.hyperedges = {{0, {0, 1}}, {1, {1}}};
  CHECK_FALSE(validate_hyperforest(overlap).empty());
  Hyperforest decorated = h;
  decorated.hyperedges = {{0, {2}}};
  CHECK_FALSE(validate_hyperforest(decorated).empty());
}

TEST_CASE("node polarity follows depth") {
  CHECK(node_polarity(Path{M("^2")}) == Polarity::O);
  CHECK(node_polarity(Path{M("^2"), M("v1")}) == Polarity::P);
}

TEST_CASE("hyperforest properties on random formulas") {
  Rng rng(808);
  for (int i = 0; i < 400; ++i) {
    Formula f = random_formula(rng, 5, 3);
    CAPTURE(to_string(f));
    Game g = game_of_formula(f);
    Hyperforest h = hyperforest_of_game(g);
    CHECK(validate_hyperforest(h).empty());
    for (int n = 0; n < h.size(); ++n) {
      const Occurrence& o = h.origin(n);
      CHECK(node_polarity(h, n) == polarity(erasure_E(o)));
      if (h.decoration[n] != 0) {
        CHECK_FALSE(g.link.at(o));
        CHECK(leaf_of(o) == h.decoration[n]);
      }
      if (auto rf = ref_fr(h, n)) {
        CHECK(g.link.at(o));
        CHECK(aux_polarity(g, o) == node_polarity(h, rf->reference));
      }
    }
  }
}
