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

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sysf/formula.hpp"
#include "sysf/game.hpp"
#include "sysf/gen.hpp"
#include "sysf/typedmoves.hpp"

using namespace sysf;

namespace {

Formula F(const char* s) { return parse_formula(s); }
TypedMove TM(const char* s) { return parse_typed_move(s); }

const char* kExample = "forall X1. X1 -> ((forall X2. X2) -> X3 * bot)";

// Typed move with the tokens of `a`; stars carry `note`.
TypedMove typed(const Occurrence& a, const Formula& note) {
  TypedMove m;
  for (char c : a.tokens) m.tokens.push_back(c == '*' ? star(note) : plain(c));
  m.leaf = a.leaf;
  return m;
}

}  // namespace

TEST_CASE("typed move syntax") {
  TypedMove m = TM("*{bot * X3}vr3");
  CHECK(m.tokens.size() == 3);
  CHECK(m.leaf == 3);
  CHECK(to_string(m) == "*{bot * X3}vr3");
  CHECK(m.tokens[0].annotation->game == game_of_formula(F("bot * X3")));
  CHECK(TM("*{bot*X3}vr3") == m);
  CHECK_THROWS(TM("*vr3"));
  CHECK_THROWS(TM("*{bot vr3"));
  CHECK_THROWS(TM("^v"));
  CHECK_THROWS(TM("*{X0}0"));
}

TEST_CASE("anonymize and erase") {
  CHECK(to_string(anonymize(TM("*{bot}vr3"))) == "*vr3");
  CHECK(to_string(anonymize(TM("3"))) == "3");
  CHECK(to_string(anonymize(TM("^*{bot}0"))) == "^*0");
  CHECK(to_string(erase(TM("*{bot}vr3"))) == "vr3");
  CHECK(to_string(erase(TM("0"))) == "0");
  CHECK(to_string(erase(TM("l*{bot}1"))) == "l1");
}

TEST_CASE("erase is erasure after anonymize on random typed moves") {
  Rng rng(1212);
  const char alphabet[] = "^vrl*";
  for (int i = 0; i < 300; ++i) {
    TypedMove m;
    int n = static_cast<int>(rng() % 7);
    for (int k = 0; k < n; ++k) {
      char c = alphabet[rng() % 5];
      m.tokens.push_back(c == '*' ? star(random_formula(rng, 2, 2)) : plain(c));
    }
    m.leaf = static_cast<int>(rng() % 4);
    CHECK(erase(m) == erasure_E(anonymize(m)));
    CHECK(parse_typed_move(to_string(m)) == m);
  }
}

TEST_CASE("formula extraction") {
  CHECK(formula_extract(TM("*{bot * X3}v0"), parse_move("*0")) ==
        game_of_formula(F("bot * X3")));
  CHECK(formula_extract(TM("*{X1}0"), parse_move("*0")) == game_of_formula(F("X1")));
  CHECK(formula_extract(TM("^*{X2}v0"), parse_move("^*0")) == game_of_formula(F("X2")));
  CHECK_THROWS_AS(formula_extract(TM("*{bot}v0"), parse_move("*v0")), ExtractionUndefined);
  CHECK_THROWS_AS(formula_extract(TM("^0"), parse_move("*0")), ExtractionUndefined);
}

TEST_CASE("move membership") {
  Game g = game_of_formula(F(kExample));
  TypedMove m = TM("*{bot * X3}vr3");
  CHECK(is_move_of(m, g));
  TypedMove m1 = TM("*{bot * X3}v0");
  Game b = formula_extract(m1, *g.link.at(anonymize(m1)));
  CHECK(b == game_of_formula(F("bot * X3")));
  CHECK(is_move_of(TM("r3"), b));
  CHECK(is_move_of(TM("3"), game_of_formula(F("X3"))));
  CHECK_FALSE(is_move_of(TM("*{bot}v1"), g));
  CHECK(is_move_of(TM("*{bot}v0"), g));
  CHECK(is_move_of(TM("*{X1}^^l3"), g));
  CHECK_FALSE(is_move_of(TM("*{X1}^^l2"), g));
}

TEST_CASE("dagger occurrences are moves") {
  Rng rng(1313);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, 4, 3);
    Game g = game_of_formula(f);
    CAPTURE(to_string(f));
    for (const auto& [a, l] : g.link)
      if (!l) CHECK(is_move_of(typed(a, F("bot")), g));
  }
}

TEST_CASE("instantiation planting agrees with substitution") {
  Rng rng(1414);
  int planted = 0;
  for (int i = 0; i < 200; ++i) {
    Formula a = random_formula(rng, 3, 3);
    VarSet free = ftv(a);
    if (free.empty()) continue;
    int x = *free.begin();
    Formula b = random_formula(rng, 2, 3);
    Game g = game_of_formula(Formula::Forall(x, a));
    Game gb = game_of_formula(b);
    std::set<Move> expected;
    for (const auto& [o, l] : game_of_formula(subst(a, b, x)).link) expected.insert(erasure_E(o));
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    for (const auto& [o, l] : g.link) {
      if (!l || l->tokens != "*") continue;
      for (const auto& [ob, lb] : gb.link) {
        if (lb) continue;
        TypedMove m = typed(o, F("bot"));
        m.tokens[0] = star(b);
        TypedMove tail = typed(ob, F("bot"));
        m.tokens.insert(m.tokens.end(), tail.tokens.begin(), tail.tokens.end());
        m.leaf = tail.leaf;
        CHECK(is_move_of(m, g));
        CHECK(expected.count(erase(m)) == 1);
        ++planted;
      }
    }
  }
  CHECK(planted > 50);
}

TEST_CASE("plays on a game") {
  Game g = game_of_formula(F("bot -> bot"));
  CHECK(is_play_on(TypedPlay{}, g));
  CHECK(is_play_on(TypedPlay{{TM("^0")}, {-1}}, g));
  CHECK(is_play_on(TypedPlay{{TM("^0"), TM("v0")}, {-1, 0}}, g));
  CHECK_FALSE(is_play_on(TypedPlay{{TM("^0"), TM("v1")}, {-1, 0}}, g));
  CHECK_FALSE(is_play_on(TypedPlay{{TM("v0")}, {-1}}, g));
  CHECK_FALSE(is_play_on(TypedPlay{{TM("^1")}, {-1}}, g));

  Game ex = game_of_formula(F(kExample));
  TypedPlay s{{TM("*{bot * X3}^^l3"), TM("*{bot * X3}v^^r0")}, {-1, 0}};
  CHECK_FALSE(is_play_on(s, ex));
  TypedPlay t{{TM("*{bot * X3}^^l3"), TM("*{bot * X3}vr3")}, {-1, 0}};
  CHECK(is_play_on(t, ex));
}
