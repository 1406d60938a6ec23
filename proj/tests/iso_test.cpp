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

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "sysf/formula.hpp"
#include "sysf/gen.hpp"
#include "sysf/hyperforest.hpp"
#include "sysf/iso.hpp"
#include "sysf/term.hpp"
#include "oracles.hpp"

using namespace sysf;
using namespace sysf::oracle;

namespace {

Formula F(const char* s) { return parse_formula(s); }
Term T(const char* s) { return parse_term(s); }

}  // namespace

TEST_CASE("church isomorphism examples") {
  auto f = church_iso(hyperforest_of_formula(F("X1 * X2")), hyperforest_of_formula(F("X2 * X1")));
  REQUIRE(f);
  CHECK(*f == Bijection{1, 0});
  Hyperforest h = hyperforest_of_formula(F("forall X1. (X1 * X2) -> (X1 * bot)"));
  auto id = church_iso(h, h);
  REQUIRE(id);
  CHECK(*id == Bijection{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(church_iso(hyperforest_of_formula(F("forall X1. X1")),
                         hyperforest_of_formula(F("bot"))));
}

TEST_CASE("curry isomorphism examples") {
  Hyperforest a = hyperforest_of_formula(F("forall X1. bot -> X1"));
  Hyperforest b = hyperforest_of_formula(F("bot -> forall X1. X1"));
  auto f = curry_iso(a, b);
  REQUIRE(f);
  CHECK(is_curry_bijection(a, b, *f));
  CHECK(ok_curry(a, b, *f));
  CHECK(church_iso(a, b));
  CHECK_FALSE(curry_iso(hyperforest_of_formula(F("forall X1. X1 -> X1")),
                        hyperforest_of_formula(F("(forall X1. X1) -> (forall X1. X1)"))));
  auto id = curry_iso(a, a);
  REQUIRE(id);
  CHECK(*id == Bijection{0, 1});
}

TEST_CASE("bijection search agrees with brute force") {
  Rng rng(909);
  int pairs = 0, curry_yes = 0, church_yes = 0;
  while (pairs < 400) {
    Formula a = random_formula(rng, 3, 2);
    Formula b = (rng() % 2) ? random_iso_walk(rng, a, 2) : random_formula(rng, 3, 2);
    Hyperforest h1 = hyperforest_of_formula(a);
    Hyperforest h2 = hyperforest_of_formula(b);
    if (h1.size() != h2.size() || h1.size() > 7) continue;
    ++pairs;
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    bool cu = brute_force(h1, h2, ok_curry);
    bool ch = brute_force(h1, h2, ok_church);
    auto fcu = curry_iso(h1, h2);
    auto fch = church_iso(h1, h2);
    CHECK(cu == fcu.has_value());
    CHECK(ch == fch.has_value());
    if (fcu) CHECK(ok_curry(h1, h2, *fcu));
    if (fch) CHECK(ok_church(h1, h2, *fch));
    if (fch) CHECK(fcu);
    curry_yes += cu;
    church_yes += ch;
  }
  CHECK(curry_yes > 50);
  CHECK(church_yes > 20);
}

TEST_CASE("mixed hyperedges") {
  Hyperforest h = hyperforest_of_formula(F("forall X1. X1 -> X1"));
  REQUIRE(h.hyperedges.size() == 1);
  CHECK(is_mixed(h, h.hyperedges[0]));
  Hyperforest g = hyperforest_of_formula(F("forall X1. bot -> X1"));
  CHECK_FALSE(is_mixed(g, g.hyperedges[0]));
}

TEST_CASE("normal forms") {
  CHECK(normalize(F("forall X1. bot -> X1")) == F("bot -> forall X1. X1"));
  CHECK(normalize(F("forall X1. X1")) == F("forall X1. X1"));
  CHECK(normalize(F("forall X1. X1 -> X1")) == F("forall X1. X1 -> X1"));
  CHECK(normalize(F("X2 * (forall X1. X1 * X2)")) == F("X2 * (forall X1. X1) * X2"));
}

TEST_CASE("decide_iso examples") {
  CHECK(decide_iso(F("X1 -> X2 -> X3"), F("X1 * X2 -> X3")));
  CHECK_FALSE(decide_iso(F("forall X1. X1 -> X1"), F("(forall X1. X1) -> (forall X1. X1)")));
  CHECK(decide_iso(F("bot"), F("bot")));
  CHECK_FALSE(decide_iso(F("X1 -> X2"), F("X2 -> X1")));
  CHECK_FALSE(decide_iso(F("X1"), F("X1 * X1")));
  CHECK_FALSE(decide_iso(F("forall X1. X1"), F("bot")));
}

TEST_CASE("axiom rewrites") {
  CHECK(is_axiom_instance(1, Dir::kLtr, F("X1 * X2"), F("X2 * X1")));
  CHECK(is_axiom_instance(3, Dir::kLtr, F("X1 -> X2 -> X3"), F("X1 * X2 -> X3")));
  CHECK(is_axiom_instance(8, Dir::kLtr, F("forall X1. X1 * X2"), F("(forall X1. X1) * X2")));
  CHECK_FALSE(is_axiom_instance(8, Dir::kLtr, F("forall X1. X1 -> X1"),
                                F("(forall X1. X1) -> forall X1. X1")));
  CHECK(axiom_rewrites(8, Dir::kRtl, F("(forall X1. X1) * X2")).empty());
  CHECK(axiom_rewrites(8, Dir::kLtr, F("forall X1. X1")).empty());
  CHECK_FALSE(is_axiom_instance(6, Dir::kLtr, F("X1 -> forall X1. X1"),
                                F("forall X1. X1 -> X1")));
}

TEST_CASE("paths into formulas") {
  Formula f = F("(X1 -> X2) * (forall X3. X3)");
  CHECK(subterm_at(f, "ld") == F("X1"));
  CHECK(subterm_at(f, "rb") == F("X3"));
  CHECK_THROWS_AS(subterm_at(f, "d"), std::out_of_range);
  CHECK(replace_at(f, "lc", F("bot")) == F("(X1 -> bot) * (forall X3. X3)"));
}

TEST_CASE("trace search and replay") {
  auto tr = find_trace(F("forall X1. bot -> X1"), F("bot -> forall X1. X1"), 2);
  REQUIRE(tr);
  CHECK(tr->size() == 1);
  CHECK(((*tr)[0].axiom == 6 || (*tr)[0].axiom == 8));
  CHECK(alpha_eq(replay(F("forall X1. bot -> X1"), *tr), F("bot -> forall X1. X1")));
  auto empty = find_trace(F("X1 * X2"), F("X1 * X2"), 0);
  REQUIRE(empty);
  CHECK(empty->empty());
  CHECK_FALSE(find_trace(F("X1"), F("X2"), 5));

  auto longer = find_trace(F("X3 -> X1 * X2"), F("(X3 -> X2) * (X3 -> X1)"), 3);
  REQUIRE(longer);
  CHECK(alpha_eq(replay(F("X3 -> X1 * X2"), *longer), F("(X3 -> X2) * (X3 -> X1)")));
  CHECK(trace_from_json(trace_json(*longer)).size() == longer->size());
  CHECK(alpha_eq(replay(F("X3 -> X1 * X2"), trace_from_json(trace_json(*longer))),
                 F("(X3 -> X2) * (X3 -> X1)")));

  Trace bad{{1, Dir::kLtr, "d", F("bot")}};
  CHECK_THROWS_AS(replay(F("X1 * X2"), bad), std::invalid_argument);
}

TEST_CASE("witness terms") {
  auto w8 = witness(*find_trace(F("forall X1. X1 * X2"), F("(forall X1. X1) * X2"), 1));
  CHECK(term_alpha_eq(w8.first, T("\\x. x")));
  CHECK(term_alpha_eq(w8.second, T("\\x. x")));
  auto w0 = witness(Trace{});
  CHECK(term_alpha_eq(w0.first, T("\\x. x")));
  CHECK(term_alpha_eq(w0.second, T("\\x. x")));
  auto w3 = witness(*find_trace(F("X1 -> X2 -> X3"), F("X1 * X2 -> X3"), 1));
  CHECK(term_alpha_eq(w3.first, T("\\f. \\p. f (p1 p) (p2 p)")));
  CHECK(term_alpha_eq(w3.second, T("\\g. \\a. \\b. g <a, b>")));
}

TEST_CASE("decide_iso is an equivalence and a congruence on samples") {
  Rng rng(1010);
  for (int i = 0; i < 60; ++i) {
    Formula a = random_formula(rng, 3, 3);
    Formula b = random_iso_walk(rng, a, 3);
    Formula c = random_iso_walk(rng, b, 3);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(decide_iso(a, a));
    CHECK(decide_iso(a, b));
    CHECK(decide_iso(b, a));
    CHECK(decide_iso(a, c));
    Formula ctx = random_formula(rng, 3, 3);
    std::string p = random_path(rng, ctx);
    CHECK(decide_iso(replace_at(ctx, p, a), replace_at(ctx, p, b)));
  }
}

TEST_CASE("both decision routes agree") {
  Rng rng(1111);
  for (int i = 0; i < 150; ++i) {
    Formula a = random_formula(rng, 4, 3);
    Formula b = (i % 2) ? random_iso_walk(rng, a, 3) : random_formula(rng, 4, 3);
    CAPTURE(to_string(a));
    CAPTURE(to_string(b));
    CHECK(decide_iso(a, b) == decide_iso_church_route(a, b));
  }
}
