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

// One line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "sysf/engine.hpp"
#include "sysf/formula.hpp"
#include "sysf/game.hpp"
#include "sysf/gen.hpp"
#include "sysf/hyperforest.hpp"
#include "sysf/iso.hpp"
#include "sysf/term.hpp"
#include "sysf/typedmoves.hpp"
#include "sysf/verify.hpp"

using namespace sysf;

namespace {

constexpr unsigned kSeed = 20260101;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

Formula F(const char* s) { return parse_formula(s); }
Term T(const char* s) { return parse_term(s); }

Outcome worked_game() {
  Outcome o;
  Game g = game_of_formula(F("forall X1. X1 -> ((forall X2. X2) -> X3 * bot)"));
  std::string expect =
      R"({"occurrences":[{"occ":"*^^l3","link":"dag"},{"occ":"*^^r0","link":"dag"},)"
      R"({"occ":"*^v*0","link":"*^v*0"},{"occ":"*v0","link":"*0"}]})";
  o.require(game_json(g) == expect, "game JSON " + game_json(g));
  o.require(validate_game(g).empty(), "game invalid");
  o.detail = o.pass ? "4 occurrences, linkage *0, *^v*0, dag, dag" : o.detail;
  return o;
}

Outcome worked_forest() {
  Outcome o;
  Hyperforest h = hyperforest_of_formula(F("forall X1. (X1 * X2) -> (X1 * bot)"));
  std::vector<std::string> names = {"*^l0",        "*^l0 . *vl0", "*^l0 . *vr2",
                                    "*^r0",        "*^r0 . *vl0", "*^r0 . *vr2"};
  o.require(h.size() == 6, "node count " + std::to_string(h.size()));
  if (!o.pass) return o;
  std::vector<int> idx;  // a..f
  for (const auto& n : names) {
    int k = -1;
    for (int i = 0; i < h.size(); ++i)
      if (path_string(h.nodes[i]) == n) k = i;
    o.require(k >= 0, "missing node " + n);
    idx.push_back(k);
  }
  if (!o.pass) return o;
  auto edge = [&](int t, std::vector<int> s) {
    Hyperedge e{idx[t], {}};
    for (int x : s) e.span.push_back(idx[x]);
    std::sort(e.span.begin(), e.span.end());
    return e;
  };
  std::vector<Hyperedge> expect = {edge(0, {0, 1}), edge(3, {4})};
  std::sort(expect.begin(), expect.end());
  o.require(h.hyperedges == expect, "hyperedges differ");
  for (int i = 0; i < 6; ++i)
    o.require(h.decoration[idx[i]] == (i == 2 || i == 5 ? 2 : 0), "decoration of " + names[i]);
  o.require(validate_hyperforest(h).empty(), "hyperforest invalid");
  if (o.pass) o.detail = "6 nodes, R = {(a,{a,b}), (d,{e})}, D(c) = D(f) = X2";
  return o;
}

Outcome axiom_soundness() {
  Outcome o;
  Rng rng(kSeed);
  int n = 0;
  for (int ax = 1; ax <= kNumAxioms; ++ax) {
    for (int i = 0; i < 100; ++i) {
      auto [a, b] = random_axiom_instance(rng, ax, 3, 3);
      ++n;
      o.require(is_axiom_instance(ax, Dir::kLtr, a, b),
                "generator: not an instance of axiom " + std::to_string(ax));
      o.require(decide_iso(a, b), "axiom " + std::to_string(ax) + ": " + to_string(a) +
                                      " vs " + to_string(b));
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " instances iso";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(kSeed + 1);
  int yes = 0;
  for (int i = 0; i < 500; ++i) {
    Formula a = random_formula(rng, 4, 3);
    Formula b = (i % 2) ? random_iso_walk(rng, a, 3) : random_formula(rng, 4, 3);
    bool d = decide_iso(a, b);
    yes += d;
    o.require(d == decide_iso_church_route(a, b),
              "disagree on " + to_string(a) + " vs " + to_string(b));
  }
  if (o.pass) o.detail = "500 pairs agree (" + std::to_string(yes) + " iso)";
  return o;
}

Outcome negative_controls() {
  Outcome o;
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"forall X1. X1 -> X1", "(forall X1. X1) -> (forall X1. X1)"},
      {"X1 -> X2", "X2 -> X1"},
      {"X1", "X1 * X1"},
      {"forall X1. X1", "bot"}};
  for (auto [x, y] : pairs) {
    Hyperforest h1 = hyperforest_of_formula(F(x));
    Hyperforest h2 = hyperforest_of_formula(F(y));
    o.require(!oracle::brute_force(h1, h2, oracle::ok_curry),
              std::string("brute force finds a bijection for ") + x);
    o.require(!decide_iso(F(x), F(y)), std::string("iso: ") + x + " vs " + y);
  }
  if (o.pass) o.detail = "4 pairs not-iso, no bijection by exhaustive search";
  return o;
}

// Instances of the equations of the calculus; metavariables are closed
// terms of size <= 6, eta and pairing subjects are abstractions and pairs.
std::vector<std::pair<Term, Term>> equation_instances(Rng& rng, int per_kind) {
  auto closed = [&](Term::Kind want) {
    for (;;) {
      Term t = random_closed_term(rng, 6);
      if (t.is(want)) return t;
    }
  };
  auto any = [&] { return random_closed_term(rng, 6); };
  std::vector<std::pair<Term, Term>> out;
  std::set<std::string> seen;
  auto add = [&](Term l, Term r) {
    if (!seen.insert(to_string(l)).second) return false;
    out.emplace_back(std::move(l), std::move(r));
    return true;
  };
  for (int k = 0; k < per_kind;) {  // beta
    Term f = closed(Term::Kind::kLam);
    Term u = any();
    k += add(Term::App(f, u), term_subst(f.first(), f.name(), u));
  }
  for (int k = 0; k < per_kind;) {  // eta
    Term t = closed(Term::Kind::kLam);
    k += add(Term::Lam("z", Term::App(t, Term::Var("z"))), t);
  }
  for (int k = 0; k < per_kind;) {  // first projection
    Term t = any(), u = any();
    k += add(Term::Proj1(Term::Pair(t, u)), t);
  }
  for (int k = 0; k < per_kind;) {  // second projection
    Term t = any(), u = any();
    k += add(Term::Proj2(Term::Pair(t, u)), u);
  }
  for (int k = 0; k < per_kind;) {  // surjective pairing
    Term t = closed(Term::Kind::kPair);
    k += add(Term::Pair(Term::Proj1(t), Term::Proj2(t)), t);
  }
  return out;
}

Outcome identity_laws() {
  Outcome o;
  Bounds b;
  o.require(equal_bounded(compose(strat_id(), strat_id(), b), strat_id(), b).equal,
            "id;id != id");
  o.require(equal_bounded(interpret({}, T("\\x. x"), b), strat_id(), b).equal,
            "[[\\x. x]] != id");
  Rng rng(kSeed + 2);
  auto inst = equation_instances(rng, 6);
  for (const auto& [l, r] : inst) {
    EqualResult e = equal_bounded(interpret({}, l, b), interpret({}, r, b), b);
    o.require(e.equal, to_string(l) + " != " + to_string(r) +
                           (e.divergence ? ": " + describe(*e.divergence) : ""));
  }
  if (o.pass) o.detail = "id laws + " + std::to_string(inst.size()) + " equation instances";
  return o;
}

Outcome hyperuniformity() {
  Outcome o;
  Bounds b;
  for (const Strategy& s : {strat_id(), strat_pi_l(), strat_pi_r(), strat_eval()})
    o.require(check_hyperuniform(s, b).empty(), s->name + " not hyperuniform");
  Rng rng(kSeed);
  std::vector<Term> seen = {T("\\x. x")};
  std::vector<Term> terms;
  Play empty;
  while (terms.size() < 20) {
    Term t = random_closed_term(rng, 6);
    Term nf = term_normalize(t, {false, 100000});
    if (std::any_of(seen.begin(), seen.end(),
                    [&](const Term& u) { return term_alpha_eq(nf, u); }))
      continue;
    seen.push_back(nf);
    if (!(*interpret({}, t, b))(empty, parse_move("^1"), -1)) continue;
    terms.push_back(t);
  }
  for (const Term& t : terms) {
    auto found = check_hyperuniform(interpret({}, t, b), b);
    o.require(found.empty(), to_string(t) + ": " + (found.empty() ? "" : found[0].reason));
  }
  if (o.pass) o.detail = "4 basic strategies + 20 random closed terms";
  return o;
}

Outcome witness_round_trip() {
  Outcome o;
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"X1 * X2", "X2 * X1"},
      {"X1 * (X2 * X3)", "(X1 * X2) * X3"},
      {"X1 -> X2 -> X3", "(X1 * X2) -> X3"},
      {"X1 -> (X2 * X3)", "(X1 -> X2) * (X1 -> X3)"},
      {"forall X1. forall X2. X1 -> X2", "forall X2. forall X1. X1 -> X2"},
      {"X1 -> forall X2. X2 -> X1", "forall X2. X1 -> X2 -> X1"},
      {"forall X1. X1 * (X1 -> X2)", "(forall X1. X1) * (forall X1. X1 -> X2)"},
      {"forall X1. X1 * X2", "(forall X1. X1) * X2"}};
  Bounds b;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int ax = static_cast<int>(i) + 1;
    Formula a = F(pairs[i].first), c = F(pairs[i].second);
    o.require(is_axiom_instance(ax, Dir::kLtr, a, c),
              "pair " + std::to_string(ax) + " is not an axiom instance");
    WitnessReport r = verify_witness(a, c, 2, b);
    o.require(r.found && !r.inconclusive,
              "axiom " + std::to_string(ax) + ": no verdict " + r.diagnostic);
    for (const auto& chk : r.checks)
      o.require(chk.pass, "axiom " + std::to_string(ax) + ": " + chk.name + " " + chk.detail);
    if (ax == 8 && r.found) {
      o.require(r.trace.size() == 1 && r.trace[0].axiom == 8, "axiom 8 trace");
      o.require(to_string(*r.forward) == "\\x. x" && to_string(*r.backward) == "\\x. x",
                "axiom 8 witness " + to_string(*r.forward) + " / " + to_string(*r.backward));
    }
  }
  if (o.pass) o.detail = "8 axioms: both compositions = id, zig-zag, total; axiom 8 (\\x. x, \\x. x)";
  return o;
}

Outcome typed_membership() {
  Outcome o;
  Game g = game_of_formula(F("forall X1. X1 -> ((forall X2. X2) -> X3 * bot)"));
  TypedMove m = parse_typed_move("*{bot * X3}vr3");
  TypedMove m1 = parse_typed_move("*{bot * X3}v0");
  o.require(g.contains(anonymize(m1)) && g.link.at(anonymize(m1)) == parse_move("*0"),
            "*v0 is not linked to *0");
  Game b = formula_extract(m1, parse_move("*0"));
  o.require(b == game_of_formula(F("bot * X3")), "extraction is not bot * X3");
  o.require(is_move_of(parse_typed_move("r3"), b), "r3 not a move of bot * X3");
  o.require(is_move_of(m, g), "*{bot * X3}vr3 not a move");
  o.require(!is_move_of(parse_typed_move("*{bot}v1"), g), "*{bot}v1 accepted");
  if (o.pass) o.detail = "extraction = bot * X3, r3 in its moves, membership holds";
  return o;
}

Outcome congruence() {
  Outcome o;
  Rng rng(kSeed + 3);
  for (int i = 0; i < 200; ++i) {
    Formula a = random_formula(rng, 3, 3);
    Formula b = random_iso_walk(rng, a, 3);
    Formula c = random_iso_walk(rng, b, 3);
    Formula d = random_formula(rng, 3, 3);
    Formula ctx = random_formula(rng, 3, 3);
    std::string p = random_path(rng, ctx);
    std::string at = " at sample " + std::to_string(i) + ": " + to_string(a);
    o.require(decide_iso(a, a), "reflexivity" + at);
    o.require(decide_iso(a, b) && decide_iso(b, c) && decide_iso(a, c), "transitivity" + at);
    o.require(decide_iso(a, d) == decide_iso(d, a), "symmetry" + at);
    o.require(decide_iso(b, a), "symmetry" + at);
    o.require(decide_iso(replace_at(ctx, p, a), replace_at(ctx, p, b)), "congruence" + at);
  }
  if (o.pass) o.detail = "200 samples: reflexive, symmetric, transitive, congruent";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit;  // seconds
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::cout << std::unitbuf << "seed " << kSeed << "\n";
  std::vector<Criterion> all = {
      {1, "worked game example", 1, worked_game},
      {2, "worked hyperforest example", 1, worked_forest},
      {3, "axiom soundness", 30, axiom_soundness},
      {4, "decision route equivalence", 60, oracle_equivalence},
      {5, "negative controls", 1, negative_controls},
      {6, "engine identity laws", 120, identity_laws},
      {7, "hyperuniformity", 120, hyperuniformity},
      {8, "witness round-trip", 120, witness_round_trip},
      {9, "typed-move membership", 1, typed_membership},
      {10, "congruence and equivalence", 60, congruence},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.pass && secs < c.limit;
    if (o.pass && !ok) o.detail += " (over time)";
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit);
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.name << " [" << timing
              << "] " << o.detail << "\n";
  }
  return failed == 0 ? 0 : 1;
}
