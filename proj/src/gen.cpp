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

#include "sysf/gen.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "sysf/iso.hpp"

namespace sysf {

namespace {

using K = Formula::Kind;

int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Formula any_bottom() { return Formula::Forall(1, Formula::Var(1)); }

void positions(const Formula& f, const std::string& at, std::vector<std::string>& out) {
  out.push_back(at);
  switch (f.kind()) {
    case K::kProd:
      positions(f.left(), at + "l", out);
      positions(f.right(), at + "r", out);
      break;
    case K::kArrow:
      positions(f.left(), at + "d", out);
      positions(f.right(), at + "c", out);
      break;
    case K::kForall:
      positions(f.body(), at + "b", out);
      break;
    default:
      break;
  }
}

// Term of exactly `budget` nodes. Sub-terms of an empty scope must be
// closed, so each needs at least 2 nodes.
Term gen_term(Rng& rng, int budget, std::vector<std::string>& scope) {
  bool open = !scope.empty();
  int min_sub = open ? 1 : 2;
  if (budget == 1) {
    if (!open) throw std::logic_error("no variable in scope");
    return Term::Var(scope[pick(rng, 0, static_cast<int>(scope.size()) - 1)]);
  }
  enum Choice { kLam, kApp, kPair, kProj };
  std::vector<Choice> choices{kLam};
  if (budget - 1 >= min_sub) choices.push_back(kProj);
  if (budget - 1 >= 2 * min_sub) {
    choices.push_back(kApp);
    choices.push_back(kPair);
  }
  switch (choices[pick(rng, 0, static_cast<int>(choices.size()) - 1)]) {
    case kLam: {
      std::string x = "x" + std::to_string(scope.size());
      scope.push_back(x);
      Term body = gen_term(rng, budget - 1, scope);
      scope.pop_back();
      return Term::Lam(x, body);
    }
    case kApp:
    case kPair: {
      int left = pick(rng, min_sub, budget - 1 - min_sub);
      Term a = gen_term(rng, left, scope);
      Term b = gen_term(rng, budget - 1 - left, scope);
      return pick(rng, 0, 1) ? Term::App(a, b) : Term::Pair(a, b);
    }
    case kProj: {
      Term a = gen_term(rng, budget - 1, scope);
      return pick(rng, 0, 1) ? Term::Proj1(a) : Term::Proj2(a);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Formula random_formula(Rng& rng, int max_depth, int num_vars) {
  int leafy = max_depth <= 0 ? 0 : pick(rng, 0, 4);
  if (leafy == 0) {
    int j = pick(rng, 0, num_vars);
    return j == 0 ? Formula::Bot() : Formula::Var(j);
  }
  switch (pick(rng, 0, 2)) {
    case 0:
      return Formula::Prod(random_formula(rng, max_depth - 1, num_vars),
                           random_formula(rng, max_depth - 1, num_vars));
    case 1:
      return Formula::Arrow(random_formula(rng, max_depth - 1, num_vars),
                            random_formula(rng, max_depth - 1, num_vars));
    default:
      return Formula::Forall(pick(rng, 1, num_vars),
                             random_formula(rng, max_depth - 1, num_vars));
  }
}

std::pair<Formula, Formula> random_axiom_instance(Rng& rng, int axiom, int max_depth,
                                                  int num_vars) {
  auto f = [&] { return random_formula(rng, max_depth, num_vars); };
  for (;;) {
    Formula a = f(), b = f(), c = f();
    int x = pick(rng, 1, num_vars);
    int y = pick(rng, 1, num_vars);
    switch (axiom) {
      case 1:
        return {Formula::Prod(a, b), Formula::Prod(b, a)};
      case 2:
        return {Formula::Prod(a, Formula::Prod(b, c)), Formula::Prod(Formula::Prod(a, b), c)};
      case 3:
        return {Formula::Arrow(a, Formula::Arrow(b, c)),
                Formula::Arrow(Formula::Prod(a, b), c)};
      case 4:
        return {Formula::Arrow(a, Formula::Prod(b, c)),
                Formula::Prod(Formula::Arrow(a, b), Formula::Arrow(a, c))};
      case 5:
        if (x == y) continue;
        return {Formula::Forall(x, Formula::Forall(y, a)),
                Formula::Forall(y, Formula::Forall(x, a))};
      case 6:
        if (ftv(a).count(x)) continue;
        return {Formula::Arrow(a, Formula::Forall(x, b)),
                Formula::Forall(x, Formula::Arrow(a, b))};
      case 7:
        return {Formula::Forall(x, Formula::Prod(a, b)),
                Formula::Prod(Formula::Forall(x, a), Formula::Forall(x, b))};
      case 8:
        if ((a.is(K::kVar) && a.index() == x) || pos_neg(a).second.count(x)) continue;
        return {Formula::Forall(x, a), subst(a, any_bottom(), x)};
      default:
        throw std::invalid_argument("axiom index out of range");
    }
  }
}

std::string random_path(Rng& rng, const Formula& f) {
  std::vector<std::string> all;
  positions(f, "", all);
  return all[pick(rng, 0, static_cast<int>(all.size()) - 1)];
}

Formula random_iso_walk(Rng& rng, const Formula& f, int steps) {
  Formula cur = f;
  for (int s = 0; s < steps; ++s) {
    std::vector<std::string> all;
    positions(cur, "", all);
    std::vector<std::pair<std::string, Formula>> moves;
    for (const auto& p : all) {
      for (int ax = 1; ax <= kNumAxioms; ++ax) {
        for (Dir d : {Dir::kLtr, Dir::kRtl}) {
          for (const auto& r : axiom_rewrites(ax, d, subterm_at(cur, p))) moves.emplace_back(p, r);
        }
      }
    }
    if (moves.empty()) break;
    const auto& [p, r] = moves[pick(rng, 0, static_cast<int>(moves.size()) - 1)];
    cur = replace_at(cur, p, r);
  }
  return cur;
}

Term random_closed_term(Rng& rng, int max_size) {
  if (max_size < 2) throw std::invalid_argument("closed terms need size >= 2");
  std::vector<std::string> scope;
  return gen_term(rng, pick(rng, 2, max_size), scope);
}

}  // namespace sysf
