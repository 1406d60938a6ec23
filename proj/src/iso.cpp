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

#include "sysf/iso.hpp"

#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace sysf {

namespace {

using K = Formula::Kind;

const Formula& closed_bottom() {
  static const Formula f = Formula::Forall(1, Formula::Var(1));
  return f;
}

Formula normalize_once(const Formula& f) {
  switch (f.kind()) {
    case K::kBot:
    case K::kVar:
      return f;
    case K::kProd:
      return Formula::Prod(normalize_once(f.left()), normalize_once(f.right()));
    case K::kArrow:
      return Formula::Arrow(normalize_once(f.left()), normalize_once(f.right()));
    case K::kForall: {
      Formula c = normalize_once(f.body());
      int x = f.index();
      bool is_x = c.is(K::kVar) && c.index() == x;
      if (!is_x && !pos_neg(c).second.count(x)) return subst(c, closed_bottom(), x);
      return Formula::Forall(x, c);
    }
  }
  return f;
}

int fresh_for(const Formula& f) {
  VarSet used = all_vars(f);
  int k = 1;
  while (used.count(k)) ++k;
  return k;
}

}  // namespace

Formula normalize(const Formula& f) {
  Formula cur = f;
  for (;;) {
    Formula next = normalize_once(cur);
    if (next == cur) return cur;
    cur = next;
  }
}

bool decide_iso(const Formula& a, const Formula& b) {
  return curry_iso(hyperforest_of_formula(a), hyperforest_of_formula(b)).has_value();
}

bool decide_iso_church_route(const Formula& a, const Formula& b) {
  return church_iso(hyperforest_of_formula(normalize(a)),
                    hyperforest_of_formula(normalize(b)))
      .has_value();
}

// ---------------------------------------------------------------------------
// Axioms.

std::vector<Formula> axiom_rewrites(int axiom, Dir dir, const Formula& f) {
  std::vector<Formula> out;
  bool ltr = dir == Dir::kLtr;
  switch (axiom) {
    case 1:
      if (ltr && f.is(K::kProd)) out.push_back(Formula::Prod(f.right(), f.left()));
      break;
    case 2:
      if (ltr && f.is(K::kProd) && f.right().is(K::kProd)) {
        out.push_back(Formula::Prod(Formula::Prod(f.left(), f.right().left()),
                                    f.right().right()));
      } else if (!ltr && f.is(K::kProd) && f.left().is(K::kProd)) {
        out.push_back(Formula::Prod(f.left().left(),
                                    Formula::Prod(f.left().right(), f.right())));
      }
      break;
    case 3:
      if (ltr && f.is(K::kArrow) && f.right().is(K::kArrow)) {
        out.push_back(Formula::Arrow(Formula::Prod(f.left(), f.right().left()),
                                     f.right().right()));
      } else if (!ltr && f.is(K::kArrow) && f.left().is(K::kProd)) {
        out.push_back(Formula::Arrow(f.left().left(),
                                     Formula::Arrow(f.left().right(), f.right())));
      }
      break;
    case 4:
      if (ltr && f.is(K::kArrow) && f.right().is(K::kProd)) {
        out.push_back(Formula::Prod(Formula::Arrow(f.left(), f.right().left()),
                                    Formula::Arrow(f.left(), f.right().right())));
      } else if (!ltr && f.is(K::kProd) && f.left().is(K::kArrow) &&
                 f.right().is(K::kArrow) &&
                 alpha_eq(f.left().left(), f.right().left())) {
        out.push_back(Formula::Arrow(
            f.left().left(), Formula::Prod(f.left().right(), f.right().right())));
      }
      break;
    case 5:
      if (ltr && f.is(K::kForall) && f.body().is(K::kForall) &&
          f.index() != f.body().index()) {
        out.push_back(Formula::Forall(
            f.body().index(), Formula::Forall(f.index(), f.body().body())));
      }
      break;
    case 6:
      if (ltr && f.is(K::kArrow) && f.right().is(K::kForall)) {
        int x = f.right().index();
        Formula b = f.right().body();
        if (ftv(f.left()).count(x)) {
          int z = fresh_for(f);
          b = subst(b, Formula::Var(z), x);
          x = z;
        }
        out.push_back(Formula::Forall(x, Formula::Arrow(f.left(), b)));
      } else if (!ltr && f.is(K::kForall) && f.body().is(K::kArrow) &&
                 !ftv(f.body().left()).count(f.index())) {
        out.push_back(Formula::Arrow(f.body().left(),
                                     Formula::Forall(f.index(), f.body().right())));
      }
      break;
    case 7:
      if (ltr && f.is(K::kForall) && f.body().is(K::kProd)) {
        int x = f.index();
        out.push_back(Formula::Prod(Formula::Forall(x, f.body().left()),
                                    Formula::Forall(x, f.body().right())));
      } else if (!ltr && f.is(K::kProd) && f.left().is(K::kForall) &&
                 f.right().is(K::kForall)) {
        int x = f.left().index();
        int y = f.right().index();
        Formula a = f.left().body();
        Formula b = f.right().body();
        int z = x;
        if (x != y) {
          z = fresh_for(f);
          a = subst(a, Formula::Var(z), x);
          b = subst(b, Formula::Var(z), y);
        }
        out.push_back(Formula::Forall(z, Formula::Prod(a, b)));
      }
      break;
    case 8:
      if (ltr && f.is(K::kForall)) {
        int x = f.index();
        const Formula& a = f.body();
        bool is_x = a.is(K::kVar) && a.index() == x;
        if (!is_x && !pos_neg(a).second.count(x))
          out.push_back(subst(a, closed_bottom(), x));
      }
      break;
    default:
      throw std::invalid_argument("axiom index out of range");
  }
  return out;
}

bool is_axiom_instance(int axiom, Dir dir, const Formula& before,
                       const Formula& after) {
  for (const auto& r : axiom_rewrites(axiom, dir, before))
    if (alpha_eq(r, after)) return true;
  for (const auto& r : axiom_rewrites(axiom, flip(dir), after))
    if (alpha_eq(r, before)) return true;
  return false;
}

const Formula& subterm_at(const Formula& f, const std::string& path) {
  const Formula* cur = &f;
  for (char c : path) {
    switch (c) {
      case 'l':
        if (!cur->is(K::kProd)) throw std::out_of_range("bad path");
        cur = &cur->left();
        break;
      case 'r':
        if (!cur->is(K::kProd)) throw std::out_of_range("bad path");
        cur = &cur->right();
        break;
      case 'd':
        if (!cur->is(K::kArrow)) throw std::out_of_range("bad path");
        cur = &cur->left();
        break;
      case 'c':
        if (!cur->is(K::kArrow)) throw std::out_of_range("bad path");
        cur = &cur->right();
        break;
      case 'b':
        if (!cur->is(K::kForall)) throw std::out_of_range("bad path");
        cur = &cur->body();
        break;
      default:
        throw std::out_of_range("bad path letter");
    }
  }
  return *cur;
}

namespace {

Formula replace_rec(const Formula& f, const std::string& path, std::size_t k,
                    const Formula& sub) {
  if (k == path.size()) return sub;
  switch (path[k]) {
    case 'l':
      if (!f.is(K::kProd)) break;
      return Formula::Prod(replace_rec(f.left(), path, k + 1, sub), f.right());
    case 'r':
      if (!f.is(K::kProd)) break;
      return Formula::Prod(f.left(), replace_rec(f.right(), path, k + 1, sub));
    case 'd':
      if (!f.is(K::kArrow)) break;
      return Formula::Arrow(replace_rec(f.left(), path, k + 1, sub), f.right());
    case 'c':
      if (!f.is(K::kArrow)) break;
      return Formula::Arrow(f.left(), replace_rec(f.right(), path, k + 1, sub));
    case 'b':
      if (!f.is(K::kForall)) break;
      return Formula::Forall(f.index(), replace_rec(f.body(), path, k + 1, sub));
    default:
      break;
  }
  throw std::out_of_range("bad path");
}

void positions(const Formula& f, std::string& path,
               const std::function<void(const Formula&, const std::string&)>& cb) {
  cb(f, path);
  auto go = [&](const Formula& g, char c) {
    path.push_back(c);
    positions(g, path, cb);
    path.pop_back();
  };
  switch (f.kind()) {
    case K::kProd:
      go(f.left(), 'l');
      go(f.right(), 'r');
      break;
    case K::kArrow:
      go(f.left(), 'd');
      go(f.right(), 'c');
      break;
    case K::kForall:
      go(f.body(), 'b');
      break;
    default:
      break;
  }
}

struct Move1 {
  TraceStep step;
  Formula next;
};

std::vector<Move1> successors(const Formula& f) {
  std::vector<Move1> out;
  std::string path;
  positions(f, path, [&](const Formula& sub, const std::string& p) {
    for (int ax = 1; ax <= kNumAxioms; ++ax) {
      for (Dir d : {Dir::kLtr, Dir::kRtl}) {
        for (const auto& r : axiom_rewrites(ax, d, sub)) {
          if (alpha_eq(r, sub)) continue;
          out.push_back(Move1{TraceStep{ax, d, p, r}, replace_at(f, p, r)});
        }
      }
    }
  });
  return out;
}

std::string key_of(const Formula& f) { return to_string(alpha_canonical(f)); }

struct SearchNode {
  Formula f;
  int parent;
  TraceStep step;  // parent -> this
};

}  // namespace

Formula replace_at(const Formula& f, const std::string& path, const Formula& sub) {
  return replace_rec(f, path, 0, sub);
}

Formula replay(const Formula& a, const Trace& tr) {
  Formula cur = a;
  for (std::size_t i = 0; i < tr.size(); ++i) {
    const TraceStep& s = tr[i];
    if (s.axiom < 1 || s.axiom > kNumAxioms)
      throw std::invalid_argument("step " + std::to_string(i) + ": bad axiom");
    const Formula* before;
    try {
      before = &subterm_at(cur, s.path);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("step " + std::to_string(i) + ": bad path '" + s.path + "'");
    }
    if (!is_axiom_instance(s.axiom, s.dir, *before, s.result))
      throw std::invalid_argument("step " + std::to_string(i) +
                                  ": not an instance of axiom " +
                                  std::to_string(s.axiom));
    cur = replace_at(cur, s.path, s.result);
  }
  return cur;
}

std::optional<Trace> find_trace(const Formula& a, const Formula& b, int max_depth,
                                const TraceSearchLimits& limits) {
  if (alpha_eq(a, b)) return Trace{};
  if (max_depth <= 0) return std::nullopt;

  std::vector<SearchNode> side[2];
  std::unordered_map<std::string, int> seen[2];
  std::vector<int> frontier[2];
  int depth[2] = {0, 0};
  const Formula* start[2] = {&a, &b};
  for (int s = 0; s < 2; ++s) {
    side[s].push_back(SearchNode{*start[s], -1, {}});
    seen[s][key_of(*start[s])] = 0;
    frontier[s].push_back(0);
  }

  auto build = [&](int fwd_node, int bwd_node) {
    Trace tr;
    for (int n = fwd_node; side[0][n].parent >= 0; n = side[0][n].parent)
      tr.push_back(side[0][n].step);
    std::reverse(tr.begin(), tr.end());
    for (int n = bwd_node; side[1][n].parent >= 0; n = side[1][n].parent) {
      const SearchNode& node = side[1][n];
      const Formula& prev = side[1][node.parent].f;
      tr.push_back(TraceStep{node.step.axiom, flip(node.step.dir), node.step.path,
                             subterm_at(prev, node.step.path)});
    }
    return tr;
  };

  while (depth[0] + depth[1] < max_depth) {
    int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    if (frontier[s].empty()) s = 1 - s;
    if (frontier[s].empty()) return std::nullopt;
    std::vector<int> next;
    for (int n : frontier[s]) {
      Formula f = side[s][n].f;
      for (auto& mv : successors(f)) {
        std::string k = key_of(mv.next);
        if (seen[s].count(k)) continue;
        int id = static_cast<int>(side[s].size());
        side[s].push_back(SearchNode{mv.next, n, mv.step});
        seen[s][k] = id;
        next.push_back(id);
        auto hit = seen[1 - s].find(k);
        if (hit != seen[1 - s].end())
          return s == 0 ? build(id, hit->second) : build(hit->second, id);
        if (side[0].size() + side[1].size() > limits.max_states) return std::nullopt;
      }
    }
    frontier[s] = std::move(next);
    ++depth[s];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witnesses.

std::pair<Term, Term> axiom_witness(int axiom, Dir dir) {
  static const char* kTable[kNumAxioms][2] = {
      {"\\p. <p2 p, p1 p>", "\\p. <p2 p, p1 p>"},
      {"\\p. <<p1 p, p1 (p2 p)>, p2 (p2 p)>", "\\p. <p1 (p1 p), <p2 (p1 p), p2 p>>"},
      {"\\f. \\p. f (p1 p) (p2 p)", "\\g. \\a. \\b. g <a, b>"},
      {"\\f. <\\a. p1 (f a), \\a. p2 (f a)>", "\\p. \\a. <p1 p a, p2 p a>"},
      {"\\x. x", "\\x. x"},
      {"\\x. x", "\\x. x"},
      {"\\p. <p1 p, p2 p>", "\\p. <p1 p, p2 p>"},
      {"\\x. x", "\\x. x"},
  };
  if (axiom < 1 || axiom > kNumAxioms) throw std::invalid_argument("bad axiom");
  Term f = parse_term(kTable[axiom - 1][0]);
  Term g = parse_term(kTable[axiom - 1][1]);
  if (dir == Dir::kRtl) std::swap(f, g);
  return {f, g};
}

namespace {

Term app(const Term& f, const Term& a) { return Term::App(f, a); }
Term var(const char* n) { return Term::Var(n); }

// Lifts a pair of witnesses through one context letter.
std::pair<Term, Term> wrap(char c, const Term& f, const Term& g) {
  auto over = [](char c, const Term& h) -> Term {
    Term p = var("p"), x = var("x"), k = var("k");
    switch (c) {
      case 'l':
        return Term::Lam("p", Term::Pair(app(h, Term::Proj1(p)), Term::Proj2(p)));
      case 'r':
        return Term::Lam("p", Term::Pair(Term::Proj1(p), app(h, Term::Proj2(p))));
      case 'c':
        return Term::Lam("k", Term::Lam("x", app(h, app(k, x))));
      default:
        return h;
    }
  };
  if (c == 'd') {
    Term x = var("x"), k = var("k");
    return {Term::Lam("k", Term::Lam("x", app(k, app(g, x)))),
            Term::Lam("k", Term::Lam("x", app(k, app(f, x))))};
  }
  if (c == 'b') return {f, g};
  return {over(c, f), over(c, g)};
}

}  // namespace

std::pair<Term, Term> witness(const Trace& tr) {
  Term fwd = var("x");
  Term bwd = var("x");
  for (const auto& s : tr) {
    auto [f, g] = axiom_witness(s.axiom, s.dir);
    for (auto it = s.path.rbegin(); it != s.path.rend(); ++it) {
      auto w = wrap(*it, f, g);
      f = w.first;
      g = w.second;
    }
    fwd = app(f, fwd);
    bwd = term_subst(bwd, "x", app(g, var("x")));
  }
  NormalizeOptions opt;
  return {term_normalize(Term::Lam("x", fwd), opt),
          term_normalize(Term::Lam("x", bwd), opt)};
}

std::string dir_string(Dir d) { return d == Dir::kLtr ? "ltr" : "rtl"; }

std::string trace_json(const Trace& tr) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : tr)
    arr.push_back({{"axiom", s.axiom},
                   {"dir", dir_string(s.dir)},
                   {"path", s.path},
                   {"meta", to_string(s.result)}});
  return arr.dump();
}

Trace trace_from_json(const std::string& text) {
  Trace tr;
  auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("trace must be a JSON list");
  for (const auto& e : arr) {
    TraceStep s;
    s.axiom = e.at("axiom").get<int>();
    std::string d = e.at("dir").get<std::string>();
    if (d != "ltr" && d != "rtl") throw std::invalid_argument("bad direction " + d);
    s.dir = d == "ltr" ? Dir::kLtr : Dir::kRtl;
    s.path = e.at("path").get<std::string>();
    s.result = parse_formula(e.at("meta").get<std::string>());
    tr.push_back(s);
  }
  return tr;
}

}  // namespace sysf
