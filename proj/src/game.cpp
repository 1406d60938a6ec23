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

#include "sysf/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace sysf {

std::vector<Occurrence> Game::sorted_occurrences() const {
  std::vector<Occurrence> out;
  for (const auto& [a, l] : link) out.push_back(a);
  std::sort(out.begin(), out.end(), [](const Occurrence& x, const Occurrence& y) {
    return to_string(x) < to_string(y);
  });
  return out;
}

Game game_atom_var(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  Game g;
  g.link[Move{"", i}] = std::nullopt;
  return g;
}

Game game_atom_bot() {
  Game g;
  g.link[Move{"", 0}] = std::nullopt;
  return g;
}

namespace {

Linkage prefixed(const Linkage& l, const std::string& p) {
  if (!l) return std::nullopt;
  return Move{p + l->tokens, l->leaf};
}

void add_prefixed(Game& out, const Game& g, const std::string& p) {
  for (const auto& [a, l] : g.link)
    out.link[Move{p + a.tokens, a.leaf}] = prefixed(l, p);
}

struct TreeBuilder {
  Game g;
  std::map<int, std::string> binders;

  void build(const Formula& f, const std::string& path) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::kBot:
        g.link[Move{path, 0}] = std::nullopt;
        return;
      case K::kVar: {
        auto it = binders.find(f.index());
        if (it == binders.end()) {
          g.link[Move{path, f.index()}] = std::nullopt;
        } else {
          g.link[Move{path, 0}] = Move{it->second + "*", 0};
        }
        return;
      }
      case K::kProd:
        build(f.left(), path + "l");
        build(f.right(), path + "r");
        return;
      case K::kArrow:
        build(f.left(), path + "v");
        build(f.right(), path + "^");
        return;
      case K::kForall: {
        int i = f.index();
        auto it = binders.find(i);
        std::optional<std::string> saved;
        if (it != binders.end()) saved = it->second;
        binders[i] = path;
        build(f.body(), path + "*");
        if (saved) {
          binders[i] = *saved;
        } else {
          binders.erase(i);
        }
        return;
      }
    }
  }
};

}  // namespace

Game game_prod(const Game& a, const Game& b) {
  Game out;
  add_prefixed(out, a, "l");
  add_prefixed(out, b, "r");
  return out;
}

Game game_arrow(const Game& a, const Game& b) {
  Game out;
  add_prefixed(out, a, "v");
  add_prefixed(out, b, "^");
  return out;
}

Game game_forall(const Game& a, int i) {
  Game out;
  for (const auto& [occ, l] : a.link) {
    if (occ.leaf == i) {
      out.link[Move{"*" + occ.tokens, 0}] = Move{"*", 0};
    } else {
      out.link[Move{"*" + occ.tokens, occ.leaf}] = prefixed(l, "*");
    }
  }
  return out;
}

Game game_of_formula(const Formula& f) {
  TreeBuilder b;
  b.build(f, "");
  return b.g;
}

Game game_of_formula_inductive(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kBot:
      return game_atom_bot();
    case K::kVar:
      return game_atom_var(f.index());
    case K::kProd:
      return game_prod(game_of_formula_inductive(f.left()),
                       game_of_formula_inductive(f.right()));
    case K::kArrow:
      return game_arrow(game_of_formula_inductive(f.left()),
                        game_of_formula_inductive(f.right()));
    case K::kForall:
      return game_forall(game_of_formula_inductive(f.body()), f.index());
  }
  return game_atom_bot();
}

Game game_subst(const Game& a, const Game& b, int i) {
  Game out;
  for (const auto& [occ, l] : a.link) {
    if (occ.leaf != i) {
      out.link[occ] = l;
      continue;
    }
    for (const auto& [bo, bl] : b.link) {
      Move m = occ_subst(occ, bo);
      out.link[m] = bl ? Linkage(occ_subst(occ, *bl)) : std::nullopt;
    }
  }
  return out;
}

std::vector<std::string> validate_game(const Game& g) {
  std::vector<std::string> v;
  if (g.link.empty()) {
    v.push_back("non-empty: the occurrence set is empty");
    return v;
  }
  for (const auto& [a, l] : g.link) {
    std::string as = to_string(a);
    if (!is_initial(a)) {
      bool enabled = std::any_of(g.link.begin(), g.link.end(), [&](const auto& e) {
        return enables(e.first, a);
      });
      if (!enabled) v.push_back("coherent: " + as + " is neither initial nor enabled");
    }
    if (l) {
      if (l->leaf != 0 || l->tokens.empty() || l->tokens.back() != '*')
        v.push_back("linkage: " + as + " links to " + to_string(*l) +
                    ", which is not of the form a[*0]");
      else if (!is_prefix(*l, a))
        v.push_back("linkage: " + to_string(*l) + " is not a prefix of " + as);
    }
    if (a.leaf != 0 && l)
      v.push_back("linkage: " + as + " has a nonzero leaf but is linked");
  }
  for (const auto& [a, la] : g.link) {
    Move ea = erasure_E(a);
    for (const auto& [b, lb] : g.link) {
      if (!(a < b) && !(b < a)) continue;
      if (is_prefix(ea, erasure_E(b)))
        v.push_back("non-ambiguous: E(" + to_string(a) + ") is a prefix of E(" +
                    to_string(b) + ")");
    }
  }
  return v;
}

std::optional<Polarity> aux_polarity(const Game& g, const Occurrence& a) {
  auto it = g.link.find(a);
  if (it == g.link.end())
    throw std::invalid_argument("occurrence not in game: " + to_string(a));
  if (!it->second) return std::nullopt;
  return polarity(*it->second);
}

std::string linkage_string(const Linkage& l) {
  return l ? to_string(*l) : std::string("dag");
}

std::string game_json(const Game& g) {
  nlohmann::ordered_json occs = nlohmann::ordered_json::array();
  for (const auto& a : g.sorted_occurrences())
    occs.push_back({{"occ", to_string(a)}, {"link", linkage_string(g.link.at(a))}});
  return nlohmann::ordered_json{{"occurrences", occs}}.dump();
}

}  // namespace sysf
