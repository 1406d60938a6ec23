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

#ifndef SYSF_GAME_HPP_
#define SYSF_GAME_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sysf/formula.hpp"
#include "sysf/move.hpp"

namespace sysf {

// nullopt stands for the dagger.
using Linkage = std::optional<Occurrence>;

struct Game {
  std::map<Occurrence, Linkage> link;

  bool operator==(const Game&) const = default;
  bool contains(const Occurrence& a) const { return link.count(a) != 0; }
  // Occurrences ordered by their printed form.
  std::vector<Occurrence> sorted_occurrences() const;
};

Game game_atom_var(int i);
Game game_atom_bot();
Game game_prod(const Game& a, const Game& b);
Game game_arrow(const Game& a, const Game& b);
Game game_forall(const Game& a, int i);

// Syntactic-tree construction.
Game game_of_formula(const Formula& f);
// Fold of the inductive constructors over f.
Game game_of_formula_inductive(const Formula& f);

Game game_subst(const Game& a, const Game& b, int i);

std::vector<std::string> validate_game(const Game& g);

// nullopt when the linkage is the dagger. Throws if a is not in g.
std::optional<Polarity> aux_polarity(const Game& g, const Occurrence& a);

std::string linkage_string(const Linkage& l);
// {"occurrences":[{"occ":..,"link":..},..]}, sorted by occ.
std::string game_json(const Game& g);

}  // namespace sysf

#endif  // SYSF_GAME_HPP_
