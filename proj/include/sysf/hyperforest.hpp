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

#ifndef SYSF_HYPERFOREST_HPP_
#define SYSF_HYPERFOREST_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sysf/game.hpp"

namespace sysf {

using Path = std::vector<Occurrence>;

struct Hyperedge {
  int target = -1;
  std::vector<int> span;  // sorted node indices

  bool operator==(const Hyperedge&) const = default;
  auto operator<=>(const Hyperedge&) const = default;
};

// Nodes are indexed in depth-first preorder; siblings are ordered by the
// printed form of their origin.
struct Hyperforest {
  std::vector<Path> nodes;
  std::vector<int> parent;  // -1 for roots
  std::vector<std::vector<int>> children;
  std::vector<Hyperedge> hyperedges;  // sorted
  std::vector<int> decoration;        // 0 when undefined

  int size() const { return static_cast<int>(nodes.size()); }
  const Occurrence& origin(int n) const { return nodes.at(n).back(); }
  int depth(int n) const { return static_cast<int>(nodes.at(n).size()); }
  std::vector<int> roots() const;
  // Is a an ancestor of b, or equal to it.
  bool leq(int a, int b) const;
  int find(const Path& p) const;  // -1 if absent
};

// The forest of paths only: no hyperedges, decoration from leaves.
Hyperforest paths_of(const Game& g);
Occurrence origin(const Path& n);
Hyperforest hyperforest_of_game(const Game& g);
Hyperforest hyperforest_of_formula(const Formula& f);

std::vector<std::string> validate_hyperforest(const Hyperforest& h);

struct RefFriends {
  int reference;
  std::vector<int> friends;
};
// nullopt when n lies in no span. Throws on a bad index.
std::optional<RefFriends> ref_fr(const Hyperforest& h, int n);

Polarity node_polarity(const Path& n);
Polarity node_polarity(const Hyperforest& h, int n);

std::string path_string(const Path& p);  // "*^l0 . *vl0"
std::string forest_json(const Hyperforest& h);

}  // namespace sysf

#endif  // SYSF_HYPERFOREST_HPP_
