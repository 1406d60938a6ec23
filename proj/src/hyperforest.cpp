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

#include "sysf/hyperforest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace sysf {

std::vector<int> Hyperforest::roots() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (parent[i] < 0) out.push_back(i);
  return out;
}

bool Hyperforest::leq(int a, int b) const {
  for (int x = b; x >= 0; x = parent[x])
    if (x == a) return true;
  return false;
}

int Hyperforest::find(const Path& p) const {
  for (int i = 0; i < size(); ++i)
    if (nodes[i] == p) return i;
  return -1;
}

namespace {

void grow(const std::vector<Occurrence>& occs, Hyperforest& h, Path path,
          int parent) {
  int me = h.size();
  h.nodes.push_back(path);
  h.parent.push_back(parent);
  h.children.emplace_back();
  h.decoration.push_back(path.back().leaf);
  if (parent >= 0) h.children[parent].push_back(me);
  for (const auto& c : occs) {
    if (!enables(path.back(), c)) continue;
    Path next = path;
    next.push_back(c);
    grow(occs, h, std::move(next), me);
  }
}

}  // namespace

Hyperforest paths_of(const Game& g) {
  std::vector<Occurrence> occs = g.sorted_occurrences();
  Hyperforest h;
  for (const auto& a : occs)
    if (is_initial(a)) grow(occs, h, Path{a}, -1);
  return h;
}

Occurrence origin(const Path& n) { return n.back(); }

Hyperforest hyperforest_of_game(const Game& g) {
  Hyperforest h = paths_of(g);
  std::map<std::pair<int, Occurrence>, std::vector<int>> groups;
  for (int s = 0; s < h.size(); ++s) {
    const Linkage& y = g.link.at(h.origin(s));
    if (!y) continue;
    // First node from the root down whose origin has y as a prefix.
    int t = -1;
    for (std::size_t k = 0; k < h.nodes[s].size(); ++k) {
      if (is_prefix(*y, h.nodes[s][k])) {
        Path anc(h.nodes[s].begin(), h.nodes[s].begin() + k + 1);
        t = h.find(anc);
        break;
      }
    }
    if (t < 0) throw std::logic_error("linkage target not on path");
    groups[{t, *y}].push_back(s);
  }
  for (auto& [key, span] : groups) {
    std::sort(span.begin(), span.end());
    h.hyperedges.push_back(Hyperedge{key.first, span});
  }
  std::sort(h.hyperedges.begin(), h.hyperedges.end());
  return h;
}

Hyperforest hyperforest_of_formula(const Formula& f) {
  return hyperforest_of_game(game_of_formula(f));
}

std::vector<std::string> validate_hyperforest(const Hyperforest& h) {
  std::vector<std::string> v;
  int n = h.size();
  if (static_cast<int>(h.parent.size()) != n ||
      static_cast<int>(h.decoration.size()) != n) {
    v.push_back("forest: inconsistent table sizes");
    return v;
  }
  for (int i = 0; i < n; ++i) {
    int steps = 0;
    for (int x = h.parent[i]; x >= 0; x = h.parent[x]) {
      if (x >= n || ++steps > n) {
        v.push_back("forest: ancestors of node " + std::to_string(i) +
                    " are not a finite chain");
        break;
      }
    }
  }
  if (!v.empty()) return v;
  for (const auto& e : h.hyperedges) {
    for (int s : e.span) {
      if (!h.leq(e.target, s))
        v.push_back("hyperedge: target " + std::to_string(e.target) +
                    " is not below-or-equal to span member " + std::to_string(s));
      if (h.decoration[s] != 0)
        v.push_back("hyperedge: span member " + std::to_string(s) + " is decorated");
    }
  }
  for (std::size_t a = 0; a < h.hyperedges.size(); ++a) {
    for (std::size_t b = a + 1; b < h.hyperedges.size(); ++b) {
      const auto& x = h.hyperedges[a];
      const auto& y = h.hyperedges[b];
      if (x == y) continue;
      bool meet = std::any_of(x.span.begin(), x.span.end(), [&](int s) {
        return std::find(y.span.begin(), y.span.end(), s) != y.span.end();
      });
      if (meet)
        v.push_back("hyperedge: spans of distinct hyperedges overlap (targets " +
                    std::to_string(x.target) + ", " + std::to_string(y.target) + ")");
    }
  }
  return v;
}

std::optional<RefFriends> ref_fr(const Hyperforest& h, int n) {
  if (n < 0 || n >= h.size()) throw std::out_of_range("node not in hyperforest");
  for (const auto& e : h.hyperedges) {
    if (std::find(e.span.begin(), e.span.end(), n) == e.span.end()) continue;
    RefFriends rf{e.target, {}};
    for (int s : e.span)
      if (s != n) rf.friends.push_back(s);
    return rf;
  }
  return std::nullopt;
}

Polarity node_polarity(const Path& n) {
  return n.size() % 2 == 1 ? Polarity::O : Polarity::P;
}

Polarity node_polarity(const Hyperforest& h, int n) {
  return node_polarity(h.nodes.at(n));
}

std::string path_string(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " . ";
    out += to_string(p[i]);
  }
  return out;
}

std::string forest_json(const Hyperforest& h) {
  using J = nlohmann::ordered_json;
  J nodes = J::array();
  for (int i = 0; i < h.size(); ++i) {
    J node;
    node["index"] = i;
    node["parent"] = h.parent[i] < 0 ? J(nullptr) : J(h.parent[i]);
    node["origin"] = to_string(h.origin(i));
    node["path"] = path_string(h.nodes[i]);
    node["decoration"] =
        h.decoration[i] ? J("X" + std::to_string(h.decoration[i])) : J(nullptr);
    node["polarity"] = std::string(1, to_char(node_polarity(h, i)));
    nodes.push_back(node);
  }
  J edges = J::array();
  for (const auto& e : h.hyperedges) edges.push_back({{"target", e.target}, {"span", e.span}});
  return J{{"nodes", nodes}, {"hyperedges", edges}}.dump();
}

}  // namespace sysf
