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

#ifndef SYSF_MOVE_HPP_
#define SYSF_MOVE_HPP_

#include <compare>
#include <optional>
#include <string>

namespace sysf {

// Token alphabet: '^' up, 'v' down, 'r', 'l', '*' star (occurrences only).
// A Move is a token word followed by a natural leaf; it serves both as an
// occurrence and as an untyped move.
struct Move {
  std::string tokens;
  int leaf = 0;

  auto operator<=>(const Move&) const = default;
};

using Occurrence = Move;

enum class Polarity { O, P };

inline Polarity flip(Polarity p) {
  return p == Polarity::O ? Polarity::P : Polarity::O;
}
inline char to_char(Polarity p) { return p == Polarity::O ? 'O' : 'P'; }

// "*^v*0" <-> Move{"*^v*", 0}. Throws std::invalid_argument on bad input.
Move parse_move(const std::string& text);
std::string to_string(const Move& m);

Move erasure_E(const Move& a);
int leaf_of(const Move& m);
Move occ_subst(const Move& m1, const Move& m2);
bool is_prefix(const Move& m1, const Move& m2);
Polarity polarity(const Move& m);
bool is_initial(const Move& m);
// parent == nullopt tests initiality.
bool enables(const std::optional<Move>& parent, const Move& child);
bool enables(const Move& parent, const Move& child);

}  // namespace sysf

#endif  // SYSF_MOVE_HPP_
