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

#ifndef SYSF_TYPEDMOVES_HPP_
#define SYSF_TYPEDMOVES_HPP_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sysf/formula.hpp"
#include "sysf/game.hpp"
#include "sysf/move.hpp"

namespace sysf {

// The game carried by a star, with the type it was built from for printing.
struct Annotation {
  Formula type;
  Game game;

  bool operator==(const Annotation& o) const { return game == o.game; }
};

struct TypedToken {
  char symbol = '^';  // one of ^ v r l *
  std::shared_ptr<const Annotation> annotation;  // set iff symbol == '*'

  bool operator==(const TypedToken& o) const;
};

struct TypedMove {
  std::vector<TypedToken> tokens;
  int leaf = 0;

  bool operator==(const TypedMove&) const = default;
};

TypedToken star(const Formula& type);
TypedToken plain(char symbol);

// Text form: `*{bot * X3}vr3`. Throws std::invalid_argument or ParseError.
TypedMove parse_typed_move(const std::string& text);
std::string to_string(const TypedMove& m);

Occurrence anonymize(const TypedMove& m);
Move erase(const TypedMove& m);

class ExtractionUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// m / a. Throws ExtractionUndefined when no clause applies.
Game formula_extract(const TypedMove& m, const Occurrence& a);

bool is_move_of(const TypedMove& m, const Game& g);

Polarity polarity(const TypedMove& m);
bool enables(const TypedMove& parent, const TypedMove& child);

struct TypedPlay {
  std::vector<TypedMove> moves;
  std::vector<int> ptr;  // -1: unjustified
};
bool is_play_on(const TypedPlay& s, const Game& g);

}  // namespace sysf

#endif  // SYSF_TYPEDMOVES_HPP_
