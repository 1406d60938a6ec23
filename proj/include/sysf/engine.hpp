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

#ifndef SYSF_ENGINE_HPP_
#define SYSF_ENGINE_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sysf/game.hpp"
#include "sysf/move.hpp"
#include "sysf/term.hpp"

namespace sysf {

using UntypedMove = Move;

// Moves with absolute back-pointers; -1 marks an unjustified move.
struct Play {
  std::vector<Move> moves;
  std::vector<int> ptr;

  int size() const { return static_cast<int>(moves.size()); }
  bool empty() const { return moves.empty(); }
  void push(Move m, int p) {
    moves.push_back(std::move(m));
    ptr.push_back(p);
  }
  Play prefix(int n) const;
  bool operator==(const Play&) const = default;
};

// Builds a play from (move text, pointer) pairs.
Play make_play(std::initializer_list<std::pair<const char*, int>> items);
std::string play_key(const Play& s);
// One line per move: "index: move (ptr -> j)" or "index: move (initial)".
std::string play_dump(const Play& s);
std::string play_inline(const Play& s);

bool is_justified(const Play& s);
bool is_play(const Play& s);
// Can (m, p) extend the play s while keeping it a play?
bool legal_extension(const Play& s, const Move& m, int p);
Play view(const Play& s);
bool is_biview(const Play& s);

// Restriction together with the original index of every kept move.
struct Restriction {
  Play play;
  std::vector<int> origin;
};
Restriction restrict_one_map(const Play& s, const std::string& zeta);
Restriction restrict_two_map(const Play& s, const std::string& zeta,
                             const std::string& xi);
Play restrict_one(const Play& s, const std::string& zeta);
Play restrict_two(const Play& s, const std::string& zeta, const std::string& xi);

struct PMove {
  Move move;
  int ptr = -1;
  bool operator==(const PMove&) const = default;
};

struct Bounds {
  int max_play_len = 8;
  int max_token_len = 6;
  int max_leaf = 3;
  int interaction_fuel = 200;
  // Exploration shape; see the README section on bounds.
  int max_initial_tokens = 3;
  int max_fresh_tail = 1;
  int max_inst_tokens = 2;
  int max_biview_tokens = 1;
};

class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic next-move function. `s` has even length and `o` is a legal
// O-move justified by `optr` (-1 when initial); the answer's pointer indexes
// into s·o.
struct StrategyOracle {
  std::string name;
  std::function<std::optional<PMove>(const Play& s, const Move& o, int optr)> respond;
  // Set for composites: the interaction sequence behind a visible play.
  std::function<std::optional<Play>(const Play& s)> interaction;

  std::optional<PMove> operator()(const Play& s, const Move& o, int optr) const {
    return respond(s, o, optr);
  }
};
using Strategy = std::shared_ptr<const StrategyOracle>;

// Copycat between prefix pairs: O at a.first·x is answered at a.second·x and
// vice versa.
Strategy copycat(std::string name,
                 std::vector<std::pair<std::string, std::string>> pairs);
Strategy strat_id();
Strategy strat_pi_l();
Strategy strat_pi_r();
Strategy strat_eval();
Strategy strat_empty();

// sigma;tau (sigma first). Throws FuelExhausted on internal chattering.
Strategy compose(Strategy sigma, Strategy tau, const Bounds& b = {});
Strategy pair_a(Strategy sigma, Strategy tau);
Strategy pair_b(Strategy sigma, Strategy tau);
Strategy lambda_abs(Strategy sigma);
// Prefix every move with '^' / remove that prefix.
Strategy lift(Strategy sigma);
Strategy unlift(Strategy sigma);

class UnboundVariable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
Strategy interpret(const std::vector<std::string>& vars, const Term& t,
                   const Bounds& b = {});

class CcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// Copycat extension of s at the O-move in 1-based position i with bi-view v.
Play cc_extension(const Play& s, int i, const Play& v);

// O-moves offered during exploration.
class MoveUniverse {
 public:
  virtual ~MoveUniverse() = default;
  virtual std::vector<std::pair<Move, int>> o_moves(const Play& s) const = 0;
};

// Bounds-driven universe. With views_only, every non-initial O-move is
// justified by the P-move just before it and only the first move is initial.
class UntypedUniverse : public MoveUniverse {
 public:
  explicit UntypedUniverse(const Bounds& b, bool views_only = true,
                           bool arrow_only = false);
  std::vector<std::pair<Move, int>> o_moves(const Play& s) const override;

 private:
  void children_of(const Move& m, int p, std::vector<std::pair<Move, int>>& out) const;
  Bounds b_;
  bool views_only_;
  bool arrow_only_;
  std::vector<Move> initials_;
  std::vector<std::string> tails_;
};

// Erased moves of a game: dagger-linked occurrences as they are, bound
// occurrences instantiated with every untyped move of at most
// max_inst_tokens tokens. Views only.
class GameUniverse : public MoveUniverse {
 public:
  GameUniverse(const Game& g, const Bounds& b);
  std::vector<std::pair<Move, int>> o_moves(const Play& s) const override;
  const std::vector<Move>& moves() const { return moves_; }

 private:
  std::vector<Move> moves_;
};

// Every untyped move with at most n tokens over ^ v r l and leaf <= max_leaf.
std::vector<Move> all_moves_upto(int n, int max_leaf);
// Bi-views whose moves have at most max_biview_tokens tokens.
std::vector<Play> biviews(const Bounds& b, int max_len);

struct ExploreStats {
  std::size_t plays = 0;
  std::size_t queries = 0;
};
// Depth-first over the even-length plays of sigma reachable with O-moves from
// the universe. on_play sees every even-length play (including the empty
// one); on_response sees every query.
ExploreStats explore(const Strategy& sigma, const MoveUniverse& u, const Bounds& b,
                     const std::function<void(const Play&)>& on_play,
                     const std::function<void(const Play&, const Move&, int,
                                              const std::optional<PMove>&)>&
                         on_response = nullptr);

struct Divergence {
  Play prefix;
  Move o;
  int optr = -1;
  std::optional<PMove> left, right;
};
struct EqualResult {
  bool equal = true;
  std::optional<Divergence> divergence;
  std::size_t plays = 0;
};
EqualResult equal_bounded(const Strategy& sigma, const Strategy& tau, const Bounds& b);
EqualResult equal_bounded(const Strategy& sigma, const Strategy& tau, const Bounds& b,
                          const MoveUniverse& u);
std::string describe(const Divergence& d);

struct HuCounterexample {
  Play base;
  int position = 0;
  Play biview;
  Play extension;
  std::string reason;
};
std::vector<HuCounterexample> check_hyperuniform(const Strategy& sigma,
                                                 const Bounds& b,
                                                 std::size_t max_reports = 16);

bool is_zigzag(const Play& s);
// Throws std::invalid_argument unless s is an even-length zig-zag play.
Play flip(const Play& s);

struct Unanswered {
  Play prefix;
  Move o;
  int optr = -1;
  std::string reason;
};
std::vector<Unanswered> check_total_arrow(const Strategy& sigma, const Bounds& b,
                                          std::size_t max_reports = 16);
std::vector<Unanswered> check_total_arrow(const Strategy& sigma, const Bounds& b,
                                          const MoveUniverse& u,
                                          std::size_t max_reports = 16);

}  // namespace sysf

#endif  // SYSF_ENGINE_HPP_
