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

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "sysf/engine.hpp"

namespace sysf {

namespace {

void words(const std::string& alphabet, int max_len, std::vector<std::string>& out) {
  out.assign(1, "");
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
}

std::string pmove_string(const std::optional<PMove>& r) {
  if (!r) return "none";
  return to_string(r->move) + (r->ptr < 0 ? std::string(" (initial)")
                                           : " (ptr -> " + std::to_string(r->ptr) + ")");
}

}  // namespace

UntypedUniverse::UntypedUniverse(const Bounds& b, bool views_only, bool arrow_only)
    : b_(b), views_only_(views_only), arrow_only_(arrow_only) {
  std::vector<std::string> init;
  words("^rl", std::min(b.max_initial_tokens, b.max_token_len), init);
  for (const auto& t : init) {
    if (arrow_only_ && (t.empty() || t[0] != '^')) continue;
    for (int j = 0; j <= b.max_leaf; ++j) initials_.push_back(Move{t, j});
  }
  words("^rl", b.max_fresh_tail, tails_);
}

void UntypedUniverse::children_of(const Move& m, int p,
                                  std::vector<std::pair<Move, int>>& out) const {
  const std::string& t = m.tokens;
  std::size_t last_v = t.rfind('v');
  std::size_t from = last_v == std::string::npos ? 0 : last_v + 1;
  for (std::size_t k = from; k < t.size(); ++k) {
    if (t[k] != '^') continue;
    for (const auto& tail : tails_) {
      std::string c = t.substr(0, k) + "v" + tail;
      if (static_cast<int>(c.size()) > b_.max_token_len) continue;
      for (int j = 0; j <= b_.max_leaf; ++j) out.emplace_back(Move{c, j}, p);
    }
  }
}

std::vector<std::pair<Move, int>> UntypedUniverse::o_moves(const Play& s) const {
  std::vector<std::pair<Move, int>> out;
  if (s.empty() || !views_only_) {
    for (const auto& m : initials_) out.emplace_back(m, -1);
  }
  if (s.empty()) return out;
  if (views_only_) {
    children_of(s.moves.back(), s.size() - 1, out);
  } else {
    for (int j = 0; j < s.size(); ++j) {
      if (polarity(s.moves[j]) == Polarity::P) children_of(s.moves[j], j, out);
    }
  }
  return out;
}

std::vector<Move> all_moves_upto(int n, int max_leaf) {
  std::vector<std::string> ws;
  words("^vrl", n, ws);
  std::vector<Move> out;
  for (const auto& w : ws) {
    for (int j = 0; j <= max_leaf; ++j) out.push_back(Move{w, j});
  }
  return out;
}

GameUniverse::GameUniverse(const Game& g, const Bounds& b) {
  std::set<Move> acc;
  std::vector<Move> inst = all_moves_upto(b.max_inst_tokens, b.max_leaf);
  for (const auto& [occ, link] : g.link) {
    Move e = erasure_E(occ);
    if (!link) {
      acc.insert(e);
    } else {
      for (const auto& x : inst) acc.insert(Move{e.tokens + x.tokens, x.leaf});
    }
  }
  moves_.assign(acc.begin(), acc.end());
}

std::vector<std::pair<Move, int>> GameUniverse::o_moves(const Play& s) const {
  std::vector<std::pair<Move, int>> out;
  if (s.empty()) {
    for (const auto& m : moves_)
      if (is_initial(m)) out.emplace_back(m, -1);
    return out;
  }
  const Move& last = s.moves.back();
  for (const auto& m : moves_)
    if (enables(last, m)) out.emplace_back(m, s.size() - 1);
  return out;
}

std::vector<Play> biviews(const Bounds& b, int max_len) {
  std::vector<Play> out;
  if (max_len < 1) return out;
  std::vector<Move> all = all_moves_upto(b.max_biview_tokens, b.max_leaf);
  std::vector<Play> frontier;
  for (const auto& m : all) {
    if (!is_initial(m)) continue;
    Play v;
    v.push(m, -1);
    frontier.push_back(v);
  }
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_len) break;
    std::vector<Play> next;
    for (const auto& v : frontier) {
      for (const auto& m : all) {
        if (!enables(v.moves.back(), m)) continue;
        Play w = v;
        w.push(m, v.size() - 1);
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

ExploreStats explore(const Strategy& sigma, const MoveUniverse& u, const Bounds& b,
                     const std::function<void(const Play&)>& on_play,
                     const std::function<void(const Play&, const Move&, int,
                                              const std::optional<PMove>&)>& on_response) {
  ExploreStats stats;
  std::function<void(const Play&)> dfs = [&](const Play& s) {
    ++stats.plays;
    if (on_play) on_play(s);
    if (s.size() + 2 > b.max_play_len) return;
    for (const auto& [o, optr] : u.o_moves(s)) {
      ++stats.queries;
      auto r = (*sigma)(s, o, optr);
      if (on_response) on_response(s, o, optr, r);
      if (!r) continue;
      Play t = s;
      t.push(o, optr);
      if (!legal_extension(t, r->move, r->ptr)) continue;
      t.push(r->move, r->ptr);
      dfs(t);
    }
  };
  dfs(Play{});
  return stats;
}

EqualResult equal_bounded(const Strategy& sigma, const Strategy& tau, const Bounds& b) {
  return equal_bounded(sigma, tau, b, UntypedUniverse(b));
}

EqualResult equal_bounded(const Strategy& sigma, const Strategy& tau, const Bounds& b,
                          const MoveUniverse& u) {
  EqualResult res;
  std::deque<Play> queue{Play{}};
  while (!queue.empty()) {
    Play s = std::move(queue.front());
    queue.pop_front();
    ++res.plays;
    if (s.size() + 2 > b.max_play_len) continue;
    for (const auto& [o, optr] : u.o_moves(s)) {
      auto r1 = (*sigma)(s, o, optr);
      auto r2 = (*tau)(s, o, optr);
      if (r1 != r2) {
        res.equal = false;
        res.divergence = Divergence{s, o, optr, r1, r2};
        return res;
      }
      if (!r1) continue;
      Play t = s;
      t.push(o, optr);
      if (!legal_extension(t, r1->move, r1->ptr)) continue;
      t.push(r1->move, r1->ptr);
      queue.push_back(std::move(t));
    }
  }
  return res;
}

std::string describe(const Divergence& d) {
  std::ostringstream out;
  out << "after " << play_inline(d.prefix) << " O plays " << to_string(d.o)
      << (d.optr < 0 ? std::string(" (initial)") : " (ptr -> " + std::to_string(d.optr) + ")")
      << ": left answers " << pmove_string(d.left) << ", right answers "
      << pmove_string(d.right);
  return out.str();
}

std::vector<HuCounterexample> check_hyperuniform(const Strategy& sigma, const Bounds& b,
                                                 std::size_t max_reports) {
  std::vector<HuCounterexample> found;
  std::vector<Play> plays;
  std::unordered_set<std::string> known;
  explore(sigma, UntypedUniverse(b), b, [&](const Play& s) {
    plays.push_back(s);
    known.insert(play_key(s));
  });
  std::vector<Play> bv = biviews(b, b.max_play_len / 2);
  std::vector<std::size_t> bv_tokens;
  for (const auto& v : bv) {
    std::size_t t = 0;
    for (const auto& m : v.moves) t = std::max(t, m.tokens.size());
    bv_tokens.push_back(t);
  }
  // Plays and bi-views are both prefix-closed, so every extension is a
  // checked extension plus one pair: only that last pair is replayed.
  const std::size_t max_tokens = b.max_token_len;
  for (const Play& s : plays) {
    int n = s.size();
    for (int a = 0; a + 1 < n; a += 2) {
      std::size_t base = std::max(s.moves[a].tokens.size(), s.moves[a + 1].tokens.size());
      for (std::size_t q = 0; q < bv.size(); ++q) {
        const Play& v = bv[q];
        if (v.size() > 1 && a + 2 != n) continue;
        int len = v.size() == 1 ? n : a + 2 * v.size();
        if (len > b.max_play_len || base + bv_tokens[q] > max_tokens) continue;
        Play ext;
        try {
          ext = cc_extension(s, a + 1, v);
        } catch (const CcError&) {
          continue;
        }
        if (known.count(play_key(ext))) continue;
        int k = ext.size() - 2;
        auto r = (*sigma)(ext.prefix(k), ext.moves[k], ext.ptr[k]);
        PMove want{ext.moves[k + 1], ext.ptr[k + 1]};
        if (r && *r == want) continue;
        found.push_back(HuCounterexample{
            s, a + 1, v, ext,
            "at " + std::to_string(k + 1) + " expected " + pmove_string(want) + ", got " +
                pmove_string(r)});
        if (found.size() >= max_reports) return found;
      }
    }
  }
  return found;
}

std::vector<Unanswered> check_total_arrow(const Strategy& sigma, const Bounds& b,
                                          std::size_t max_reports) {
  return check_total_arrow(sigma, b, UntypedUniverse(b, true, true), max_reports);
}

std::vector<Unanswered> check_total_arrow(const Strategy& sigma, const Bounds& b,
                                          const MoveUniverse& u, std::size_t max_reports) {
  std::vector<Unanswered> found;
  explore(sigma, u, b, nullptr,
          [&](const Play& s, const Move& o, int optr, const std::optional<PMove>& r) {
            if (found.size() >= max_reports) return;
            std::string why;
            if (!r) {
              why = "no answer";
            } else {
              Play t = s;
              t.push(o, optr);
              const std::string& tk = r->move.tokens;
              if (tk.empty() || (tk[0] != '^' && tk[0] != 'v')) {
                why = "answer " + to_string(r->move) + " leaves the arrow shape";
              } else if (!legal_extension(t, r->move, r->ptr)) {
                why = "answer " + pmove_string(r) + " is not a legal move";
              }
            }
            if (!why.empty()) found.push_back(Unanswered{s, o, optr, why});
          });
  return found;
}

}  // namespace sysf
