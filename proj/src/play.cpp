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
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "projection.hpp"
#include "sysf/engine.hpp"

namespace sysf {

namespace {

bool has_prefix(const std::string& s, const std::string& p) {
  return s.compare(0, p.size(), p) == 0;
}

}  // namespace

Play Play::prefix(int n) const {
  Play out;
  out.moves.reserve(n + 2);
  out.ptr.reserve(n + 2);
  out.moves.assign(moves.begin(), moves.begin() + n);
  out.ptr.assign(ptr.begin(), ptr.begin() + n);
  return out;
}

Play make_play(std::initializer_list<std::pair<const char*, int>> items) {
  Play s;
  for (const auto& [text, p] : items) s.push(parse_move(text), p);
  return s;
}

std::string play_key(const Play& s) {
  std::string key;
  key.reserve(s.size() * 12);
  char buf[32];
  for (int i = 0; i < s.size(); ++i) {
    key += s.moves[i].tokens;
    char* end = std::to_chars(buf, buf + 12, s.moves[i].leaf).ptr;
    *end++ = '@';
    end = std::to_chars(end, end + 12, s.ptr[i]).ptr;
    *end++ = ' ';
    key.append(buf, end);
  }
  return key;
}

std::string play_dump(const Play& s) {
  std::ostringstream out;
  for (int i = 0; i < s.size(); ++i) {
    out << i << ": " << to_string(s.moves[i]);
    if (s.ptr[i] < 0)
      out << " (initial)\n";
    else
      out << " (ptr -> " << s.ptr[i] << ")\n";
  }
  return out.str();
}

std::string play_inline(const Play& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += to_string(s.moves[i]);
    if (s.ptr[i] >= 0) out += "@" + std::to_string(s.ptr[i]);
  }
  return out.empty() ? "<empty>" : out;
}

bool is_justified(const Play& s) {
  if (s.moves.size() != s.ptr.size()) return false;
  for (int i = 0; i < s.size(); ++i) {
    int p = s.ptr[i];
    if (p < 0) {
      if (!is_initial(s.moves[i])) return false;
    } else if (p >= i || !enables(s.moves[p], s.moves[i])) {
      return false;
    }
  }
  return true;
}

bool is_play(const Play& s) {
  if (!is_justified(s)) return false;
  for (int i = 0; i + 1 < s.size(); ++i) {
    Polarity a = polarity(s.moves[i]);
    if (polarity(s.moves[i + 1]) == a) return false;
    if (a == Polarity::O && s.moves[i].leaf != s.moves[i + 1].leaf) return false;
  }
  return true;
}

bool legal_extension(const Play& s, const Move& m, int p) {
  int n = s.size();
  if (p < 0) {
    if (!is_initial(m)) return false;
  } else if (p >= n || !enables(s.moves[p], m)) {
    return false;
  }
  if (n == 0) return true;
  const Move& last = s.moves[n - 1];
  if (polarity(last) == polarity(m)) return false;
  return polarity(last) != Polarity::O || last.leaf == m.leaf;
}

Play view(const Play& s) {
  std::vector<int> idx;
  int k = s.size() - 1;
  while (k >= 0) {
    idx.push_back(k);
    if (polarity(s.moves[k]) == Polarity::P) {
      --k;
      continue;
    }
    int j = s.ptr[k];
    if (j < 0) break;
    idx.push_back(j);
    k = j - 1;
  }
  std::reverse(idx.begin(), idx.end());
  std::vector<int> where(s.size(), -1);
  for (std::size_t q = 0; q < idx.size(); ++q) where[idx[q]] = static_cast<int>(q);
  Play out;
  for (int i : idx) {
    int p = s.ptr[i];
    out.push(s.moves[i], p < 0 ? -1 : where[p]);
  }
  return out;
}

bool is_biview(const Play& s) {
  if (s.empty() || s.ptr[0] != -1 || !is_initial(s.moves[0])) return false;
  for (int k = 1; k < s.size(); ++k) {
    if (s.ptr[k] != k - 1 || !enables(s.moves[k - 1], s.moves[k])) return false;
  }
  return true;
}

Restriction restrict_one_map(const Play& s, const std::string& zeta) {
  Restriction r;
  r.play.moves.reserve(s.size() + 2);
  r.play.ptr.reserve(s.size() + 2);
  r.origin.reserve(s.size());
  std::vector<int> where(s.size(), -1);
  for (int i = 0; i < s.size(); ++i) {
    const Move& m = s.moves[i];
    if (!has_prefix(m.tokens, zeta)) continue;
    int p = s.ptr[i];
    where[i] = r.play.size();
    r.play.push(Move{m.tokens.substr(zeta.size()), m.leaf}, p < 0 ? -1 : where[p]);
    r.origin.push_back(i);
  }
  return r;
}

Restriction restrict_two_map(const Play& s, const std::string& zeta,
                             const std::string& xi) {
  Projection proj(zeta, xi);
  proj.reserve(s.size() + 2);
  for (int i = 0; i < s.size(); ++i) proj.add(s, i);
  return std::move(proj.r);
}

Play restrict_one(const Play& s, const std::string& zeta) {
  return restrict_one_map(s, zeta).play;
}

Play restrict_two(const Play& s, const std::string& zeta, const std::string& xi) {
  return restrict_two_map(s, zeta, xi).play;
}

Play cc_extension(const Play& s, int i, const Play& v) {
  int n = s.size();
  int a = i - 1;
  if (a < 0 || a + 1 >= n) throw CcError("position has no P-successor");
  if (polarity(s.moves[a]) != Polarity::O) throw CcError("position is not an O-move");
  if (!is_biview(v)) throw CcError("not a bi-view: " + play_inline(v));
  const Move& xo = s.moves[a];
  const Move& xp = s.moves[a + 1];
  int p = v.size();
  Play out = s.prefix(a);
  out.push(occ_subst(xo, v.moves[0]), s.ptr[a]);
  out.push(occ_subst(xp, v.moves[0]), s.ptr[a + 1]);
  if (p == 1) {
    for (int k = a + 2; k < n; ++k) out.push(s.moves[k], s.ptr[k]);
  } else {
    // With k counted from 0: x_{i+1}[y_k] first for odd k, x_i[y_k] first for even k.
    int last_i = a, last_ip = a + 1;
    for (int k = 1; k < p; ++k) {
      Move mi = occ_subst(xo, v.moves[k]);
      Move mip = occ_subst(xp, v.moves[k]);
      if (k % 2 == 1) {
        int at = out.size();
        out.push(std::move(mip), last_ip);
        out.push(std::move(mi), last_i);
        last_ip = at;
        last_i = at + 1;
      } else {
        int at = out.size();
        out.push(std::move(mi), last_i);
        out.push(std::move(mip), last_ip);
        last_i = at;
        last_ip = at + 1;
      }
    }
  }
  if (!is_play(out)) throw CcError("extension is not a play: " + play_inline(out));
  return out;
}

bool is_zigzag(const Play& s) {
  for (const Move& m : s.moves) {
    if (m.tokens.empty() || (m.tokens[0] != '^' && m.tokens[0] != 'v')) return false;
  }
  if (!is_play(s)) return false;
  for (int k = 0; k + 1 < s.size(); ++k) {
    if (polarity(s.moves[k]) != Polarity::O) continue;
    if (s.moves[k].tokens[0] == s.moves[k + 1].tokens[0]) return false;
    if (s.ptr[k] < 0 && s.ptr[k + 1] != k) return false;
  }
  Play up = restrict_one(s, "^");
  Play down = restrict_one(s, "v");
  return up.ptr == down.ptr;
}

Play flip(const Play& s) {
  if (s.size() % 2 != 0 || !is_zigzag(s)) {
    throw std::invalid_argument("flip needs an even-length zig-zag play");
  }
  auto swap_side = [](const Move& m) {
    Move out = m;
    out.tokens[0] = m.tokens[0] == '^' ? 'v' : '^';
    return out;
  };
  auto same_side = [&](int i, int j) {
    return j >= 0 && s.moves[i].tokens[0] == s.moves[j].tokens[0];
  };
  Play out;
  for (int k = 0; k < s.size(); k += 2) {
    int o = k, p = k + 1;
    out.push(swap_side(s.moves[p]), same_side(p, s.ptr[p]) ? (s.ptr[p] ^ 1) : -1);
    out.push(swap_side(s.moves[o]), same_side(o, s.ptr[o]) ? (s.ptr[o] ^ 1) : k);
  }
  return out;
}

}  // namespace sysf
