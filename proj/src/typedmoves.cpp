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

#include "sysf/typedmoves.hpp"

#include <cctype>
#include <cstddef>
#include <string>

namespace sysf {

bool TypedToken::operator==(const TypedToken& o) const {
  if (symbol != o.symbol) return false;
  if (symbol != '*') return true;
  return annotation && o.annotation && *annotation == *o.annotation;
}

TypedToken star(const Formula& type) {
  return TypedToken{'*', std::make_shared<const Annotation>(Annotation{type, game_of_formula(type)})};
}

TypedToken plain(char symbol) {
  if (symbol != '^' && symbol != 'v' && symbol != 'r' && symbol != 'l') {
    throw std::invalid_argument(std::string("not a plain token: ") + symbol);
  }
  return TypedToken{symbol, nullptr};
}

TypedMove parse_typed_move(const std::string& text) {
  TypedMove m;
  std::size_t i = 0;
  while (i < text.size() && !std::isdigit(static_cast<unsigned char>(text[i]))) {
    char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c == '*') {
      if (i + 1 >= text.size() || text[i + 1] != '{') {
        throw std::invalid_argument("star without annotation at position " + std::to_string(i));
      }
      std::size_t close = text.find('}', i + 2);
      if (close == std::string::npos) {
        throw std::invalid_argument("unterminated annotation at position " + std::to_string(i));
      }
      m.tokens.push_back(star(parse_formula(text.substr(i + 2, close - i - 2))));
      i = close + 1;
    } else {
      m.tokens.push_back(plain(c));
      ++i;
    }
  }
  std::size_t digits = i;
  while (digits < text.size() && std::isdigit(static_cast<unsigned char>(text[digits]))) ++digits;
  if (digits == i || digits != text.size()) {
    throw std::invalid_argument("typed move must end with a leaf: " + text);
  }
  m.leaf = std::stoi(text.substr(i));
  return m;
}

std::string to_string(const TypedMove& m) {
  std::string out;
  for (const auto& t : m.tokens) {
    if (t.symbol == '*')
      out += "*{" + to_string(t.annotation->type) + "}";
    else
      out += t.symbol;
  }
  return out + std::to_string(m.leaf);
}

Occurrence anonymize(const TypedMove& m) {
  Occurrence a{std::string(), m.leaf};
  for (const auto& t : m.tokens) a.tokens += t.symbol;
  return a;
}

Move erase(const TypedMove& m) { return erasure_E(anonymize(m)); }

Game formula_extract(const TypedMove& m, const Occurrence& a) {
  std::size_t k = 0;
  for (;;) {
    if (k >= m.tokens.size() || k >= a.tokens.size()) break;
    const TypedToken& t = m.tokens[k];
    if (t.symbol != a.tokens[k]) break;
    if (t.symbol == '*' && k + 1 == a.tokens.size() && a.leaf == 0) return t.annotation->game;
    ++k;
  }
  throw ExtractionUndefined("formula extraction undefined for " + to_string(m) + " / " +
                            to_string(a));
}

bool is_move_of(const TypedMove& m, const Game& g) {
  Occurrence whole = anonymize(m);
  auto it = g.link.find(whole);
  if (it != g.link.end() && !it->second) return true;
  for (std::size_t k = 0; k <= m.tokens.size(); ++k) {
    TypedMove m1{std::vector<TypedToken>(m.tokens.begin(), m.tokens.begin() + k), 0};
    auto at = g.link.find(anonymize(m1));
    if (at == g.link.end() || !at->second) continue;
    Game b;
    try {
      b = formula_extract(m1, *at->second);
    } catch (const ExtractionUndefined&) {
      continue;
    }
    TypedMove m2{std::vector<TypedToken>(m.tokens.begin() + k, m.tokens.end()), m.leaf};
    if (is_move_of(m2, b)) return true;
  }
  return false;
}

Polarity polarity(const TypedMove& m) { return polarity(erase(m)); }

bool enables(const TypedMove& parent, const TypedMove& child) {
  const auto& a = parent.tokens;
  const auto& b = child.tokens;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  if (k >= a.size() || k >= b.size()) return false;
  if (a[k].symbol != '^' || b[k].symbol != 'v') return false;
  for (std::size_t i = k + 1; i < a.size(); ++i)
    if (a[i].symbol == 'v') return false;
  for (std::size_t i = k + 1; i < b.size(); ++i)
    if (b[i].symbol == 'v') return false;
  return true;
}

bool is_play_on(const TypedPlay& s, const Game& g) {
  if (s.moves.size() != s.ptr.size()) return false;
  int n = static_cast<int>(s.moves.size());
  for (int i = 0; i < n; ++i) {
    const TypedMove& m = s.moves[i];
    if (!is_move_of(m, g)) return false;
    int p = s.ptr[i];
    if (p < 0) {
      if (!is_initial(erase(m))) return false;
    } else if (p >= i || !enables(s.moves[p], m)) {
      return false;
    }
    if (i + 1 < n) {
      Polarity a = polarity(m);
      if (polarity(s.moves[i + 1]) == a) return false;
      if (a == Polarity::O && m.leaf != s.moves[i + 1].leaf) return false;
    }
  }
  return true;
}

}  // namespace sysf
