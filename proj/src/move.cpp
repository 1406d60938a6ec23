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

#include "sysf/move.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string_view>

namespace sysf {

Move parse_move(const std::string& text) {
  std::size_t i = 0;
  Move m;
  while (i < text.size() && std::string_view("^vrl*").find(text[i]) !=
                                std::string_view::npos) {
    m.tokens += text[i++];
  }
  if (i == text.size()) throw std::invalid_argument("move without leaf: " + text);
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (start == i || i != text.size() || i - start > 9)
    throw std::invalid_argument("malformed move: " + text);
  m.leaf = std::stoi(text.substr(start));
  return m;
}

std::string to_string(const Move& m) {
  return m.tokens + std::to_string(m.leaf);
}

Move erasure_E(const Move& a) {
  Move out{std::string(), a.leaf};
  out.tokens.reserve(a.tokens.size());
  for (char c : a.tokens)
    if (c != '*') out.tokens += c;
  return out;
}

int leaf_of(const Move& m) { return m.leaf; }

Move occ_subst(const Move& m1, const Move& m2) {
  return Move{m1.tokens + m2.tokens, m2.leaf};
}

bool is_prefix(const Move& m1, const Move& m2) {
  return m2.tokens.compare(0, m1.tokens.size(), m1.tokens) == 0;
}

Polarity polarity(const Move& m) {
  auto downs = std::count(m.tokens.begin(), m.tokens.end(), 'v');
  return downs % 2 == 0 ? Polarity::O : Polarity::P;
}

bool is_initial(const Move& m) {
  return m.tokens.find('v') == std::string::npos;
}

// parent = p^x and child = pvy with x, y free of 'v'.
bool enables(const Move& parent, const Move& child) {
  const std::string& a = parent.tokens;
  const std::string& b = child.tokens;
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  if (k >= a.size() || k >= b.size()) return false;
  if (a[k] != '^' || b[k] != 'v') return false;
  return a.find('v', k + 1) == std::string::npos &&
         b.find('v', k + 1) == std::string::npos;
}

bool enables(const std::optional<Move>& parent, const Move& child) {
  return parent ? enables(*parent, child) : is_initial(child);
}

}  // namespace sysf
