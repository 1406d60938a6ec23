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

#ifndef SYSF_SRC_PROJECTION_HPP_
#define SYSF_SRC_PROJECTION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sysf/engine.hpp"

namespace sysf {

// The restriction s|zeta,xi maintained move by move as s grows.
class Projection {
 public:
  Projection(std::string zeta, std::string xi) : zeta_(std::move(zeta)), xi_(std::move(xi)) {}

  // Account for move i of s; moves are added in order.
  void add(const Play& s, int i) {
    const Move& m = s.moves[i];
    int p = s.ptr[i];
    bool parent_zeta = p >= 0 && starts(s.moves[p].tokens, zeta_);
    anc_.push_back(p < 0 ? -1 : (parent_zeta ? p : anc_[p]));
    int at = -1;
    if (starts(m.tokens, zeta_)) {
      at = r.play.size();
      r.play.push(Move{"^" + m.tokens.substr(zeta_.size()), m.leaf}, parent_zeta ? where_[p] : -1);
      r.origin.push_back(i);
    } else if (anc_[i] >= 0 && starts(m.tokens, xi_)) {
      int q = -1;
      if (p >= 0 && starts(s.moves[p].tokens, xi_)) {
        q = where_[p];
      } else {
        int a = anc_[i];
        bool both_initial = m.tokens.find('v', xi_.size()) == std::string::npos &&
                            s.moves[a].tokens.find('v', zeta_.size()) == std::string::npos;
        if (both_initial) q = where_[a];
      }
      at = r.play.size();
      r.play.push(Move{"v" + m.tokens.substr(xi_.size()), m.leaf}, q);
      r.origin.push_back(i);
    }
    where_.push_back(at);
  }

  void reserve(std::size_t n) {
    r.play.moves.reserve(n);
    r.play.ptr.reserve(n);
    r.origin.reserve(n);
    where_.reserve(n);
    anc_.reserve(n);
  }

  bool last_kept() const { return !where_.empty() && where_.back() >= 0; }

  Restriction r;

 private:
  static bool starts(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

  std::string zeta_, xi_;
  std::vector<int> where_;
  std::vector<int> anc_;
};

}  // namespace sysf

#endif  // SYSF_SRC_PROJECTION_HPP_
