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

#ifndef SYSF_FORMULA_HPP_
#define SYSF_FORMULA_HPP_

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace sysf {

using VarSet = std::set<int>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Immutable System F type. Copies share structure.
class Formula {
 public:
  enum class Kind { kVar, kBot, kProd, kArrow, kForall };

  Formula();  // bot
  static Formula Var(int j);
  static Formula Bot();
  static Formula Prod(Formula a, Formula b);
  static Formula Arrow(Formula a, Formula b);
  static Formula Forall(int binder, Formula body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  // Variable index, or binder index for a quantifier.
  int index() const;
  const Formula& left() const;   // product left, arrow domain
  const Formula& right() const;  // product right, arrow codomain
  const Formula& body() const;   // quantifier body

  // Structural equality (binder names matter; see alpha_eq).
  bool operator==(const Formula& o) const;
  bool operator!=(const Formula& o) const { return !(*this == o); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Formula parse_formula(const std::string& text);
std::string to_string(const Formula& f);

std::pair<VarSet, VarSet> pos_neg(const Formula& f);
VarSet ftv(const Formula& f);
// Every index occurring in f, free or bound.
VarSet all_vars(const Formula& f);

Formula subst(const Formula& a, const Formula& b, int j);
bool alpha_eq(const Formula& a, const Formula& b);
// Representative of the alpha class: binders renumbered from max free + 1
// in left-to-right order.
Formula alpha_canonical(const Formula& f);

int size(const Formula& f);
int depth(const Formula& f);

}  // namespace sysf

#endif  // SYSF_FORMULA_HPP_
