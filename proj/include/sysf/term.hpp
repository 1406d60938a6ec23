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

#ifndef SYSF_TERM_HPP_
#define SYSF_TERM_HPP_

#include <memory>
#include <set>
#include <utility>
#include <string>

namespace sysf {

// Untyped lambda terms with pairs and projections.
class Term {
 public:
  enum class Kind { kVar, kLam, kApp, kPair, kProj1, kProj2 };

  static Term Var(std::string name);
  static Term Lam(std::string name, Term body);
  static Term App(Term f, Term a);
  static Term Pair(Term a, Term b);
  static Term Proj1(Term t);
  static Term Proj2(Term t);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  const std::string& name() const;  // var, lam binder
  const Term& first() const;   // lam body, app function, pair left, proj arg
  const Term& second() const;  // app argument, pair right

  bool operator==(const Term& o) const;  // structural, names matter

 private:
  struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Term parse_term(const std::string& text);
std::string to_string(const Term& t);

std::set<std::string> free_vars(const Term& t);
bool is_closed(const Term& t);
Term term_subst(const Term& t, const std::string& x, const Term& u);
bool term_alpha_eq(const Term& a, const Term& b);
int term_size(const Term& t);

struct NormalizeOptions {
  bool eta = true;
  int fuel = 100000;
};
// Leftmost-outermost beta/projection (and optionally eta) normalization.
// Throws std::runtime_error when the fuel runs out.
Term term_normalize(const Term& t, const NormalizeOptions& opt = {});

}  // namespace sysf

#endif  // SYSF_TERM_HPP_
