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

#include "sysf/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <vector>

namespace sysf {

struct Formula::Node {
  Kind kind;
  int index = 0;
  Formula a, b;
};

Formula::Formula() : node_(nullptr) {}

Formula Formula::Var(int j) {
  if (j < 1) throw std::invalid_argument("variable index must be >= 1");
  return Formula(std::make_shared<const Node>(Node{Kind::kVar, j, {}, {}}));
}

Formula Formula::Bot() { return Formula(); }

Formula Formula::Prod(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kProd, 0, std::move(a), std::move(b)}));
}

Formula Formula::Arrow(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kArrow, 0, std::move(a), std::move(b)}));
}

Formula Formula::Forall(int binder, Formula body) {
  if (binder < 1) throw std::invalid_argument("binder index must be >= 1");
  return Formula(std::make_shared<const Node>(
      Node{Kind::kForall, binder, std::move(body), {}}));
}

Formula::Kind Formula::kind() const {
  return node_ ? node_->kind : Kind::kBot;
}

int Formula::index() const { return node_ ? node_->index : 0; }

const Formula& Formula::left() const {
  if (!node_ || (node_->kind != Kind::kProd && node_->kind != Kind::kArrow))
    throw std::logic_error("left() on a non-binary formula");
  return node_->a;
}

const Formula& Formula::right() const {
  if (!node_ || (node_->kind != Kind::kProd && node_->kind != Kind::kArrow))
    throw std::logic_error("right() on a non-binary formula");
  return node_->b;
}

const Formula& Formula::body() const {
  if (!node_ || node_->kind != Kind::kForall)
    throw std::logic_error("body() on a non-quantifier");
  return node_->a;
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::kBot:
      return true;
    case Kind::kVar:
      return index() == o.index();
    case Kind::kForall:
      return index() == o.index() && body() == o.body();
    default:
      return left() == o.left() && right() == o.right();
  }
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Formula parse_all() {
    Formula f = type();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }

  bool word(const char* w) {
    skip();
    std::size_t n = std::char_traits<char>::length(w);
    if (s_.compare(i_, n, w) != 0) return false;
    // Keywords must not run into identifier characters.
    if (std::isalpha(static_cast<unsigned char>(w[0])) && i_ + n < s_.size() &&
        std::isalnum(static_cast<unsigned char>(s_[i_ + n])))
      return false;
    i_ += n;
    return true;
  }

  int var() {
    skip();
    if (i_ >= s_.size() || s_[i_] != 'X') fail("expected variable");
    ++i_;
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (start == i_) fail("expected digits after X");
    if (i_ - start > 9) fail("variable index too large");
    int j = std::stoi(s_.substr(start, i_ - start));
    if (j == 0) {
      i_ = start;
      fail("variable index 0 is reserved");
    }
    return j;
  }

  Formula type() {
    if (word("forall")) {
      int j = var();
      if (!word(".")) fail("expected '.' after quantified variable");
      return Formula::Forall(j, type());
    }
    return arrow();
  }

  Formula arrow() {
    Formula lhs = prod();
    if (word("->")) return Formula::Arrow(lhs, type());
    return lhs;
  }

  Formula prod() {
    Formula lhs = atom();
    if (word("*")) return Formula::Prod(lhs, prod());
    return lhs;
  }

  Formula atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (word("bot")) return Formula::Bot();
    if (word("(")) {
      Formula f = type();
      if (!word(")")) fail("expected ')'");
      return f;
    }
    if (s_[i_] == 'X') return Formula::Var(var());
    fail(std::string("unexpected character '") + s_[i_] + "'");
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

enum class Ctx { kTop, kDomain, kProdLeft, kProdRight };

void print(const Formula& f, Ctx ctx, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kBot:
      out += "bot";
      return;
    case K::kVar:
      out += "X" + std::to_string(f.index());
      return;
    case K::kForall: {
      bool paren = ctx != Ctx::kTop;
      if (paren) out += '(';
      out += "forall X" + std::to_string(f.index()) + ". ";
      print(f.body(), Ctx::kTop, out);
      if (paren) out += ')';
      return;
    }
    case K::kArrow: {
      bool paren = ctx != Ctx::kTop;
      if (paren) out += '(';
      print(f.left(), Ctx::kDomain, out);
      out += " -> ";
      print(f.right(), Ctx::kTop, out);
      if (paren) out += ')';
      return;
    }
    case K::kProd: {
      bool paren = ctx == Ctx::kProdLeft;
      if (paren) out += '(';
      print(f.left(), Ctx::kProdLeft, out);
      out += " * ";
      print(f.right(), Ctx::kProdRight, out);
      if (paren) out += ')';
      return;
    }
  }
}

void pos_neg_rec(const Formula& f, VarSet& pos, VarSet& neg) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kBot:
      return;
    case K::kVar:
      pos.insert(f.index());
      return;
    case K::kProd:
      pos_neg_rec(f.left(), pos, neg);
      pos_neg_rec(f.right(), pos, neg);
      return;
    case K::kArrow:
      pos_neg_rec(f.left(), neg, pos);
      pos_neg_rec(f.right(), pos, neg);
      return;
    case K::kForall: {
      VarSet p, n;
      pos_neg_rec(f.body(), p, n);
      p.erase(f.index());
      n.erase(f.index());
      pos.insert(p.begin(), p.end());
      neg.insert(n.begin(), n.end());
      return;
    }
  }
}

void all_vars_rec(const Formula& f, VarSet& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kBot:
      return;
    case K::kVar:
      out.insert(f.index());
      return;
    case K::kForall:
      out.insert(f.index());
      all_vars_rec(f.body(), out);
      return;
    default:
      all_vars_rec(f.left(), out);
      all_vars_rec(f.right(), out);
  }
}

int take_fresh(VarSet& used) {
  int k = 1;
  while (used.count(k)) ++k;
  used.insert(k);
  return k;
}

Formula subst_rec(const Formula& a, const Formula& b, int j,
                  const VarSet& fb, VarSet& used) {
  using K = Formula::Kind;
  switch (a.kind()) {
    case K::kBot:
      return a;
    case K::kVar:
      return a.index() == j ? b : a;
    case K::kProd:
      return Formula::Prod(subst_rec(a.left(), b, j, fb, used),
                           subst_rec(a.right(), b, j, fb, used));
    case K::kArrow:
      return Formula::Arrow(subst_rec(a.left(), b, j, fb, used),
                            subst_rec(a.right(), b, j, fb, used));
    case K::kForall: {
      int i = a.index();
      if (i == j) return a;
      if (!ftv(a.body()).count(j)) return a;
      Formula body = a.body();
      if (fb.count(i)) {
        int k = take_fresh(used);
        body = subst_rec(body, Formula::Var(k), i, VarSet{k}, used);
        i = k;
      }
      return Formula::Forall(i, subst_rec(body, b, j, fb, used));
    }
  }
  return a;
}

void canonical_rec(const Formula& f, std::map<int, int>& env, int& next,
                   Formula& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kBot:
      out = f;
      return;
    case K::kVar: {
      auto it = env.find(f.index());
      out = it == env.end() ? f : Formula::Var(it->second);
      return;
    }
    case K::kForall: {
      int mine = next++;
      auto saved = env.find(f.index()) == env.end()
                       ? std::optional<int>()
                       : std::optional<int>(env[f.index()]);
      env[f.index()] = mine;
      Formula body;
      canonical_rec(f.body(), env, next, body);
      if (saved) {
        env[f.index()] = *saved;
      } else {
        env.erase(f.index());
      }
      out = Formula::Forall(mine, body);
      return;
    }
    default: {
      Formula l, r;
      canonical_rec(f.left(), env, next, l);
      canonical_rec(f.right(), env, next, r);
      out = f.is(K::kProd) ? Formula::Prod(l, r) : Formula::Arrow(l, r);
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text) {
  return Parser(text).parse_all();
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, Ctx::kTop, out);
  return out;
}

std::pair<VarSet, VarSet> pos_neg(const Formula& f) {
  VarSet pos, neg;
  pos_neg_rec(f, pos, neg);
  return {pos, neg};
}

VarSet ftv(const Formula& f) {
  auto [pos, neg] = pos_neg(f);
  pos.insert(neg.begin(), neg.end());
  return pos;
}

VarSet all_vars(const Formula& f) {
  VarSet out;
  all_vars_rec(f, out);
  return out;
}

Formula subst(const Formula& a, const Formula& b, int j) {
  VarSet used = all_vars(a);
  VarSet vb = all_vars(b);
  used.insert(vb.begin(), vb.end());
  used.insert(j);
  return subst_rec(a, b, j, ftv(b), used);
}

Formula alpha_canonical(const Formula& f) {
  VarSet free = ftv(f);
  int next = free.empty() ? 1 : *free.rbegin() + 1;
  std::map<int, int> env;
  Formula out;
  canonical_rec(f, env, next, out);
  return out;
}

bool alpha_eq(const Formula& a, const Formula& b) {
  if (ftv(a) != ftv(b)) return false;
  return alpha_canonical(a) == alpha_canonical(b);
}

int size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kVar:
      return 1;
    case Formula::Kind::kForall:
      return 1 + size(f.body());
    default:
      return 1 + size(f.left()) + size(f.right());
  }
}

int depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kBot:
    case Formula::Kind::kVar:
      return 0;
    case Formula::Kind::kForall:
      return 1 + depth(f.body());
    default:
      return 1 + std::max(depth(f.left()), depth(f.right()));
  }
}

}  // namespace sysf
