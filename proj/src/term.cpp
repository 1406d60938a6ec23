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

#include "sysf/term.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sysf/formula.hpp"  // ParseError

namespace sysf {

struct Term::Node {
  Kind kind;
  std::string name;
  Term a, b;
};

Term Term::Var(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::kVar, std::move(name), {}, {}}));
}
Term Term::Lam(std::string name, Term body) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kLam, std::move(name), std::move(body), {}}));
}
Term Term::App(Term f, Term a) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kApp, {}, std::move(f), std::move(a)}));
}
Term Term::Pair(Term a, Term b) {
  return Term(std::make_shared<const Node>(
      Node{Kind::kPair, {}, std::move(a), std::move(b)}));
}
Term Term::Proj1(Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::kProj1, {}, std::move(t), {}}));
}
Term Term::Proj2(Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::kProj2, {}, std::move(t), {}}));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }

const Term& Term::first() const {
  if (!node_->a.node_) throw std::logic_error("term has no first child");
  return node_->a;
}
const Term& Term::second() const {
  if (!node_->b.node_) throw std::logic_error("term has no second child");
  return node_->b;
}

bool Term::operator==(const Term& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::kVar:
      return name() == o.name();
    case Kind::kLam:
      return name() == o.name() && first() == o.first();
    case Kind::kProj1:
    case Kind::kProj2:
      return first() == o.first();
    default:
      return first() == o.first() && second() == o.second();
  }
}

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class TermParser {
 public:
  explicit TermParser(const std::string& s) : s_(s) {}

  Term parse_all() {
    Term t = term();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& m) { throw ParseError(m, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool lit(const std::string& w) {
    skip();
    if (s_.compare(i_, w.size(), w) != 0) return false;
    i_ += w.size();
    return true;
  }

  bool at_lambda() {
    skip();
    return s_.compare(i_, 1, "\\") == 0 || s_.compare(i_, 2, "\xCE\xBB") == 0;
  }

  std::string peek_ident() {
    skip();
    std::size_t j = i_;
    if (j >= s_.size() || !ident_start(s_[j])) return "";
    while (j < s_.size() && ident_char(s_[j])) ++j;
    return s_.substr(i_, j - i_);
  }

  std::string ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected identifier");
    if (id == "p1" || id == "p2") fail("'" + id + "' is a keyword");
    i_ += id.size();
    return id;
  }

  Term term() {
    if (at_lambda()) {
      if (!lit("\\")) lit("\xCE\xBB");
      std::vector<std::string> names{ident()};
      while (!peek_ident().empty()) names.push_back(ident());
      if (!lit(".")) fail("expected '.' after binder");
      Term body = term();
      for (auto it = names.rbegin(); it != names.rend(); ++it) body = Term::Lam(*it, body);
      return body;
    }
    return app();
  }

  bool starts_arg() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || c == '<' || ident_start(c) || at_lambda();
  }

  Term app() {
    Term f = unary();
    while (starts_arg()) {
      if (at_lambda()) return Term::App(f, term());
      f = Term::App(f, unary());
    }
    return f;
  }

  Term unary() {
    std::string id = peek_ident();
    if (id == "p1" || id == "p2") {
      i_ += 2;
      Term arg = unary();
      return id == "p1" ? Term::Proj1(arg) : Term::Proj2(arg);
    }
    return atom();
  }

  Term atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    if (lit("(")) {
      Term t = term();
      if (!lit(")")) fail("expected ')'");
      return t;
    }
    if (lit("<")) {
      Term a = term();
      if (!lit(",")) fail("expected ','");
      Term b = term();
      if (!lit(">")) fail("expected '>'");
      return Term::Pair(a, b);
    }
    return Term::Var(ident());
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

enum class Pos { kTop, kFun, kArg };

void print(const Term& t, Pos pos, std::string& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kVar:
      out += t.name();
      return;
    case K::kPair:
      out += '<';
      print(t.first(), Pos::kTop, out);
      out += ", ";
      print(t.second(), Pos::kTop, out);
      out += '>';
      return;
    case K::kLam: {
      bool paren = pos != Pos::kTop;
      if (paren) out += '(';
      out += '\\' + t.name() + ". ";
      print(t.first(), Pos::kTop, out);
      if (paren) out += ')';
      return;
    }
    case K::kApp: {
      bool paren = pos == Pos::kArg;
      if (paren) out += '(';
      print(t.first(), Pos::kFun, out);
      out += ' ';
      print(t.second(), Pos::kArg, out);
      if (paren) out += ')';
      return;
    }
    case K::kProj1:
    case K::kProj2: {
      bool paren = pos == Pos::kArg;
      if (paren) out += '(';
      out += t.is(K::kProj1) ? "p1 " : "p2 ";
      print(t.first(), Pos::kArg, out);
      if (paren) out += ')';
      return;
    }
  }
}

void fv_rec(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kVar:
      if (!bound.count(t.name())) out.insert(t.name());
      return;
    case K::kLam: {
      bool added = bound.insert(t.name()).second;
      fv_rec(t.first(), bound, out);
      if (added) bound.erase(t.name());
      return;
    }
    case K::kProj1:
    case K::kProj2:
      fv_rec(t.first(), bound, out);
      return;
    default:
      fv_rec(t.first(), bound, out);
      fv_rec(t.second(), bound, out);
  }
}

void names_rec(const Term& t, std::set<std::string>& out) {
  if (t.is(Term::Kind::kVar) || t.is(Term::Kind::kLam)) out.insert(t.name());
  if (t.is(Term::Kind::kVar)) return;
  names_rec(t.first(), out);
  if (t.is(Term::Kind::kApp) || t.is(Term::Kind::kPair)) names_rec(t.second(), out);
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && (std::isdigit(static_cast<unsigned char>(stem.back())) ||
                           stem.back() == '\''))
    stem.pop_back();
  if (stem.empty()) stem = "x";
  for (int k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (!avoid.count(cand)) return cand;
  }
}

Term rebuild(const Term& t, const Term& a, const Term* b) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kLam:
      return Term::Lam(t.name(), a);
    case K::kApp:
      return Term::App(a, *b);
    case K::kPair:
      return Term::Pair(a, *b);
    case K::kProj1:
      return Term::Proj1(a);
    case K::kProj2:
      return Term::Proj2(a);
    default:
      return t;
  }
}

bool step(const Term& t, bool eta, Term& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kVar:
      return false;
    case K::kApp:
      if (t.first().is(K::kLam)) {
        out = term_subst(t.first().first(), t.first().name(), t.second());
        return true;
      }
      break;
    case K::kProj1:
    case K::kProj2:
      if (t.first().is(K::kPair)) {
        out = t.is(K::kProj1) ? t.first().first() : t.first().second();
        return true;
      }
      break;
    case K::kLam:
      if (eta && t.first().is(K::kApp) && t.first().second().is(K::kVar) &&
          t.first().second().name() == t.name() &&
          !free_vars(t.first().first()).count(t.name())) {
        out = t.first().first();
        return true;
      }
      break;
    default:
      break;
  }
  Term sub = t;
  if (step(t.first(), eta, sub)) {
    out = t.is(K::kApp) || t.is(K::kPair) ? rebuild(t, sub, &t.second())
                                           : rebuild(t, sub, nullptr);
    return true;
  }
  if (t.is(K::kApp) || t.is(K::kPair)) {
    if (step(t.second(), eta, sub)) {
      out = rebuild(t, t.first(), &sub);
      return true;
    }
  }
  return false;
}

bool alpha_rec(const Term& a, const Term& b, std::map<std::string, int>& ea,
               std::map<std::string, int>& eb, int depth) {
  using K = Term::Kind;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case K::kVar: {
      auto ia = ea.find(a.name());
      auto ib = eb.find(b.name());
      if (ia == ea.end() || ib == eb.end())
        return ia == ea.end() && ib == eb.end() && a.name() == b.name();
      return ia->second == ib->second;
    }
    case K::kLam: {
      auto sa = ea.count(a.name()) ? std::optional<int>(ea[a.name()]) : std::nullopt;
      auto sb = eb.count(b.name()) ? std::optional<int>(eb[b.name()]) : std::nullopt;
      ea[a.name()] = depth;
      eb[b.name()] = depth;
      bool ok = alpha_rec(a.first(), b.first(), ea, eb, depth + 1);
      if (sa) ea[a.name()] = *sa; else ea.erase(a.name());
      if (sb) eb[b.name()] = *sb; else eb.erase(b.name());
      return ok;
    }
    case K::kProj1:
    case K::kProj2:
      return alpha_rec(a.first(), b.first(), ea, eb, depth);
    default:
      return alpha_rec(a.first(), b.first(), ea, eb, depth) &&
             alpha_rec(a.second(), b.second(), ea, eb, depth);
  }
}

}  // namespace

Term parse_term(const std::string& text) { return TermParser(text).parse_all(); }

std::string to_string(const Term& t) {
  std::string out;
  print(t, Pos::kTop, out);
  return out;
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  fv_rec(t, bound, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

Term term_subst(const Term& t, const std::string& x, const Term& u) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kVar:
      return t.name() == x ? u : t;
    case K::kLam: {
      if (t.name() == x) return t;
      std::set<std::string> fu = free_vars(u);
      std::set<std::string> fb = free_vars(t.first());
      if (!fb.count(x)) return t;
      if (!fu.count(t.name())) return Term::Lam(t.name(), term_subst(t.first(), x, u));
      std::set<std::string> avoid = fu;
      names_rec(t.first(), avoid);
      avoid.insert(x);
      std::string y = fresh_name(t.name(), avoid);
      Term body = term_subst(t.first(), t.name(), Term::Var(y));
      return Term::Lam(y, term_subst(body, x, u));
    }
    case K::kProj1:
      return Term::Proj1(term_subst(t.first(), x, u));
    case K::kProj2:
      return Term::Proj2(term_subst(t.first(), x, u));
    case K::kApp:
      return Term::App(term_subst(t.first(), x, u), term_subst(t.second(), x, u));
    case K::kPair:
      return Term::Pair(term_subst(t.first(), x, u), term_subst(t.second(), x, u));
  }
  return t;
}

bool term_alpha_eq(const Term& a, const Term& b) {
  std::map<std::string, int> ea, eb;
  return alpha_rec(a, b, ea, eb, 0);
}

int term_size(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::kVar:
      return 1;
    case K::kLam:
    case K::kProj1:
    case K::kProj2:
      return 1 + term_size(t.first());
    default:
      return 1 + term_size(t.first()) + term_size(t.second());
  }
}

Term term_normalize(const Term& t, const NormalizeOptions& opt) {
  Term cur = t;
  for (int fuel = opt.fuel; fuel > 0; --fuel) {
    Term next = cur;
    if (!step(cur, opt.eta, next)) return cur;
    cur = next;
  }
  throw std::runtime_error("term normalization ran out of fuel");
}

}  // namespace sysf
