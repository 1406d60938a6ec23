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

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "projection.hpp"
#include "sysf/engine.hpp"

namespace sysf {

namespace {

using MoveMap = std::function<std::optional<Move>(const Move&)>;

bool has_prefix(const std::string& s, const std::string& p) {
  return s.compare(0, p.size(), p) == 0;
}

Strategy make(std::string name,
              std::function<std::optional<PMove>(const Play&, const Move&, int)> fn) {
  auto o = std::make_shared<StrategyOracle>();
  o->name = std::move(name);
  o->respond = std::move(fn);
  return o;
}

// Ask `sub` about the last move of r; map its answer back through `back`.
std::optional<PMove> delegate(const Strategy& sub, const Restriction& r,
                              const MoveMap& back) {
  int n = r.play.size();
  if (n == 0) return std::nullopt;
  auto resp = (*sub)(r.play.prefix(n - 1), r.play.moves[n - 1], r.play.ptr[n - 1]);
  if (!resp) return std::nullopt;
  auto m = back(resp->move);
  if (!m) return std::nullopt;
  int p = resp->ptr < 0 || resp->ptr >= n ? -1 : r.origin[resp->ptr];
  return PMove{std::move(*m), p};
}

// Same-length relabelling of every move, in both directions.
Strategy relabel(std::string name, Strategy sigma, MoveMap to_sub, MoveMap from_sub) {
  return make(std::move(name), [sigma, to_sub, from_sub](const Play& s, const Move& o,
                                                         int optr) -> std::optional<PMove> {
    Play t;
    t.moves.reserve(s.size() + 2);
    t.ptr.reserve(s.size() + 2);
    for (int i = 0; i < s.size(); ++i) {
      auto m = to_sub(s.moves[i]);
      if (!m) return std::nullopt;
      t.push(std::move(*m), s.ptr[i]);
    }
    auto mo = to_sub(o);
    if (!mo) return std::nullopt;
    auto resp = (*sigma)(t, *mo, optr);
    if (!resp) return std::nullopt;
    auto back = from_sub(resp->move);
    if (!back) return std::nullopt;
    return PMove{std::move(*back), resp->ptr};
  });
}

MoveMap swap_prefix(std::string from, std::string to) {
  return [from, to](const Move& m) -> std::optional<Move> {
    if (!has_prefix(m.tokens, from)) return std::nullopt;
    return Move{to + m.tokens.substr(from.size()), m.leaf};
  };
}

struct Interaction {
  Play u;
  std::vector<int> visible;
  Projection tau{"^", "v^"};
  Projection sigma{"v^", "vv"};
  Projection outer{"^", "vv"};

  // A copy of `base` with room for `extra` more moves.
  static std::shared_ptr<Interaction> clone(const Interaction& base, int extra) {
    auto out = std::make_shared<Interaction>();
    out->reserve(base.u.moves.size() + extra);
    *out = base;
    return out;
  }

  void reserve(std::size_t n) {
    u.moves.reserve(n);
    u.ptr.reserve(n);
    visible.reserve(n);
    tau.reserve(n);
    sigma.reserve(n);
    outer.reserve(n);
  }

  void push(Move m, int p) {
    u.push(std::move(m), p);
    int i = u.size() - 1;
    tau.add(u, i);
    sigma.add(u, i);
    outer.add(u, i);
  }
};

class Composite {
 public:
  Composite(Strategy sigma, Strategy tau, int fuel)
      : sigma_(std::move(sigma)), tau_(std::move(tau)), fuel_(fuel) {}

  std::optional<PMove> respond(const Play& s, const Move& o, int optr) {
    auto base = state_for(s);
    if (!base) return std::nullopt;
    auto step = extend(*base, o, optr);
    if (!step) return std::nullopt;
    Play t = s;
    t.push(o, optr);
    t.push(step->first.move, step->first.ptr);
    remember(play_key(t), step->second);
    return step->first;
  }

  std::optional<Play> interaction(const Play& s) {
    auto st = state_for(s);
    if (!st) return std::nullopt;
    return st->u;
  }

 private:
  using State = std::shared_ptr<const Interaction>;
  static constexpr std::size_t kCacheCap = 400000;

  void remember(const std::string& key, State st) {
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_.size() >= kCacheCap) cache_.clear();
    cache_.emplace(key, std::move(st));
  }

  State state_for(const Play& s) {
    int n = s.size();
    if (n == 0) return std::make_shared<Interaction>();
    if (n % 2 != 0) return nullptr;
    std::string key = play_key(s);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    auto base = state_for(s.prefix(n - 2));
    if (!base) return nullptr;
    auto step = extend(*base, s.moves[n - 2], s.ptr[n - 2]);
    if (!step || !(step->first == PMove{s.moves[n - 1], s.ptr[n - 1]})) return nullptr;
    remember(key, step->second);
    return step->second;
  }

  std::optional<std::pair<PMove, State>> extend(const Interaction& base, const Move& o,
                                                int optr) const {
    if (o.tokens.empty() || (o.tokens[0] != '^' && o.tokens[0] != 'v')) return std::nullopt;
    if (optr >= static_cast<int>(base.visible.size())) return std::nullopt;
    auto next = Interaction::clone(base, 8);
    Interaction& it = *next;
    bool to_tau = o.tokens[0] == '^';
    it.push(to_tau ? o : Move{"v" + o.tokens, o.leaf}, optr < 0 ? -1 : base.visible[optr]);
    it.visible.push_back(it.u.size() - 1);
    for (int step = 0; step < fuel_; ++step) {
      Projection& pr = to_tau ? it.tau : it.sigma;
      if (!pr.last_kept()) return std::nullopt;
      Play& rp = pr.r.play;
      int n = rp.size();
      Move last = std::move(rp.moves.back());
      int last_ptr = rp.ptr.back();
      rp.moves.pop_back();
      rp.ptr.pop_back();
      auto resp = (to_tau ? *tau_ : *sigma_)(rp, last, last_ptr);
      rp.push(std::move(last), last_ptr);
      if (!resp || resp->ptr < 0 || resp->ptr >= n || resp->move.tokens.empty()) {
        return std::nullopt;
      }
      const std::string& tk = resp->move.tokens;
      std::string rest = tk.substr(1);
      bool visible;
      Move m;
      if (tk[0] == '^') {
        visible = to_tau;
        m = Move{to_tau ? tk : "v^" + rest, resp->move.leaf};
      } else if (tk[0] == 'v') {
        visible = !to_tau;
        m = Move{(to_tau ? "v^" : "vv") + rest, resp->move.leaf};
      } else {
        return std::nullopt;
      }
      it.push(std::move(m), pr.r.origin[resp->ptr]);
      if (visible) {
        if (!it.outer.last_kept()) return std::nullopt;
        it.visible.push_back(it.u.size() - 1);
        PMove out{it.outer.r.play.moves.back(), it.outer.r.play.ptr.back()};
        return std::make_pair(std::move(out), State(next));
      }
      to_tau = !to_tau;
    }
    throw FuelExhausted("interaction fuel exhausted composing " + sigma_->name + " ; " +
                        tau_->name);
  }

  Strategy sigma_, tau_;
  int fuel_;
  std::mutex mu_;
  std::unordered_map<std::string, State> cache_;
};

Strategy closed_compose(Strategy sigma, Strategy tau, const Bounds& b) {
  return unlift(compose(lift(std::move(sigma)), std::move(tau), b));
}

Strategy interp(std::vector<std::string>& ctx, const Term& t, const Bounds& b) {
  switch (t.kind()) {
    case Term::Kind::kVar: {
      const std::string& x = t.name();
      if (ctx.empty()) throw UnboundVariable("unbound variable " + x);
      if (ctx.back() == x) return ctx.size() == 1 ? strat_id() : strat_pi_r();
      if (ctx.size() == 1) throw UnboundVariable("unbound variable " + x);
      std::string last = ctx.back();
      ctx.pop_back();
      Strategy inner = interp(ctx, t, b);
      ctx.push_back(last);
      return compose(strat_pi_l(), inner, b);
    }
    case Term::Kind::kLam: {
      ctx.push_back(t.name());
      bool top = ctx.size() == 1;
      Strategy body = interp(ctx, t.first(), b);
      ctx.pop_back();
      return top ? body : lambda_abs(body);
    }
    case Term::Kind::kApp: {
      Strategy f = interp(ctx, t.first(), b);
      Strategy a = interp(ctx, t.second(), b);
      if (ctx.empty()) return closed_compose(pair_a(f, a), strat_eval(), b);
      return compose(pair_b(f, a), strat_eval(), b);
    }
    case Term::Kind::kPair: {
      Strategy l = interp(ctx, t.first(), b);
      Strategy r = interp(ctx, t.second(), b);
      return ctx.empty() ? pair_a(l, r) : pair_b(l, r);
    }
    case Term::Kind::kProj1:
    case Term::Kind::kProj2: {
      Strategy inner = interp(ctx, t.first(), b);
      Strategy pi = t.kind() == Term::Kind::kProj1 ? strat_pi_l() : strat_pi_r();
      return ctx.empty() ? closed_compose(inner, pi, b) : compose(inner, pi, b);
    }
  }
  throw std::logic_error("unknown term kind");
}

}  // namespace

Strategy copycat(std::string name, std::vector<std::pair<std::string, std::string>> pairs) {
  return make(std::move(name), [pairs](const Play& s, const Move& o,
                                       int optr) -> std::optional<PMove> {
    for (const auto& [a, b] : pairs) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::string& from = dir == 0 ? a : b;
        const std::string& to = dir == 0 ? b : a;
        if (!has_prefix(o.tokens, from)) continue;
        int p = optr < 0 ? s.size() : (optr ^ 1);
        return PMove{Move{to + o.tokens.substr(from.size()), o.leaf}, p};
      }
    }
    return std::nullopt;
  });
}

Strategy strat_id() {
  static const Strategy s = copycat("id", {{"^", "v"}});
  return s;
}

Strategy strat_pi_l() {
  static const Strategy s = copycat("pi_l", {{"^", "vl"}});
  return s;
}

Strategy strat_pi_r() {
  static const Strategy s = copycat("pi_r", {{"^", "vr"}});
  return s;
}

Strategy strat_eval() {
  static const Strategy s = copycat("eval", {{"^", "vl^"}, {"vr", "vlv"}});
  return s;
}

Strategy strat_empty() {
  static const Strategy s =
      make("empty", [](const Play&, const Move&, int) { return std::optional<PMove>(); });
  return s;
}

Strategy compose(Strategy sigma, Strategy tau, const Bounds& b) {
  auto state = std::make_shared<Composite>(sigma, tau, b.interaction_fuel);
  auto o = std::make_shared<StrategyOracle>();
  o->name = "(" + sigma->name + ";" + tau->name + ")";
  o->respond = [state](const Play& s, const Move& m, int p) { return state->respond(s, m, p); };
  o->interaction = [state](const Play& s) { return state->interaction(s); };
  return o;
}

Strategy pair_a(Strategy sigma, Strategy tau) {
  std::string name = "<" + sigma->name + "," + tau->name + ">a";
  return make(std::move(name), [sigma, tau](const Play& s, const Move& o,
                                            int optr) -> std::optional<PMove> {
    if (o.tokens.empty()) return std::nullopt;
    std::string side(1, o.tokens[0]);
    if (side != "l" && side != "r") return std::nullopt;
    Play t = s;
    t.push(o, optr);
    return delegate(side == "l" ? sigma : tau, restrict_one_map(t, side),
                    [side](const Move& m) { return std::optional<Move>(Move{side + m.tokens, m.leaf}); });
  });
}

Strategy pair_b(Strategy sigma, Strategy tau) {
  std::string name = "<" + sigma->name + "," + tau->name + ">b";
  return make(std::move(name), [sigma, tau](const Play& s, const Move& o,
                                            int optr) -> std::optional<PMove> {
    Play t = s;
    t.push(o, optr);
    int root = t.size() - 1;
    while (t.ptr[root] >= 0) root = t.ptr[root];
    const std::string& rt = t.moves[root].tokens;
    std::string zeta;
    if (has_prefix(rt, "^l")) {
      zeta = "^l";
    } else if (has_prefix(rt, "^r")) {
      zeta = "^r";
    } else {
      return std::nullopt;
    }
    if (!has_prefix(o.tokens, zeta) && !has_prefix(o.tokens, "v")) return std::nullopt;
    return delegate(zeta == "^l" ? sigma : tau, restrict_two_map(t, zeta, "v"),
                    [zeta](const Move& m) -> std::optional<Move> {
                      if (has_prefix(m.tokens, "^")) return Move{zeta + m.tokens.substr(1), m.leaf};
                      if (has_prefix(m.tokens, "v")) return m;
                      return std::nullopt;
                    });
  });
}

Strategy lambda_abs(Strategy sigma) {
  MoveMap to_sub = [](const Move& m) -> std::optional<Move> {
    const std::string& t = m.tokens;
    if (has_prefix(t, "^^")) return Move{"^" + t.substr(2), m.leaf};
    if (has_prefix(t, "^v")) return Move{"vr" + t.substr(2), m.leaf};
    if (has_prefix(t, "v")) return Move{"vl" + t.substr(1), m.leaf};
    return std::nullopt;
  };
  MoveMap from_sub = [](const Move& m) -> std::optional<Move> {
    const std::string& t = m.tokens;
    if (has_prefix(t, "^")) return Move{"^^" + t.substr(1), m.leaf};
    if (has_prefix(t, "vr")) return Move{"^v" + t.substr(2), m.leaf};
    if (has_prefix(t, "vl")) return Move{"v" + t.substr(2), m.leaf};
    return std::nullopt;
  };
  std::string name = "L(" + sigma->name + ")";
  return relabel(std::move(name), std::move(sigma), to_sub, from_sub);
}

Strategy lift(Strategy sigma) {
  std::string name = "^" + sigma->name;
  return relabel(std::move(name), std::move(sigma), swap_prefix("^", ""), swap_prefix("", "^"));
}

Strategy unlift(Strategy sigma) {
  std::string name = "_" + sigma->name;
  return relabel(std::move(name), std::move(sigma), swap_prefix("", "^"), swap_prefix("^", ""));
}

Strategy interpret(const std::vector<std::string>& vars, const Term& t, const Bounds& b) {
  std::vector<std::string> ctx = vars;
  return interp(ctx, t, b);
}

}  // namespace sysf
