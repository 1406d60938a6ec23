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

// Bijection search between hyperforests.

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "sysf/iso.hpp"

namespace sysf {

bool is_mixed(const Hyperforest& h, const Hyperedge& e) {
  Polarity pt = node_polarity(h, e.target);
  return std::any_of(e.span.begin(), e.span.end(),
                     [&](int s) { return node_polarity(h, s) != pt; });
}

namespace {

bool commutes_with_parent(const Hyperforest& h1, const Hyperforest& h2,
                          const Bijection& f) {
  if (h1.size() != h2.size() || static_cast<int>(f.size()) != h1.size()) return false;
  std::vector<char> hit(h2.size(), 0);
  for (int i = 0; i < h1.size(); ++i) {
    if (f[i] < 0 || f[i] >= h2.size() || hit[f[i]]) return false;
    hit[f[i]] = 1;
  }
  for (int i = 0; i < h1.size(); ++i) {
    int p1 = h1.parent[i];
    int p2 = h2.parent[f[i]];
    if ((p1 < 0) != (p2 < 0)) return false;
    if (p1 >= 0 && f[p1] != p2) return false;
    if (h1.decoration[i] != h2.decoration[f[i]]) return false;
  }
  return true;
}

Hyperedge image(const Hyperedge& e, const std::vector<int>& f) {
  Hyperedge out{f[e.target], {}};
  for (int s : e.span) out.span.push_back(f[s]);
  std::sort(out.span.begin(), out.span.end());
  return out;
}

std::vector<int> inverse(const Bijection& f) {
  std::vector<int> g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[f[i]] = static_cast<int>(i);
  return g;
}

std::vector<char> span_members(const Hyperforest& h) {
  std::vector<char> in(h.size(), 0);
  for (const auto& e : h.hyperedges)
    for (int s : e.span) in[s] = 1;
  return in;
}

// Per-forest data used by the search.
struct Side {
  const Hyperforest* h;
  std::vector<int> edges;     // relevant hyperedge indices
  std::vector<int> span_of;   // relevant edge containing the node, or -1
  std::vector<char> in_any;   // member of any span
  std::vector<int> canon;     // subtree class id
};

Side prepare(const Hyperforest& h, bool church,
             std::map<std::pair<std::array<int, 6>, std::vector<int>>, int>& ids) {
  Side s;
  s.h = &h;
  s.span_of.assign(h.size(), -1);
  s.in_any = span_members(h);
  std::vector<int> targeted(h.size(), 0);
  for (int k = 0; k < static_cast<int>(h.hyperedges.size()); ++k) {
    const auto& e = h.hyperedges[k];
    if (!church && !is_mixed(h, e)) continue;
    s.edges.push_back(k);
    ++targeted[e.target];
    for (int m : e.span) s.span_of[m] = k;
  }
  s.canon.assign(h.size(), -1);
  for (int n = h.size() - 1; n >= 0; --n) {
    std::array<int, 6> label{h.decoration[n], s.in_any[n], targeted[n], 0, -1, 0};
    if (s.span_of[n] >= 0) {
      const auto& e = h.hyperedges[s.span_of[n]];
      label[3] = static_cast<int>(e.span.size());
      label[4] = h.depth(n) - h.depth(e.target);
    }
    std::vector<int> kids;
    for (int c : h.children[n]) kids.push_back(s.canon[c]);
    std::sort(kids.begin(), kids.end());
    auto key = std::make_pair(label, kids);
    auto it = ids.find(key);
    if (it == ids.end()) it = ids.emplace(key, static_cast<int>(ids.size())).first;
    s.canon[n] = it->second;
  }
  return s;
}

class Matcher {
 public:
  Matcher(const Side& a, const Side& b) : a_(a), b_(b) {
    f_.assign(a.h->size(), -1);
    used_.assign(b.h->size(), 0);
    emap_.assign(a.h->hyperedges.size(), -1);
    einv_.assign(b.h->hyperedges.size(), -1);
  }

  std::optional<Bijection> run() {
    if (a_.h->size() != b_.h->size()) return std::nullopt;
    if (a_.edges.size() != b_.edges.size()) return std::nullopt;
    std::vector<int> ra, rb;
    for (int r : a_.h->roots()) ra.push_back(a_.canon[r]);
    for (int r : b_.h->roots()) rb.push_back(b_.canon[r]);
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    return f_;
  }

 private:
  bool assign(int i) {
    if (i == a_.h->size()) return true;
    int p = a_.h->parent[i];
    const std::vector<int> cands = p < 0 ? b_.h->roots() : b_.h->children[f_[p]];
    for (int j : cands) {
      if (used_[j] || b_.canon[j] != a_.canon[i]) continue;
      int mapped_edge = -1;
      if (!edge_ok(i, j, mapped_edge)) continue;
      f_[i] = j;
      used_[j] = 1;
      if (assign(i + 1)) return true;
      f_[i] = -1;
      used_[j] = 0;
      if (mapped_edge >= 0) {
        einv_[emap_[mapped_edge]] = -1;
        emap_[mapped_edge] = -1;
      }
    }
    return false;
  }

  // Records a new edge correspondence in `fresh` when one is made.
  bool edge_ok(int i, int j, int& fresh) {
    int e1 = a_.span_of[i];
    int e2 = b_.span_of[j];
    if ((e1 < 0) != (e2 < 0)) return false;
    if (e1 < 0) return true;
    if (emap_[e1] >= 0) return emap_[e1] == e2;
    if (einv_[e2] >= 0) return false;
    const auto& x = a_.h->hyperedges[e1];
    const auto& y = b_.h->hyperedges[e2];
    if (x.span.size() != y.span.size()) return false;
    int ft = x.target == i ? j : f_[x.target];
    if (ft != y.target) return false;
    emap_[e1] = e2;
    einv_[e2] = e1;
    fresh = e1;
    return true;
  }

  const Side& a_;
  const Side& b_;
  Bijection f_;
  std::vector<char> used_;
  std::vector<int> emap_, einv_;
};

std::optional<Bijection> search(const Hyperforest& h1, const Hyperforest& h2,
                                bool church) {
  std::map<std::pair<std::array<int, 6>, std::vector<int>>, int> ids;
  Side a = prepare(h1, church, ids);
  Side b = prepare(h2, church, ids);
  return Matcher(a, b).run();
}

}  // namespace

bool is_church_bijection(const Hyperforest& h1, const Hyperforest& h2,
                         const Bijection& f) {
  if (!commutes_with_parent(h1, h2, f)) return false;
  std::vector<Hyperedge> img;
  for (const auto& e : h1.hyperedges) img.push_back(image(e, f));
  std::sort(img.begin(), img.end());
  std::vector<Hyperedge> r2 = h2.hyperedges;
  std::sort(r2.begin(), r2.end());
  return img == r2;
}

bool is_curry_bijection(const Hyperforest& h1, const Hyperforest& h2,
                        const Bijection& f) {
  if (!commutes_with_parent(h1, h2, f)) return false;
  std::vector<char> s1 = span_members(h1), s2 = span_members(h2);
  for (int i = 0; i < h1.size(); ++i)
    if (s1[i] != s2[f[i]]) return false;
  std::vector<int> g = inverse(f);
  for (const auto& e : h1.hyperedges) {
    if (!is_mixed(h1, e)) continue;
    Hyperedge im = image(e, f);
    if (std::find(h2.hyperedges.begin(), h2.hyperedges.end(), im) == h2.hyperedges.end())
      return false;
  }
  for (const auto& e : h2.hyperedges) {
    if (!is_mixed(h2, e)) continue;
    Hyperedge im = image(e, g);
    if (std::find(h1.hyperedges.begin(), h1.hyperedges.end(), im) == h1.hyperedges.end())
      return false;
  }
  return true;
}

std::optional<Bijection> church_iso(const Hyperforest& h1, const Hyperforest& h2) {
  return search(h1, h2, true);
}

std::optional<Bijection> curry_iso(const Hyperforest& h1, const Hyperforest& h2) {
  return search(h1, h2, false);
}

}  // namespace sysf
