// Copyright 2026 The dgdd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Backtracking isomorphism search. Vertices are first colored by distance
// profiles and refined by neighbor colors (computed jointly for both
// digraphs), then mapped in BFS order over the underlying graph: each vertex
// after the first has an already-mapped anchor, so its image is drawn from
// the anchor image's neighbors.

#include <algorithm>
#include <functional>
#include <map>

#include "dgdd/digraph.hpp"
#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

struct Anchor {
  int vertex = -1;  // -1: component root
  bool outgoing = true;  // anchor -> v (true) or v -> anchor (false)
};

class Matcher {
 public:
  Matcher(const Digraph& g, const Digraph& h) : g_(g), h_(h), n_(g.order()) {
    compatible_ = g.order() == h.order() && g.degree() == h.degree();
    if (!compatible_) return;
    mult_g_ = multiplicities(g);
    mult_h_ = multiplicities(h);
    in_g_ = in_lists(g);
    in_h_ = in_lists(h);
    color_vertices();
  }

  // Visits every isomorphism g -> h (optionally with from -> to fixed) until
  // the visitor returns false.
  void search(std::optional<std::pair<int, int>> pin,
              const std::function<bool(const std::vector<int>&)>& visit) {
    if (!compatible_) return;
    if (pin && color_g_[pin->first] != color_h_[pin->second]) return;
    build_order(pin ? pin->first : -1);
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
    pin_ = pin;
    visit_ = &visit;
    stop_ = false;
    extend(0);
  }

  bool color_classes_match() const { return compatible_ && classes_match_; }

 private:
  static std::vector<std::uint8_t> multiplicities(const Digraph& g) {
    const int n = g.order();
    std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
      for (int v : g.out(u)) ++m[static_cast<std::size_t>(u) * n + v];
    }
    return m;
  }

  static std::vector<std::vector<int>> in_lists(const Digraph& g) {
    std::vector<std::vector<int>> in(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) {
      for (int v : g.out(u)) in[v].push_back(u);
    }
    for (auto& row : in) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return in;
  }

  std::vector<int> out_distinct(const Digraph& g, int v) const {
    std::vector<int> o(g.out(v).begin(), g.out(v).end());
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    return o;
  }

  std::vector<int> initial_signature(const Digraph& g, const Digraph& rev,
                                     const std::vector<std::uint8_t>& mult,
                                     int v) const {
    std::vector<int> sig(static_cast<std::size_t>(2 * (n_ + 1) + 2), 0);
    for (int x : distances_from(g, v)) ++sig[x < 0 ? n_ : x];
    for (int x : distances_from(rev, v)) ++sig[n_ + 1 + (x < 0 ? n_ : x)];
    int recip = 0;
    int parallel = 0;
    for (int w : out_distinct(g, v)) {
      if (mult[static_cast<std::size_t>(w) * n_ + v] > 0) ++recip;
      if (mult[static_cast<std::size_t>(v) * n_ + w] > 1) ++parallel;
    }
    sig[2 * (n_ + 1)] = recip;
    sig[2 * (n_ + 1) + 1] = parallel;
    return sig;
  }

  void color_vertices() {
    const Digraph rev_g = reverse(g_);
    const Digraph rev_h = reverse(h_);
    std::map<std::vector<int>, int> ids;
    auto intern = [&ids](std::vector<int> key) {
      auto [it, inserted] = ids.try_emplace(std::move(key), 0);
      if (inserted) it->second = static_cast<int>(ids.size()) - 1;
      return it->second;
    };
    color_g_.resize(static_cast<std::size_t>(n_));
    color_h_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      color_g_[v] = intern(initial_signature(g_, rev_g, mult_g_, v));
      color_h_[v] = intern(initial_signature(h_, rev_h, mult_h_, v));
    }
    // Refine by sorted (multiplicity, color) lists of out- and in-neighbors.
    int classes = count_classes();
    for (int round = 0; round < n_; ++round) {
      ids.clear();
      auto refined = [&](const Digraph& g, const std::vector<std::vector<int>>& in,
                         const std::vector<int>& color, int v) {
        std::vector<int> key{color[v], -1};
        std::vector<int> outs(g.out(v).begin(), g.out(v).end());
        std::vector<int> oc;
        for (int w : outs) oc.push_back(color[w]);
        std::sort(oc.begin(), oc.end());
        key.insert(key.end(), oc.begin(), oc.end());
        key.push_back(-2);
        std::vector<int> ic;
        for (int w : in[v]) ic.push_back(color[w]);
        std::sort(ic.begin(), ic.end());
        key.insert(key.end(), ic.begin(), ic.end());
        return key;
      };
      std::vector<int> next_g(static_cast<std::size_t>(n_));
      std::vector<int> next_h(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) next_g[v] = intern(refined(g_, in_g_, color_g_, v));
      for (int v = 0; v < n_; ++v) next_h[v] = intern(refined(h_, in_h_, color_h_, v));
      color_g_ = std::move(next_g);
      color_h_ = std::move(next_h);
      const int now = count_classes();
      if (now == classes) break;
      classes = now;
    }
    std::vector<int> cg = color_g_;
    std::vector<int> ch = color_h_;
    std::sort(cg.begin(), cg.end());
    std::sort(ch.begin(), ch.end());
    classes_match_ = cg == ch;
    if (!classes_match_) compatible_ = false;
  }

  int count_classes() const {
    std::vector<int> all = color_g_;
    all.insert(all.end(), color_h_.begin(), color_h_.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  }

  void build_order(int first) {
    order_.clear();
    anchors_.assign(static_cast<std::size_t>(n_), Anchor{});
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    std::vector<int> class_size(static_cast<std::size_t>(2 * n_ + 2), 0);
    for (int c : color_g_) {
      if (c >= static_cast<int>(class_size.size())) class_size.resize(c + 1, 0);
      ++class_size[c];
    }
    auto pick_root = [&]() {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best < 0 || class_size[color_g_[v]] < class_size[color_g_[best]]) {
          best = v;
        }
      }
      return best;
    };
    int root = first >= 0 ? first : pick_root();
    while (root >= 0) {
      placed[root] = true;
      order_.push_back(root);
      for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
        const int u = order_[head];
        for (int w : out_distinct(g_, u)) {
          if (!placed[w]) {
            placed[w] = true;
            anchors_[w] = Anchor{u, true};
            order_.push_back(w);
          }
        }
        for (int w : in_g_[u]) {
          if (!placed[w]) {
            placed[w] = true;
            anchors_[w] = Anchor{u, false};
            order_.push_back(w);
          }
        }
      }
      root = pick_root();
    }
  }

  bool consistent(int v, int c, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const int w = order_[k];
      const int fw = map_[w];
      if (mult_g_[static_cast<std::size_t>(w) * n_ + v] !=
              mult_h_[static_cast<std::size_t>(fw) * n_ + c] ||
          mult_g_[static_cast<std::size_t>(v) * n_ + w] !=
              mult_h_[static_cast<std::size_t>(c) * n_ + fw]) {
        return false;
      }
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (stop_) return;
    if (depth == order_.size()) {
      if (!(*visit_)(map_)) stop_ = true;
      return;
    }
    const int v = order_[depth];
    std::vector<int> candidates;
    const Anchor anchor = anchors_[v];
    if (depth == 0 && pin_) {
      candidates.push_back(pin_->second);
    } else if (anchor.vertex < 0) {
      for (int c = 0; c < n_; ++c) candidates.push_back(c);
    } else {
      const int fa = map_[anchor.vertex];
      candidates = anchor.outgoing ? out_distinct(h_, fa) : in_h_[fa];
    }
    for (int c : candidates) {
      if (used_[c] || color_h_[c] != color_g_[v]) continue;
      if (!consistent(v, c, depth)) continue;
      map_[v] = c;
      used_[c] = true;
      extend(depth + 1);
      used_[c] = false;
      map_[v] = -1;
      if (stop_) return;
    }
  }

  const Digraph& g_;
  const Digraph& h_;
  int n_;
  bool compatible_ = false;
  bool classes_match_ = false;
  std::vector<std::uint8_t> mult_g_;
  std::vector<std::uint8_t> mult_h_;
  std::vector<std::vector<int>> in_g_;
  std::vector<std::vector<int>> in_h_;
  std::vector<int> color_g_;
  std::vector<int> color_h_;
  std::vector<int> order_;
  std::vector<Anchor> anchors_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::optional<std::pair<int, int>> pin_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

std::optional<Permutation> isomorphic(const Digraph& g, const Digraph& h) {
  Matcher matcher(g, h);
  std::optional<Permutation> found;
  matcher.search(std::nullopt, [&](const std::vector<int>& map) {
    found = Permutation(map);
    return false;
  });
  return found;
}

std::optional<Permutation> isomorphic_pinned(const Digraph& g, const Digraph& h,
                                             int from, int to) {
  if (from < 0 || from >= g.order() || to < 0 || to >= h.order()) {
    throw DomainError("isomorphic_pinned: vertex out of range");
  }
  Matcher matcher(g, h);
  std::optional<Permutation> found;
  matcher.search(std::make_pair(from, to), [&](const std::vector<int>& map) {
    found = Permutation(map);
    return false;
  });
  return found;
}

std::vector<Permutation> automorphisms(const Digraph& g, std::size_t limit) {
  Matcher matcher(g, g);
  std::vector<Permutation> group;
  matcher.search(std::nullopt, [&](const std::vector<int>& map) {
    group.emplace_back(map);
    return group.size() < limit;
  });
  std::sort(group.begin(), group.end());
  return group;
}

std::uint64_t automorphism_order(const Digraph& g) {
  Matcher matcher(g, g);
  std::uint64_t count = 0;
  matcher.search(std::nullopt, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace dgdd
