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

#include <algorithm>
#include <limits>
#include <set>

#include "dgdd/digraph.hpp"
#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

// Hopcroft-Karp on a bipartite multigraph given as per-left-vertex lists of
// (right vertex, edge id). Returns the matched edge id per left vertex.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const std::vector<std::vector<std::pair<int, int>>>& adj)
      : adj_(adj),
        n_(static_cast<int>(adj.size())),
        match_left_(static_cast<std::size_t>(n_), -1),
        match_right_(static_cast<std::size_t>(n_), -1),
        match_edge_(static_cast<std::size_t>(n_), -1),
        dist_(static_cast<std::size_t>(n_), 0) {}

  std::vector<int> run() {
    int matched = 0;
    while (bfs()) {
      for (int u = 0; u < n_; ++u) {
        if (match_left_[u] < 0 && dfs(u)) ++matched;
      }
    }
    if (matched != n_) {
      throw Error("internal: regular bipartite graph without perfect matching");
    }
    return match_edge_;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::vector<int> queue;
    for (int u = 0; u < n_; ++u) {
      if (match_left_[u] < 0) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (auto [v, id] : adj_[u]) {
        const int w = match_right_[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (auto [v, id] : adj_[u]) {
      const int w = match_right_[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        match_edge_[u] = id;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const std::vector<std::vector<std::pair<int, int>>>& adj_;
  int n_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> match_edge_;
  std::vector<int> dist_;
};

}  // namespace

Factorization petersen_factorize(const Digraph& g) {
  const int n = g.order();
  const int d = g.degree();
  // Edge id v * d + s is the edge u' -- v'' of the double cover.
  std::vector<bool> removed(static_cast<std::size_t>(n * d), false);
  Factorization result;
  for (int round = 0; round < d; ++round) {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int s = 0; s < d; ++s) {
        const int id = u * d + s;
        if (!removed[id]) adj[u].emplace_back(g.out(u, s), id);
      }
    }
    const std::vector<int> edges = HopcroftKarp(adj).run();
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      removed[edges[u]] = true;
      images[u] = g.out(u, edges[u] % d);
    }
    result.factors.emplace_back(std::move(images));
  }
  return result;
}

std::vector<Factorization> all_degree2_factorizations(const Digraph& g) {
  if (g.degree() != 2) throw DomainError("all_degree2_factorizations: degree must be 2");
  const int n = g.order();
  if (n > 24) throw DomainError("all_degree2_factorizations: n > 24");
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  std::vector<bool> used_first(static_cast<std::size_t>(n), false);
  std::vector<bool> used_second(static_cast<std::size_t>(n), false);
  std::set<std::vector<int>> seen;
  std::vector<Factorization> out;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      std::vector<int> second(static_cast<std::size_t>(n));
      for (int u = 0; u < n; ++u) {
        second[u] = g.out(u, 0) == first[u] ? g.out(u, 1) : g.out(u, 0);
      }
      // Parallel edges at vertex 0 can produce both orders of one pair.
      if (!seen.insert(std::min(first, second)).second) return;
      out.push_back(Factorization{{Permutation(first), Permutation(second)}});
      return;
    }
    for (int s = 0; s < 2; ++s) {
      if (v == 0 && s == 1) break;
      const int a = g.out(v, s);
      const int b = g.out(v, 1 - s);
      if (used_first[a] || used_second[b]) continue;
      used_first[a] = used_second[b] = true;
      first[v] = a;
      self(self, v + 1);
      used_first[a] = used_second[b] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace dgdd
