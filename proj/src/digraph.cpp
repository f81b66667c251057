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

#include "dgdd/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <thread>

#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

std::vector<int> bfs(int n, int d, std::span<const int> ports, int source) {
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int s = 0; s < d; ++s) {
      const int w = ports[static_cast<std::size_t>(u * d + s)];
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> reverse_ports(int n, int d, std::span<const int> ports) {
  std::vector<int> fill(static_cast<std::size_t>(n), 0);
  std::vector<int> rev(ports.size());
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < d; ++s) {
      const int w = ports[static_cast<std::size_t>(v * d + s)];
      rev[static_cast<std::size_t>(w * d + fill[w]++)] = v;
    }
  }
  return rev;
}

}  // namespace

Digraph::Digraph(int n, int d, std::vector<int> ports)
    : n_(n), d_(d), ports_(std::move(ports)) {
  if (n < 1 || d < 0) throw DomainError("digraph needs n >= 1 and d >= 0");
  if (ports_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(d)) {
    throw DomainError("digraph port table has " + std::to_string(ports_.size()) +
                      " entries, expected n*d = " + std::to_string(n * d));
  }
  std::vector<int> in_degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < d; ++s) {
      const int w = ports_[static_cast<std::size_t>(v * d + s)];
      if (w < 0 || w >= n) {
        throw DomainError("port " + std::to_string(s) + " of vertex " +
                          std::to_string(v) + " points outside the vertex set");
      }
      if (w == v) {
        throw DomainError("loop at vertex " + std::to_string(v));
      }
      ++in_degree[w];
    }
  }
  for (int v = 0; v < n; ++v) {
    if (in_degree[v] != d) {
      throw DomainError("vertex " + std::to_string(v) + " has in-degree " +
                        std::to_string(in_degree[v]) + ", expected " +
                        std::to_string(d));
    }
  }
  const auto fwd = bfs(n_, d_, ports_, 0);
  const auto bwd = bfs(n_, d_, reverse_ports(n_, d_, ports_), 0);
  strongly_connected_ =
      std::none_of(fwd.begin(), fwd.end(), [](int x) { return x < 0; }) &&
      std::none_of(bwd.begin(), bwd.end(), [](int x) { return x < 0; });
}

Digraph Digraph::from_adjacency(const std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(out.size());
  const int d = n == 0 ? 0 : static_cast<int>(out.front().size());
  std::vector<int> ports;
  ports.reserve(static_cast<std::size_t>(n * d));
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(out[v].size()) != d) {
      throw DomainError("vertex " + std::to_string(v) + " has " +
                        std::to_string(out[v].size()) + " out-ports, expected " +
                        std::to_string(d));
    }
    ports.insert(ports.end(), out[v].begin(), out[v].end());
  }
  return Digraph(n, d, std::move(ports));
}

int Digraph::multiplicity(int u, int v) const {
  const auto o = out(u);
  return static_cast<int>(std::count(o.begin(), o.end(), v));
}

std::vector<std::pair<int, int>> Digraph::edge_multiset() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(ports_.size());
  for (int v = 0; v < n_; ++v) {
    for (int w : out(v)) edges.emplace_back(v, w);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

Digraph from_factors(std::span<const Permutation> factors) {
  if (factors.empty()) throw DomainError("from_factors: no factors");
  const int n = factors.front().size();
  const int d = static_cast<int>(factors.size());
  std::vector<int> ports(static_cast<std::size_t>(n * d));
  for (int s = 0; s < d; ++s) {
    const Permutation& f = factors[static_cast<std::size_t>(s)];
    if (f.size() != n) {
      throw DomainError("from_factors: factor " + std::to_string(s) +
                        " has size " + std::to_string(f.size()) +
                        ", expected " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
      if (f(v) == v) {
        throw DomainError("from_factors: factor " + std::to_string(s) +
                          " fixes vertex " + std::to_string(v) +
                          " (would create a loop)");
      }
      ports[static_cast<std::size_t>(v * d + s)] = f(v);
    }
  }
  return Digraph(n, d, std::move(ports));
}

bool is_factorization_of(const Factorization& f, const Digraph& g) {
  if (f.degree() != g.degree()) return false;
  for (const auto& p : f.factors) {
    if (p.size() != g.order() || !is_derangement(p)) return false;
  }
  if (f.factors.empty()) return g.degree() == 0;
  return from_factors(f).edge_multiset() == g.edge_multiset();
}

std::vector<int> distances_from(const Digraph& g, int source) {
  return bfs(g.order(), g.degree(), g.ports(), source);
}

int eccentricity(const Digraph& g, int source) {
  const auto dist = distances_from(g, source);
  int ecc = 0;
  for (int x : dist) {
    if (x < 0) return -1;
    ecc = std::max(ecc, x);
  }
  return ecc;
}

int diameter(const Digraph& g, int threads) {
  const int n = g.order();
  threads = std::clamp(threads, 1, n);
  // Per-worker (eccentricity, first unreachable pair); merged in worker order
  // so the reported pair is the same for any thread count.
  struct Partial {
    int diam = 0;
    int bad_from = -1;
    int bad_to = -1;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    Partial& part = partials[static_cast<std::size_t>(t)];
    for (int v = t; v < n; v += threads) {
      const auto dist = distances_from(g, v);
      for (int w = 0; w < n; ++w) {
        if (dist[w] < 0) {
          if (part.bad_from < 0 || v < part.bad_from) {
            part.bad_from = v;
            part.bad_to = w;
          }
          break;
        }
        part.diam = std::max(part.diam, dist[w]);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  int diam = 0;
  int bad_from = -1;
  int bad_to = -1;
  for (const auto& part : partials) {
    diam = std::max(diam, part.diam);
    if (part.bad_from >= 0 && (bad_from < 0 || part.bad_from < bad_from)) {
      bad_from = part.bad_from;
      bad_to = part.bad_to;
    }
  }
  if (bad_from >= 0) throw NotStronglyConnected(bad_from, bad_to);
  return diam;
}

// Vertex v * d + s of the line digraph is the edge leaving v through port s.
Digraph line_digraph(const Digraph& g) {
  const int n = g.order();
  const int d = g.degree();
  std::vector<int> ports;
  ports.reserve(static_cast<std::size_t>(n * d * d));
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < d; ++s) {
      const int w = g.out(v, s);
      for (int q = 0; q < d; ++q) ports.push_back(w * d + q);
    }
  }
  return Digraph(n * d, d, std::move(ports));
}

Digraph relabel(const Digraph& g, const Permutation& p) {
  if (p.size() != g.order()) throw DomainError("relabel: size mismatch");
  const int n = g.order();
  const int d = g.degree();
  std::vector<int> ports(static_cast<std::size_t>(n * d));
  for (int v = 0; v < n; ++v) {
    for (int s = 0; s < d; ++s) {
      ports[static_cast<std::size_t>(p(v) * d + s)] = p(g.out(v, s));
    }
  }
  return Digraph(n, d, std::move(ports));
}

Digraph reverse(const Digraph& g) {
  return Digraph(g.order(), g.degree(),
                 reverse_ports(g.order(), g.degree(), g.ports()));
}

Digraph directed_cycle(int n) {
  return from_factors(std::vector<Permutation>{Permutation::rotation(n)});
}

Digraph complete_digraph(int n) {
  std::vector<int> ports;
  ports.reserve(static_cast<std::size_t>(n * (n - 1)));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (w != v) ports.push_back(w);
    }
  }
  return Digraph(n, n - 1, std::move(ports));
}

int reciprocal_edge_count(const Digraph& g) {
  int count = 0;
  for (int u = 0; u < g.order(); ++u) {
    auto o = std::vector<int>(g.out(u).begin(), g.out(u).end());
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    for (int v : o) {
      if (g.multiplicity(v, u) > 0) ++count;
    }
  }
  return count;
}

bool is_symmetric(const Digraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.out(u)) {
      if (g.multiplicity(u, v) != g.multiplicity(v, u)) return false;
    }
  }
  return true;
}

int undirected_girth(const Digraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v : g.out(u)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  int girth = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (girth == 0 || len < girth) girth = len;
        }
      }
    }
  }
  return girth;
}

bool is_automorphism(const Digraph& g, const Permutation& p) {
  if (p.size() != g.order()) throw DomainError("is_automorphism: size mismatch");
  return relabel(g, p).edge_multiset() == g.edge_multiset();
}

}  // namespace dgdd
