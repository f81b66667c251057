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

#include "dgdd/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

constexpr int kUnset = -1;

// Upper bound on the size of every radius-D ball. Unassigned Y edges are
// wildcards: one first used at depth t reaches at most 2^(D-t) - 1 vertices.
bool balls_may_cover(const std::vector<int>& y, int n, int target,
                     std::vector<int>& depth, std::vector<int>& queue) {
  for (int u = 0; u < n; ++u) {
    std::fill(depth.begin(), depth.end(), kUnset);
    depth[static_cast<std::size_t>(u)] = 0;
    std::size_t head = 0;
    queue.clear();
    queue.push_back(u);
    long long bound = 0;
    while (head < queue.size()) {
      const int v = queue[head++];
      ++bound;
      const int t = depth[static_cast<std::size_t>(v)];
      if (t == target) continue;
      const int yv = y[static_cast<std::size_t>(v)];
      if (yv == kUnset) bound += (1LL << (target - t)) - 1;
      for (int w : {(v + 1) % n, yv}) {
        if (w == kUnset || depth[static_cast<std::size_t>(w)] != kUnset) continue;
        depth[static_cast<std::size_t>(w)] = t + 1;
        queue.push_back(w);
      }
      if (bound >= n) break;
    }
    if (bound < n) return false;
  }
  return true;
}

// Hill-climbing score: pairs at distance greater than `target`, then the
// sum of all distances (unreachable pairs count as n).
struct Score {
  std::uint64_t deficit = 0;
  std::uint64_t total = 0;
  friend auto operator<=>(const Score&, const Score&) = default;
};

Score score(const std::vector<int>& y, int n, int target, std::vector<int>& depth,
            std::vector<int>& queue) {
  Score sc;
  for (int u = 0; u < n; ++u) {
    std::fill(depth.begin(), depth.end(), kUnset);
    depth[static_cast<std::size_t>(u)] = 0;
    std::size_t head = 0;
    queue.clear();
    queue.push_back(u);
    while (head < queue.size()) {
      const int v = queue[head++];
      const int t = depth[static_cast<std::size_t>(v)];
      sc.total += static_cast<std::uint64_t>(t);
      if (t > target) ++sc.deficit;
      for (int w : {(v + 1) % n, y[static_cast<std::size_t>(v)]}) {
        if (depth[static_cast<std::size_t>(w)] != kUnset) continue;
        depth[static_cast<std::size_t>(w)] = t + 1;
        queue.push_back(w);
      }
    }
    const auto missing = static_cast<std::uint64_t>(n) - queue.size();
    sc.deficit += missing;
    sc.total += missing * static_cast<std::uint64_t>(n);
  }
  return sc;
}

// Sorted per-source distance histograms; equal for isomorphic digraphs.
std::vector<int> signature(const Digraph& g) {
  std::vector<std::vector<int>> rows;
  for (int u = 0; u < g.order(); ++u) {
    std::vector<int> hist(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int dist : distances_from(g, u)) {
      ++hist[static_cast<std::size_t>(dist < 0 ? g.order() : dist)];
    }
    rows.push_back(std::move(hist));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<int> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

struct ClassSet {
  struct Entry {
    Permutation y;
    Digraph g;
    std::vector<int> sig;
  };
  std::vector<Entry> entries;

  // Adds y unless an isomorphic class is present.
  bool add(const Permutation& y, bool dedup) {
    Digraph g = companion_digraph(y);
    std::vector<int> sig = signature(g);
    if (dedup) {
      for (const auto& e : entries) {
        if (e.sig == sig && isomorphic(e.g, g)) return false;
      }
    }
    entries.push_back({y, std::move(g), std::move(sig)});
    return true;
  }
};

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, std::atomic<std::uint64_t>& nodes,
             std::atomic<bool>& stop)
      : spec_(spec), n_(spec.n), y_(static_cast<std::size_t>(n_), kUnset),
        used_(static_cast<std::size_t>(n_), false), depth_(static_cast<std::size_t>(n_)),
        nodes_(nodes), stop_(stop) {}

  void run_root(int image) {
    assign(0, image);
    if (admissible(0)) descend(1);
    unassign(0);
  }

  std::vector<Permutation> leaves;
  SearchStats stats;

 private:
  int diff(int v, int t) const { return ((t - v) % n_ + n_) % n_; }

  void assign(int v, int t) {
    y_[static_cast<std::size_t>(v)] = t;
    used_[static_cast<std::size_t>(t)] = true;
  }
  void unassign(int v) {
    used_[static_cast<std::size_t>(y_[static_cast<std::size_t>(v)])] = false;
    y_[static_cast<std::size_t>(v)] = kUnset;
  }

  bool admissible(int v) {
    ++stats.nodes;
    const std::uint64_t total = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (spec_.max_nodes != 0 && total > spec_.max_nodes) {
      stop_.store(true);
      return false;
    }
    const bool leaf = v == n_ - 1;
    if (!leaf && spec_.mode == SearchMode::kExhaustive) return true;
    if (!balls_may_cover(y_, n_, spec_.diameter_target, depth_, queue_)) {
      if (!leaf) ++stats.pruned;
      return false;
    }
    return true;
  }

  void descend(int v) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (v == n_) {
      ++stats.leaves;
      leaves.emplace_back(y_);
      return;
    }
    const int min_diff = y_[0];
    for (int t = 0; t < n_; ++t) {
      if (used_[static_cast<std::size_t>(t)]) continue;
      const int d = diff(v, t);
      if (d == 0 || d == 1 || d < min_diff) continue;
      assign(v, t);
      if (admissible(v)) descend(v + 1);
      unassign(v);
    }
  }

  const SearchSpec& spec_;
  int n_;
  std::vector<int> y_;
  std::vector<bool> used_;
  std::vector<int> depth_;
  std::vector<int> queue_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& stop_;
};

void check_spec(const SearchSpec& spec) {
  if (spec.n < 3) throw DomainError("search: n must be >= 3");
  if (spec.n > 255) throw DomainError("search: n must be <= 255");
  if (spec.diameter_target < 1) throw DomainError("search: diameter target must be >= 1");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SearchMode parse_search_mode(const std::string& text) {
  if (text == "exhaustive") return SearchMode::kExhaustive;
  if (text == "pruned") return SearchMode::kPruned;
  if (text == "random") return SearchMode::kRandom;
  throw DomainError("unknown search mode '" + text + "'");
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::kExhaustive: return "exhaustive";
    case SearchMode::kPruned: return "pruned";
    case SearchMode::kRandom: return "random";
  }
  return "?";
}

Digraph companion_digraph(const Permutation& y) {
  std::vector<Permutation> factors{Permutation::rotation(y.size()), y};
  return from_factors(factors);
}

SearchResult enumerate(const SearchSpec& spec) {
  check_spec(spec);
  const auto start = std::chrono::steady_clock::now();
  const int n = spec.n;
  // Y(0) is the smallest difference Y(v) - v, fixing the rotation.
  std::vector<int> roots;
  for (int t = 2; t < n; ++t) roots.push_back(t);
  const int workers = std::max(1, std::min<int>(spec.threads, static_cast<int>(roots.size())));

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::vector<std::vector<Permutation>> reps(static_cast<std::size_t>(workers));
  std::vector<SearchStats> stats(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    Enumerator e(spec, nodes, stop);
    ClassSet local;
    for (std::size_t k = static_cast<std::size_t>(w); k < roots.size();
         k += static_cast<std::size_t>(workers)) {
      e.run_root(roots[k]);
      for (auto& leaf : e.leaves) local.add(leaf, spec.dedup);
      e.leaves.clear();
    }
    for (auto& entry : local.entries) reps[static_cast<std::size_t>(w)].push_back(entry.y);
    stats[static_cast<std::size_t>(w)] = e.stats;
  };
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }

  SearchResult result;
  std::vector<Permutation> all;
  for (auto& r : reps) all.insert(all.end(), r.begin(), r.end());
  std::sort(all.begin(), all.end());
  ClassSet merged;
  for (const auto& y : all) merged.add(y, spec.dedup);
  for (auto& entry : merged.entries) result.representatives.push_back(entry.y);
  for (const auto& s : stats) {
    result.stats.nodes += s.nodes;
    result.stats.pruned += s.pruned;
    result.stats.leaves += s.leaves;
  }
  result.complete = !stop.load();
  result.stats.seconds = seconds_since(start);
  return result;
}

SearchResult random_search(const SearchSpec& spec) {
  check_spec(spec);
  const auto start = std::chrono::steady_clock::now();
  const int n = spec.n;
  const int k = spec.rotation_step == 0 ? n : spec.rotation_step;
  if (k < 1 || n % k != 0) throw DomainError("search: rotation step must divide n");
  const int blocks = n / k;
  const auto un = static_cast<std::size_t>(n);
  std::mt19937_64 rng(spec.seed);
  std::vector<int> depth(un);
  std::vector<int> queue;

  // Y(j + m k) = base[j] + m k, so Y commutes with v -> v + k.
  std::vector<int> y(un);
  auto expand = [&](const std::vector<int>& base) {
    for (int v = 0; v < n; ++v) {
      y[static_cast<std::size_t>(v)] = (base[static_cast<std::size_t>(v % k)] + (v / k) * k) % n;
    }
    for (int v = 0; v < n; ++v) {
      const int t = y[static_cast<std::size_t>(v)];
      if (t == v || t == (v + 1) % n) return false;
    }
    return true;
  };

  SearchResult result;
  result.stats.best_deficit = std::numeric_limits<std::uint64_t>::max();
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::uniform_int_distribution<int> shift(1, std::max(1, blocks - 1));
  for (int restart = 0; restart < spec.restarts && result.representatives.empty(); ++restart) {
    std::vector<int> base(static_cast<std::size_t>(k));
    bool ok = false;
    for (int tries = 0; tries < 10000 && !ok; ++tries) {
      for (int j = 0; j < k; ++j) base[static_cast<std::size_t>(j)] = j;
      std::shuffle(base.begin(), base.end(), rng);
      for (auto& x : base) x += k * static_cast<int>(rng() % static_cast<std::uint64_t>(blocks));
      ok = expand(base);
    }
    if (!ok) break;
    Score cur = score(y, n, spec.diameter_target, depth, queue);
    for (int step = 0; step < spec.steps_per_restart && cur.deficit != 0; ++step) {
      if (spec.max_nodes != 0 && result.stats.nodes >= spec.max_nodes) {
        result.complete = false;
        break;
      }
      ++result.stats.nodes;
      std::vector<int> next_base = base;
      const int i = pick(rng);
      if (blocks > 1 && rng() % 2 == 0) {
        next_base[static_cast<std::size_t>(i)] =
            (next_base[static_cast<std::size_t>(i)] + k * shift(rng)) % n;
      } else {
        const int j = pick(rng);
        if (i == j) continue;
        std::swap(next_base[static_cast<std::size_t>(i)], next_base[static_cast<std::size_t>(j)]);
      }
      if (!expand(next_base)) continue;
      const Score next = score(y, n, spec.diameter_target, depth, queue);
      if (next <= cur) {
        cur = next;
        base = std::move(next_base);
      }
    }
    result.stats.best_deficit = std::min(result.stats.best_deficit, cur.deficit);
    if (cur.deficit == 0) {
      expand(base);
      ++result.stats.leaves;
      result.representatives.emplace_back(y);
    }
    if (!result.complete) break;
  }
  result.stats.seconds = seconds_since(start);
  return result;
}

SearchResult search(const SearchSpec& spec) {
  return spec.mode == SearchMode::kRandom ? random_search(spec) : enumerate(spec);
}

std::uint64_t moore_bound(int d, int diameter) {
  if (d < 1 || diameter < 0) throw DomainError("moore_bound: d >= 1 and D >= 0 required");
  std::uint64_t total = 1;
  std::uint64_t layer = 1;
  for (int k = 0; k < diameter; ++k) {
    if (layer > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) {
      throw OverflowError("moore_bound: result exceeds 64 bits");
    }
    layer *= static_cast<std::uint64_t>(d);
    if (total > std::numeric_limits<std::uint64_t>::max() - layer) {
      throw OverflowError("moore_bound: result exceeds 64 bits");
    }
    total += layer;
  }
  return total;
}

std::uint64_t kautz_size(int d, int diameter) {
  if (d < 1 || diameter < 1) throw DomainError("kautz_size: d, D >= 1 required");
  std::uint64_t p = 1;
  for (int k = 1; k < diameter; ++k) {
    if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d + 1)) {
      throw OverflowError("kautz_size: result exceeds 64 bits");
    }
    p *= static_cast<std::uint64_t>(d);
  }
  return p * static_cast<std::uint64_t>(d + 1);
}

ClassSummary summarize(const Permutation& y) {
  const Digraph g = companion_digraph(y);
  return ClassSummary{y, automorphism_order(g), reciprocal_edge_count(g), y.cycle_type(),
                      diameter(g)};
}

}  // namespace dgdd
