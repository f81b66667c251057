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

#include "dgdd/groupoid.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "dgdd/errors.hpp"

namespace dgdd {

PartialGroupoid GroupoidTable::generator_columns() const {
  PartialGroupoid p;
  p.n = n;
  p.gens = gens;
  if (identity >= 0) p.identity = identity;
  const int d = static_cast<int>(gens.size());
  p.cols.resize(static_cast<std::size_t>(n * d));
  for (int x = 0; x < n; ++x) {
    for (int s = 0; s < d; ++s) p.cols[static_cast<std::size_t>(x * d + s)] = product(x, gens[s]);
  }
  return p;
}

PropertyReport check_properties(const PartialGroupoid& p) {
  PropertyReport r;
  const int d = p.degree();
  if (!p.identity) {
    r.p1 = false;
  } else {
    for (int s = 0; s < d; ++s) {
      if (p.product(*p.identity, s) != p.gens[s]) {
        r.p1 = false;
        r.p1_generator = s;
        break;
      }
    }
  }
  for (int s = 0; s < d && r.p2; ++s) {
    for (int x = 0; x < p.n; ++x) {
      if (p.product(x, s) == x) {
        r.p2 = false;
        r.p2_element = x;
        r.p2_generator = s;
        break;
      }
    }
  }
  for (int s = 0; s < d && r.p3; ++s) {
    std::vector<int> preimage(static_cast<std::size_t>(p.n), -1);
    for (int x = 0; x < p.n; ++x) {
      const int y = p.product(x, s);
      if (y < 0 || y >= p.n) {
        throw DomainError("groupoid entry " + std::to_string(y) + " out of range");
      }
      if (preimage[y] >= 0) {
        r.p3 = false;
        r.p3_first = preimage[y];
        r.p3_second = x;
        r.p3_generator = s;
        break;
      }
      preimage[y] = x;
    }
  }
  return r;
}

Digraph cayley_digraph(const PartialGroupoid& p, bool require_p3) {
  const PropertyReport r = check_properties(p);
  if (!r.p2) {
    throw DomainError("P2 fails: " + std::to_string(r.p2_element) + " * generator " +
                      std::to_string(r.p2_generator) + " is itself");
  }
  if (require_p3 && !r.p3) {
    throw DomainError("P3 fails: " + std::to_string(r.p3_first) + " and " +
                      std::to_string(r.p3_second) + " have the same product with generator " +
                      std::to_string(r.p3_generator));
  }
  return Digraph(p.n, p.degree(), p.cols);
}

int apply_word(const Factorization& f, int v, const Word& w) {
  for (int s : w) {
    if (s < 0 || s >= f.degree()) throw DomainError("word index out of range");
    v = f.factors[static_cast<std::size_t>(s)](v);
  }
  return v;
}

TreeLabeling treelike_words(const Factorization& f, int root) {
  const int n = f.order();
  TreeLabeling t;
  t.root = root;
  t.words.assign(static_cast<std::size_t>(n), Word{});
  t.label.assign(static_cast<std::size_t>(n), -1);
  t.vertex.reserve(static_cast<std::size_t>(n));
  t.label[root] = 0;
  t.vertex.push_back(root);
  for (std::size_t head = 0; head < t.vertex.size(); ++head) {
    const int u = t.vertex[head];
    for (int s = 0; s < f.degree(); ++s) {
      const int w = f.factors[static_cast<std::size_t>(s)](u);
      if (t.label[w] >= 0) continue;
      t.label[w] = static_cast<int>(t.vertex.size());
      t.vertex.push_back(w);
      t.words[w] = t.words[u];
      t.words[w].push_back(s);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (t.label[v] < 0) throw NotStronglyConnected(root, v);
  }
  return t;
}

PartialGroupoid partial_groupoid(const Factorization& f, int root) {
  const TreeLabeling t = treelike_words(f, root);
  const int n = f.order();
  const int d = f.degree();
  PartialGroupoid p;
  p.n = n;
  p.identity = 0;
  p.cols.resize(static_cast<std::size_t>(n * d));
  for (int s = 0; s < d; ++s) {
    const Permutation& factor = f.factors[static_cast<std::size_t>(s)];
    p.gens.push_back(t.label[factor(root)]);
    for (int x = 0; x < n; ++x) {
      p.cols[static_cast<std::size_t>(x * d + s)] = t.label[factor(t.vertex[x])];
    }
  }
  return p;
}

GroupoidTable canonical_extension(const Factorization& f, int root) {
  const TreeLabeling t = treelike_words(f, root);
  const int n = f.order();
  GroupoidTable g;
  g.n = n;
  g.identity = 0;
  g.table.resize(static_cast<std::size_t>(n) * n);
  for (int nu = 0; nu < n; ++nu) {
    const int v = t.vertex[nu];
    for (int mu = 0; mu < n; ++mu) {
      g.table[static_cast<std::size_t>(nu) * n + mu] =
          t.label[apply_word(f, v, t.words[t.vertex[mu]])];
    }
  }
  for (int s = 0; s < f.degree(); ++s) {
    g.gens.push_back(t.label[f.factors[static_cast<std::size_t>(s)](root)]);
  }
  return g;
}

bool has_left_cancellation(const GroupoidTable& t) {
  std::vector<int> stamp(static_cast<std::size_t>(t.n), -1);
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) {
      const int z = t.product(x, y);
      if (stamp[z] == x) return false;
      stamp[z] = x;
    }
  }
  return true;
}

bool has_left_cancellation_on_generators(const GroupoidTable& t) {
  for (int x = 0; x < t.n; ++x) {
    std::vector<int> row;
    for (int s : t.gens) row.push_back(t.product(x, s));
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) return false;
  }
  return true;
}

bool is_spanning_factorization(const Factorization& f, const std::vector<Word>& words) {
  const int n = f.order();
  if (static_cast<int>(words.size()) != n) {
    throw DomainError("is_spanning_factorization: need exactly n words");
  }
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    for (const Word& w : words) {
      const int end = apply_word(f, v, w);
      if (stamp[end] == v) return false;
      stamp[end] = v;
    }
  }
  return true;
}

bool is_vertex_transitive(const Digraph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (!isomorphic_pinned(g, g, 0, v)) return false;
  }
  return true;
}

namespace {

std::optional<SpanningCertificate> try_factorization(const Digraph& g,
                                                     const Factorization& f) {
  if (!g.strongly_connected()) return std::nullopt;
  for (int root = 0; root < g.order(); ++root) {
    if (has_left_cancellation(canonical_extension(f, root))) {
      return SpanningCertificate{f, root, treelike_words(f, root)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SpanningCertificate> find_spanning_certificate(const Digraph& g) {
  if (!g.strongly_connected()) return std::nullopt;
  std::vector<Factorization> candidates;
  if (g.degree() == 2 && g.order() <= 24) {
    for (const auto& f : all_degree2_factorizations(g)) {
      candidates.push_back(f);
      candidates.push_back(Factorization{{f.factors[1], f.factors[0]}});
    }
  } else {
    Factorization f = petersen_factorize(g);
    if (f.degree() <= 4) {
      std::vector<int> order(static_cast<std::size_t>(f.degree()));
      std::iota(order.begin(), order.end(), 0);
      do {
        Factorization permuted;
        for (int s : order) permuted.factors.push_back(f.factors[static_cast<std::size_t>(s)]);
        candidates.push_back(std::move(permuted));
      } while (std::next_permutation(order.begin(), order.end()));
    } else {
      candidates.push_back(std::move(f));
    }
  }
  for (const auto& f : candidates) {
    if (auto cert = try_factorization(g, f)) return cert;
  }
  return std::nullopt;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

HoffmanSingleton hoffman_singleton(int p) {
  if (!is_prime(p) || p == 2) {
    throw DomainError("hoffman_singleton: p = " + std::to_string(p) +
                      " is not an odd prime");
  }
  const int n = 2 * p * p;
  auto index = [p](int a, int b, int c) { return a * p * p + b * p + c; };
  auto mod = [](long long x, int m) { return static_cast<int>(((x % m) + m) % m); };
  std::vector<std::array<int, 3>> gens{{0, 0, 1}, {0, 0, p - 1}};
  for (int y = 0; y < p; ++y) gens.push_back({1, y, 0});
  PartialGroupoid g;
  g.n = n;
  g.identity = 0;
  const int d = static_cast<int>(gens.size());
  for (const auto& s : gens) g.gens.push_back(index(s[0], s[1], s[2]));
  g.cols.resize(static_cast<std::size_t>(n * d));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        for (int s = 0; s < d; ++s) {
          const auto [x, y, z] = gens[static_cast<std::size_t>(s)];
          // a, x are 0/1 integers: (-1)^a and 2^a are taken literally.
          const long long sign = a == 0 ? 1 : -1;
          const long long two_a = a == 0 ? 1 : 2;
          const int na = (a + x) % 2;
          const int nb = mod(static_cast<long long>(b) - static_cast<long long>(b) * x + y, p);
          const int nc = mod(c + sign * b * y + two_a * z, p);
          g.cols[static_cast<std::size_t>(index(a, b, c) * d + s)] = index(na, nb, nc);
        }
      }
    }
  }
  // Columns of the (1, y, 0) generators are not bijections, but the union of
  // all columns is still a regular digraph.
  Digraph digraph = cayley_digraph(g, /*require_p3=*/false);
  return HoffmanSingleton{std::move(g), std::move(digraph)};
}

}  // namespace dgdd
