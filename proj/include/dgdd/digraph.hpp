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

#pragma once

// d-regular loopless multidigraphs stored as d ordered out-ports per vertex.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dgdd/perm.hpp"

namespace dgdd {

class Digraph {
 public:
  // `ports` is row-major: ports[v * d + s] is the s-th out-neighbor of v.
  // Throws DomainError unless every vertex has out- and in-degree d and no
  // port is a loop. Strong connectivity is computed here and cached.
  Digraph(int n, int d, std::vector<int> ports);
  static Digraph from_adjacency(const std::vector<std::vector<int>>& out);

  int order() const { return n_; }
  int degree() const { return d_; }
  int out(int v, int s) const { return ports_[static_cast<std::size_t>(v * d_ + s)]; }
  std::span<const int> out(int v) const {
    return std::span<const int>(ports_).subspan(static_cast<std::size_t>(v * d_),
                                                static_cast<std::size_t>(d_));
  }
  std::span<const int> ports() const { return ports_; }
  bool strongly_connected() const { return strongly_connected_; }

  // Number of parallel edges u -> v.
  int multiplicity(int u, int v) const;
  // Sorted (u, v) list with repeats for parallel edges.
  std::vector<std::pair<int, int>> edge_multiset() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<int> ports_;
  bool strongly_connected_ = false;
};

// An ordered list of d pairwise edge-disjoint derangements covering a
// digraph's edges.
struct Factorization {
  std::vector<Permutation> factors;

  int degree() const { return static_cast<int>(factors.size()); }
  int order() const { return factors.empty() ? 0 : factors.front().size(); }
};

// ports[v] = (F_1(v), ..., F_d(v)). Throws DomainError on a size mismatch
// or a factor with a fixed point.
Digraph from_factors(std::span<const Permutation> factors);
inline Digraph from_factors(const Factorization& f) { return from_factors(f.factors); }

// True when the factors are derangements whose union is G's edge multiset.
bool is_factorization_of(const Factorization& f, const Digraph& g);

// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> distances_from(const Digraph& g, int source);
// Exact diameter. Throws NotStronglyConnected naming an unreachable pair.
int diameter(const Digraph& g, int threads = 1);
// Largest distance from `source`, or -1 if some vertex is unreachable.
int eccentricity(const Digraph& g, int source);

Digraph line_digraph(const Digraph& g);
// Relabel vertex v as p(v).
Digraph relabel(const Digraph& g, const Permutation& p);
Digraph reverse(const Digraph& g);

Digraph directed_cycle(int n);
Digraph complete_digraph(int n);

int reciprocal_edge_count(const Digraph& g);
bool is_symmetric(const Digraph& g);
// Girth of the underlying simple undirected graph of a symmetric digraph
// (0 when acyclic).
int undirected_girth(const Digraph& g);
// True when p maps the edge multiset of g onto itself.
bool is_automorphism(const Digraph& g, const Permutation& p);

// Decomposes G into d 1-factors by peeling perfect matchings from the
// bipartite double cover (u' -> v'' per edge u -> v).
Factorization petersen_factorize(const Digraph& g);
// Every factorization of a degree-2 digraph, each listed once as an
// unordered pair (first factor holds port 0 at vertex 0). Exhaustive over
// port choices, so n must stay small (n <= 24).
std::vector<Factorization> all_degree2_factorizations(const Digraph& g);

// Vertex bijection f with f(edges of g) = edges of h (as multisets).
std::optional<Permutation> isomorphic(const Digraph& g, const Digraph& h);
// Same, restricted to maps sending g-vertex `from` to h-vertex `to`.
std::optional<Permutation> isomorphic_pinned(const Digraph& g, const Digraph& h,
                                             int from, int to);
// Full automorphism group sorted lexicographically (identity first).
// Stops after `limit` elements.
std::vector<Permutation> automorphisms(const Digraph& g,
                                       std::size_t limit = 1'000'000);
std::uint64_t automorphism_order(const Digraph& g);

}  // namespace dgdd
