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

// Partial groupoid tables (generator columns), their Cayley digraphs, the
// BFS-tree canonical extension, and spanning-factorization / vertex
// transitivity checks.

#include <optional>
#include <vector>

#include "dgdd/digraph.hpp"

namespace dgdd {

// A word is a sequence of factor (generator) indices.
using Word = std::vector<int>;

// n x d table of generator columns: cols[x * d + s] = x * gens[s].
struct PartialGroupoid {
  int n = 0;
  std::vector<int> gens;
  std::vector<int> cols;
  std::optional<int> identity;

  int degree() const { return static_cast<int>(gens.size()); }
  int product(int x, int s) const {
    return cols[static_cast<std::size_t>(x * degree() + s)];
  }
};

// Full n x n product table: table[x * n + y] = x * y.
struct GroupoidTable {
  int n = 0;
  std::vector<int> table;
  int identity = 0;  // -1 when the table has no identity
  std::vector<int> gens;

  int product(int x, int y) const {
    return table[static_cast<std::size_t>(x * n + y)];
  }
  PartialGroupoid generator_columns() const;
};

struct PropertyReport {
  bool p1 = true;  // identity row fixes generators; false when no identity
  bool p2 = true;  // x not in xS
  bool p3 = true;  // every generator column is a permutation
  // Witnesses for the first failure found, -1 when unused.
  int p1_generator = -1;
  int p2_element = -1;
  int p2_generator = -1;
  int p3_first = -1;   // p3_first * s == p3_second * s
  int p3_second = -1;
  int p3_generator = -1;
};

PropertyReport check_properties(const PartialGroupoid& p);

// Port s of u is u * gens[s]. Throws DomainError when P2 or P3 fails
// (unless `require_p3` is false; the digraph must still be regular).
// Connectivity is reported by Digraph::strongly_connected().
Digraph cayley_digraph(const PartialGroupoid& p, bool require_p3 = true);

// Follows factor w[0], then w[1], ... from v (left-to-right path order).
int apply_word(const Factorization& f, int v, const Word& w);

// BFS spanning tree from `root`, children discovered in factor order.
// Element label k is the k-th vertex in BFS order (label 0 = root, the empty
// word); words[v] is the tree word of vertex v.
struct TreeLabeling {
  int root = 0;
  std::vector<Word> words;    // by vertex
  std::vector<int> vertex;    // by label
  std::vector<int> label;     // by vertex
};

// Throws NotStronglyConnected if some vertex is unreachable from root.
TreeLabeling treelike_words(const Factorization& f, int root);

// Generator columns of the groupoid whose elements are the tree labels:
// label(x) * s = label(F_s(vertex(x))), gens[s] = label(F_s(root)).
PartialGroupoid partial_groupoid(const Factorization& f, int root);

// table[nu][mu] = label of the endpoint of word(mu) applied at vertex(nu).
GroupoidTable canonical_extension(const Factorization& f, int root);

// Every row of the full table is injective: nu*mu = nu*mu' only if mu = mu'.
// For a canonical extension this is exactly "the tree words form a spanning
// factorization".
bool has_left_cancellation(const GroupoidTable& t);
// P4 restricted to the generator columns: within each row, the entries at
// generator columns are pairwise distinct.
bool has_left_cancellation_on_generators(const GroupoidTable& t);

bool is_spanning_factorization(const Factorization& f, const std::vector<Word>& words);

// Brute-force oracle: for every v some automorphism maps 0 to v.
bool is_vertex_transitive(const Digraph& g);

struct SpanningCertificate {
  Factorization factors;
  int root = 0;
  TreeLabeling labeling;
};

// Searches (factorization, root) pairs for a canonical extension with full
// left cancellation. Degree 2 digraphs with n <= 24 are searched over every
// factorization and both factor orders; otherwise only the Petersen
// factorization (in every factor order when d <= 4) is tried.
std::optional<SpanningCertificate> find_spanning_certificate(const Digraph& g);

// Groupoid on Z_2 x Z_p x Z_p with
//   (a,b,c) * (x,y,z) = (a+x, b - bx + y, c + (-1)^a by + 2^a z)
// and generators (0,0,1), (0,0,-1), (1,y,0) for y in Z_p. Element (a,b,c)
// has index a*p*p + b*p + c. p = 5 gives the Hoffman-Singleton graph.
struct HoffmanSingleton {
  PartialGroupoid groupoid;
  Digraph digraph;
};
HoffmanSingleton hoffman_singleton(int p);

}  // namespace dgdd
