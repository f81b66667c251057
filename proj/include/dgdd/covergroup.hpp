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

// Covering groups: the permutation group generated by a digraph's 1-factors,
// enumerated breadth-first so that word length equals directed path length.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dgdd/claim_status.hpp"
#include "dgdd/digraph.hpp"
#include "dgdd/semidirect.hpp"

namespace dgdd {

struct GroupBfsOptions {
  std::uint64_t max_elements = 5'000'000;
  bool keep_extremal = false;
  // Retain every element (sorted) in the result.
  bool keep_elements = false;
  // Also multiply by generator inverses (undirected Cayley distance).
  bool with_inverses = false;
};

struct GroupBfsResult {
  std::uint64_t order = 0;  // lower bound when !complete
  int diameter = 0;
  std::vector<std::uint64_t> histogram;  // elements at each word length
  std::vector<Permutation> extremal;     // elements at distance `diameter`
  std::vector<Permutation> elements;     // sorted, if requested
  bool complete = true;

  bool contains(const Permutation& p) const;  // needs keep_elements
};

// BFS from the identity multiplying on the right by each generator:
// g -> compose(g, s). Permutations must have size <= 255.
GroupBfsResult group_bfs(const std::vector<Permutation>& gens,
                         const GroupBfsOptions& options = {});

struct CoveringGroup {
  GroupBfsResult bfs;
  // Set when a shape (a, b) was given and every factor is semi-direct for it:
  // whether the order divides a! (b!)^a.
  std::optional<bool> divides_universal_order;
};

CoveringGroup covering_group(const Factorization& f, const GroupBfsOptions& options = {},
                             std::optional<std::pair<int, int>> shape = std::nullopt);
// Uses petersen_factorize(g).
CoveringGroup covering_group(const Digraph& g, const GroupBfsOptions& options = {},
                             std::optional<std::pair<int, int>> shape = std::nullopt);

// |U_ab| = a! (b!)^a. Throws OverflowError beyond 64 bits.
std::uint64_t universal_order(int a, int b);

// Two semi-direct permutations generating all of U_ab (a, b >= 2).
std::pair<SemiDirectPerm, SemiDirectPerm> theorem12_generators(int a, int b);

// Cayley coset digraph (group, H, S); products are compose(g, h).
struct CosetDigraphSpec {
  std::vector<Permutation> group;
  std::vector<Permutation> subgroup;
  std::vector<Permutation> connection;
};

// Throws DomainError naming the violated condition and a witness:
// (i) S and H disjoint and S u H generates the group, (ii) HSH in SH,
// (iii) S are distinct coset representatives.
void validate(const CosetDigraphSpec& spec);

struct CosetDigraph {
  Digraph digraph;
  std::vector<int> vertex_of;  // group element index -> coset vertex
  std::vector<int> representative;  // coset vertex -> first group element index
};
// Vertices are the left cosets gH in order of first appearance in `group`;
// edges gH -> gsH.
CosetDigraph coset_digraph(const CosetDigraphSpec& spec);
// H acts transitively on SH: for all s, t there is h with sH = htH.
bool is_irreducible(const CosetDigraphSpec& spec);
// For H = {e}: F_s(g) = g s, indexed by coset_digraph's vertices.
Factorization group_factorization(const CosetDigraphSpec& spec);

// Named permutations of the Alegre covering-group relations.
struct Example7 {
  Permutation rho;
  Permutation sigma;
  std::vector<Permutation> c;  // C_i = (i, 5+i, ..., 20+i)
  std::vector<Permutation> u;  // U_i = (5i+2, 5i-2)
  std::vector<Permutation> v;  // V_i = (5i, 5i+6)
  Permutation t;               // (a_0, ..., a_14)
  Permutation theta;           // (b_0, ..., b_24)
  Permutation pi;              // (0, 2, 4) on Z_5
};
Example7 example7_elements();

struct RelationCheck {
  int id = 0;
  std::string statement;
  ClaimStatus status = ClaimStatus::kFail;
  std::string details;
};
std::vector<RelationCheck> verify_example7_relations();

// p = 7 analogue of the Alegre construction.
struct Example8 {
  Permutation rho;
  Permutation sigma;
  Digraph digraph;
};
Example8 example8_construct();
Permutation example8_printed_sigma();

// Random search for two disjoint semi-direct derangements generating U_ab.
// Reported, never asserted.
struct DisjointGeneratorProbe {
  bool found = false;
  int attempts = 0;
  std::optional<std::pair<SemiDirectPerm, SemiDirectPerm>> pair;
};
DisjointGeneratorProbe probe_disjoint_generators(int a, int b, std::uint64_t seed,
                                                 int max_attempts,
                                                 std::uint64_t max_elements = 2'000'000);

}  // namespace dgdd
