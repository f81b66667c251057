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

// Search for dense degree-2 digraphs of bounded diameter. Every candidate
// is anchored on the Hamiltonian cycle Z(v) = v + 1 and described by its
// companion 1-factor Y.

#include <cstdint>
#include <string>
#include <vector>

#include "dgdd/digraph.hpp"

namespace dgdd {

enum class SearchMode { kExhaustive, kPruned, kRandom };

SearchMode parse_search_mode(const std::string& text);
std::string to_string(SearchMode mode);

struct SearchSpec {
  int n = 6;
  int diameter_target = 2;
  SearchMode mode = SearchMode::kPruned;
  std::uint64_t seed = 1;
  bool dedup = true;
  // Node budget (DFS nodes, or hill-climbing steps in random mode); 0 = none.
  std::uint64_t max_nodes = 0;
  int threads = 1;
  // Random mode only.
  int restarts = 200;
  int steps_per_restart = 20000;
  // When nonzero (dividing n), restrict to Y commuting with v -> v + step.
  int rotation_step = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::uint64_t leaves = 0;  // complete companions meeting the target
  double seconds = 0.0;
  // Random mode: lowest deficit reached (0 means the target was met).
  std::uint64_t best_deficit = 0;
};

struct SearchResult {
  // Companions Y, one per isomorphism class when dedup is on, in
  // lexicographic order.
  std::vector<Permutation> representatives;
  SearchStats stats;
  bool complete = true;
};

// Digraph with factors Z = n-cycle and Y.
Digraph companion_digraph(const Permutation& y);

// DFS over Y. kExhaustive checks diameter only at complete assignments;
// kPruned also cuts partial assignments whose reachability bound is below n.
SearchResult enumerate(const SearchSpec& spec);

// Seeded restarts with hill climbing on the number of (source, target)
// pairs farther apart than the target diameter, ties broken by total distance.
SearchResult random_search(const SearchSpec& spec);

// Dispatch on spec.mode.
SearchResult search(const SearchSpec& spec);

// 1 + d + ... + d^D. Throws OverflowError beyond 64 bits.
std::uint64_t moore_bound(int d, int diameter);
// d^D + d^(D-1).
std::uint64_t kautz_size(int d, int diameter);

struct ClassSummary {
  Permutation y;
  std::uint64_t aut_order = 0;
  int reciprocal_edges = 0;
  std::vector<int> cycle_type;
  int diameter = 0;
};
ClassSummary summarize(const Permutation& y);

}  // namespace dgdd
