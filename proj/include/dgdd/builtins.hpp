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

// Named digraphs, factorizations and groupoid tables used throughout the
// examples and the verification catalog.

#include <optional>
#include <string>
#include <vector>

#include "dgdd/digraph.hpp"
#include "dgdd/groupoid.hpp"

namespace dgdd {

// Groupoids on Z_2 x Z_3; element (x, y) has index 3x + y and prints as "xy".
// Generators are t = (1,0) and s = (0,1), in that order.
GroupoidTable example1_table();
// Stored verbatim; row 00 is not the identity, so P1 fails.
GroupoidTable example2_table();
std::string z2z3_name(int k);

// [k -> k+1 mod 25, the t-factor of the Alegre digraph].
Factorization alegre_factors();
Digraph alegre();

// (D-1)-fold line digraph of the complete digraph on d+1 vertices.
Digraph kautz(int d, int diameter);
Digraph k3();

// The two non-Kautz degree-2 diameter-2 digraphs on 6 vertices.
Factorization example10_2_factors();
Factorization example10_3_factors();
// Companions Y of Z = (k -> k+1 mod 12) for the three 12-vertex digraphs of
// degree 2 and diameter 3, in the order Kautz, L(G_2^2), L(example 10(3)).
std::vector<Permutation> example11_companions();

struct BuiltinOptions {
  int d = 2;
  int diameter = 2;
  int p = 5;
  int n = 6;
  int which = 1;
};

struct Builtin {
  std::string name;
  Digraph digraph;
  std::optional<Factorization> factors;
  std::optional<PartialGroupoid> groupoid;
};

// Names: example1, example2, alegre, example5, kautz, k3, cycle, hs,
// example8, example10_2, example10_3, example11 (which = 1..3).
// Throws DomainError for an unknown name.
Builtin builtin(const std::string& name, const BuiltinOptions& options = {});
std::vector<std::string> builtin_names();

}  // namespace dgdd
