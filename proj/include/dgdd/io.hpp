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

// Plain-text formats. Blank lines and text after '#' are ignored.
//
//   digraph:   "n d", then n rows of d out-neighbours
//   factors:   "n d", then d permutations, each in cycle notation or "p: images"
//   groupoid:  "n d e" (e = -1 for no identity), a line of d generator
//              elements, then n rows of n products
//   cdd:       "a b", "pi=<cycles>", "t=<b-offsets, comma or space separated>"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "dgdd/cdd.hpp"
#include "dgdd/digraph.hpp"
#include "dgdd/groupoid.hpp"

namespace dgdd {

Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& g);

Factorization read_factorization(std::istream& in);
void write_factorization(std::ostream& out, const Factorization& f);

GroupoidTable read_groupoid(std::istream& in);
void write_groupoid(std::ostream& out, const GroupoidTable& t);

CddParams read_cdd_params(std::istream& in);
void write_cdd_params(std::ostream& out, const CddParams& p);

// Graphviz; edges are labelled with their port when `ports` is set.
void write_dot(std::ostream& out, const Digraph& g, bool ports = true);

// Either a digraph file or a factor file, told apart by the first data row.
struct DigraphInput {
  Digraph digraph;
  std::optional<Factorization> factors;  // set for factor files
};
DigraphInput read_digraph_input(std::istream& in);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace dgdd
