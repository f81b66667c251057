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

#include "dgdd/builtins.hpp"

#include "dgdd/cdd.hpp"
#include "dgdd/covergroup.hpp"
#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

// Rows in element order 00 01 02 10 11 12, entries as element indices.
GroupoidTable z2z3_table(const std::vector<std::vector<int>>& rows) {
  GroupoidTable t;
  t.n = 6;
  t.identity = 0;
  t.gens = {3, 1};
  for (const auto& row : rows) t.table.insert(t.table.end(), row.begin(), row.end());
  return t;
}

}  // namespace

GroupoidTable example1_table() {
  return z2z3_table({
      {0, 1, 2, 3, 4, 5},
      {1, 2, 3, 5, 0, 1},
      {2, 3, 4, 1, 2, 3},
      {3, 4, 5, 0, 1, 2},
      {4, 5, 0, 2, 3, 4},
      {5, 0, 1, 4, 5, 0},
  });
}

GroupoidTable example2_table() {
  return z2z3_table({
      {0, 1, 2, 4, 5, 3},
      {1, 2, 0, 3, 4, 5},
      {2, 0, 1, 5, 3, 4},
      {3, 4, 5, 1, 2, 0},
      {4, 5, 3, 0, 1, 2},
      {5, 3, 4, 2, 0, 1},
  });
}

std::string z2z3_name(int k) {
  return std::to_string(k / 3) + std::to_string(k % 3);
}

Factorization alegre_factors() {
  return Factorization{{
      Permutation::rotation(25),
      parse_cycles("(0,5,10,15,20)(3,23,18,13,8)"
                   "(1,17,24,21,12,19,16,7,14,11,2,9,6,22,4)",
                   25),
  }};
}

Digraph alegre() { return from_factors(alegre_factors()); }

Digraph kautz(int d, int diameter) {
  if (d < 1 || diameter < 1) throw DomainError("kautz: need d >= 1 and D >= 1");
  Digraph g = complete_digraph(d + 1);
  for (int k = 1; k < diameter; ++k) g = line_digraph(g);
  return g;
}

Digraph k3() { return complete_digraph(3); }

Factorization example10_2_factors() {
  return Factorization{{parse_cycles("(0,4,2,3,1,5)", 6),
                        parse_cycles("(0,2,1)(4,5,3)", 6)}};
}

Factorization example10_3_factors() {
  return Factorization{{parse_cycles("(0,1,2,3,4,5)", 6),
                        parse_cycles("(0,2,5,3,1,4)", 6)}};
}

std::vector<Permutation> example11_companions() {
  return {
      parse_cycles("(0,6)(1,4,9,8,5)(2,11,7,10,3)", 12),
      parse_cycles("(0,4,11,9,7,3,1,6,10,5,2,8)", 12),
      parse_cycles("(0,10,4,8,3,11,6,2,9,1,7,5)", 12),
  };
}

std::vector<std::string> builtin_names() {
  return {"example1", "example2",    "alegre",      "example5",
          "kautz",    "k3",          "cycle",       "hs",
          "example8", "example10_2", "example10_3", "example11"};
}

Builtin builtin(const std::string& name, const BuiltinOptions& o) {
  auto from = [&name](Factorization f) {
    Digraph g = from_factors(f);
    return Builtin{name, std::move(g), std::move(f), std::nullopt};
  };
  if (name == "example1" || name == "example2") {
    const GroupoidTable t = name == "example1" ? example1_table() : example2_table();
    PartialGroupoid p = t.generator_columns();
    Digraph g = cayley_digraph(p);
    Factorization f;
    for (int s = 0; s < p.degree(); ++s) {
      std::vector<int> col;
      for (int x = 0; x < p.n; ++x) col.push_back(p.product(x, s));
      f.factors.emplace_back(std::move(col));
    }
    return Builtin{name, std::move(g), std::move(f), std::move(p)};
  }
  if (name == "alegre") return from(alegre_factors());
  if (name == "example5") {
    const CddDigraph c = cdd_build(example5_params());
    return from(Factorization{{c.z, c.y}});
  }
  if (name == "kautz") {
    Digraph g = kautz(o.d, o.diameter);
    return Builtin{name, std::move(g), std::nullopt, std::nullopt};
  }
  if (name == "k3") return Builtin{name, k3(), std::nullopt, std::nullopt};
  if (name == "cycle") return from(Factorization{{Permutation::rotation(o.n)}});
  if (name == "hs") {
    HoffmanSingleton hs = hoffman_singleton(o.p);
    return Builtin{name, std::move(hs.digraph), std::nullopt, std::move(hs.groupoid)};
  }
  if (name == "example8") {
    const Example8 e = example8_construct();
    return from(Factorization{{e.rho, e.sigma}});
  }
  if (name == "example10_2") return from(example10_2_factors());
  if (name == "example10_3") return from(example10_3_factors());
  if (name == "example11") {
    const auto ys = example11_companions();
    if (o.which < 1 || o.which > 3) throw DomainError("example11: which must be 1, 2 or 3");
    return from(Factorization{{Permutation::rotation(12), ys[static_cast<std::size_t>(o.which - 1)]}});
  }
  throw DomainError("unknown builtin \"" + name + "\"");
}

}  // namespace dgdd
