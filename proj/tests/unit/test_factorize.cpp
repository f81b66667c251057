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

#include <gtest/gtest.h>

#include <numeric>

#include "dgdd/builtins.hpp"
#include "dgdd/digraph.hpp"
#include "oracles.hpp"

namespace dgdd {
namespace {

TEST(Petersen, FactorsAlegre) {
  const Digraph g = alegre();
  const Factorization f = petersen_factorize(g);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_TRUE(is_factorization_of(f, g));
}

TEST(Petersen, FactorsRandomRegularDigraphs) {
  oracle::Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const int n = oracle::uniform(rng, 2, 40);
    const int d = oracle::uniform(rng, 1, 4);
    const Digraph g = from_factors(oracle::random_factors(n, d, rng));
    const Factorization f = petersen_factorize(g);
    ASSERT_EQ(f.degree(), d);
    for (const auto& p : f.factors) EXPECT_TRUE(is_derangement(p));
    EXPECT_TRUE(is_factorization_of(f, g));
  }
}

TEST(Petersen, HandlesParallelEdges) {
  const Digraph g(2, 3, {1, 1, 1, 0, 0, 0});
  EXPECT_TRUE(is_factorization_of(petersen_factorize(g), g));
}

TEST(Factorization, RejectsWrongCovers) {
  const Digraph g = alegre();
  Factorization f = alegre_factors();
  EXPECT_TRUE(is_factorization_of(f, g));
  f.factors[1] = Permutation::rotation(25, 2);
  EXPECT_FALSE(is_factorization_of(f, g));
}

TEST(Factorization, EnumeratesDegreeTwoFactorizations) {
  // Example 10(3): two factorizations, swapped by an automorphism.
  const Digraph g = from_factors(example10_3_factors());
  const auto all = all_degree2_factorizations(g);
  EXPECT_EQ(all.size(), 2u);
  for (const auto& f : all) EXPECT_TRUE(is_factorization_of(f, g));
  EXPECT_EQ(all_degree2_factorizations(from_factors(example10_2_factors())).size(), 1u);
  EXPECT_EQ(all_degree2_factorizations(kautz(2, 2)).size(), 4u);
}

// The bipartite double cover of a 2-regular digraph is a union of even
// cycles, each with two perfect matchings. A doubled edge u -> v forms a
// 2-cycle whose two matchings give the same permutations, so only the c
// longer cycles contribute: 2^(c-1) unordered pairs, or 1 when c = 0.
std::size_t double_cover_count(const Digraph& g) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int doubled = 0;
  for (int u = 0; u < n; ++u) {
    doubled += g.out(u, 0) == g.out(u, 1);
    for (int v : g.out(u)) parent[static_cast<std::size_t>(find(u))] = find(n + v);
  }
  int components = 0;
  for (int x = 0; x < 2 * n; ++x) components += find(x) == x;
  const int c = components - doubled;
  return c == 0 ? 1 : std::size_t{1} << (c - 1);
}

TEST(Factorization, CountMatchesDoubleCoverCycles) {
  oracle::Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    const Digraph g = from_factors(oracle::random_factors(oracle::uniform(rng, 3, 12), 2, rng));
    EXPECT_EQ(all_degree2_factorizations(g).size(), double_cover_count(g)) << "case " << k;
  }
}

}  // namespace
}  // namespace dgdd
