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

#include "dgdd/builtins.hpp"
#include "dgdd/covergroup.hpp"
#include "dgdd/errors.hpp"
#include "oracles.hpp"

namespace dgdd {
namespace {

TEST(GroupBfs, CyclicGroup) {
  const GroupBfsResult r = group_bfs({Permutation::rotation(7)});
  EXPECT_EQ(r.order, 7u);
  EXPECT_EQ(r.diameter, 6);
  EXPECT_EQ(r.histogram, std::vector<std::uint64_t>(7, 1));
  EXPECT_TRUE(r.complete);
}

TEST(GroupBfs, MatchesNaiveClosure) {
  oracle::Rng rng(41);
  for (int k = 0; k < 60; ++k) {
    const int n = oracle::uniform(rng, 2, 7);
    std::vector<Permutation> gens;
    for (int s = 0; s < oracle::uniform(rng, 1, 3); ++s) gens.push_back(oracle::random_perm(n, rng));
    GroupBfsOptions opt;
    opt.keep_elements = true;
    const GroupBfsResult r = group_bfs(gens, opt);
    const oracle::Closure c = oracle::naive_closure(gens);
    EXPECT_EQ(r.order, c.elements.size());
    EXPECT_EQ(r.histogram, c.histogram);
    for (const auto& p : r.elements) EXPECT_TRUE(c.elements.count(oracle::images_of(p)));
  }
}

TEST(GroupBfs, IndependentOfGeneratorOrder) {
  const Factorization f = alegre_factors();
  const GroupBfsResult a = group_bfs({f.factors[0], f.factors[1]});
  const GroupBfsResult b = group_bfs({f.factors[1], f.factors[0]});
  EXPECT_EQ(a.order, b.order);
  EXPECT_EQ(a.histogram, b.histogram);
}

TEST(GroupBfs, CapFlagsIncomplete) {
  GroupBfsOptions opt;
  opt.max_elements = 100;
  const GroupBfsResult r = group_bfs(alegre_factors().factors, opt);
  EXPECT_FALSE(r.complete);
  EXPECT_GT(r.order, 100u);
  opt.max_elements = 7;
  EXPECT_TRUE(group_bfs({Permutation::rotation(7)}, opt).complete);
}

TEST(GroupBfs, ExampleEightExceedsASmallCap) {
  GroupBfsOptions opt;
  opt.max_elements = 200'000;
  const Example8 e = example8_construct();
  const CoveringGroup cg = covering_group(Factorization{{e.rho, e.sigma}}, opt);
  EXPECT_FALSE(cg.bfs.complete);
}

TEST(GroupBfs, InversesShortenDistances) {
  GroupBfsOptions opt;
  opt.with_inverses = true;
  const GroupBfsResult r = group_bfs({Permutation::rotation(7)}, opt);
  EXPECT_EQ(r.order, 7u);
  EXPECT_EQ(r.diameter, 3);
}

TEST(GroupBfs, RejectsMismatchedSizes) {
  EXPECT_THROW(group_bfs({Permutation::rotation(3), Permutation::rotation(4)}), DomainError);
  EXPECT_THROW(group_bfs({}), DomainError);
}

TEST(CoveringGroup, AlegreGroup) {
  GroupBfsOptions opt;
  opt.keep_extremal = true;
  opt.keep_elements = true;
  const CoveringGroup cg = covering_group(alegre_factors(), opt, std::pair{5, 5});
  EXPECT_EQ(cg.bfs.order, 187500u);
  EXPECT_EQ(cg.bfs.order, 60u * 5 * 5 * 5 * 5 * 5);
  EXPECT_EQ(cg.bfs.diameter, 23);
  EXPECT_EQ(cg.bfs.histogram.back(), 11u);
  EXPECT_EQ(cg.bfs.extremal.size(), 11u);
  ASSERT_TRUE(cg.divides_universal_order.has_value());
  EXPECT_TRUE(*cg.divides_universal_order);
  for (const auto& c : example7_elements().c) EXPECT_TRUE(cg.bfs.contains(c));
  for (const auto& p : cg.bfs.elements) EXPECT_TRUE(is_semi_direct(p, 5, 5));
}

TEST(CoveringGroup, ExampleTenThree) {
  const CoveringGroup cg = covering_group(from_factors(example10_3_factors()));
  EXPECT_EQ(cg.bfs.order, 120u);
  EXPECT_EQ(cg.bfs.diameter, 10);
  // 120 divides neither 72 nor 48.
  EXPECT_NE(universal_order(2, 3) % 120, 0u);
  EXPECT_NE(universal_order(3, 2) % 120, 0u);
}

TEST(CoveringGroup, KautzAsGcdDividesUniversalOrder) {
  const Digraph k = kautz(2, 2);
  for (const auto& f : all_degree2_factorizations(k)) {
    for (auto [a, b] : {std::pair{2, 3}, std::pair{3, 2}}) {
      const CoveringGroup cg = covering_group(f, {}, std::pair{a, b});
      if (cg.divides_universal_order) EXPECT_TRUE(*cg.divides_universal_order);
    }
  }
}

TEST(CoveringGroup, ExampleNine) {
  const Permutation a = parse_cycles("(0,3,1,4,2,5)", 9);
  const Permutation b = parse_cycles("(0,3,6,1,4,7)(2,5,8)", 9);
  GroupBfsOptions opt;
  opt.keep_elements = true;
  const GroupBfsResult r = group_bfs({a, b}, opt);
  EXPECT_EQ(r.order, 1296u);
  EXPECT_EQ(r.diameter, 14);
  const GroupBfsResult alt = group_bfs(
      {parse_cycles("(0,3)(1,4)(2,5)(6,7,8)", 9), parse_cycles("(0,7,1,6)(2,8)(3,4,5)", 9)}, opt);
  EXPECT_EQ(alt.elements, r.elements);
}

TEST(UniversalOrder, Values) {
  EXPECT_EQ(universal_order(2, 3), 72u);
  EXPECT_EQ(universal_order(3, 2), 48u);
  EXPECT_EQ(universal_order(3, 3), 1296u);
  EXPECT_EQ(universal_order(5, 5), std::uint64_t{2'985'984'000'000});
  EXPECT_THROW(universal_order(20, 20), OverflowError);
  EXPECT_THROW(universal_order(0, 2), DomainError);
}

TEST(Theorem12, PrintedThreeThreePair) {
  const auto [x, y] = theorem12_generators(3, 3);
  EXPECT_EQ(flatten(x), parse_cycles("(0,1)(3,4)(6,7)(2,5,8)", 9));
  EXPECT_EQ(flatten(y), parse_cycles("(0,7,8,3,1,2)(4,5,6)", 9));
}

TEST(Theorem12, GeneratesTheWholeWreathProduct) {
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4},
           {4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}, {7, 2}}) {
    ASSERT_LE(universal_order(a, b), 1'000'000u);
    const auto [x, y] = theorem12_generators(a, b);
    const GroupBfsResult r = group_bfs({flatten(x), flatten(y)});
    EXPECT_EQ(r.order, universal_order(a, b)) << a << "," << b;
  }
  EXPECT_THROW(theorem12_generators(1, 3), DomainError);
}

TEST(CosetDigraph, CyclicGroupGivesACycle) {
  std::vector<Permutation> group;
  for (int k = 0; k < 5; ++k) group.push_back(Permutation::rotation(5, k));
  const CosetDigraphSpec spec{group, {Permutation::identity(5)}, {Permutation::rotation(5)}};
  const CosetDigraph cd = coset_digraph(spec);
  EXPECT_TRUE(oracle::brute_isomorphic(cd.digraph, directed_cycle(5)));
  EXPECT_TRUE(is_irreducible(spec));
}

std::vector<Permutation> s3_elements() {
  GroupBfsOptions opt;
  opt.keep_elements = true;
  return group_bfs({parse_cycles("(0,1,2)", 3), parse_cycles("(0,1)", 3)}, opt).elements;
}

TEST(CosetDigraph, SymmetricGroupCayleyDigraph) {
  const CosetDigraphSpec spec{s3_elements(), {}, {parse_cycles("(0,1,2)", 3), parse_cycles("(0,1)", 3)}};
  const CosetDigraph cd = coset_digraph(spec);
  EXPECT_EQ(cd.digraph.order(), 6);
  EXPECT_EQ(oracle::brute_automorphism_count(cd.digraph), 6u);
  const Factorization f = group_factorization(spec);
  EXPECT_TRUE(is_factorization_of(f, cd.digraph));
}

TEST(CosetDigraph, NontrivialSubgroup) {
  // S_3 with H = <(0,1)> and S = {(1,2)}: cosets are the three points.
  const Permutation h = parse_cycles("(0,1)", 3);
  const CosetDigraphSpec spec{s3_elements(), {Permutation::identity(3), h},
                              {parse_cycles("(0,2)", 3), parse_cycles("(1,2)", 3)}};
  const CosetDigraph cd = coset_digraph(spec);
  EXPECT_EQ(cd.digraph.order(), 3);
  EXPECT_EQ(cd.digraph.degree(), 2);
  EXPECT_TRUE(is_irreducible(spec));
}

TEST(CosetDigraph, ConditionViolationsAreReported) {
  const auto g = s3_elements();
  const Permutation e = Permutation::identity(3);
  const Permutation h = parse_cycles("(0,1)", 3);
  auto message = [](const CosetDigraphSpec& s) {
    try {
      validate(s);
    } catch (const DomainError& err) {
      return std::string(err.what());
    }
    return std::string();
  };
  EXPECT_NE(message({g, {e, h}, {h}}).find("condition (i)"), std::string::npos);
  EXPECT_NE(message({g, {e}, {parse_cycles("(0,1,2)", 3)}}).find("condition (i)"), std::string::npos);
  EXPECT_NE(message({g, {e, h}, {parse_cycles("(0,2)", 3)}}).find("condition (ii)"),
            std::string::npos);
  const Permutation t = parse_cycles("(0,1)", 3);
  EXPECT_NE(message({g, {e}, {t, t, parse_cycles("(0,1,2)", 3)}}).find("condition (iii)"),
            std::string::npos);
}

TEST(Example7, RelationsHold) {
  const auto rel = verify_example7_relations();
  ASSERT_EQ(rel.size(), 9u);
  for (const auto& r : rel) {
    if (r.id == 7) {
      EXPECT_EQ(r.status, ClaimStatus::kFlaggedTypo);
      EXPECT_NE(r.details.find("matches"), std::string::npos);
    } else {
      EXPECT_EQ(r.status, ClaimStatus::kPass) << "relation " << r.id;
    }
  }
}

TEST(Example7, ThetaIsSigmaRhoSigmaInverse) {
  const Example7 e = example7_elements();
  EXPECT_EQ(compose(compose(e.sigma, e.rho), e.sigma.inverse()), e.theta);
  EXPECT_EQ(e.pi, Permutation({2, 1, 4, 3, 0}));
}

TEST(Example8, SigmaAndDiameter) {
  const Example8 e = example8_construct();
  EXPECT_EQ(e.sigma, example8_printed_sigma());
  EXPECT_EQ(diameter(e.digraph), 7);
  EXPECT_EQ(oracle::floyd_diameter(e.digraph), 7);
}

TEST(DisjointProbe, FindsPairsAtSmallSizes) {
  const DisjointGeneratorProbe probe = probe_disjoint_generators(3, 3, 1, 5000);
  ASSERT_TRUE(probe.found);
  const Permutation x = flatten(probe.pair->first);
  const Permutation y = flatten(probe.pair->second);
  EXPECT_TRUE(is_derangement(x) && is_derangement(y) && are_disjoint(x, y));
  EXPECT_EQ(group_bfs({x, y}).order, 1296u);
}

}  // namespace
}  // namespace dgdd
