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

// Randomised checks against the brute-force oracles in tests/support.
// Every property runs kCases generated inputs from a fixed seed.

#include <gtest/gtest.h>

#include <sstream>

#include "dgdd/cdd.hpp"
#include "dgdd/covergroup.hpp"
#include "dgdd/errors.hpp"
#include "dgdd/groupoid.hpp"
#include "dgdd/io.hpp"
#include "oracles.hpp"

namespace dgdd {
namespace {

using oracle::Rng;
using oracle::uniform;

constexpr int kCases = 1000;

template <class F>
void for_cases(std::uint64_t seed, F body, int cases = kCases) {
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    SCOPED_TRACE("case " + std::to_string(k));
    body(rng);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

// f carries the edge multiset of g onto that of h.
bool maps_edges(const Digraph& g, const Digraph& h, const Permutation& f) {
  const auto mg = oracle::adjacency_multiset(g);
  const auto mh = oracle::adjacency_multiset(h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (mg[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] !=
          mh[static_cast<std::size_t>(f(u))][static_cast<std::size_t>(f(v))])
        return false;
  return true;
}

Factorization random_connected(int n, int d, Rng& rng) {
  for (;;) {
    Factorization f{oracle::random_factors(n, d, rng)};
    if (oracle::floyd_diameter(from_factors(f)) >= 0) return f;
  }
}

CddParams random_cdd(Rng& rng) {
  for (;;) {
    const int a = uniform(rng, 2, 5);
    const int b = uniform(rng, 2, 6);
    std::vector<int> t;
    for (int j = 0; j < a; ++j) t.push_back(uniform(rng, 0, b - 1));
    try {
      return CddParams(a, b, oracle::random_perm(a, rng), t);
    } catch (const InvalidParams&) {
    }
  }
}

TEST(Property, PermutationGroupLaws) {
  for_cases(1, [](Rng& rng) {
    const int n = uniform(rng, 1, 12);
    const Permutation p = oracle::random_perm(n, rng);
    const Permutation q = oracle::random_perm(n, rng);
    const Permutation r = oracle::random_perm(n, rng);
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_EQ(oracle::images_of(compose(p, q)),
              oracle::compose_images(oracle::images_of(p), oracle::images_of(q)));
    EXPECT_EQ(parse_cycles(print_cycles(p), n), p);
    EXPECT_EQ(parse_images(print_images(p)), p);
  });
}

TEST(Property, FlattenIsAHomomorphism) {
  for_cases(2, [](Rng& rng) {
    const int a = uniform(rng, 1, 6);
    const int b = uniform(rng, 1, 6);
    const SemiDirectPerm x = oracle::random_sd(a, b, rng);
    const SemiDirectPerm y = oracle::random_sd(a, b, rng);
    const Permutation fx = flatten(x);
    for (int j = 0; j < a; ++j)
      for (int i = 0; i < b; ++i) {
        const auto [j2, i2] = x(j, i);
        EXPECT_EQ(fx(flat_index(a, j, i)), flat_index(a, j2, i2));
      }
    EXPECT_EQ(flatten(sd_compose(x, y)), compose(fx, flatten(y)));
    EXPECT_EQ(flatten(sd_inverse(x)), fx.inverse());
  });
}

TEST(Property, UnflattenRoundTrip) {
  for_cases(3, [](Rng& rng) {
    const int a = uniform(rng, 1, 6);
    const int b = uniform(rng, 1, 6);
    const SemiDirectPerm x = oracle::random_sd(a, b, rng);
    EXPECT_EQ(unflatten(flatten(x), a, b), x);
  });
}

TEST(Property, SemiDirectIffBlocksPreserved) {
  for_cases(4, [](Rng& rng) {
    const int a = uniform(rng, 1, 4);
    const int b = uniform(rng, 1, 4);
    const Permutation p =
        rng() % 2 ? flatten(oracle::random_sd(a, b, rng)) : oracle::random_perm(a * b, rng);
    // Block j is {flat_index(a, j, i) : i < b}.
    bool blocks = true;
    for (int j = 0; j < a; ++j)
      for (int i = 1; i < b; ++i)
        blocks = blocks && p(flat_index(a, j, i)) % a == p(flat_index(a, j, 0)) % a;
    EXPECT_EQ(is_semi_direct(p, a, b), blocks) << print_cycles(p);
  });
}

TEST(Property, PetersenFactorizationCoversTheDigraph) {
  for_cases(5, [](Rng& rng) {
    const int n = uniform(rng, 2, 40);
    const int d = uniform(rng, 1, 4);
    // Scramble ports so the input is not already split into factors.
    const Digraph src = from_factors(Factorization{oracle::random_factors(n, d, rng)});
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto targets = src.out(v);
      out[static_cast<std::size_t>(v)].assign(targets.begin(), targets.end());
      std::shuffle(out[static_cast<std::size_t>(v)].begin(), out[static_cast<std::size_t>(v)].end(), rng);
    }
    const Digraph g = Digraph::from_adjacency(out);
    const Factorization f = petersen_factorize(g);
    ASSERT_EQ(f.degree(), d);
    EXPECT_EQ(oracle::adjacency_multiset(from_factors(f)), oracle::adjacency_multiset(g));
  });
}

TEST(Property, DiameterMatchesFloyd) {
  for_cases(6, [](Rng& rng) {
    const Digraph g = from_factors(Factorization{oracle::random_factors(uniform(rng, 2, 30), uniform(rng, 1, 3), rng)});
    const int expected = oracle::floyd_diameter(g);
    if (expected < 0) {
      EXPECT_THROW(diameter(g), NotStronglyConnected);
    } else {
      EXPECT_EQ(diameter(g), expected);
    }
  });
}

TEST(Property, LineDigraphMatchesDefinition) {
  for_cases(7, [](Rng& rng) {
    const Digraph g = from_factors(Factorization{oracle::random_factors(uniform(rng, 2, 15), uniform(rng, 1, 3), rng)});
    const Digraph l = line_digraph(g);
    const auto expected = oracle::naive_line_adjacency(g);
    ASSERT_EQ(l.order(), static_cast<int>(expected.size()));
    for (int v = 0; v < l.order(); ++v) {
      std::vector<int> got(l.out(v).begin(), l.out(v).end());
      std::vector<int> want = expected[static_cast<std::size_t>(v)];
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      EXPECT_EQ(got, want);
    }
  });
}

TEST(Property, IsomorphismAgreesWithBruteForce) {
  for_cases(8, [](Rng& rng) {
    const int n = uniform(rng, 2, 7);
    const int d = uniform(rng, 1, 2);
    const Digraph g = from_factors(Factorization{oracle::random_factors(n, d, rng)});
    const Permutation q = oracle::random_perm(n, rng);
    const Digraph h = rng() % 2 ? relabel(g, q)
                                : from_factors(Factorization{oracle::random_factors(n, d, rng)});
    const auto f = isomorphic(g, h);
    EXPECT_EQ(f.has_value(), oracle::brute_isomorphic(g, h));
    if (f) EXPECT_TRUE(maps_edges(g, h, *f));
  });
}

TEST(Property, AutomorphismCountMatchesBruteForce) {
  for_cases(9, [](Rng& rng) {
    const Digraph g = from_factors(random_connected(uniform(rng, 2, 7), 2, rng));
    EXPECT_EQ(automorphism_order(g), oracle::brute_automorphism_count(g));
  });
}

TEST(Property, TreeLabelledGroupoidRebuildsTheDigraph) {
  for_cases(10, [](Rng& rng) {
    const Factorization f = random_connected(uniform(rng, 2, 20), uniform(rng, 1, 3), rng);
    const int root = uniform(rng, 0, f.order() - 1);
    const TreeLabeling lab = treelike_words(f, root);
    EXPECT_EQ(lab.label[static_cast<std::size_t>(root)], 0);
    const Digraph rebuilt = cayley_digraph(partial_groupoid(f, root));
    for (int v = 0; v < f.order(); ++v) {
      EXPECT_EQ(apply_word(f, root, lab.words[static_cast<std::size_t>(v)]), v);
      for (int s = 0; s < f.degree(); ++s) {
        EXPECT_EQ(rebuilt.out(lab.label[static_cast<std::size_t>(v)], s),
                  lab.label[static_cast<std::size_t>(f.factors[static_cast<std::size_t>(s)](v))]);
      }
    }
  });
}

TEST(Property, CddCompanionFormula) {
  for_cases(11, [](Rng& rng) {
    const CddParams p = random_cdd(rng);
    const int a = p.a();
    const int b = p.b();
    const Permutation& y = p.companion();
    for (int j = 0; j < a; ++j)
      for (int i = 0; i < b; ++i)
        EXPECT_EQ(y(flat_index(a, j, i)),
                  flat_index(a, p.pi()(j), (i + p.t()[static_cast<std::size_t>(j)]) % b));
    const auto back = extract_cdd_params(y, a, b);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, p);
  });
}

TEST(Property, CddAsGcdGivesTheSameDigraph) {
  for_cases(12, [](Rng& rng) {
    const CddParams p = random_cdd(rng);
    const GcdPair pair = cdd_to_gcd(p);
    const CddDigraph d = cdd_build(p);
    EXPECT_EQ(flatten(pair.z), d.z);
    EXPECT_EQ(compose(flatten(pair.z), flatten(pair.t)), d.y);
    EXPECT_EQ(gcd_build(pair.z, pair.t).digraph, d.digraph);
  });
}

TEST(Property, GcdOfDegreeTwoDigraphIsItsLineDigraph) {
  for_cases(13, [](Rng& rng) {
    const Factorization f = random_connected(uniform(rng, 2, 12), 2, rng);
    const Digraph gcd = linedigraph_as_gcd(f).digraph;
    const Digraph l = line_digraph(from_factors(f));
    const auto iso = isomorphic(gcd, l);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(maps_edges(gcd, l, *iso));
  });
}

TEST(Property, PointwiseAutomorphismTest) {
  for_cases(14, [](Rng& rng) {
    const CddParams p = random_cdd(rng);
    const CddDigraph d = cdd_build(p);
    Permutation alpha;
    switch (rng() % 3) {
      case 0:
        alpha = oracle::random_perm(p.n(), rng);
        break;
      case 1:
        alpha = cdd_tau(p).pow(uniform(rng, 0, p.b()));
        break;
      default: {
        const auto auts = automorphisms(d.digraph, 64);
        alpha = auts[static_cast<std::size_t>(rng() % auts.size())];
      }
    }
    EXPECT_EQ(theorem7_check(d.z, d.y, alpha), maps_edges(d.digraph, d.digraph, alpha))
        << print_cycles(alpha);
  });
}

TEST(Property, TauIsAnAutomorphism) {
  for_cases(15, [](Rng& rng) {
    const CddParams p = random_cdd(rng);
    const Permutation tau = cdd_tau(p);
    EXPECT_TRUE(maps_edges(cdd_build(p).digraph, cdd_build(p).digraph, tau));
    EXPECT_TRUE(tau.pow(p.b()).is_identity());
  });
}

TEST(Property, ShiftIsomorphismIsConjugation) {
  for_cases(16, [](Rng& rng) {
    const CddParams p = random_cdd(rng);
    const CddParams q = shift_isomorphism(p);
    const Permutation mu = Permutation::rotation(p.n());
    EXPECT_EQ(q.companion(), conjugate(p.companion(), mu));
    EXPECT_TRUE(maps_edges(cdd_build(p).digraph, cdd_build(q).digraph, mu));
  });
}

TEST(Property, CddDiameterMatchesFloyd) {
  for_cases(17, [](Rng& rng) {
    const CddParams p = random_cdd(rng);
    const int expected = oracle::floyd_diameter(cdd_build(p).digraph);
    if (expected < 0) {
      EXPECT_THROW(cdd_diameter(p), NotStronglyConnected);
    } else {
      EXPECT_EQ(cdd_diameter(p), expected);
    }
  });
}

TEST(Property, GroupBfsMatchesNaiveClosure) {
  for_cases(18, [](Rng& rng) {
    const int n = uniform(rng, 1, 6);
    std::vector<Permutation> gens;
    const int k = uniform(rng, 1, 3);
    for (int s = 0; s < k; ++s) gens.push_back(oracle::random_perm(n, rng));
    GroupBfsOptions opt;
    opt.keep_elements = true;
    const GroupBfsResult r = group_bfs(gens, opt);
    const oracle::Closure c = oracle::naive_closure(gens);
    EXPECT_EQ(r.order, c.elements.size());
    EXPECT_EQ(r.histogram, c.histogram);
    std::set<oracle::Images> got;
    for (const auto& p : r.elements) got.insert(oracle::images_of(p));
    EXPECT_EQ(got, c.elements);
  });
}

TEST(Property, SemiDirectGeneratorsStayInTheWreathProduct) {
  for_cases(19, [](Rng& rng) {
    const int a = uniform(rng, 1, 3);
    const int b = uniform(rng, 1, 3);
    const std::vector<Permutation> gens{flatten(oracle::random_sd(a, b, rng)),
                                        flatten(oracle::random_sd(a, b, rng))};
    const CoveringGroup cg = covering_group(Factorization{gens}, {}, std::pair{a, b});
    ASSERT_TRUE(cg.divides_universal_order.has_value());
    EXPECT_TRUE(*cg.divides_universal_order);
    EXPECT_EQ(universal_order(a, b) % cg.bfs.order, 0u);
  });
}

TEST(Property, DigraphFilesRoundTrip) {
  for_cases(20, [](Rng& rng) {
    const Factorization f{oracle::random_factors(uniform(rng, 2, 20), uniform(rng, 1, 4), rng)};
    std::stringstream a;
    write_factorization(a, f);
    EXPECT_EQ(read_factorization(a).factors, f.factors);
    const Digraph g = from_factors(f);
    std::stringstream b;
    write_digraph(b, g);
    EXPECT_EQ(read_digraph(b), g);
  });
}

}  // namespace
}  // namespace dgdd
