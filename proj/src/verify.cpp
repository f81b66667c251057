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

#include "dgdd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "dgdd/builtins.hpp"
#include "dgdd/cdd.hpp"
#include "dgdd/covergroup.hpp"
#include "dgdd/errors.hpp"
#include "dgdd/groupoid.hpp"
#include "dgdd/search.hpp"

namespace dgdd {

namespace {

// Accumulates named conditions into one outcome.
class Checker {
 public:
  template <typename T>
  Checker& note(const std::string& key, const T& value) {
    sep();
    out_ << key << '=' << value;
    return *this;
  }

  Checker& expect(bool ok, const std::string& what) {
    if (!ok) {
      failed_ = true;
      sep();
      out_ << "FAILED: " << what;
    }
    return *this;
  }

  ClaimOutcome done(ClaimStatus success = ClaimStatus::kPass) const {
    return {failed_ ? ClaimStatus::kFail : success, out_.str()};
  }

 private:
  void sep() {
    if (!first_) out_ << ", ";
    first_ = false;
  }

  std::ostringstream out_;
  bool first_ = true;
  bool failed_ = false;
};

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

// --- Random generators for the property sweep ---------------------------

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Permutation random_perm(int n, Rng& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = v;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Permutation random_derangement(int n, Rng& rng) {
  for (;;) {
    Permutation p = random_perm(n, rng);
    if (is_derangement(p)) return p;
  }
}

SemiDirectPerm random_sd(int a, int b, Rng& rng) {
  std::vector<Permutation> inner;
  for (int j = 0; j < a; ++j) inner.push_back(random_perm(b, rng));
  return SemiDirectPerm(a, b, random_perm(a, rng), std::move(inner));
}

CddParams random_cdd(Rng& rng) {
  for (;;) {
    const int a = uniform(rng, 2, 6);
    const int b = uniform(rng, 2, 6);
    std::vector<int> t;
    for (int j = 0; j < a; ++j) t.push_back(uniform(rng, 0, b - 1));
    try {
      return CddParams(a, b, random_perm(a, rng), std::move(t));
    } catch (const InvalidParams&) {
    }
  }
}

Factorization random_factorization(int n, int d, Rng& rng) {
  Factorization f;
  for (int s = 0; s < d; ++s) f.factors.push_back(random_derangement(n, rng));
  return f;
}

Factorization random_connected_factorization(int n, int d, Rng& rng) {
  for (;;) {
    Factorization f = random_factorization(n, d, rng);
    if (from_factors(f).strongly_connected()) return f;
  }
}

// Lemma 3 oracle: p maps each coordinate block {(j, i) : i} into one block.
bool preserves_blocks(const Permutation& p, int a, int b) {
  for (int j = 0; j < a; ++j) {
    const int target = p(flat_index(a, j, 0)) % a;
    for (int i = 1; i < b; ++i) {
      if (p(flat_index(a, j, i)) % a != target) return false;
    }
  }
  return true;
}

template <typename F>
ClaimOutcome sweep(const VerifyOptions& opt, int cases, std::uint64_t salt, F&& body) {
  Rng rng(opt.seed ^ salt);
  int failures = 0;
  std::string first;
  for (int k = 0; k < cases; ++k) {
    std::string why = body(rng);
    if (!why.empty()) {
      if (failures++ == 0) first = "case " + std::to_string(k) + ": " + why;
    }
  }
  Checker c;
  c.note("cases", cases).note("failures", failures);
  c.expect(failures == 0, first);
  return c.done();
}

// --- Shared fixtures ----------------------------------------------------

const char* const kExample5Y =
    "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)";

std::vector<Claim> build_catalog() {
  std::vector<Claim> c;
  auto add = [&](std::string id, std::string group, int criterion, std::string desc,
                 std::function<ClaimOutcome(const VerifyOptions&)> run) {
    c.push_back({std::move(id), std::move(group), criterion, std::move(desc), std::move(run)});
  };

  // 1
  add("alegre.digraph", "alegre", 1,
      "Alegre digraph: 25 vertices, degree 2, strongly connected, diameter 4",
      [](const VerifyOptions& o) {
        const Digraph g = alegre();
        Checker ch;
        const int diam = diameter(g, o.threads);
        ch.note("n", g.order()).note("d", g.degree()).note("diameter", diam);
        ch.expect(g.order() == 25, "order").expect(g.degree() == 2, "degree");
        ch.expect(g.strongly_connected(), "strong connectivity").expect(diam == 4, "diameter");
        return ch.done();
      });

  // 2
  add("example5.companion", "example5", 2,
      "CDD a=b=5, pi=(0,2,4), t=(1,4,4,1,4) gives the printed companion Y",
      [](const VerifyOptions&) {
        const CddDigraph d = cdd_build(example5_params());
        Checker ch;
        ch.note("Y", print_cycles(d.y));
        ch.expect(d.y == parse_cycles(kExample5Y, 25), "Y differs from the printed cycles");
        return ch.done();
      });
  add("example5.isomorphic", "example5", 2, "Example 5 digraph is isomorphic to the Alegre digraph",
      [](const VerifyOptions&) {
        Checker ch;
        ch.expect(isomorphic(cdd_build(example5_params()).digraph, alegre()).has_value(),
                  "not isomorphic");
        return ch.done();
      });
  add("example5.cycle_lengths", "example5", 2,
      "Cycle-length formula gives 15, 5, 5 and agrees with direct computation",
      [](const VerifyOptions&) {
        const CddParams p = example5_params();
        const Permutation& y = p.companion();
        Checker ch;
        bool agree = true;
        for (int i = 0; i < p.b(); ++i) {
          for (int j = 0; j < p.a(); ++j) {
            agree = agree && y_cycle_length(p, j, i) ==
                                 static_cast<int>(y.cycle_of(flat_index(p.a(), j, i)).size());
          }
        }
        ch.note("cycle_type", join(y.cycle_type()));
        ch.expect(agree, "formula disagrees with direct cycle lengths");
        ch.expect(y.cycle_type() == std::vector<int>{5, 5, 15}, "cycle type");
        return ch.done();
      });

  // 3
  add("example6.shift", "example6", 3,
      "Two shifts of Example 5 give pi=(4,1,2), t=(1,3,1,4,0) and the Alegre t-factor",
      [](const VerifyOptions&) {
        const CddParams one = shift_isomorphism(example5_params());
        const CddParams two = shift_isomorphism(one);
        Checker ch;
        ch.note("shift1.pi", print_cycles(one.pi())).note("shift1.t", join(one.t()));
        ch.note("shift2.pi", print_cycles(two.pi())).note("shift2.t", join(two.t()));
        ch.expect(two.pi() == Permutation::from_cycles(5, {{4, 1, 2}}), "pi");
        ch.expect(two.t() == std::vector<int>{1, 3, 1, 4, 0}, "t");
        ch.expect(two.companion() == alegre_factors().factors[1], "Y differs from the t-factor");
        return ch.done();
      });
  add("example6.printed_offsets", "example6", 3,
      "Printed offsets (4,3,1,1,0) for pi=(4,1,2) do not give the Alegre digraph",
      [](const VerifyOptions&) {
        const Permutation pi = Permutation::from_cycles(5, {{4, 1, 2}});
        Checker ch;
        try {
          const CddParams printed(5, 5, pi, {4, 3, 1, 1, 0});
          const CddDigraph d = cdd_build(printed);
          const bool iso = isomorphic(d.digraph, alegre()).has_value();
          ch.note("printed.Y(0)", d.y(0)).note("printed.diameter", diameter(d.digraph));
          ch.note("printed.isomorphic_to_alegre", iso ? "yes" : "no");
          ch.expect(!iso, "printed offsets unexpectedly reproduce the Alegre digraph");
        } catch (const Error& e) {
          ch.note("printed", std::string("invalid: ") + e.what());
        }
        const CddParams derived(5, 5, pi, {1, 3, 1, 4, 0});
        ch.note("derived.diameter", diameter(cdd_build(derived).digraph));
        return ch.done(ClaimStatus::kFlaggedTypo);
      });

  // 4
  add("hoffman_singleton.digraph", "hoffman-singleton", 4,
      "p=5 groupoid digraph: 50 vertices, 7-regular, symmetric, diameter 2, girth 5, 175 edges",
      [](const VerifyOptions& o) {
        const HoffmanSingleton hs = hoffman_singleton(5);
        const Digraph& g = hs.digraph;
        std::set<std::pair<int, int>> arcs;
        for (const auto& e : g.edge_multiset()) arcs.insert(e);
        const int diam = diameter(g, o.threads);
        const int girth = undirected_girth(g);
        const PropertyReport pr = check_properties(hs.groupoid);
        Checker ch;
        ch.note("n", g.order()).note("d", g.degree()).note("diameter", diam).note("girth", girth);
        ch.note("undirected_edges", arcs.size() / 2);
        ch.note("generator_columns_are_permutations", pr.p3 ? "yes" : "no");
        ch.expect(g.order() == 50, "order").expect(g.degree() == 7, "degree");
        ch.expect(is_symmetric(g), "symmetry").expect(diam == 2, "diameter");
        ch.expect(girth == 5, "girth").expect(arcs.size() == 350, "edge count");
        return ch.done();
      });

  // 5
  add("groupoids.example1", "groupoids", 5,
      "Example 1 table satisfies P1-P3; its Cayley digraph is Kautz(2,2) with diameter 2",
      [](const VerifyOptions&) {
        const PartialGroupoid p = example1_table().generator_columns();
        const PropertyReport pr = check_properties(p);
        const Digraph g = cayley_digraph(p);
        Checker ch;
        ch.expect(pr.p1, "P1").expect(pr.p2, "P2").expect(pr.p3, "P3");
        ch.expect(isomorphic(g, kautz(2, 2)).has_value(), "not isomorphic to Kautz(2,2)");
        ch.expect(diameter(g) == 2, "diameter");
        return ch.done();
      });
  add("groupoids.example2", "groupoids", 5,
      "Example 2 table fails P1, satisfies P2-P3; Cayley digraph isomorphic to Example 1's",
      [](const VerifyOptions&) {
        const PartialGroupoid p = example2_table().generator_columns();
        const PropertyReport pr = check_properties(p);
        Checker ch;
        if (!pr.p1) ch.note("p1_witness_generator", pr.p1_generator);
        ch.expect(!pr.p1, "P1 unexpectedly holds").expect(pr.p2, "P2").expect(pr.p3, "P3");
        if (pr.p2 && pr.p3) {
          const Digraph g = cayley_digraph(p);
          const Digraph g1 = cayley_digraph(example1_table().generator_columns());
          ch.expect(isomorphic(g, g1).has_value(), "not isomorphic to Example 1");
        }
        return ch.done();
      });

  // 6
  add("example7.covering_group", "example7", 6,
      "Alegre covering group: order 187500 = 60*5^5, diameter 23, 11 extremal elements, C_i present",
      [](const VerifyOptions& o) {
        GroupBfsOptions go;
        go.max_elements = o.max_elements;
        go.keep_elements = true;
        const CoveringGroup cg = covering_group(alegre_factors(), go, std::pair{5, 5});
        Checker ch;
        ch.note("order", cg.bfs.order).note("diameter", cg.bfs.diameter);
        ch.note("extremal", cg.bfs.histogram.back());
        ch.expect(cg.bfs.complete, "element cap reached");
        ch.expect(cg.bfs.order == 187500 && cg.bfs.order == 60ULL * 5 * 5 * 5 * 5 * 5, "order");
        ch.expect(cg.bfs.diameter == 23, "diameter");
        ch.expect(cg.bfs.histogram.back() == 11, "extremal count");
        ch.expect(cg.divides_universal_order.value_or(false), "order does not divide 5!(5!)^5");
        const Example7 e = example7_elements();
        ch.expect(std::all_of(e.c.begin(), e.c.end(), [&](const Permutation& p) {
                    return cg.bfs.contains(p);
                  }),
                  "some C_i is not in the group");
        return ch.done();
      });
  const std::vector<std::string> relation_text = {
      "rho C_i rho^-1 = C_{i+1}",          "sigma = T C_1^4 C_3",
      "sigma^3 = (C_0C_2C_4)^4 C_1^2 C_3^3", "rho^5 = C_0...C_4",
      "rho^-1 sigma = U_0..U_4 V_0..V_4 C_4^3", "(rho^-1 sigma)^2 = C_4",
      "sigma rho sigma^-1 = theta (printed cycle malformed; recomputed)",
      "theta^5 = C_0...C_4",               "sigma C_i sigma^-1 = C_pi(i)"};
  for (int r = 1; r <= 9; ++r) {
    add("example7.relation" + std::to_string(r), "example7", 6,
        "Example 7 relation " + std::to_string(r) + ": " +
            relation_text[static_cast<std::size_t>(r - 1)],
        [r](const VerifyOptions&) {
          for (const auto& rc : verify_example7_relations()) {
            if (rc.id == r) return ClaimOutcome{rc.status, rc.details};
          }
          return ClaimOutcome{ClaimStatus::kFail, "relation missing"};
        });
  }

  // 7
  add("example8.sigma", "example8", 7, "p=7 construction reproduces the printed sigma",
      [](const VerifyOptions&) {
        const Example8 e = example8_construct();
        Checker ch;
        ch.note("sigma", print_cycles(e.sigma));
        ch.expect(e.sigma == example8_printed_sigma(), "sigma differs from the printed cycles");
        return ch.done();
      });
  add("example8.diameter", "example8", 7, "49-vertex digraph has diameter 7",
      [](const VerifyOptions& o) {
        const int diam = diameter(example8_construct().digraph, o.threads);
        Checker ch;
        ch.note("diameter", diam).expect(diam == 7, "diameter");
        return ch.done();
      });
  add("example8.line_alegre", "example8", 7, "Line digraph of Alegre: 50 vertices, diameter 5",
      [](const VerifyOptions& o) {
        const Digraph l = line_digraph(alegre());
        const int diam = diameter(l, o.threads);
        Checker ch;
        ch.note("n", l.order()).note("diameter", diam);
        ch.expect(l.order() == 50, "order").expect(diam == 5, "diameter");
        return ch.done();
      });
  add("example8.group_order", "example8", 7,
      "Covering group order (about 4.15e9) is beyond the element cap", [](const VerifyOptions& o) {
        return ClaimOutcome{ClaimStatus::kSkippedScale,
                            "not enumerated; element cap " + std::to_string(o.max_elements)};
      });

  // 8
  add("example9.group", "example9", 8, "<A,B> has order 1296 and directed diameter 14",
      [](const VerifyOptions&) {
        const GroupBfsResult r = group_bfs(
            {parse_cycles("(0,3,1,4,2,5)", 9), parse_cycles("(0,3,6,1,4,7)(2,5,8)", 9)});
        Checker ch;
        ch.note("order", r.order).note("diameter", r.diameter);
        ch.expect(r.order == 1296, "order").expect(r.diameter == 14, "diameter");
        return ch.done();
      });
  add("example9.alternate", "example9", 8,
      "The disjoint-derangement pair generates the same element set",
      [](const VerifyOptions&) {
        GroupBfsOptions go;
        go.keep_elements = true;
        const GroupBfsResult r1 = group_bfs(
            {parse_cycles("(0,3,1,4,2,5)", 9), parse_cycles("(0,3,6,1,4,7)(2,5,8)", 9)}, go);
        const Permutation a2 = parse_cycles("(0,3)(1,4)(2,5)(6,7,8)", 9);
        const Permutation b2 = parse_cycles("(0,7,1,6)(2,8)(3,4,5)", 9);
        const GroupBfsResult r2 = group_bfs({a2, b2}, go);
        Checker ch;
        ch.note("order", r2.order).note("diameter", r2.diameter);
        ch.expect(is_derangement(a2) && is_derangement(b2) && are_disjoint(a2, b2),
                  "pair is not two disjoint derangements");
        ch.expect(r1.elements == r2.elements, "element sets differ");
        return ch.done();
      });

  // 9
  add("example10.search", "example10", 9,
      "Exhaustive n=6, D=2 search: 3 classes, only the Kautz class has reciprocal edges",
      [](const VerifyOptions& o) {
        SearchSpec s;
        s.n = 6;
        s.diameter_target = 2;
        s.mode = SearchMode::kExhaustive;
        s.threads = o.threads;
        const SearchResult r = enumerate(s);
        Checker ch;
        ch.note("classes", r.representatives.size());
        ch.expect(r.complete && r.representatives.size() == 3, "class count");
        const Digraph known[] = {kautz(2, 2), from_factors(example10_2_factors()),
                                 from_factors(example10_3_factors())};
        for (const auto& y : r.representatives) {
          const Digraph g = companion_digraph(y);
          const int rec = reciprocal_edge_count(g);
          ch.note(print_cycles(y) + ".reciprocal", rec);
          const bool kautz_class = isomorphic(g, known[0]).has_value();
          ch.expect(kautz_class ? rec > 0 : rec == 0, "reciprocal edges");
          ch.expect(std::any_of(std::begin(known), std::end(known),
                                [&](const Digraph& k) { return isomorphic(g, k).has_value(); }),
                    "class " + print_cycles(y) + " matches no known digraph");
        }
        return ch.done();
      });
  add("example10.covering_group", "example10", 9,
      "Example 10(3) covering group has order 120 and diameter 10", [](const VerifyOptions&) {
        const GroupBfsResult r = group_bfs(example10_3_factors().factors);
        Checker ch;
        ch.note("order", r.order).note("diameter", r.diameter);
        ch.expect(r.order == 120, "order").expect(r.diameter == 10, "diameter");
        return ch.done();
      });
  add("example10.unique_factorization", "example10", 9,
      "Example 10(3) has one 1-factorization up to automorphism", [](const VerifyOptions&) {
        const Digraph g = from_factors(example10_3_factors());
        const auto all = all_degree2_factorizations(g);
        const auto auts = automorphisms(g);
        auto same_pair = [](const Factorization& x, const Factorization& y) {
          return (x.factors[0] == y.factors[0] && x.factors[1] == y.factors[1]) ||
                 (x.factors[0] == y.factors[1] && x.factors[1] == y.factors[0]);
        };
        std::vector<Factorization> orbit_reps;
        for (const auto& f : all) {
          const bool seen = std::any_of(orbit_reps.begin(), orbit_reps.end(), [&](const Factorization& r) {
            return std::any_of(auts.begin(), auts.end(), [&](const Permutation& a) {
              Factorization image;
              for (const auto& p : f.factors) image.factors.push_back(conjugate(p, a));
              return same_pair(image, r);
            });
          });
          if (!seen) orbit_reps.push_back(f);
        }
        Checker ch;
        ch.note("factorizations", all.size()).note("up_to_automorphism", orbit_reps.size());
        ch.expect(orbit_reps.size() == 1, "count");
        for (const auto& f : all) {
          const GroupBfsResult r = group_bfs(f.factors);
          ch.expect(r.order == 120 && r.diameter == 10, "covering group of " + print_cycles(f.factors[0]));
        }
        return ch.done();
      });

  // 10
  add("example11.search", "example11", 10,
      "n=12, D=3 search: 3 classes, line digraphs of the n=6 classes, |Aut| = 6, 3, 4",
      [](const VerifyOptions& o) {
        SearchSpec s;
        s.n = 12;
        s.diameter_target = 3;
        s.mode = SearchMode::kPruned;
        s.threads = o.threads;
        const SearchResult r12 = enumerate(s);
        s.n = 6;
        s.diameter_target = 2;
        const SearchResult r6 = enumerate(s);
        Checker ch;
        ch.note("classes", r12.representatives.size()).note("nodes", r12.stats.nodes);
        ch.expect(r12.complete && r12.representatives.size() == 3, "class count");
        std::vector<Digraph> lines;
        for (const auto& y : r6.representatives) lines.push_back(line_digraph(companion_digraph(y)));
        std::vector<std::uint64_t> auts;
        std::set<std::size_t> line_hits;
        for (const auto& y : r12.representatives) {
          const Digraph g = companion_digraph(y);
          auts.push_back(automorphism_order(g));
          for (std::size_t k = 0; k < lines.size(); ++k) {
            if (isomorphic(g, lines[k])) line_hits.insert(k);
          }
        }
        std::string aut_text;
        for (auto a : auts) aut_text += (aut_text.empty() ? "" : "/") + std::to_string(a);
        ch.note("aut_orders", aut_text);
        std::vector<std::uint64_t> sorted = auts;
        std::sort(sorted.begin(), sorted.end());
        ch.expect(sorted == std::vector<std::uint64_t>{3, 4, 6}, "automorphism orders");
        ch.expect(line_hits.size() == 3, "classes are not the three line digraphs");
        std::set<std::size_t> printed_hits;
        for (const auto& y : example11_companions()) {
          const Digraph g = companion_digraph(y);
          for (std::size_t k = 0; k < r12.representatives.size(); ++k) {
            if (isomorphic(g, companion_digraph(r12.representatives[k]))) printed_hits.insert(k);
          }
        }
        ch.expect(printed_hits.size() == 3, "printed companions do not match the classes");
        return ch.done();
      });

  // 11
  add("theorem12.s9_pair", "theorem12", 11, "(a,b)=(3,3) generators equal the printed S_9 pair",
      [](const VerifyOptions&) {
        const auto [x, y] = theorem12_generators(3, 3);
        Checker ch;
        ch.note("X", print_cycles(flatten(x))).note("Y", print_cycles(flatten(y)));
        ch.expect(flatten(x) == parse_cycles("(0,1)(3,4)(6,7)(2,5,8)", 9), "X");
        ch.expect(flatten(y) == parse_cycles("(0,7,8,3,1,2)(4,5,6)", 9), "Y");
        return ch.done();
      });
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4},
           {4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}, {7, 2}}) {
    const std::string tag = std::to_string(a) + "," + std::to_string(b);
    add("theorem12.order_" + std::to_string(a) + "_" + std::to_string(b), "theorem12", 11,
        "(" + tag + ") pair generates all a!(b!)^a elements", [a, b](const VerifyOptions& o) {
          const auto [x, y] = theorem12_generators(a, b);
          GroupBfsOptions go;
          go.max_elements = o.max_elements;
          const GroupBfsResult r = group_bfs({flatten(x), flatten(y)}, go);
          const std::uint64_t target = universal_order(a, b);
          Checker ch;
          ch.note("order", r.order).note("expected", target).note("diameter", r.diameter);
          ch.expect(r.complete && r.order == target, "order");
          return ch.done();
        });
  }

  // 12
  add("properties.flatten_homomorphism", "properties", 12,
      "flatten(x y) = flatten(x) flatten(y)", [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 1, [](Rng& rng) -> std::string {
          const int a = uniform(rng, 1, 6);
          const int b = uniform(rng, 1, 6);
          const SemiDirectPerm x = random_sd(a, b, rng);
          const SemiDirectPerm y = random_sd(a, b, rng);
          if (flatten(sd_compose(x, y)) != compose(flatten(x), flatten(y))) return "compose";
          if (flatten(sd_inverse(x)) != flatten(x).inverse()) return "inverse";
          return "";
        });
      });
  add("properties.unflatten_roundtrip", "properties", 12, "unflatten(flatten(x)) = x",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 2, [](Rng& rng) -> std::string {
          const int a = uniform(rng, 1, 6);
          const int b = uniform(rng, 1, 6);
          const SemiDirectPerm x = random_sd(a, b, rng);
          return unflatten(flatten(x), a, b) == x ? "" : "round trip";
        });
      });
  add("properties.lemma3", "properties", 12,
      "A permutation is semi-direct exactly when it maps coordinate blocks to blocks",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 3, [](Rng& rng) -> std::string {
          const int a = uniform(rng, 1, 4);
          const int b = uniform(rng, 1, 4);
          const Permutation p = rng() % 2 ? flatten(random_sd(a, b, rng)) : random_perm(a * b, rng);
          return is_semi_direct(p, a, b) == preserves_blocks(p, a, b) ? "" : print_cycles(p);
        });
      });
  add("properties.petersen", "properties", 12,
      "Petersen factorization covers random regular digraphs (d <= 4, n <= 40)",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 4, [](Rng& rng) -> std::string {
          const Digraph g = from_factors(random_factorization(uniform(rng, 2, 40), uniform(rng, 1, 4), rng));
          return is_factorization_of(petersen_factorize(g), g) ? "" : "not a factorization";
        });
      });
  add("properties.theorem1", "properties", 12,
      "Tree-labelled groupoid of a connected regular digraph rebuilds the digraph",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 5, [](Rng& rng) -> std::string {
          const Factorization f =
              random_connected_factorization(uniform(rng, 2, 20), uniform(rng, 1, 3), rng);
          const int root = uniform(rng, 0, f.order() - 1);
          const TreeLabeling lab = treelike_words(f, root);
          const Digraph rebuilt = cayley_digraph(partial_groupoid(f, root));
          return rebuilt == relabel(from_factors(f), Permutation(lab.label)) ? "" : "mismatch";
        });
      });
  add("properties.theorem5", "properties", 12, "CDD as GCD reproduces the same digraph",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 6, [](Rng& rng) -> std::string {
          const CddParams p = random_cdd(rng);
          const GcdPair g = cdd_to_gcd(p);
          const CddDigraph d = cdd_build(p);
          return flatten(g.z) == d.z && g.y == d.y ? "" : "digraphs differ";
        });
      });
  add("properties.theorem6", "properties", 12,
      "GCD built from a degree-2 digraph is isomorphic to its line digraph",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 7, [](Rng& rng) -> std::string {
          const Factorization f = random_connected_factorization(uniform(rng, 2, 12), 2, rng);
          const Digraph g = from_factors(f);
          return isomorphic(linedigraph_as_gcd(f).digraph, line_digraph(g)) ? "" : "not isomorphic";
        });
      });
  add("properties.theorem7", "properties", 12,
      "Pointwise B1/B2 test agrees with the direct automorphism check",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 8, [](Rng& rng) -> std::string {
          const CddParams p = random_cdd(rng);
          const CddDigraph d = cdd_build(p);
          Permutation alpha;
          switch (rng() % 3) {
            case 0: alpha = random_perm(p.n(), rng); break;
            case 1: alpha = cdd_tau(p).pow(uniform(rng, 0, p.b())); break;
            default: {
              const auto auts = automorphisms(d.digraph, 64);
              alpha = auts[static_cast<std::size_t>(rng() % auts.size())];
            }
          }
          return theorem7_check(d.z, d.y, alpha) == is_automorphism(d.digraph, alpha)
                     ? ""
                     : print_cycles(alpha);
        });
      });
  add("properties.lemma9", "properties", 12, "tau is an automorphism of every CDD",
      [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 9, [](Rng& rng) -> std::string {
          const CddParams p = random_cdd(rng);
          return is_automorphism(cdd_build(p).digraph, cdd_tau(p)) ? "" : "tau";
        });
      });
  add("properties.lemma10", "properties", 12,
      "Shift isomorphism is conjugation of Y by k -> k + 1", [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 10, [](Rng& rng) -> std::string {
          const CddParams p = random_cdd(rng);
          const Permutation mu = Permutation::rotation(p.n());
          return shift_isomorphism(p).companion() == conjugate(p.companion(), mu) ? "" : "Y";
        });
      });
  add("properties.cdd_diameter", "properties", 12,
      "Diameter over the a representatives equals the full diameter", [](const VerifyOptions& o) {
        return sweep(o, o.property_cases, 11, [](Rng& rng) -> std::string {
          const CddParams p = random_cdd(rng);
          const Digraph g = cdd_build(p).digraph;
          if (!g.strongly_connected()) {
            try {
              cdd_diameter(p);
              return "disconnected digraph not reported";
            } catch (const NotStronglyConnected&) {
              return "";
            }
          }
          return cdd_diameter(p) == diameter(g) ? "" : "diameter";
        });
      });
  return c;
}

}  // namespace

int VerifyReport::count(ClaimStatus s) const {
  return static_cast<int>(std::count_if(results.begin(), results.end(),
                                        [s](const ClaimResult& r) { return r.status == s; }));
}

const std::vector<Claim>& claim_catalog() {
  static const std::vector<Claim> catalog = build_catalog();
  return catalog;
}

std::vector<std::string> claim_groups() {
  std::vector<std::string> groups;
  for (const auto& c : claim_catalog()) {
    if (std::find(groups.begin(), groups.end(), c.group) == groups.end()) groups.push_back(c.group);
  }
  return groups;
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& catalog = claim_catalog();
  for (const auto& sel : options.only) {
    const bool known = std::any_of(catalog.begin(), catalog.end(), [&](const Claim& c) {
      return c.group == sel || c.id == sel;
    });
    if (!known) throw DomainError("unknown claim or group '" + sel + "'");
  }
  VerifyReport report;
  for (const auto& claim : catalog) {
    const bool selected =
        options.only.empty() ||
        std::any_of(options.only.begin(), options.only.end(),
                    [&](const std::string& s) { return s == claim.group || s == claim.id; });
    if (!selected) continue;
    const auto start = std::chrono::steady_clock::now();
    ClaimOutcome out;
    try {
      out = claim.run(options);
    } catch (const std::exception& e) {
      out = {ClaimStatus::kFail, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back({claim.id, claim.group, claim.criterion, claim.description,
                              out.status, std::move(out.details), secs});
  }
  return report;
}

}  // namespace dgdd
