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

#include "dgdd/covergroup.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string_view>

#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

// Elements packed as n bytes each in one arena, indexed by an
// open-addressing table of arena offsets.
class ElementSet {
 public:
  explicit ElementSet(int n) : n_(static_cast<std::size_t>(n)) { slots_.assign(1024, kEmpty); }

  std::size_t size() const { return count_; }
  const std::uint8_t* at(std::size_t idx) const { return arena_.data() + idx * n_; }

  // Inserts if absent; returns true when newly added.
  bool insert(const std::uint8_t* elem) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t slot = find_slot(elem);
    if (slots_[slot] != kEmpty) return false;
    slots_[slot] = static_cast<std::uint32_t>(count_);
    arena_.insert(arena_.end(), elem, elem + n_);
    ++count_;
    return true;
  }

 private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  std::size_t hash(const std::uint8_t* elem) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(elem), n_));
  }

  std::size_t find_slot(const std::uint8_t* elem) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t slot = hash(elem) & mask;
    while (slots_[slot] != kEmpty &&
           std::memcmp(at(slots_[slot]), elem, n_) != 0) {
      slot = (slot + 1) & mask;
    }
    return slot;
  }

  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    const std::size_t mask = slots_.size() - 1;
    for (std::uint32_t idx : old) {
      if (idx == kEmpty) continue;
      std::size_t slot = hash(at(idx)) & mask;
      while (slots_[slot] != kEmpty) slot = (slot + 1) & mask;
      slots_[slot] = idx;
    }
  }

  std::size_t n_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> arena_;
  std::vector<std::uint32_t> slots_;
};

Permutation unpack(const std::uint8_t* elem, int n) {
  return Permutation(std::vector<int>(elem, elem + n));
}

Permutation cycle_mod(int n, const std::vector<int>& xs) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = v;
  auto mod = [n](int x) { return ((x % n) + n) % n; };
  for (std::size_t k = 0; k < xs.size(); ++k) {
    img[static_cast<std::size_t>(mod(xs[k]))] = mod(xs[(k + 1) % xs.size()]);
  }
  return Permutation(std::move(img));
}

Permutation product(const std::vector<Permutation>& ps, int n) {
  Permutation r = Permutation::identity(n);
  for (const auto& p : ps) r = compose(r, p);
  return r;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y) {
    throw OverflowError("universal_order: result exceeds 64 bits");
  }
  return x * y;
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
  return r;
}

Permutation transposition01(int n) { return Permutation::from_cycles(n, {{0, 1}}); }

std::vector<Permutation> identities(int a, int b) {
  return std::vector<Permutation>(static_cast<std::size_t>(a), Permutation::identity(b));
}

}  // namespace

bool GroupBfsResult::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

GroupBfsResult group_bfs(const std::vector<Permutation>& gens_in,
                         const GroupBfsOptions& options) {
  if (gens_in.empty()) throw DomainError("group_bfs: no generators");
  const int n = gens_in.front().size();
  if (n > 255) throw DomainError("group_bfs: permutations larger than 255 points");
  std::vector<Permutation> gens = gens_in;
  for (const auto& g : gens_in) {
    if (g.size() != n) throw DomainError("group_bfs: generator size mismatch");
    if (options.with_inverses) gens.push_back(g.inverse());
  }

  const auto un = static_cast<std::size_t>(n);
  ElementSet set(n);
  std::vector<std::uint8_t> buf(un);
  for (std::size_t v = 0; v < un; ++v) buf[v] = static_cast<std::uint8_t>(v);
  set.insert(buf.data());

  GroupBfsResult result;
  result.histogram.push_back(1);
  std::size_t begin = 0;
  std::size_t end = 1;
  while (begin < end) {
    for (std::size_t idx = begin; idx < end && result.complete; ++idx) {
      for (const auto& s : gens) {
        const std::uint8_t* g = set.at(idx);
        for (std::size_t v = 0; v < un; ++v) buf[v] = g[s(static_cast<int>(v))];
        if (set.insert(buf.data()) && set.size() > options.max_elements) {
          result.complete = false;
          break;
        }
      }
    }
    const std::size_t next_end = set.size();
    if (next_end == end) break;
    result.histogram.push_back(next_end - end);
    begin = end;
    end = next_end;
    if (!result.complete) break;
  }
  result.order = set.size();
  result.diameter = static_cast<int>(result.histogram.size()) - 1;
  if (options.keep_extremal) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      result.extremal.push_back(unpack(set.at(idx), n));
    }
    std::sort(result.extremal.begin(), result.extremal.end());
  }
  if (options.keep_elements) {
    result.elements.reserve(set.size());
    for (std::size_t idx = 0; idx < set.size(); ++idx) {
      result.elements.push_back(unpack(set.at(idx), n));
    }
    std::sort(result.elements.begin(), result.elements.end());
  }
  return result;
}

CoveringGroup covering_group(const Factorization& f, const GroupBfsOptions& options,
                             std::optional<std::pair<int, int>> shape) {
  CoveringGroup cg;
  cg.bfs = group_bfs(f.factors, options);
  if (shape) {
    const auto [a, b] = *shape;
    const bool all_sd = std::all_of(f.factors.begin(), f.factors.end(),
                                    [&](const Permutation& p) { return is_semi_direct(p, a, b); });
    if (all_sd && cg.bfs.complete) {
      cg.divides_universal_order = universal_order(a, b) % cg.bfs.order == 0;
    }
  }
  return cg;
}

CoveringGroup covering_group(const Digraph& g, const GroupBfsOptions& options,
                             std::optional<std::pair<int, int>> shape) {
  return covering_group(petersen_factorize(g), options, shape);
}

std::uint64_t universal_order(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("universal_order: a and b must be >= 1");
  std::uint64_t r = factorial(a);
  const std::uint64_t fb = factorial(b);
  for (int j = 0; j < a; ++j) r = checked_mul(r, fb);
  return r;
}

std::pair<SemiDirectPerm, SemiDirectPerm> theorem12_generators(int a, int b) {
  if (a < 2 || b < 2) throw DomainError("theorem12_generators: a and b must be >= 2");
  const Permutation cb = Permutation::rotation(b);
  const Permutation ca = Permutation::rotation(a);
  auto with_inner = [&](const Permutation& outer, int coord, const Permutation& g) {
    auto inner = identities(a, b);
    inner[static_cast<std::size_t>(coord)] = g;
    return SemiDirectPerm(a, b, outer, std::move(inner));
  };

  if (a == 2) {
    return {with_inner(transposition01(2), 0, cb),
            SemiDirectPerm::from_inner(2, 0, transposition01(b))};
  }
  if (b == 2) {
    SemiDirectPerm x = with_inner(transposition01(a), 0, transposition01(2));
    Permutation y = a % 2 == 1 ? compose(transposition01(a), ca) : ca;
    return {x, SemiDirectPerm::from_outer(2, y)};
  }
  if (a == 3 && b == 3) {
    return {unflatten(parse_cycles("(0,1)(3,4)(6,7)(2,5,8)", 9), 3, 3),
            unflatten(parse_cycles("(0,7,8,3,1,2)(4,5,6)", 9), 3, 3)};
  }
  if (a == 3) {
    return {with_inner(ca, 0, transposition01(b)), with_inner(transposition01(3), 2, cb)};
  }
  const Permutation p = b % 2 == 1 ? cb : compose(transposition01(b), cb);
  if (a % 2 == 1) {
    const Permutation outer =
        Permutation::from_cycles(a, {{(a + 1) / 2, (a + 3) / 2}});
    return {with_inner(ca, 0, transposition01(b)), with_inner(outer, 1, p)};
  }
  const Permutation q = compose(transposition01(a), ca);
  return {with_inner(q, 0, transposition01(b)), with_inner(transposition01(a), 2, p)};
}

namespace {

struct GroupIndex {
  std::map<Permutation, int> index;

  explicit GroupIndex(const std::vector<Permutation>& group) {
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (!index.emplace(group[k], static_cast<int>(k)).second) {
        throw DomainError("coset digraph: repeated group element " + print_cycles(group[k]));
      }
    }
  }

  int of(const Permutation& p, std::string_view what) const {
    auto it = index.find(p);
    if (it == index.end()) {
      throw DomainError("coset digraph: " + std::string(what) + " " + print_cycles(p) +
                        " not in the group");
    }
    return it->second;
  }
};

// Coset id of each group element, cosets numbered by first appearance.
std::vector<int> coset_ids(const CosetDigraphSpec& spec, const GroupIndex& gi,
                           std::vector<int>* representative) {
  std::vector<int> id(spec.group.size(), -1);
  int next = 0;
  for (std::size_t k = 0; k < spec.group.size(); ++k) {
    if (id[k] != -1) continue;
    if (representative) representative->push_back(static_cast<int>(k));
    for (const auto& h : spec.subgroup) {
      id[static_cast<std::size_t>(gi.of(compose(spec.group[k], h), "product"))] = next;
    }
    ++next;
  }
  return id;
}

}  // namespace

void validate(const CosetDigraphSpec& spec) {
  if (spec.group.empty() || spec.connection.empty()) {
    throw DomainError("coset digraph: empty group or connection set");
  }
  const int n = spec.group.front().size();
  GroupIndex gi(spec.group);
  std::vector<Permutation> h = spec.subgroup;
  if (h.empty()) h.push_back(Permutation::identity(n));
  for (const auto& x : h) gi.of(x, "subgroup element");
  for (const auto& s : spec.connection) {
    gi.of(s, "connection element");
    if (std::find(h.begin(), h.end(), s) != h.end()) {
      throw DomainError("coset digraph: condition (i) violated, " + print_cycles(s) +
                        " lies in both S and H");
    }
  }
  std::vector<Permutation> gens = spec.connection;
  gens.insert(gens.end(), h.begin(), h.end());
  GroupBfsOptions opt;
  opt.max_elements = spec.group.size() + 1;
  if (group_bfs(gens, opt).order != spec.group.size()) {
    throw DomainError("coset digraph: condition (i) violated, S u H does not generate the group");
  }

  CosetDigraphSpec hs = spec;
  hs.subgroup = h;
  const std::vector<int> id = coset_ids(hs, gi, nullptr);
  auto coset = [&](const Permutation& p) {
    return id[static_cast<std::size_t>(gi.of(p, "product"))];
  };
  std::vector<int> s_cosets;
  for (const auto& s : spec.connection) s_cosets.push_back(coset(s));
  for (std::size_t x = 0; x < s_cosets.size(); ++x) {
    for (std::size_t y = x + 1; y < s_cosets.size(); ++y) {
      if (s_cosets[x] == s_cosets[y]) {
        throw DomainError("coset digraph: condition (iii) violated, " +
                          print_cycles(spec.connection[x]) + " and " +
                          print_cycles(spec.connection[y]) + " share a coset");
      }
    }
  }
  for (const auto& h1 : h) {
    for (const auto& s : spec.connection) {
      for (const auto& h2 : h) {
        const int c = coset(compose(compose(h1, s), h2));
        if (std::find(s_cosets.begin(), s_cosets.end(), c) == s_cosets.end()) {
          throw DomainError("coset digraph: condition (ii) violated by (h, s, h') = (" +
                            print_cycles(h1) + ", " + print_cycles(s) + ", " +
                            print_cycles(h2) + ")");
        }
      }
    }
  }
}

CosetDigraph coset_digraph(const CosetDigraphSpec& spec_in) {
  validate(spec_in);
  CosetDigraphSpec spec = spec_in;
  if (spec.subgroup.empty()) spec.subgroup.push_back(Permutation::identity(spec.group.front().size()));
  GroupIndex gi(spec.group);
  std::vector<int> rep;
  std::vector<int> id = coset_ids(spec, gi, &rep);
  const int n = static_cast<int>(rep.size());
  const int d = static_cast<int>(spec.connection.size());
  std::vector<int> ports;
  ports.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (int v = 0; v < n; ++v) {
    const Permutation& g = spec.group[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
    for (const auto& s : spec.connection) {
      ports.push_back(id[static_cast<std::size_t>(gi.of(compose(g, s), "product"))]);
    }
  }
  return CosetDigraph{Digraph(n, d, std::move(ports)), std::move(id), std::move(rep)};
}

bool is_irreducible(const CosetDigraphSpec& spec_in) {
  validate(spec_in);
  CosetDigraphSpec spec = spec_in;
  if (spec.subgroup.empty()) spec.subgroup.push_back(Permutation::identity(spec.group.front().size()));
  GroupIndex gi(spec.group);
  const std::vector<int> id = coset_ids(spec, gi, nullptr);
  auto coset = [&](const Permutation& p) {
    return id[static_cast<std::size_t>(gi.of(p, "product"))];
  };
  for (const auto& s : spec.connection) {
    for (const auto& t : spec.connection) {
      const int target = coset(s);
      const bool hit = std::any_of(spec.subgroup.begin(), spec.subgroup.end(),
                                   [&](const Permutation& h) { return coset(compose(h, t)) == target; });
      if (!hit) return false;
    }
  }
  return true;
}

Factorization group_factorization(const CosetDigraphSpec& spec) {
  for (const auto& h : spec.subgroup) {
    if (!h.is_identity()) throw DomainError("group_factorization: subgroup must be trivial");
  }
  const CosetDigraph cd = coset_digraph(spec);
  const Digraph& g = cd.digraph;
  Factorization f;
  for (int s = 0; s < g.degree(); ++s) {
    std::vector<int> img(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) img[static_cast<std::size_t>(v)] = g.out(v, s);
    f.factors.emplace_back(std::move(img));
  }
  return f;
}

Example7 example7_elements() {
  constexpr int n = 25;
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  Example7 e{cycle_mod(n, all),
             parse_cycles("(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)", n),
             {}, {}, {}, Permutation(), Permutation(),
             Permutation::from_cycles(5, {{0, 2, 4}})};
  std::vector<int> a_seq;
  std::vector<int> b_seq;
  for (int i = 0; i < 5; ++i) {
    e.c.push_back(cycle_mod(n, {i, i + 5, i + 10, i + 15, i + 20}));
    e.u.push_back(cycle_mod(n, {5 * i + 2, 5 * i - 2}));
    e.v.push_back(cycle_mod(n, {5 * i, 5 * i + 6}));
    a_seq.insert(a_seq.end(), {20 * i, 20 * i + 7, 20 * i + 4});
    b_seq.insert(b_seq.end(), {5 * i + 7, 5 * i + 21, 5 * i + 24, 5 * i + 8, 5 * i + 20});
  }
  e.t = cycle_mod(n, a_seq);
  e.theta = cycle_mod(n, b_seq);
  return e;
}

std::vector<RelationCheck> verify_example7_relations() {
  constexpr int n = 25;
  const Example7 e = example7_elements();
  const Permutation rho_inv = e.rho.inverse();
  const Permutation sigma_inv = e.sigma.inverse();
  const Permutation all_c = product(e.c, n);
  auto status = [](bool ok) { return ok ? ClaimStatus::kPass : ClaimStatus::kFail; };
  std::vector<RelationCheck> out;

  bool r1 = true;
  for (int i = 0; i < 5; ++i) {
    r1 = r1 && compose(compose(e.rho, e.c[static_cast<std::size_t>(i)]), rho_inv) ==
                   e.c[static_cast<std::size_t>((i + 1) % 5)];
  }
  out.push_back({1, "rho C_i rho^-1 = C_{i+1}", status(r1), ""});

  const Permutation r2 = product({e.t, e.c[1].pow(4), e.c[3]}, n);
  out.push_back({2, "sigma = T C_1^4 C_3", status(r2 == e.sigma), "T = " + print_cycles(e.t)});

  const Permutation c024 = product({e.c[0], e.c[2], e.c[4]}, n);
  const Permutation r3 = product({c024.pow(4), e.c[1].pow(2), e.c[3].pow(3)}, n);
  out.push_back({3, "sigma^3 = (C_0 C_2 C_4)^4 C_1^2 C_3^3", status(e.sigma.pow(3) == r3), ""});

  out.push_back({4, "rho^5 = C_0 C_1 C_2 C_3 C_4", status(e.rho.pow(5) == all_c), ""});

  const Permutation rs = compose(rho_inv, e.sigma);
  std::vector<Permutation> r5_terms = e.u;
  r5_terms.insert(r5_terms.end(), e.v.begin(), e.v.end());
  r5_terms.push_back(e.c[4].pow(3));
  out.push_back({5, "rho^-1 sigma = U_0..U_4 V_0..V_4 C_4^3", status(rs == product(r5_terms, n)),
                 "rho^-1 sigma = " + print_cycles(rs)});

  out.push_back({6, "(rho^-1 sigma)^2 = C_4", status(compose(rs, rs) == e.c[4]), ""});

  const Permutation srs = compose(compose(e.sigma, e.rho), sigma_inv);
  std::string printed_error;
  try {
    parse_cycles("(7,21,24,8,20,12,1,4,13,0,17,9,18,5,22,11,14,23,10,22,16,19,3,15)", n);
  } catch (const ParseError& ex) {
    printed_error = ex.what();
  }
  std::ostringstream d7;
  d7 << "printed theta rejected (" << (printed_error.empty() ? "accepted" : printed_error)
     << "); computed sigma rho sigma^-1 = " << print_cycles(srs)
     << "; b-sequence theta " << (srs == e.theta ? "matches" : "differs");
  out.push_back({7, "sigma rho sigma^-1 = theta", ClaimStatus::kFlaggedTypo, d7.str()});

  out.push_back({8, "theta^5 = C_0 C_1 C_2 C_3 C_4", status(e.theta.pow(5) == all_c), ""});

  bool r9 = true;
  for (int i = 0; i < 5; ++i) {
    r9 = r9 && compose(compose(e.sigma, e.c[static_cast<std::size_t>(i)]), sigma_inv) ==
                   e.c[static_cast<std::size_t>(e.pi(i))];
  }
  out.push_back({9, "sigma C_i sigma^-1 = C_{pi(i)}", status(r9), "pi = " + print_cycles(e.pi)});
  return out;
}

Example8 example8_construct() {
  constexpr int n = 49;
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  const Permutation rho = cycle_mod(n, all);
  std::vector<Permutation> terms;
  for (int i = 0; i < 7; ++i) terms.push_back(cycle_mod(n, {7 * i + 2, 7 * i - 2}));
  for (int i = 0; i < 7; ++i) terms.push_back(cycle_mod(n, {7 * i, 7 * i - 6}));
  for (int i = 0; i < 7; ++i) terms.push_back(cycle_mod(n, {7 * i + 4, 7 * i - 4}));
  terms.push_back(cycle_mod(n, {6, 13, 20, 27, 34, 41, 48}).pow(4));
  const Permutation sigma = compose(product(terms, n), rho);
  std::vector<Permutation> factors{rho, sigma};
  return Example8{rho, sigma, from_factors(factors)};
}

Permutation example8_printed_sigma() {
  return parse_cycles(
      "(0,7,14,21,28,35,42)(1,47,27,22,19,48,43,40,20,15,12,41,36,33,13,8,5,34,29,26,6)"
      "(2,11,16,25,30,39,44,4,9,18,23,32,37,46)(3,45,38,31,24,17,10)",
      49);
}

DisjointGeneratorProbe probe_disjoint_generators(int a, int b, std::uint64_t seed,
                                                 int max_attempts,
                                                 std::uint64_t max_elements) {
  const std::uint64_t target = universal_order(a, b);
  std::mt19937_64 rng(seed);
  auto random_perm = [&](int k) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) img[static_cast<std::size_t>(v)] = v;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
  };
  auto random_sd = [&] {
    std::vector<Permutation> inner;
    for (int j = 0; j < a; ++j) inner.push_back(random_perm(b));
    return SemiDirectPerm(a, b, random_perm(a), std::move(inner));
  };
  DisjointGeneratorProbe probe;
  GroupBfsOptions opt;
  opt.max_elements = std::min(max_elements, target + 1);
  while (probe.attempts < max_attempts) {
    ++probe.attempts;
    SemiDirectPerm x = random_sd();
    SemiDirectPerm y = random_sd();
    const Permutation fx = flatten(x);
    const Permutation fy = flatten(y);
    if (!is_derangement(fx) || !is_derangement(fy) || !are_disjoint(fx, fy)) continue;
    const GroupBfsResult r = group_bfs({fx, fy}, opt);
    if (r.complete && r.order == target) {
      probe.found = true;
      probe.pair.emplace(std::move(x), std::move(y));
      break;
    }
  }
  return probe;
}

}  // namespace dgdd
