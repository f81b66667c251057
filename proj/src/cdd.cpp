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

#include "dgdd/cdd.hpp"

#include <numeric>
#include <string>

#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

}  // namespace

Permutation cdd_companion(int a, int b, const Permutation& pi,
                          const std::vector<int>& t) {
  if (a < 1 || b < 1 || pi.size() != a || static_cast<int>(t.size()) != a) {
    throw DomainError("cdd: pi and t must have length a = " + std::to_string(a));
  }
  const int n = a * b;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < a; ++j) {
      images[static_cast<std::size_t>(i * a + j)] = mod(i + t[j], b) * a + pi(j);
    }
  }
  return Permutation(std::move(images));
}

CddParams::CddParams(int a, int b, Permutation pi, std::vector<int> t)
    : a_(a), b_(b), pi_(std::move(pi)), t_(std::move(t)) {
  if (a < 2 || b < 2) {
    throw DomainError("cdd: a and b must both be at least 2 (got a = " +
                      std::to_string(a) + ", b = " + std::to_string(b) + ")");
  }
  for (int& x : t_) x = mod(x, b);
  y_ = cdd_companion(a_, b_, pi_, t_);
  const int n = a * b;
  for (int k = 0; k < n; ++k) {
    if (y_(k) == k) throw InvalidParams("cdd: Y has a fixed point", k);
    if (y_(k) == (k + 1) % n) throw InvalidParams("cdd: Y shares an edge with Z", k);
  }
}

std::optional<CddParams> extract_cdd_params(const Permutation& y, int a, int b) {
  if (a < 2 || b < 2 || y.size() != a * b) return std::nullopt;
  std::vector<int> pi(static_cast<std::size_t>(a));
  std::vector<int> t(static_cast<std::size_t>(a));
  for (int j = 0; j < a; ++j) {
    pi[j] = y(j) % a;
    t[j] = y(j) / a;
  }
  try {
    CddParams p(a, b, Permutation(std::move(pi)), std::move(t));
    if (p.companion() != y) return std::nullopt;
    return p;
  } catch (const Error&) {
    return std::nullopt;
  }
}

CddParams example5_params() {
  return CddParams(5, 5, parse_cycles("(0,2,4)", 5), {1, 4, 4, 1, 4});
}

CddDigraph cdd_build(const CddParams& p) {
  const Permutation z = Permutation::rotation(p.n());
  return CddDigraph{z, p.companion(),
                    from_factors(std::vector<Permutation>{z, p.companion()})};
}

int y_cycle_length(const CddParams& p, int j, int /*i*/) {
  int c = 0;
  int sum = 0;
  int x = j;
  do {
    sum += p.t()[static_cast<std::size_t>(x)];
    x = p.pi()(x);
    ++c;
  } while (x != j);
  const int b = p.b();
  const int alpha = b / std::gcd(mod(sum, b), b);
  return alpha * c;
}

Permutation cdd_tau(const CddParams& p) {
  return Permutation::rotation(p.n(), p.a());
}

bool tau_is_automorphism(const CddParams& p) {
  return is_automorphism(cdd_build(p).digraph, cdd_tau(p));
}

CddParams shift_isomorphism(const CddParams& p) {
  const Permutation mu = Permutation::rotation(p.n());
  const Permutation shifted = conjugate(p.companion(), mu);
  auto q = extract_cdd_params(shifted, p.a(), p.b());
  if (!q) throw Error("internal: shifted companion is not of cyclic-difference form");
  return *q;
}

int cdd_diameter(const CddParams& p) {
  const Digraph g = cdd_build(p).digraph;
  int diam = 0;
  for (int j = 0; j < p.a(); ++j) {
    const auto dist = distances_from(g, j);
    for (int w = 0; w < p.n(); ++w) {
      if (dist[w] < 0) throw NotStronglyConnected(j, w);
      diam = std::max(diam, dist[w]);
    }
  }
  return diam;
}

Gcd gcd_build(const SemiDirectPerm& z, const SemiDirectPerm& t) {
  if (z.a() != t.a() || z.b() != t.b()) {
    throw DomainError("gcd_build: Z and T have different shapes");
  }
  if (!is_sd_derangement(z)) {
    throw DomainError("gcd_build: Z is not a semi-direct derangement");
  }
  const Permutation zf = flatten(z);
  const Permutation tf = flatten(t);
  for (int k = 0; k < tf.size(); ++k) {
    if (tf(k) == k) throw InvalidParams("gcd: T has fixed point", k);
  }
  const Permutation y = compose(zf, tf);
  for (int k = 0; k < y.size(); ++k) {
    if (y(k) == k) throw InvalidParams("gcd: Y has fixed point", k);
  }
  Digraph g = from_factors(std::vector<Permutation>{zf, y});
  return Gcd{GcdPair{z, t, y}, std::move(g)};
}

GcdPair cdd_to_gcd(const CddParams& p) {
  const int a = p.a();
  const int b = p.b();
  std::vector<Permutation> z_inner(static_cast<std::size_t>(a), Permutation::identity(b));
  z_inner[static_cast<std::size_t>(a - 1)] = Permutation::rotation(b);
  const SemiDirectPerm z(a, b, Permutation::rotation(a), std::move(z_inner));

  std::vector<int> theta(static_cast<std::size_t>(a));
  for (int j = 0; j < a; ++j) theta[j] = mod(p.pi()(j) - 1, a);
  std::vector<Permutation> t_inner;
  for (int j = 0; j < a; ++j) {
    // Z adds 1 to i on column a-1, so the column T sends there takes t_j - 1.
    const int shift = p.t()[static_cast<std::size_t>(j)] - (theta[j] == a - 1 ? 1 : 0);
    t_inner.push_back(Permutation::rotation(b, shift));
  }
  const SemiDirectPerm t(a, b, Permutation(std::move(theta)), std::move(t_inner));
  return GcdPair{z, t, compose(flatten(z), flatten(t))};
}

Gcd linedigraph_as_gcd(const Factorization& f) {
  if (f.degree() != 2) throw DomainError("linedigraph_as_gcd: need exactly two factors");
  const int n = f.order();
  const SemiDirectPerm z(2, n, Permutation::identity(2), {f.factors[0], f.factors[1]});
  const SemiDirectPerm t = SemiDirectPerm::from_outer(n, Permutation::rotation(2));
  return gcd_build(z, t);
}

Gcd linedigraph_as_gcd(const Digraph& g) {
  if (g.degree() != 2) throw DomainError("linedigraph_as_gcd: digraph must have degree 2");
  return linedigraph_as_gcd(petersen_factorize(g));
}

bool theorem7_check(const Permutation& z, const Permutation& y,
                    const Permutation& alpha) {
  if (z.size() != y.size() || z.size() != alpha.size()) {
    throw DomainError("theorem7_check: size mismatch");
  }
  const Permutation zi = z.inverse();
  const Permutation t = compose(zi, y);
  const Permutation ti = t.inverse();
  const Permutation za = compose(zi, compose(alpha, z));         // Z^-1 a Z
  const Permutation b1 = compose(ti, compose(za, t));            // T^-1 Z^-1 a Z T
  const Permutation b2_first = compose(za, t);                   // Z^-1 a Z T
  const Permutation b2_second = compose(ti, za);                 // T^-1 Z^-1 a Z
  for (int v = 0; v < z.size(); ++v) {
    const int av = alpha(v);
    const bool cond1 = av == za(v) && av == b1(v);
    const bool cond2 = av == b2_first(v) && av == b2_second(v);
    if (!cond1 && !cond2) return false;
  }
  return true;
}

}  // namespace dgdd
