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

// Cyclic-difference digraphs (CDD) and generalized cyclic-difference digraphs
// (GCD).
//
// A CDD on Z_n, n = ab, has the factors Z(k) = k + 1 and
//   Y(ia + j) = (i + t_j) a + pi(j)   (mod n).
// A GCD has a semi-direct derangement Z and Y = Z T for a semi-direct T.

#include <optional>
#include <vector>

#include "dgdd/digraph.hpp"
#include "dgdd/semidirect.hpp"

namespace dgdd {

class CddParams {
 public:
  // Throws InvalidParams (naming a vertex) when Y has a fixed point or
  // shares an edge with Z, and DomainError for malformed dimensions.
  CddParams(int a, int b, Permutation pi, std::vector<int> t);

  int a() const { return a_; }
  int b() const { return b_; }
  int n() const { return a_ * b_; }
  const Permutation& pi() const { return pi_; }
  const std::vector<int>& t() const { return t_; }
  const Permutation& companion() const { return y_; }

  friend bool operator==(const CddParams& x, const CddParams& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.pi_ == y.pi_ && x.t_ == y.t_;
  }

 private:
  int a_;
  int b_;
  Permutation pi_;
  std::vector<int> t_;  // reduced mod b
  Permutation y_;
};

// Y(ia + j) = (i + t_j) a + pi(j) without validity checks.
Permutation cdd_companion(int a, int b, const Permutation& pi,
                          const std::vector<int>& t);
// Reads (pi, t) back from a companion; nullopt if y is not of CDD form or
// the resulting parameters are invalid.
std::optional<CddParams> extract_cdd_params(const Permutation& y, int a, int b);

CddParams example5_params();

struct CddDigraph {
  Permutation z;
  Permutation y;
  Digraph digraph;
};
CddDigraph cdd_build(const CddParams& p);

// alpha * c, where c is the length of pi's cycle through j and alpha the
// least positive integer with alpha * (t_j + t_pi(j) + ...) = 0 mod b.
int y_cycle_length(const CddParams& p, int j, int i);

// tau(ia + j) = (i + 1) a + j.
Permutation cdd_tau(const CddParams& p);
bool tau_is_automorphism(const CddParams& p);

// Parameters of the same digraph relabeled by k -> k + 1 (mod n), obtained
// by conjugating Y and re-extracting.
CddParams shift_isomorphism(const CddParams& p);

// Max eccentricity over the representatives (j, 0), j < a; tau makes every
// other vertex equivalent to one of these. Throws NotStronglyConnected.
int cdd_diameter(const CddParams& p);

struct GcdPair {
  SemiDirectPerm z;
  SemiDirectPerm t;
  Permutation y;  // flatten(z) o flatten(t)
};

struct Gcd {
  GcdPair pair;
  Digraph digraph;  // from_factors([flatten(z), y])
};

// Throws InvalidParams "T has fixed point" (Z and Y would share an edge) or
// "Y has fixed point" (loop), and DomainError when Z is not a semi-direct
// derangement or the shapes differ.
Gcd gcd_build(const SemiDirectPerm& z, const SemiDirectPerm& t);

// Z = (j -> j+1; identity except Z_{a-1} = +1), T = (pi(j) - 1; +t_j) with
// the -1 correction at the j with pi(j) - 1 = a - 1.
GcdPair cdd_to_gcd(const CddParams& p);

// Degree-2 digraph G with factors F_0, F_1 -> GCD on Z_2 x Z_n with
// Z = (id; F_0, F_1) and T = ((0,1); id, id), isomorphic to L(G).
Gcd linedigraph_as_gcd(const Factorization& f);
Gcd linedigraph_as_gcd(const Digraph& g);

// At every v either
//   B1: alpha(v) = Z^-1 alpha Z(v) = T^-1 Z^-1 alpha Z T(v), or
//   B2: alpha(v) = Z^-1 alpha Z T(v) = T^-1 Z^-1 alpha Z(v),
// with T = Z^-1 Y. Throws DomainError on size mismatch.
bool theorem7_check(const Permutation& z, const Permutation& y,
                    const Permutation& alpha);

}  // namespace dgdd
