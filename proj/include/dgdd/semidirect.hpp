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

// Semi-direct permutations on Z_a x Z_b: X(j, i) = (outer(j), inner_j(i)).
// They form the wreath product U_ab = S_b wr S_a. Vertex (j, i) is flattened
// to k = i * a + j everywhere.

#include <vector>

#include "dgdd/perm.hpp"

namespace dgdd {

inline int flat_index(int a, int j, int i) { return i * a + j; }

class SemiDirectPerm {
 public:
  // Throws DomainError if outer.size() != a, inner.size() != a, or any
  // inner permutation has size != b.
  SemiDirectPerm(int a, int b, Permutation outer, std::vector<Permutation> inner);

  static SemiDirectPerm identity(int a, int b);
  // Outer permutation with identity inner parts.
  static SemiDirectPerm from_outer(int b, Permutation outer);
  // Identity outer permutation; `coord` carries g, the others the identity.
  static SemiDirectPerm from_inner(int a, int coord, Permutation g);

  int a() const { return a_; }
  int b() const { return b_; }
  const Permutation& outer() const { return outer_; }
  const std::vector<Permutation>& inner() const { return inner_; }
  const Permutation& inner(int j) const { return inner_[static_cast<std::size_t>(j)]; }

  // Pointwise evaluation on the pair (j, i).
  std::pair<int, int> operator()(int j, int i) const {
    return {outer_(j), inner(j)(i)};
  }

  friend bool operator==(const SemiDirectPerm&, const SemiDirectPerm&) = default;

 private:
  int a_;
  int b_;
  Permutation outer_;
  std::vector<Permutation> inner_;
};

// Pointwise composition: sd_compose(A, B)(v) = A(B(v)).
SemiDirectPerm sd_compose(const SemiDirectPerm& lhs, const SemiDirectPerm& rhs);
inline SemiDirectPerm operator*(const SemiDirectPerm& lhs,
                                const SemiDirectPerm& rhs) {
  return sd_compose(lhs, rhs);
}
SemiDirectPerm sd_inverse(const SemiDirectPerm& x);

Permutation flatten(const SemiDirectPerm& x);
// Inverse of flatten. Throws NotSemiDirect when the column of an image
// depends on i, and DomainError when p.size() != a * b.
SemiDirectPerm unflatten(const Permutation& p, int a, int b);
bool is_semi_direct(const Permutation& p, int a, int b);

// For every j, either inner_j is a derangement or outer moves j.
bool is_sd_derangement(const SemiDirectPerm& x);

}  // namespace dgdd
