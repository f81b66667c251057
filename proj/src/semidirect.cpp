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

#include "dgdd/semidirect.hpp"

#include <string>

#include "dgdd/errors.hpp"

namespace dgdd {

SemiDirectPerm::SemiDirectPerm(int a, int b, Permutation outer,
                               std::vector<Permutation> inner)
    : a_(a), b_(b), outer_(std::move(outer)), inner_(std::move(inner)) {
  if (a < 1 || b < 1) throw DomainError("semi-direct dimensions must be >= 1");
  if (outer_.size() != a) {
    throw DomainError("outer permutation has size " +
                      std::to_string(outer_.size()) + ", expected " +
                      std::to_string(a));
  }
  if (static_cast<int>(inner_.size()) != a) {
    throw DomainError("expected " + std::to_string(a) +
                      " inner permutations, got " +
                      std::to_string(inner_.size()));
  }
  for (const auto& x : inner_) {
    if (x.size() != b) {
      throw DomainError("inner permutation has size " +
                        std::to_string(x.size()) + ", expected " +
                        std::to_string(b));
    }
  }
}

SemiDirectPerm SemiDirectPerm::identity(int a, int b) {
  return SemiDirectPerm(a, b, Permutation::identity(a),
                        std::vector<Permutation>(static_cast<std::size_t>(a),
                                                 Permutation::identity(b)));
}

SemiDirectPerm SemiDirectPerm::from_outer(int b, Permutation outer) {
  const int a = outer.size();
  return SemiDirectPerm(
      a, b, std::move(outer),
      std::vector<Permutation>(static_cast<std::size_t>(a),
                               Permutation::identity(b)));
}

SemiDirectPerm SemiDirectPerm::from_inner(int a, int coord, Permutation g) {
  const int b = g.size();
  std::vector<Permutation> inner(static_cast<std::size_t>(a),
                                 Permutation::identity(b));
  inner.at(static_cast<std::size_t>(coord)) = std::move(g);
  return SemiDirectPerm(a, b, Permutation::identity(a), std::move(inner));
}

namespace {

void require_same_shape(const SemiDirectPerm& x, const SemiDirectPerm& y) {
  if (x.a() != y.a() || x.b() != y.b()) {
    throw DomainError("semi-direct dimension mismatch: (" +
                      std::to_string(x.a()) + "," + std::to_string(x.b()) +
                      ") vs (" + std::to_string(y.a()) + "," +
                      std::to_string(y.b()) + ")");
  }
}

}  // namespace

// A(B(j, i)) = A(beta(j), B_j(i)) = (alpha(beta(j)), A_{beta(j)}(B_j(i))).
SemiDirectPerm sd_compose(const SemiDirectPerm& lhs, const SemiDirectPerm& rhs) {
  require_same_shape(lhs, rhs);
  std::vector<Permutation> inner;
  inner.reserve(static_cast<std::size_t>(lhs.a()));
  for (int j = 0; j < lhs.a(); ++j) {
    inner.push_back(compose(lhs.inner(rhs.outer()(j)), rhs.inner(j)));
  }
  return SemiDirectPerm(lhs.a(), lhs.b(), compose(lhs.outer(), rhs.outer()),
                        std::move(inner));
}

// A^-1(j, i) = (alpha^-1(j), (A_{alpha^-1(j)})^-1(i)).
SemiDirectPerm sd_inverse(const SemiDirectPerm& x) {
  const Permutation outer_inv = x.outer().inverse();
  std::vector<Permutation> inner;
  inner.reserve(static_cast<std::size_t>(x.a()));
  for (int j = 0; j < x.a(); ++j) {
    inner.push_back(x.inner(outer_inv(j)).inverse());
  }
  return SemiDirectPerm(x.a(), x.b(), outer_inv, std::move(inner));
}

Permutation flatten(const SemiDirectPerm& x) {
  const int a = x.a();
  std::vector<int> images(static_cast<std::size_t>(a * x.b()));
  for (int j = 0; j < a; ++j) {
    const int jj = x.outer()(j);
    const Permutation& inner = x.inner(j);
    for (int i = 0; i < x.b(); ++i) {
      images[flat_index(a, j, i)] = flat_index(a, jj, inner(i));
    }
  }
  return Permutation(std::move(images));
}

SemiDirectPerm unflatten(const Permutation& p, int a, int b) {
  if (a < 1 || b < 1 || p.size() != a * b) {
    throw DomainError("unflatten: permutation of size " +
                      std::to_string(p.size()) + " is not on Z_" +
                      std::to_string(a) + " x Z_" + std::to_string(b));
  }
  std::vector<int> outer(static_cast<std::size_t>(a));
  std::vector<Permutation> inner;
  inner.reserve(static_cast<std::size_t>(a));
  for (int j = 0; j < a; ++j) {
    const int col = p(flat_index(a, j, 0)) % a;
    std::vector<int> images(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
      const int k = p(flat_index(a, j, i));
      if (k % a != col) {
        throw NotSemiDirect("not semi-direct: column of image of (" +
                            std::to_string(j) + ", " + std::to_string(i) +
                            ") is " + std::to_string(k % a) + ", but (" +
                            std::to_string(j) + ", 0) maps to column " +
                            std::to_string(col));
      }
      images[i] = k / a;
    }
    outer[j] = col;
    // A bijection on Z_ab whose columns map column-wise has bijective parts.
    inner.emplace_back(std::move(images));
  }
  return SemiDirectPerm(a, b, Permutation(std::move(outer)), std::move(inner));
}

bool is_semi_direct(const Permutation& p, int a, int b) {
  if (p.size() != a * b) return false;
  for (int j = 0; j < a; ++j) {
    const int col = p(j) % a;
    for (int i = 1; i < b; ++i) {
      if (p(flat_index(a, j, i)) % a != col) return false;
    }
  }
  return true;
}

bool is_sd_derangement(const SemiDirectPerm& x) {
  for (int j = 0; j < x.a(); ++j) {
    if (x.outer()(j) == j && !is_derangement(x.inner(j))) return false;
  }
  return true;
}

}  // namespace dgdd
