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

// Permutations of {0, ..., n-1} stored as image arrays.
//
// Composition is right-to-left function application:
//   compose(p, q)(v) == p(q(v)),
// so the word "pq" means "apply q, then p". Cycle notation "(a,b,c)" maps
// a -> b -> c -> a.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgdd {

class Permutation {
 public:
  Permutation() = default;

  // Throws DomainError unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // k -> k + step (mod n).
  static Permutation rotation(int n, int step = 1);
  // Builds from explicit cycles; entries are reduced mod n.
  static Permutation from_cycles(int n,
                                 std::initializer_list<std::vector<int>> cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;

  // Cycle through v, starting at v.
  std::vector<int> cycle_of(int v) const;
  // Sorted list of nontrivial cycle lengths, e.g. {5, 5, 15}.
  std::vector<int> cycle_type() const;
  // Smallest k > 0 with p^k = id.
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// compose(p, q)(v) = p(q(v)). Throws DomainError on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}
// g p g^-1
Permutation conjugate(const Permutation& p, const Permutation& g);

bool is_derangement(const Permutation& p);
// Disjoint as 1-factors: p(v) != q(v) for every v.
bool are_disjoint(const Permutation& p, const Permutation& q);

// Parses "(0,5,10)(3,8)". Empty text and "()" give the identity.
// Throws ParseError on malformed parentheses, repeated indices, or indices
// outside [0, n).
Permutation parse_cycles(std::string_view text, int n);
// Canonical cycle form: each cycle starts at its minimum, cycles ordered by
// that minimum, fixed points omitted. The identity prints as "()".
std::string print_cycles(const Permutation& p);

// Image-array form "3 4 5 0 1 2" (an optional "p:" prefix is accepted).
Permutation parse_images(std::string_view text);
std::string print_images(const Permutation& p);

}  // namespace dgdd
