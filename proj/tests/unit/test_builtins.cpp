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
#include "dgdd/errors.hpp"
#include "oracles.hpp"

namespace dgdd {
namespace {

TEST(Builtins, EveryNameBuilds) {
  for (const auto& name : builtin_names()) {
    const Builtin b = builtin(name);
    EXPECT_GT(b.digraph.order(), 0) << name;
    if (b.factors) EXPECT_TRUE(is_factorization_of(*b.factors, b.digraph)) << name;
  }
  EXPECT_THROW(builtin("no-such-digraph"), DomainError);
}

TEST(Builtins, KnownParameters) {
  EXPECT_EQ(alegre().order(), 25);
  EXPECT_EQ(diameter(alegre()), 4);
  EXPECT_EQ(kautz(2, 3).order(), 12);
  EXPECT_EQ(diameter(kautz(2, 3)), 3);
  EXPECT_EQ(diameter(from_factors(example10_3_factors())), 2);
  EXPECT_EQ(diameter(line_digraph(from_factors(example10_3_factors()))), 3);
  for (const auto& y : example11_companions()) {
    EXPECT_EQ(y.size(), 12);
    EXPECT_EQ(oracle::floyd_diameter(from_factors(std::vector{Permutation::rotation(12), y})), 3);
  }
}

TEST(Builtins, OptionsAreHonoured) {
  BuiltinOptions o;
  o.n = 9;
  EXPECT_EQ(builtin("cycle", o).digraph.order(), 9);
  o.d = 3;
  o.diameter = 2;
  EXPECT_EQ(builtin("kautz", o).digraph.order(), 12);
}

}  // namespace
}  // namespace dgdd
