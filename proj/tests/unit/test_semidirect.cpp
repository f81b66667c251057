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

#include "dgdd/errors.hpp"
#include "dgdd/semidirect.hpp"

namespace dgdd {
namespace {

TEST(SemiDirect, FlatIndexConvention) {
  EXPECT_EQ(flat_index(5, 2, 3), 17);
  EXPECT_EQ(flat_index(3, 0, 0), 0);
}

TEST(SemiDirect, PointwiseEvaluation) {
  const SemiDirectPerm x(2, 3, parse_cycles("(0,1)", 2),
                         {Permutation::rotation(3), Permutation::identity(3)});
  EXPECT_EQ(x(0, 2), (std::pair<int, int>{1, 0}));
  EXPECT_EQ(x(1, 2), (std::pair<int, int>{0, 2}));
  EXPECT_EQ(flatten(x)(flat_index(2, 0, 2)), flat_index(2, 1, 0));
}

TEST(SemiDirect, ComposeMatchesFlattenedComposition) {
  const SemiDirectPerm x(3, 2, Permutation::rotation(3),
                         {parse_cycles("(0,1)", 2), Permutation::identity(2), Permutation::identity(2)});
  const SemiDirectPerm y(3, 2, parse_cycles("(0,1)", 3),
                         {Permutation::identity(2), Permutation::identity(2), parse_cycles("(0,1)", 2)});
  EXPECT_EQ(flatten(sd_compose(x, y)), compose(flatten(x), flatten(y)));
  EXPECT_EQ(flatten(sd_inverse(x)), flatten(x).inverse());
  EXPECT_EQ(sd_compose(x, sd_inverse(x)), SemiDirectPerm::identity(3, 2));
}

TEST(SemiDirect, UnflattenRecoversFactors) {
  // (0,1)(3,4)(6,7)(2,5,8) swaps coordinates 0 and 1 and rotates coordinate 2.
  const SemiDirectPerm x = unflatten(parse_cycles("(0,1)(3,4)(6,7)(2,5,8)", 9), 3, 3);
  EXPECT_EQ(x.outer(), parse_cycles("(0,1)", 3));
  EXPECT_TRUE(x.inner(0).is_identity());
  EXPECT_TRUE(x.inner(1).is_identity());
  EXPECT_EQ(x.inner(2), Permutation::rotation(3));
}

TEST(SemiDirect, UnflattenRejectsBlockMixing) {
  EXPECT_THROW(unflatten(parse_cycles("(0,1,2)", 4), 2, 2), NotSemiDirect);
  EXPECT_FALSE(is_semi_direct(parse_cycles("(0,1,2)", 4), 2, 2));
  EXPECT_THROW(unflatten(Permutation::identity(5), 2, 2), DomainError);
}

TEST(SemiDirect, ConstructorValidatesShapes) {
  EXPECT_THROW(SemiDirectPerm(2, 3, Permutation::identity(3),
                              {Permutation::identity(3), Permutation::identity(3)}),
               DomainError);
  EXPECT_THROW(SemiDirectPerm(2, 3, Permutation::identity(2), {Permutation::identity(3)}),
               DomainError);
  EXPECT_THROW(SemiDirectPerm(2, 3, Permutation::identity(2),
                              {Permutation::identity(3), Permutation::identity(2)}),
               DomainError);
}

TEST(SemiDirect, DerangementTest) {
  EXPECT_TRUE(is_sd_derangement(SemiDirectPerm::from_outer(3, Permutation::rotation(2))));
  EXPECT_TRUE(is_sd_derangement(SemiDirectPerm(2, 3, Permutation::identity(2),
                                               {Permutation::rotation(3), Permutation::rotation(3)})));
  EXPECT_FALSE(is_sd_derangement(SemiDirectPerm::from_inner(2, 0, Permutation::rotation(3))));
}

}  // namespace
}  // namespace dgdd
