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

#include <sstream>

#include "dgdd/builtins.hpp"
#include "dgdd/errors.hpp"
#include "dgdd/io.hpp"

namespace dgdd {
namespace {

template <class T, class W, class R>
T round_trip(const T& value, W write, R read) {
  std::stringstream ss;
  write(ss, value);
  return read(ss);
}

int parse_error_line(const std::string& text, auto reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Io, DigraphRoundTrip) {
  const Digraph g = alegre();
  EXPECT_EQ(round_trip(g, write_digraph, read_digraph), g);
  EXPECT_EQ(round_trip(kautz(3, 2), write_digraph, read_digraph), kautz(3, 2));
}

TEST(Io, FactorizationRoundTrip) {
  const Factorization f = alegre_factors();
  const Factorization back = round_trip(f, write_factorization, read_factorization);
  EXPECT_EQ(back.factors, f.factors);
}

TEST(Io, FactorizationAcceptsImageLines) {
  std::istringstream in("# two factors\n3 2\np: 1 2 0\n\n(0,2,1)\n");
  const Factorization f = read_factorization(in);
  ASSERT_EQ(f.degree(), 2);
  EXPECT_EQ(f.factors[0], Permutation::rotation(3));
  EXPECT_EQ(f.factors[1], Permutation::rotation(3, 2));
}

TEST(Io, GroupoidRoundTrip) {
  for (const GroupoidTable& t : {example1_table(), example2_table()}) {
    const GroupoidTable back = round_trip(t, write_groupoid, read_groupoid);
    EXPECT_EQ(back.n, t.n);
    EXPECT_EQ(back.table, t.table);
    EXPECT_EQ(back.identity, t.identity);
    EXPECT_EQ(back.gens, t.gens);
  }
}

TEST(Io, CddParamsRoundTrip) {
  const CddParams p = example5_params();
  EXPECT_EQ(round_trip(p, write_cdd_params, read_cdd_params), p);
}

TEST(Io, DigraphInputDetectsFactorFiles) {
  std::stringstream ss;
  write_factorization(ss, alegre_factors());
  const DigraphInput in = read_digraph_input(ss);
  ASSERT_TRUE(in.factors.has_value());
  EXPECT_EQ(in.digraph, alegre());
  std::stringstream plain;
  write_digraph(plain, alegre());
  EXPECT_FALSE(read_digraph_input(plain).factors.has_value());
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("# header\n3 2\n1 2\n0 x\n", read_digraph), 4);
  EXPECT_GE(parse_error_line("3 2\n1 2\n0 1\n", read_digraph), 0);
  EXPECT_EQ(parse_error_line("3 2\n(0,1,2)\n(0,1\n", read_factorization), 3);
  EXPECT_EQ(parse_error_line("\n\n5 5\npi=(0,9)\n", read_cdd_params), 4);
  EXPECT_GE(parse_error_line("", read_groupoid), 0);
}

TEST(Io, RejectsOutOfRangeTargets) {
  std::istringstream in("2 1\n1\n5\n");
  EXPECT_THROW(read_digraph(in), Error);
}

TEST(Io, DotOutput) {
  std::ostringstream out;
  write_dot(out, directed_cycle(3));
  const std::string s = out.str();
  EXPECT_NE(s.find("digraph"), std::string::npos);
  EXPECT_NE(s.find("2 -> 0"), std::string::npos);
}

TEST(Io, MissingFile) {
  EXPECT_THROW(read_text_file("/nonexistent/dgdd/file"), Error);
}

}  // namespace
}  // namespace dgdd
