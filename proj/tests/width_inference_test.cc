// Copyright 2026 The qamhls Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qamhls/width_inference.h"

#include "gtest/gtest.h"
#include "qamhls/text_format.h"
#include "support/random_models.h"

namespace qamhls {
namespace {

WidthInfo RootInfo(const ExprNode& e) { return InferWidths(e)->front().info; }

TEST(MinWidthTest, Examples) {
  EXPECT_EQ(MinWidth(0, 1023, false), 10);
  EXPECT_EQ(MinWidth(0, 1024, false), 11);
  EXPECT_EQ(MinWidth(0, 0, false), 1);
  EXPECT_EQ(MinWidth(-1, 0, true), 1);
  EXPECT_EQ(MinWidth(0, 1, true), 2);
  EXPECT_EQ(MinWidth(-128, 127, true), 8);
  EXPECT_EQ(MinWidth(-129, 0, true), 9);
  EXPECT_EQ(MinWidth(0, 255, false), 8);
}

TEST(InferWidthsTest, LoopCounter) {
  const WidthInfo w = RootInfo(RangeLeaf("i", 0, 1023));
  EXPECT_EQ(w.width, 10);
  EXPECT_FALSE(w.is_signed);
}

TEST(InferWidthsTest, Int17Cast) {
  const ExprNode e = CastNode(
      17, true,
      AddNode(DeclaredLeaf("a", 32, true),
              MulNode(DeclaredLeaf("b", 32, true), DeclaredLeaf("c", 32, true))));
  const auto nodes = *InferWidths(e);
  EXPECT_EQ(nodes[0].info.width, 17);
  EXPECT_EQ(nodes[0].info.lo, -65536);
  EXPECT_EQ(nodes[0].info.hi, 65535);
  // Without the cast the sum needs the full 64 bits.
  EXPECT_EQ(nodes[1].info.width, 64);
}

TEST(InferWidthsTest, StandardRules) {
  const ExprNode a = DeclaredLeaf("a", 10, true);
  const ExprNode b = DeclaredLeaf("b", 10, true);
  EXPECT_EQ(RootInfo(MulNode(a, b)).width, 20);
  EXPECT_EQ(RootInfo(AddNode(a, b)).width, 11);
  EXPECT_EQ(RootInfo(SubNode(a, b)).width, 11);
  const ExprNode u = DeclaredLeaf("u", 8, false);
  EXPECT_EQ(RootInfo(MulNode(u, u)).width, 16);
  EXPECT_EQ(RootInfo(AddNode(u, u)).width, 9);
  // Unsigned minus unsigned can go negative.
  const WidthInfo d = RootInfo(SubNode(u, u));
  EXPECT_TRUE(d.is_signed);
  EXPECT_EQ(d.width, 9);
}

TEST(InferWidthsTest, ShiftsAndCasts) {
  WidthInfo w = RootInfo(ShrNode(1, RangeLeaf("x", -5, 5)));
  EXPECT_EQ(w.lo, -3);
  EXPECT_EQ(w.hi, 2);
  w = RootInfo(ShlNode(3, RangeLeaf("x", -5, 5)));
  EXPECT_EQ(w.lo, -40);
  EXPECT_EQ(w.hi, 40);
  // A fitting cast keeps the tighter interval but takes the declared width.
  w = RootInfo(CastNode(12, true, RangeLeaf("x", -5, 5)));
  EXPECT_EQ(w.lo, -5);
  EXPECT_EQ(w.width, 12);
  // An overflowing cast wraps, so anything in the type is possible.
  w = RootInfo(CastNode(4, false, RangeLeaf("x", 0, 20)));
  EXPECT_EQ(w.lo, 0);
  EXPECT_EQ(w.hi, 15);
}

TEST(InferWidthsTest, WidthAbove64IsAnError) {
  const ExprNode big =
      MulNode(DeclaredLeaf("a", 64, true), DeclaredLeaf("b", 64, true));
  EXPECT_EQ(InferWidths(big).status().code(), absl::StatusCode::kOutOfRange);
  EXPECT_FALSE(InferWidths(DeclaredLeaf("a", 65, true)).ok());
  EXPECT_FALSE(InferWidths(CastNode(70, true, RangeLeaf("x", 0, 1))).ok());
  EXPECT_TRUE(InferWidths(CastNode(
                  16, true, MulNode(DeclaredLeaf("a", 32, true),
                                    DeclaredLeaf("b", 32, true))))
                  .ok());
}

TEST(EvaluateExprTest, WrapAndFloor) {
  const std::map<std::string, BigInt> env = {{"x", BigInt(-7)}, {"y", BigInt(200)}};
  EXPECT_EQ(EvaluateExpr(ShrNode(1, RangeLeaf("x", -8, 8)), env), -4);
  EXPECT_EQ(EvaluateExpr(CastNode(8, true, RangeLeaf("y", 0, 255)), env), -56);
  EXPECT_EQ(EvaluateExpr(CastNode(4, false, RangeLeaf("x", -8, 8)), env), 9);
}

using testing_support::TreeGen;

void CheckAgainstEnumeration(const ExprNode& tree, bool expect_tight) {
  EXPECT_EQ(testing_support::EnumerationMismatch(tree, expect_tight), "");
}

TEST(InferWidthsPropertyTest, ExhaustiveWithoutCastsIsTight) {
  TreeGen g(1234);
  for (int t = 0; t < 1500; ++t) {
    CheckAgainstEnumeration(g.Make(g.Pick(1, 3), false), true);
  }
}

TEST(InferWidthsPropertyTest, ExhaustiveWithCastsContains) {
  TreeGen g(5678);
  for (int t = 0; t < 1500; ++t) {
    CheckAgainstEnumeration(g.Make(g.Pick(1, 3), true), false);
  }
}

TEST(InferWidthsPropertyTest, FullRangeLeavesPairwise) {
  // Two leaves spanning all of [-32, 31].
  for (int op = 0; op < 3; ++op) {
    ExprNode a = RangeLeaf("a", -32, 31);
    ExprNode b = RangeLeaf("b", -32, 31);
    const ExprNode e = op == 0   ? AddNode(a, b)
                       : op == 1 ? SubNode(a, b)
                                 : MulNode(a, b);
    CheckAgainstEnumeration(e, true);
  }
}

}  // namespace
}  // namespace qamhls
