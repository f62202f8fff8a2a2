// Copyright 2026 The curvcert Authors.
//
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


#include "curvcert/setfn.h"

#include <gtest/gtest.h>

#include "curvcert/objectives.h"
#include "test_oracles.h"

namespace curvcert {
namespace {

using testing::CoverageExample;
using testing::Square;

TEST(SetFunctionTest, CoverageUnionOfAC) {
  const SetFunction f = Build(CoverageExample());
  EXPECT_EQ(Evaluate(f, Subset{0, 2}), 4.0);
  EXPECT_EQ(Evaluate(f, Subset{2, 0}), 4.0);
}

TEST(SetFunctionTest, EmptySetIsZero) {
  const SetFunction offset(3, [](std::span<const int> s) {
    return 7.5 + static_cast<double>(s.size());
  });
  EXPECT_EQ(Evaluate(offset, Subset{}), 0.0);
  EXPECT_EQ(Evaluate(offset, Subset{1}), 1.0);
  EXPECT_EQ(Evaluate(Square(4), Subset{}), 0.0);
}

TEST(SetFunctionTest, SquareOfThree) {
  EXPECT_EQ(Evaluate(Square(5), Subset{0, 2, 4}), 9.0);
}

TEST(SetFunctionTest, RejectsBadIds) {
  const SetFunction f = Square(3);
  EXPECT_THROW(Evaluate(f, Subset{3}), Error);
  EXPECT_THROW(Evaluate(f, Subset{-1}), Error);
  EXPECT_THROW(Evaluate(f, Subset{1, 1}), Error);
}

TEST(SetFunctionTest, NonFiniteValueIsObjectiveFault) {
  const SetFunction f(2, [](std::span<const int> s) {
    return s.size() == 2 ? std::nan("") : 0.0;
  });
  try {
    Evaluate(f, Subset{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kObjectiveFault);
  }
}

TEST(SetFunctionTest, EvaluationCounterIsShared) {
  const SetFunction f = Square(3);
  const SetFunction copy = f;
  f.reset_count();
  Evaluate(copy, Subset{1});
  Evaluate(f, Subset{0});
  EXPECT_EQ(f.eval_count(), 2);
}

TEST(MarginalGainTest, Examples) {
  EXPECT_EQ(MarginalGain(Build(CoverageExample()), 1, Subset{0}), 1.0);
  const SetFunction modular = Build(ModularInstance{3, {5.0, 2.0, 1.0}});
  EXPECT_EQ(MarginalGain(modular, 0, Subset{}), 5.0);
  EXPECT_EQ(MarginalGain(modular, 0, Subset{1, 2}), 5.0);
  EXPECT_EQ(MarginalGain(Square(4), 3, Subset{0, 1}), 5.0);
}

TEST(MarginalGainTest, ElementInBaseIsInputError) {
  try {
    MarginalGain(Square(3), 1, Subset{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
  }
}

TEST(MatroidTest, Bounds) {
  EXPECT_THROW(UniformMatroid(GroundSet(3), 0), Error);
  EXPECT_THROW(UniformMatroid(GroundSet(3), 4), Error);
  EXPECT_THROW(GroundSet(0), Error);
  const UniformMatroid m(GroundSet(3), 2);
  EXPECT_TRUE(m.has_supermatroid());
  EXPECT_FALSE(UniformMatroid(GroundSet(3), 3).has_supermatroid());
  EXPECT_TRUE(m.feasible(Subset{0, 1}));
  EXPECT_FALSE(m.feasible(Subset{0, 1, 2}));
}

TEST(MemoFunctionTest, CachesValues) {
  const SetFunction f = Square(3);
  MemoFunction memo(f);
  f.reset_count();
  EXPECT_EQ(memo(Subset{0, 1}), 4.0);
  EXPECT_EQ(memo(Subset{0, 1}), 4.0);
  EXPECT_EQ(f.eval_count(), 1);
}

TEST(AuditTest, MonotoneFamiliesAreClean) {
  const auto cover = AuditFunction(Build(CoverageExample()), GroundSet(3), 10, 1);
  EXPECT_TRUE(cover.exhaustive);
  EXPECT_TRUE(cover.violations.empty());
  EXPECT_TRUE(AuditFunction(Square(6), GroundSet(6), 10, 1).violations.empty());
}

TEST(AuditTest, FindsTheConstructedViolation) {
  // f({a}) = 1, f({b}) = 0, f({a,b}) = 0.5.
  const SetFunction f(2, [](std::span<const int> s) {
    if (s.size() == 2) return 0.5;
    if (s.size() == 1 && s[0] == 0) return 1.0;
    return 0.0;
  });
  const auto report = AuditFunction(f, GroundSet(2), 10, 1);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].base, Subset{0});
  EXPECT_EQ(report.violations[0].element, 1);
}

TEST(AuditTest, SampledModeOnLargeGroundSet) {
  const auto report = AuditFunction(Square(20), GroundSet(20), 50, 3);
  EXPECT_FALSE(report.exhaustive);
  EXPECT_GT(report.pairs_checked, 0);
  EXPECT_TRUE(report.violations.empty());
}

TEST(SubsetTest, MaskRoundTrip) {
  EXPECT_EQ(FromMask(0b1011), (Subset{0, 1, 3}));
  EXPECT_EQ(ToMask(Subset{0, 1, 3}), 0b1011u);
  EXPECT_EQ(SubsetToString(Subset{2, 5}), "{2,5}");
}

}  // namespace
}  // namespace curvcert
