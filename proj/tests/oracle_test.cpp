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


#include "curvcert/oracle.h"

#include <gtest/gtest.h>

#include "test_oracles.h"

namespace curvcert {
namespace {

using testing::CoverageExample;
using testing::Square;

TEST(BruteForceTest, Examples) {
  const auto cov =
      BruteForceOptimum(Build(CoverageExample()), UniformMatroid(GroundSet(3), 2));
  EXPECT_EQ(cov.optimum, (Subset{0, 2}));
  EXPECT_EQ(cov.value, 4.0);
  EXPECT_EQ(cov.enumerated, 7);
  EXPECT_EQ(BruteForceOptimum(Build(ModularInstance{3, {5.0, 3.0, 1.0}}),
                              UniformMatroid(GroundSet(3), 2))
                .value,
            8.0);
  const auto sq = BruteForceOptimum(Square(4), UniformMatroid(GroundSet(4), 2));
  EXPECT_EQ(sq.value, 4.0);
  EXPECT_EQ(sq.optimum, (Subset{0, 1}));
}

TEST(BruteForceTest, CapExceeded) {
  try {
    BruteForceOptimum(Square(20), UniformMatroid(GroundSet(20), 10), 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
}

TEST(BruteForceTest, DominatesGreedyAndMatchesNaive) {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const int k = 1 + static_cast<int>(seed % 3);
    const SetFunction f = Build(RandomInstance(kAllFamilies[seed % 5], n, seed));
    const UniformMatroid m(GroundSet(n), k);
    const auto opt = BruteForceOptimum(f, m);
    EXPECT_EQ(opt.value, testing::NaiveOptimum(testing::OnMasks(f), n, k));
    EXPECT_GE(opt.value, GreedyMaximize(f, m).value());
  }
}

TEST(ExactRatioTest, Examples) {
  const SetFunction cov = Build(CoverageExample());
  const UniformMatroid m3(GroundSet(3), 2);
  EXPECT_EQ(ExactRatio(GreedyMaximize(cov, m3), BruteForceOptimum(cov, m3)), 1.0);
  const SetFunction sq = Square(4);
  const UniformMatroid m4(GroundSet(4), 2);
  EXPECT_EQ(ExactRatio(GreedyMaximize(sq, m4), BruteForceOptimum(sq, m4)), 1.0);
}

TEST(ExactRatioTest, AdversarialSynergy) {
  const SetFunction f = Build(SynergyInstance{
      3, {1.0, 1.0, 1.01}, {{0.0, 10.0, 0.0}, {10.0, 0.0, 0.0}, {0.0, 0.0, 0.0}}});
  const UniformMatroid m(GroundSet(3), 2);
  const GreedyChain chain = GreedyMaximize(f, m);
  const auto opt = BruteForceOptimum(f, m);
  EXPECT_EQ(chain.picks, (std::vector<int>{2, 0}));
  EXPECT_DOUBLE_EQ(chain.value(), 2.01);
  EXPECT_EQ(opt.optimum, (Subset{0, 1}));
  EXPECT_EQ(opt.value, 12.0);
  EXPECT_LT(ExactRatio(chain, opt), 1.0);
  EXPECT_NEAR(ExactRatio(chain, opt), 2.01 / 12.0, 1e-15);
}

TEST(ExactRatioTest, ZeroOptimumIsDegenerate) {
  const SetFunction zero(3, [](std::span<const int>) { return 0.0; });
  const UniformMatroid m(GroundSet(3), 2);
  try {
    ExactRatio(GreedyMaximize(zero, m), BruteForceOptimum(zero, m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDegenerate);
  }
}

TEST(RandomMonotoneTest, DensityZeroIsZero) {
  const SetFunction f = RandomMonotoneFunction(6, 0.0, 9);
  for (uint64_t mask = 0; mask < 64; ++mask) EXPECT_EQ(f(FromMask(mask)), 0.0);
}

TEST(RandomMonotoneTest, SingletonsOnlyIsModular) {
  const SetFunction f = RandomMonotoneFunction(6, 1.0, 9, 1);
  EXPECT_TRUE(f.submodular());
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i != j) {
        EXPECT_NEAR(PrimalCurvature(f, i, j, Subset{}), 1.0, 1e-12);
      }
    }
  }
}

TEST(RandomMonotoneTest, SeedIsReproducible) {
  const SetFunction a = RandomMonotoneFunction(10, 0.25, 77);
  const SetFunction b = RandomMonotoneFunction(10, 0.25, 77);
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    const Subset s = FromMask(rng.Next() & 1023);
    EXPECT_EQ(a(s), b(s));
  }
  EXPECT_EQ(RandomMonotoneInstance(10, 0.25, 77), RandomMonotoneInstance(10, 0.25, 77));
}

TEST(RandomMonotoneTest, MonotoneByConstruction) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const auto report =
        AuditFunction(RandomMonotoneFunction(8, 0.3, seed), GroundSet(8), 10, 1);
    EXPECT_TRUE(report.violations.empty());
  }
  EXPECT_THROW(RandomMonotoneInstance(13, 0.1, 1), Error);
}

TEST(RandomInstanceTest, EveryFamilyReplays) {
  for (Family family : kAllFamilies) {
    const auto desc = RandomInstance(family, 7, 123);
    EXPECT_EQ(desc, RandomInstance(family, 7, 123));
    EXPECT_EQ(InstanceFromJson(InstanceToJson(desc)), desc);
    EXPECT_TRUE(AuditFunction(Build(desc), GroundSet(7), 10, 1).violations.empty());
  }
}

}  // namespace
}  // namespace curvcert
