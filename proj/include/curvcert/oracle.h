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

//
// Brute-force ground truth and random instance generators.
//

#ifndef CURVCERT_ORACLE_H_
#define CURVCERT_ORACLE_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "curvcert/curvature.h"
#include "curvcert/errors.h"
#include "curvcert/greedy.h"
#include "curvcert/objectives.h"
#include "curvcert/rng.h"
#include "curvcert/setfn.h"

namespace curvcert {

struct OracleResult {
  Subset optimum;
  double value = 0.0;
  int64_t enumerated = 0;
};

// C(n, 0) + ... + C(n, k), saturating just above cap.
inline int64_t CountSubsetsUpTo(int n, int k, int64_t cap) {
  int64_t total = 0;
  int64_t binom = 1;
  for (int r = 0; r <= k; ++r) {
    total += binom;
    if (total > cap) return cap + 1;
    binom = binom * (n - r) / (r + 1);
  }
  return total;
}

// Exact maximum over all sets of size <= k, visited in lexicographic order of
// their sorted id lists; the first maximizer wins ties.
inline OracleResult BruteForceOptimum(const SetFunction& f,
                                      const UniformMatroid& m,
                                      int64_t cap = Caps{}.oracle_subsets) {
  if (CountSubsetsUpTo(m.n(), m.k(), cap) > cap) {
    throw Error(ErrorKind::kInfeasible,
                "brute force needs more than " + std::to_string(cap) +
                    " subsets");
  }
  OracleResult best;
  best.value = f(Subset{});
  best.enumerated = 1;
  Subset current;
  auto visit = [&](auto&& self, int next) -> void {
    for (int x = next; x < m.n(); ++x) {
      current.push_back(x);
      const double value = f(current);
      ++best.enumerated;
      if (value > best.value) {
        best.value = value;
        best.optimum = current;
      }
      if (static_cast<int>(current.size()) < m.k()) self(self, x + 1);
      current.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

inline double ExactRatio(const GreedyChain& chain, const OracleResult& opt) {
  if (!(opt.value > 0.0)) {
    throw Error(ErrorKind::kDegenerate, "f(S*) = 0; exact ratio undefined");
  }
  return chain.value() / opt.value;
}

// f(S) = sum of w_R over nonempty R <= S with |R| <= max_order. Each such R
// carries a weight with probability `density`, drawn uniformly from (0, 1].
inline SubsetWeightsInstance RandomMonotoneInstance(int n, double density,
                                                    uint64_t seed,
                                                    int max_order = 3) {
  if (n < 1 || n > 12) {
    throw Error(ErrorKind::kInput, "random monotone functions need 1 <= n <= 12");
  }
  Rng rng(seed);
  SubsetWeightsInstance d;
  d.n = n;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) > max_order) continue;
    if (!rng.Bernoulli(density)) continue;
    d.terms.push_back({FromMask(mask), 1.0 - rng.Uniform()});
  }
  return d;
}

inline SetFunction RandomMonotoneFunction(int n, double density, uint64_t seed,
                                          int max_order = 3) {
  return Build(RandomMonotoneInstance(n, density, seed, max_order));
}

enum class Family { kCoverage, kModular, kPowerCoverage, kSynergy, kRandom };

inline constexpr Family kAllFamilies[] = {Family::kCoverage, Family::kModular,
                                          Family::kPowerCoverage,
                                          Family::kSynergy, Family::kRandom};

namespace internal {

inline CoverageInstance RandomCoverage(int n, Rng& rng) {
  CoverageInstance d;
  d.n = n;
  const int items = rng.UniformInt(n, 2 * n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> set;
    for (int item = 0; item < items; ++item) {
      if (rng.Bernoulli(0.3)) set.push_back(item);
    }
    d.sets.push_back(set);
  }
  if (rng.Bernoulli(0.5)) {
    for (int item = 0; item < items; ++item) {
      d.item_weights.push_back(static_cast<double>(rng.UniformInt(1, 5)));
    }
  }
  return d;
}

}  // namespace internal

// A random instance of the given family, fully described so that it can be
// saved and replayed.
inline InstanceDescription RandomInstance(Family family, int n, uint64_t seed) {
  Rng rng(seed);
  switch (family) {
    case Family::kCoverage:
      return internal::RandomCoverage(n, rng);
    case Family::kPowerCoverage:
      return PowerCoverageInstance{internal::RandomCoverage(n, rng), 2.0};
    case Family::kModular: {
      ModularInstance d{n, {}};
      for (int x = 0; x < n; ++x) d.weights.push_back(rng.Uniform(0.0, 10.0));
      return d;
    }
    case Family::kSynergy: {
      SynergyInstance d{n, {}, std::vector<std::vector<double>>(
                                   n, std::vector<double>(n, 0.0))};
      for (int x = 0; x < n; ++x) d.weights.push_back(rng.Uniform(0.0, 5.0));
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (rng.Bernoulli(0.3)) {
            d.synergy[x][y] = d.synergy[y][x] = rng.Uniform(0.0, 5.0);
          }
        }
      }
      return d;
    }
    case Family::kRandom:
      return RandomMonotoneInstance(n, 0.25, rng.Next());
  }
  throw Error(ErrorKind::kInput, "unknown family");
}

}  // namespace curvcert

#endif  // CURVCERT_ORACLE_H_
