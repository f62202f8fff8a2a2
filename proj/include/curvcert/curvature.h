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
// Curvature quantities of a set function.
//
//   primal curvature        nabla(i, j | S) = f_i(S + {j}) / f_i(S)
//   total primal curvature  Gamma(x | T, S) = f_x(S u T) / f_x(S), equal to
//                           the nabla-product along any ordering of T \ S
//   Gamma-hat(S)            an upper bound on sum_t Gamma(j_t | S_{t-1}, S)
//                           over feasible T and orderings of T \ S
//   elemental curvature     alpha = max nabla over all valid (S, i, j)
//   total curvature         c = max_j 1 - f_j(X - {j}) / f_j({})
//
// Zero denominators: 0/0 counts as 1, positive/0 is unbounded (+inf).
//

#ifndef CURVCERT_CURVATURE_H_
#define CURVCERT_CURVATURE_H_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "curvcert/errors.h"
#include "curvcert/rng.h"
#include "curvcert/setfn.h"

namespace curvcert {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

inline bool IsUnbounded(double v) { return std::isinf(v); }

// Ratio of two marginal gains under the zero-denominator convention.
inline double GainRatio(double numerator, double denominator) {
  if (denominator > kZeroGain) return numerator / denominator;
  return numerator > kZeroGain ? kUnbounded : 1.0;
}

enum class Provenance { kExact, kSampledHeuristic, kSubmodularAssumption };

inline const char* ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kExact:
      return "exact";
    case Provenance::kSampledHeuristic:
      return "sampled-heuristic";
    case Provenance::kSubmodularAssumption:
      return "submodular-assumption";
  }
  return "unknown";
}

struct CurvatureCertificate {
  double value = 0.0;  // +inf when unbounded
  Provenance provenance = Provenance::kExact;
  Subset base;
  int k = 0;
  int64_t terms = 0;  // (T, ordering) pairs examined

  bool unbounded() const { return IsUnbounded(value); }
  // Sampled certificates only support empirical ratios.
  bool certified() const { return provenance != Provenance::kSampledHeuristic; }
};

struct Caps {
  int64_t gamma_terms = 10'000'000;
  int64_t oracle_subsets = 1'000'000;
  int64_t alpha_triples = 100'000'000;
  int64_t adaptive_nodes = 1'000'000;

  static Caps Uniform(int64_t cap) { return {cap, cap, cap, cap}; }
};

namespace internal {

inline void RequireFresh(const SetFunction& f, int x, std::span<const int> s,
                         const char* what) {
  if (x < 0 || x >= f.size()) {
    throw Error(ErrorKind::kInput, std::string(what) + " id " +
                                       std::to_string(x) + " out of range");
  }
  if (Contains(s, x)) {
    throw Error(ErrorKind::kInput, std::string(what) + " " +
                                       std::to_string(x) +
                                       " must not be in the base set");
  }
}

// Number of ordered sequences of length <= k drawn from m items, saturating
// just above `cap`.
inline int64_t SequenceCount(int m, int k, int64_t cap) {
  int64_t total = 1;
  int64_t run = 1;
  for (int r = 1; r <= std::min(k, m); ++r) {
    run *= m - r + 1;
    total += run;
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace internal

inline double PrimalCurvature(const SetFunction& f, int i, int j,
                              std::span<const int> s) {
  const Subset base = Canonical(f, s);
  internal::RequireFresh(f, i, base, "element i");
  internal::RequireFresh(f, j, base, "element j");
  if (i == j) throw Error(ErrorKind::kInput, "primal curvature needs i != j");
  const Subset base_j = With(base, j);
  const double gain = f(With(base, i)) - f(base);
  const double gain_j = f(With(base_j, i)) - f(base_j);
  return GainRatio(gain_j, gain);
}

// Closed form f_x(S u T) / f_x(S). Requires S <= T and x not in T.
inline double TotalPrimalCurvature(const SetFunction& f, int x,
                                   std::span<const int> t,
                                   std::span<const int> s) {
  const Subset big = Canonical(f, t);
  const Subset base = Canonical(f, s);
  if (!IsSubsetOf(base, big)) {
    throw Error(ErrorKind::kInput, "total primal curvature needs S <= T");
  }
  internal::RequireFresh(f, x, big, "element x");
  const double gain = f(With(base, x)) - f(base);
  const double gain_t = f(With(big, x)) - f(big);
  return GainRatio(gain_t, gain);
}

// The nabla-product over an explicit ordering of T \ S. Used to check the
// closed form; `ordering` must be a permutation of T \ S.
inline double TotalPrimalCurvatureProduct(const SetFunction& f, int x,
                                          std::span<const int> ordering,
                                          std::span<const int> s) {
  Subset current = Canonical(f, s);
  internal::RequireFresh(f, x, current, "element x");
  double product = 1.0;
  for (int j : ordering) {
    product *= PrimalCurvature(f, x, j, current);
    current = With(current, j);
  }
  return product;
}

// sum_t Gamma(j_t | S_{t-1}, S) for one ordering of elements outside S.
inline double GammaSum(const SetFunction& f, std::span<const int> s,
                       std::span<const int> ordering) {
  MemoFunction memo(f);
  Subset base = Canonical(f, s);
  const double fs = memo(base);
  Subset current = base;
  double fcur = fs;
  double total = 0.0;
  for (int j : ordering) {
    internal::RequireFresh(f, j, current, "ordering element");
    const Subset next = With(current, j);
    const double fnext = memo(next);
    total += GainRatio(fnext - fcur, memo(With(base, j)) - fs);
    current = next;
    fcur = fnext;
  }
  return total;
}

// Gamma-hat by enumeration of every ordered sequence of at most k distinct
// elements outside S. Sets T that intersect S contribute the same sums as
// their T \ S, so they need no separate visit.
inline CurvatureCertificate GammaHatExact(const SetFunction& f,
                                          std::span<const int> s,
                                          const UniformMatroid& m,
                                          int64_t cap = Caps{}.gamma_terms) {
  const Subset base = Canonical(f, s);
  std::vector<int> fresh = Difference(m.ground().all(), base);
  const int64_t count =
      internal::SequenceCount(static_cast<int>(fresh.size()), m.k(), cap);
  if (count > cap) {
    throw Error(ErrorKind::kInfeasible,
                "exact Gamma-hat needs more than " + std::to_string(cap) +
                    " ordered sequences");
  }
  MemoFunction memo(f);
  const double fs = memo(base);
  std::vector<double> base_gain(m.n(), 0.0);
  for (int j : fresh) base_gain[j] = memo(With(base, j)) - fs;

  CurvatureCertificate cert{0.0, Provenance::kExact, base, m.k(), 0};
  std::vector<char> used(m.n(), 0);
  // Depth-first over sequences; the running sum is nondecreasing, but every
  // node is scored so the max is correct even without that.
  auto visit = [&](auto&& self, const Subset& current, double fcur,
                   double sum, int depth) -> void {
    ++cert.terms;
    cert.value = std::max(cert.value, sum);
    if (depth == m.k() || IsUnbounded(cert.value)) return;
    for (int j : fresh) {
      if (used[j]) continue;
      const Subset next = With(current, j);
      const double fnext = memo(next);
      used[j] = 1;
      self(self, next, fnext, sum + GainRatio(fnext - fcur, base_gain[j]),
           depth + 1);
      used[j] = 0;
    }
  };
  visit(visit, base, fs, 0.0, 0);
  return cert;
}

// Heuristic Gamma-hat: the best of `trials` random (T, ordering) draws. A
// lower estimate of the exact value; never a certificate.
inline CurvatureCertificate GammaHatSampled(const SetFunction& f,
                                            std::span<const int> s,
                                            const UniformMatroid& m,
                                            int trials, uint64_t seed) {
  if (trials < 1) throw Error(ErrorKind::kInput, "trials must be >= 1");
  const Subset base = Canonical(f, s);
  std::vector<int> fresh = Difference(m.ground().all(), base);
  const int len = std::min<int>(m.k(), static_cast<int>(fresh.size()));
  CurvatureCertificate cert{0.0, Provenance::kSampledHeuristic, base, m.k(), 0};
  Rng rng(seed);
  MemoFunction memo(f);
  const double fs = memo(base);
  for (int t = 0; t < trials; ++t) {
    rng.Shuffle(fresh);
    Subset current = base;
    double fcur = fs;
    double sum = 0.0;
    for (int r = 0; r < len; ++r) {
      const int j = fresh[r];
      const Subset next = With(current, j);
      const double fnext = memo(next);
      sum += GainRatio(fnext - fcur, memo(With(base, j)) - fs);
      current = next;
      fcur = fnext;
    }
    ++cert.terms;
    cert.value = std::max(cert.value, sum);
  }
  return cert;
}

// Gamma-hat = k, valid for any submodular f since every Gamma term is <= 1.
inline CurvatureCertificate SubmodularGammaHat(std::span<const int> s, int k) {
  return {static_cast<double>(k), Provenance::kSubmodularAssumption,
          Subset(s.begin(), s.end()), k, 0};
}

// max over T outside S with |T| <= budget and x outside S u T of
// Gamma(x | S u T, S): the largest single-element Gamma. This is the
// deterministic counterpart of the adaptive Gamma-hat.
inline double MaxTotalPrimalCurvature(const SetFunction& f,
                                      std::span<const int> s, int budget,
                                      int64_t cap = Caps{}.gamma_terms) {
  const Subset base = Canonical(f, s);
  const std::vector<int> fresh = Difference(
      GroundSet(f.size()).all(), base);
  const int m = static_cast<int>(fresh.size());
  if (m > 30) throw Error(ErrorKind::kInfeasible, "too many free elements");
  MemoFunction memo(f);
  const double fs = memo(base);
  std::vector<double> base_gain(f.size(), 0.0);
  for (int x : fresh) base_gain[x] = memo(With(base, x)) - fs;
  double best = 0.0;
  int64_t visited = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) > budget) continue;
    if (++visited > cap) {
      throw Error(ErrorKind::kInfeasible, "max total primal curvature cap");
    }
    Subset t;
    for (int b = 0; b < m; ++b) {
      if (mask >> b & 1) t.push_back(fresh[b]);
    }
    const Subset big = Union(base, t);
    const double fbig = memo(big);
    for (int b = 0; b < m; ++b) {
      if (mask >> b & 1) continue;
      const int x = fresh[b];
      best = std::max(best, GainRatio(memo(With(big, x)) - fbig, base_gain[x]));
    }
  }
  return best;
}

struct ElementalCurvature {
  double value = 0.0;  // +inf when unbounded
  bool exact = true;   // false: sampled lower estimate
  int64_t triples = 0;
};

enum class CurvatureMode { kExact, kSampled };

// Elemental curvature alpha. Exact mode tabulates f on all 2^n subsets and
// scans every (S, i, j) with i != j both outside S.
inline ElementalCurvature ComputeElementalCurvature(
    const SetFunction& f, const GroundSet& ground, CurvatureMode mode,
    int64_t cap = Caps{}.alpha_triples, int trials = 10000,
    uint64_t seed = 1) {
  const int n = ground.size();
  ElementalCurvature out;
  // No (i, j) pair exists; report the neutral value.
  if (n == 1) return {1.0, true, 0};
  if (mode == CurvatureMode::kExact) {
    const double triples =
        std::ldexp(1.0, n) * static_cast<double>(n) * static_cast<double>(n);
    if (n > 40 || triples > static_cast<double>(cap)) {
      throw Error(ErrorKind::kInfeasible,
                  "exact elemental curvature needs 2^n n^2 = " +
                      std::to_string(triples) + " > cap");
    }
    const uint64_t full = uint64_t{1} << n;
    std::vector<double> table(full);
    for (uint64_t mask = 0; mask < full; ++mask) table[mask] = f(FromMask(mask));
    for (uint64_t mask = 0; mask < full; ++mask) {
      for (int i = 0; i < n; ++i) {
        const uint64_t bi = uint64_t{1} << i;
        if (mask & bi) continue;
        const double gain = table[mask | bi] - table[mask];
        for (int j = 0; j < n; ++j) {
          const uint64_t bj = uint64_t{1} << j;
          if (j == i || (mask & bj)) continue;
          ++out.triples;
          const double gain_j = table[mask | bi | bj] - table[mask | bj];
          out.value = std::max(out.value, GainRatio(gain_j, gain));
        }
      }
    }
    return out;
  }
  out.exact = false;
  Rng rng(seed);
  std::vector<int> order = ground.all();
  for (int t = 0; t < trials; ++t) {
    rng.Shuffle(order);
    // order[0] = i, order[1] = j, a random subset of the rest is S.
    Subset s;
    for (int r = 2; r < n; ++r) {
      if (rng.Bernoulli(0.5)) s.push_back(order[r]);
    }
    s = Sorted(std::move(s));
    ++out.triples;
    out.value = std::max(out.value, PrimalCurvature(f, order[0], order[1], s));
  }
  return out;
}

struct TotalCurvature {
  double value = 0.0;
  bool defined = false;
  std::vector<int> excluded;  // elements with f({j}) == f({})
};

// Total curvature c over the whole ground set. Elements with zero singleton
// gain are left out of the max.
inline TotalCurvature ComputeTotalCurvature(const SetFunction& f,
                                            const GroundSet& ground) {
  TotalCurvature out;
  const Subset all = ground.all();
  const double f_all = f(all);
  const double f_empty = f(Subset{});
  for (int j : all) {
    const double single = f(Subset{j}) - f_empty;
    if (single <= kZeroGain) {
      out.excluded.push_back(j);
      continue;
    }
    const double last = f_all - f(Difference(all, Subset{j}));
    const double c = 1.0 - last / single;
    out.value = out.defined ? std::max(out.value, c) : c;
    out.defined = true;
  }
  return out;
}

}  // namespace curvcert

#endif  // CURVCERT_CURVATURE_H_
