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
// Set functions over a finite ground set {0, ..., n-1}.
//
// A SetFunction wraps a black-box evaluator. Subsets cross the interface as
// sorted, duplicate-free id lists so that every scan over them is
// deterministic. The raw value of the empty set is subtracted once at
// construction, so f(empty) == 0 for every handle.
//

#ifndef CURVCERT_SETFN_H_
#define CURVCERT_SETFN_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "curvcert/errors.h"
#include "curvcert/rng.h"

namespace curvcert {

using Subset = std::vector<int>;

// Gains at or below this magnitude are treated as zero when they appear in a
// denominator or numerator of a curvature ratio.
inline constexpr double kZeroGain = 1e-12;

// Absolute tolerance for value comparisons on O(1)..O(1e3) objectives.
inline constexpr double kValueTolerance = 1e-9;

inline std::string SubsetToString(std::span<const int> s) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out << ",";
    out << s[i];
  }
  out << "}";
  return out.str();
}

inline bool Contains(std::span<const int> s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

// Returns s + {x}, kept sorted. x must not be in s.
inline Subset With(std::span<const int> s, int x) {
  Subset out;
  out.reserve(s.size() + 1);
  auto pos = std::lower_bound(s.begin(), s.end(), x);
  out.insert(out.end(), s.begin(), pos);
  out.push_back(x);
  out.insert(out.end(), pos, s.end());
  return out;
}

inline Subset Union(std::span<const int> a, std::span<const int> b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline Subset Difference(std::span<const int> a, std::span<const int> b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool IsSubsetOf(std::span<const int> a, std::span<const int> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Subset Sorted(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s;
}

inline Subset FromMask(uint64_t mask) {
  Subset out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

inline uint64_t ToMask(std::span<const int> s) {
  uint64_t mask = 0;
  for (int x : s) mask |= uint64_t{1} << x;
  return mask;
}

class GroundSet {
 public:
  explicit GroundSet(int n) : n_(n) {
    if (n < 1) {
      throw Error(ErrorKind::kInput, "ground set must have n >= 1, got " +
                                         std::to_string(n));
    }
  }

  int size() const { return n_; }
  bool contains(int id) const { return id >= 0 && id < n_; }

  Subset all() const {
    Subset out(n_);
    for (int i = 0; i < n_; ++i) out[i] = i;
    return out;
  }

 private:
  int n_;
};

// Feasible sets are exactly those of cardinality <= k.
class UniformMatroid {
 public:
  UniformMatroid(GroundSet ground, int k) : ground_(ground), k_(k) {
    if (k < 1 || k > ground.size()) {
      throw Error(ErrorKind::kInput,
                  "uniform matroid requires 1 <= k <= n, got k=" +
                      std::to_string(k) + " n=" +
                      std::to_string(ground.size()));
    }
  }

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }
  int k() const { return k_; }
  bool feasible(std::span<const int> s) const {
    return static_cast<int>(s.size()) <= k_;
  }
  // The (k+1)-uniform supermatroid exists only while k < n.
  bool has_supermatroid() const { return k_ < ground_.size(); }

 private:
  GroundSet ground_;
  int k_;
};

// Shareable handle to a normalized black-box objective. Copies share the
// evaluation counter; evaluation itself must be pure.
class SetFunction {
 public:
  using Evaluator = std::function<double(std::span<const int>)>;

  SetFunction(int n, Evaluator raw, bool submodular = false,
              std::string family = "custom")
      : state_(std::make_shared<State>()) {
    if (n < 1) {
      throw Error(ErrorKind::kInput, "set function needs n >= 1");
    }
    state_->n = n;
    state_->raw = std::move(raw);
    state_->submodular = submodular;
    state_->family = std::move(family);
    const double empty = state_->raw(std::span<const int>());
    if (!std::isfinite(empty)) {
      throw Error(ErrorKind::kObjectiveFault,
                  "non-finite value at the empty set");
    }
    state_->offset = empty;
  }

  int size() const { return state_->n; }
  bool submodular() const { return state_->submodular; }
  const std::string& family() const { return state_->family; }
  double offset() const { return state_->offset; }

  int64_t eval_count() const {
    return state_->count.load(std::memory_order_relaxed);
  }
  void reset_count() const { state_->count.store(0); }

  // Evaluates a sorted, duplicate-free, in-range subset. Use Evaluate() when
  // the subset comes from outside and needs validation.
  double operator()(std::span<const int> s) const {
    state_->count.fetch_add(1, std::memory_order_relaxed);
    const double value = state_->raw(s) - state_->offset;
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::kObjectiveFault,
                  "non-finite value at " + SubsetToString(s));
    }
    return value;
  }

 private:
  struct State {
    int n = 0;
    Evaluator raw;
    double offset = 0.0;
    bool submodular = false;
    std::string family;
    std::atomic<int64_t> count{0};
  };
  std::shared_ptr<State> state_;
};

// Checks ids and returns the canonical (sorted) form of s.
inline Subset Canonical(const SetFunction& f, std::span<const int> s) {
  Subset out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= f.size()) {
      throw Error(ErrorKind::kInput, "element id " + std::to_string(out[i]) +
                                         " out of range [0," +
                                         std::to_string(f.size()) + ")");
    }
    if (i > 0 && out[i] == out[i - 1]) {
      throw Error(ErrorKind::kInput,
                  "duplicate element id " + std::to_string(out[i]));
    }
  }
  return out;
}

inline double Evaluate(const SetFunction& f, std::span<const int> s) {
  return f(Canonical(f, s));
}

// f(S + {x}) - f(S).
inline double MarginalGain(const SetFunction& f, int x,
                           std::span<const int> s) {
  Subset base = Canonical(f, s);
  if (x < 0 || x >= f.size()) {
    throw Error(ErrorKind::kInput,
                "element id " + std::to_string(x) + " out of range");
  }
  if (Contains(base, x)) {
    throw Error(ErrorKind::kInput, "marginal gain of " + std::to_string(x) +
                                       " requested at a base containing it");
  }
  const double without = f(base);
  return f(With(base, x)) - without;
}

// Per-computation evaluation cache. Not thread safe; create one per task.
class MemoFunction {
 public:
  explicit MemoFunction(const SetFunction& f) : f_(f) {}

  double operator()(const Subset& s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    const double value = f_(s);
    cache_.emplace(s, value);
    return value;
  }

  const SetFunction& function() const { return f_; }

 private:
  SetFunction f_;
  std::map<Subset, double> cache_;
};

struct AuditViolation {
  std::string kind;  // "monotonicity" or "nonzero_empty"
  Subset base;
  int element = -1;
  double before = 0.0;
  double after = 0.0;
};

struct AuditReport {
  bool exhaustive = false;
  int64_t pairs_checked = 0;
  std::vector<AuditViolation> violations;
};

inline constexpr double kMonotonicityTolerance = 1e-12;

// Looks for monotonicity violations f(S + {x}) < f(S) - 1e-12. Every
// (S, x) pair is checked when 2^n <= 4096; otherwise `trials` random pairs
// are drawn.
inline AuditReport AuditFunction(const SetFunction& f, const GroundSet& ground,
                                 int trials, uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorKind::kInput, "audit needs trials >= 1");
  }
  const int n = ground.size();
  AuditReport report;
  const double empty = f(Subset{});
  if (empty != 0.0) {
    report.violations.push_back({"nonzero_empty", {}, -1, empty, empty});
  }
  auto check = [&](const Subset& s, int x, double fs) {
    const double fx = f(With(s, x));
    ++report.pairs_checked;
    if (fx < fs - kMonotonicityTolerance) {
      report.violations.push_back({"monotonicity", s, x, fs, fx});
    }
  };
  if (n <= 12) {
    report.exhaustive = true;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      const Subset s = FromMask(mask);
      const double fs = f(s);
      for (int x = 0; x < n; ++x) {
        if (!(mask >> x & 1)) check(s, x, fs);
      }
    }
    return report;
  }
  Rng rng(seed);
  Subset order = ground.all();
  for (int t = 0; t < trials; ++t) {
    rng.Shuffle(order);
    const int len = rng.UniformInt(0, n - 1);
    Subset s = Sorted(Subset(order.begin(), order.begin() + len));
    check(s, order[len], f(s));
  }
  return report;
}

}  // namespace curvcert

#endif  // CURVCERT_SETFN_H_
