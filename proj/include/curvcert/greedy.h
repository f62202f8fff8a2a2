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

#ifndef CURVCERT_GREEDY_H_
#define CURVCERT_GREEDY_H_

#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "curvcert/errors.h"
#include "curvcert/setfn.h"

namespace curvcert {

// The nested greedy solutions S_0 = {} < S_1 < ... < S_k, plus the one-step
// extension S+ = S_k + {g_{k+1}} when k < n.
struct GreedyChain {
  int n = 0;
  std::vector<int> picks;     // g_1..g_k in selection order
  std::vector<double> gains;  // gains[l] = f_{g_{l+1}}(S_l)
  std::vector<double> values; // values[l] = f(S_l), l = 0..k
  std::optional<int> extension;
  double extension_gain = 0.0;
  double extension_value = 0.0;
  std::vector<std::string> warnings;

  int k() const { return static_cast<int>(picks.size()); }
  bool has_extension() const { return extension.has_value(); }
  double value() const { return values.back(); }

  // S_l as a sorted subset.
  Subset prefix(int l) const {
    return Sorted(Subset(picks.begin(), picks.begin() + l));
  }
  Subset solution() const { return prefix(k()); }

  bool operator==(const GreedyChain& other) const {
    return n == other.n && picks == other.picks && gains == other.gains &&
           values == other.values && extension == other.extension &&
           extension_gain == other.extension_gain &&
           extension_value == other.extension_value;
  }
};

enum class GreedyMode { kExhaustive, kLazy };

struct GreedyOptions {
  GreedyMode mode = GreedyMode::kExhaustive;
  bool extend = true;
};

namespace internal {

struct Step {
  int element = -1;
  double gain = 0.0;
  double value = 0.0;  // f(S + {element})
};

// One exhaustive scan. Ties go to the lowest id: a later candidate must be
// strictly better to replace the incumbent.
inline Step ExhaustiveStep(const SetFunction& f, const Subset& base,
                           double base_value) {
  Step best;
  for (int x = 0; x < f.size(); ++x) {
    if (Contains(base, x)) continue;
    const double value = f(With(base, x));
    const double gain = value - base_value;
    if (best.element < 0 || gain > best.gain) best = {x, gain, value};
  }
  return best;
}

inline bool BetterCandidate(double gain_a, int id_a, double gain_b, int id_b) {
  return gain_a > gain_b || (gain_a == gain_b && id_a < id_b);
}

// CELF-style lazy evaluation. Upper bounds from earlier steps stay valid
// only under submodularity.
class LazyScanner {
 public:
  LazyScanner(const SetFunction& f, const Subset& base, double base_value)
      : f_(f) {
    for (int x = 0; x < f.size(); ++x) {
      if (Contains(base, x)) continue;
      const double value = f(With(base, x));
      heap_.push({value - base_value, x, value, 0});
    }
  }

  bool empty() const { return heap_.empty(); }

  Step Next(const Subset& base, double base_value, int round) {
    while (true) {
      Entry top = heap_.top();
      heap_.pop();
      if (top.round != round) {
        top.value = f_(With(base, top.element));
        top.bound = top.value - base_value;
        top.round = round;
      }
      if (heap_.empty() || !Less(top, heap_.top())) {
        return {top.element, top.bound, top.value};
      }
      heap_.push(top);
    }
  }

 private:
  struct Entry {
    double bound;
    int element;
    double value;
    int round;
  };
  static bool Less(const Entry& a, const Entry& b) {
    return BetterCandidate(b.bound, b.element, a.bound, a.element);
  }
  struct Compare {
    bool operator()(const Entry& a, const Entry& b) const { return Less(a, b); }
  };

  const SetFunction& f_;
  std::priority_queue<Entry, std::vector<Entry>, Compare> heap_;
};

}  // namespace internal

// Greedy maximization over the k-uniform matroid. Evaluation accounting:
// f({}) once, then each candidate S_l + {x} once per step; f(S_{l+1}) is
// taken from the winning candidate. The extension step costs n - k more.
inline GreedyChain GreedyMaximize(const SetFunction& f,
                                  const UniformMatroid& m,
                                  GreedyOptions options = {}) {
  if (f.size() != m.n()) {
    throw Error(ErrorKind::kInput, "function and matroid disagree on n");
  }
  GreedyChain chain;
  chain.n = m.n();
  GreedyMode mode = options.mode;
  if (mode == GreedyMode::kLazy && !f.submodular()) {
    chain.warnings.push_back(
        "lazy evaluation requested for a function not flagged submodular; "
        "using exhaustive scanning");
    mode = GreedyMode::kExhaustive;
  }
  Subset base;
  chain.values.push_back(f(base));
  const int steps = options.extend && m.has_supermatroid() ? m.k() + 1 : m.k();

  std::optional<internal::LazyScanner> lazy;
  for (int l = 0; l < steps; ++l) {
    const double base_value = chain.values.back();
    internal::Step step;
    if (mode == GreedyMode::kLazy) {
      if (!lazy) {
        lazy.emplace(f, base, base_value);
        step = lazy->Next(base, base_value, 0);
      } else {
        step = lazy->Next(base, base_value, l);
      }
    } else {
      step = internal::ExhaustiveStep(f, base, base_value);
    }
    if (l == m.k()) {
      chain.extension = step.element;
      chain.extension_gain = step.gain;
      chain.extension_value = step.value;
      break;
    }
    chain.picks.push_back(step.element);
    chain.gains.push_back(step.gain);
    chain.values.push_back(step.value);
    base = With(base, step.element);
  }
  return chain;
}

// Adds g_{k+1} to a chain computed without it.
inline GreedyChain ExtendChain(const GreedyChain& chain, const SetFunction& f,
                               const UniformMatroid& m) {
  if (!m.has_supermatroid()) {
    throw Error(ErrorKind::kSupermatroidUndefined,
                "k = n = " + std::to_string(m.n()) +
                    " leaves no (k+1)-uniform supermatroid");
  }
  if (chain.has_extension()) {
    throw Error(ErrorKind::kInput, "chain already has its extension");
  }
  if (chain.k() != m.k()) {
    throw Error(ErrorKind::kInput, "chain length does not match k");
  }
  GreedyChain out = chain;
  const internal::Step step =
      internal::ExhaustiveStep(f, chain.solution(), chain.value());
  out.extension = step.element;
  out.extension_gain = step.gain;
  out.extension_value = step.value;
  return out;
}

}  // namespace curvcert

#endif  // CURVCERT_GREEDY_H_
