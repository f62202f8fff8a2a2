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
// Adaptive (stochastic) greedy maximization.
//
// Items have finite, mutually independent state spaces. A policy selects an
// item, observes its state, and continues; the objective f(E, Phi) depends on
// the selected items E and the full realization Phi. All expectations are
// exact enumerations over realizations consistent with the observations,
// summed in lexicographic realization order.
//

#ifndef CURVCERT_ADAPTIVE_H_
#define CURVCERT_ADAPTIVE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "curvcert/curvature.h"
#include "curvcert/errors.h"
#include "curvcert/objectives.h"
#include "curvcert/ratios.h"
#include "curvcert/rng.h"
#include "curvcert/setfn.h"
#include "json.hpp"

namespace curvcert {

struct StochasticItem {
  std::vector<std::string> states;
  std::vector<double> probs;
  bool operator==(const StochasticItem&) const = default;
};

struct Observation {
  int item = -1;
  int state = -1;
  bool operator==(const Observation&) const = default;
};

// Observations in the order they were made.
using PartialRealization = std::vector<Observation>;

// State index per item.
using Realization = std::vector<int>;

inline Subset Domain(const PartialRealization& psi) {
  Subset out;
  for (const auto& o : psi) out.push_back(o.item);
  return Sorted(std::move(out));
}

inline PartialRealization Extended(PartialRealization psi, Observation o) {
  psi.push_back(o);
  return psi;
}

class AdaptiveModel {
 public:
  using Evaluator =
      std::function<double(std::span<const int>, std::span<const int>)>;

  AdaptiveModel(std::vector<StochasticItem> items, Evaluator f,
                int64_t cap = Caps{}.adaptive_nodes)
      : items_(std::move(items)), f_(std::move(f)), cap_(cap) {
    if (items_.empty()) {
      throw Error(ErrorKind::kInput, "adaptive model needs at least one item");
    }
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const auto& item = items_[i];
      const std::string where = "item " + std::to_string(i);
      if (item.probs.empty() || item.states.size() != item.probs.size()) {
        throw Error(ErrorKind::kInput,
                    where + ": need >= 1 state and one probability per state");
      }
      double total = 0.0;
      for (double p : item.probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
          throw Error(ErrorKind::kInput, where + ": probability outside [0,1]");
        }
        total += p;
      }
      if (std::abs(total - 1.0) > 1e-12) {
        throw Error(ErrorKind::kInput, where + ": probabilities sum to " +
                                           std::to_string(total));
      }
    }
  }

  int size() const { return static_cast<int>(items_.size()); }
  const StochasticItem& item(int i) const { return items_[i]; }
  const std::vector<StochasticItem>& items() const { return items_; }
  int64_t cap() const { return cap_; }
  int64_t eval_count() const { return *count_; }

  bool deterministic() const {
    return std::all_of(items_.begin(), items_.end(),
                       [](const auto& it) { return it.states.size() == 1; });
  }

  double Value(std::span<const int> selected,
               std::span<const int> realization) const {
    ++*count_;
    const double v = f_(selected, realization);
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kObjectiveFault,
                  "non-finite value at " + SubsetToString(selected));
    }
    return v;
  }

  // Calls fn(realization, probability) for every realization consistent with
  // psi, in lexicographic order. Probabilities are products of the priors of
  // unobserved items.
  template <typename Fn>
  void ForEachConsistent(const PartialRealization& psi, Fn&& fn) const {
    Realization phi(items_.size(), -1);
    for (const auto& o : psi) phi[o.item] = o.state;
    std::vector<int> free;
    double count = 1.0;
    for (int i = 0; i < size(); ++i) {
      if (phi[i] < 0) {
        free.push_back(i);
        count *= static_cast<double>(items_[i].states.size());
      }
    }
    if (count > static_cast<double>(cap_)) {
      throw Error(ErrorKind::kInfeasible,
                  "more than " + std::to_string(cap_) +
                      " consistent realizations");
    }
    auto visit = [&](auto&& self, std::size_t depth, double prob) -> void {
      if (depth == free.size()) {
        fn(std::span<const int>(phi), prob);
        return;
      }
      const auto& item = items_[free[depth]];
      for (std::size_t s = 0; s < item.states.size(); ++s) {
        phi[free[depth]] = static_cast<int>(s);
        self(self, depth + 1, prob * item.probs[s]);
      }
      phi[free[depth]] = -1;
    };
    visit(visit, 0, 1.0);
  }

 private:
  std::vector<StochasticItem> items_;
  Evaluator f_;
  int64_t cap_;
  std::shared_ptr<int64_t> count_ = std::make_shared<int64_t>(0);
};

namespace internal {

inline void CheckPartial(const AdaptiveModel& model,
                         const PartialRealization& psi) {
  std::vector<char> seen(model.size(), 0);
  for (const auto& o : psi) {
    if (o.item < 0 || o.item >= model.size()) {
      throw Error(ErrorKind::kInput, "observed item out of range");
    }
    if (seen[o.item]) {
      throw Error(ErrorKind::kInput,
                  "item " + std::to_string(o.item) + " observed twice");
    }
    seen[o.item] = 1;
    if (o.state < 0 ||
        o.state >= static_cast<int>(model.item(o.item).states.size())) {
      throw Error(ErrorKind::kInput, "observed state out of range");
    }
  }
}

inline void CheckFreshItem(const AdaptiveModel& model,
                           const PartialRealization& psi, int i) {
  if (i < 0 || i >= model.size()) {
    throw Error(ErrorKind::kInput, "item " + std::to_string(i) + " out of range");
  }
  for (const auto& o : psi) {
    if (o.item == i) {
      throw Error(ErrorKind::kInput,
                  "item " + std::to_string(i) + " is already observed");
    }
  }
}

// psi <= psi_prime as sets of observations.
inline bool Contained(const PartialRealization& psi,
                      const PartialRealization& psi_prime) {
  return std::all_of(psi.begin(), psi.end(), [&](const Observation& o) {
    return std::find(psi_prime.begin(), psi_prime.end(), o) != psi_prime.end();
  });
}

}  // namespace internal

// E[f(dom(psi), Phi) | psi].
inline double ExpectedValue(const AdaptiveModel& model,
                            const PartialRealization& psi) {
  internal::CheckPartial(model, psi);
  const Subset dom = Domain(psi);
  double total = 0.0;
  model.ForEachConsistent(psi, [&](std::span<const int> phi, double p) {
    total += p * model.Value(dom, phi);
  });
  return total;
}

// Delta(i | psi): the conditional expected marginal gain of item i.
inline double ConditionalExpectedGain(const AdaptiveModel& model, int i,
                                      const PartialRealization& psi) {
  internal::CheckPartial(model, psi);
  internal::CheckFreshItem(model, psi, i);
  const Subset dom = Domain(psi);
  const Subset with = With(dom, i);
  double total = 0.0;
  model.ForEachConsistent(psi, [&](std::span<const int> phi, double p) {
    total += p * (model.Value(with, phi) - model.Value(dom, phi));
  });
  return total;
}

// nabla(i, j | psi) = E_s[Delta(i | psi + (j, s)) / Delta(i | psi)] over the
// states s of j. States of zero probability are skipped.
inline double AdaptivePrimalCurvature(const AdaptiveModel& model, int i, int j,
                                      const PartialRealization& psi) {
  internal::CheckFreshItem(model, psi, j);
  if (i == j) throw Error(ErrorKind::kInput, "adaptive curvature needs i != j");
  const double base = ConditionalExpectedGain(model, i, psi);
  const auto& item = model.item(j);
  double total = 0.0;
  for (std::size_t s = 0; s < item.states.size(); ++s) {
    if (item.probs[s] == 0.0) continue;
    const double gain = ConditionalExpectedGain(
        model, i, Extended(psi, {j, static_cast<int>(s)}));
    total += item.probs[s] * GainRatio(gain, base);
  }
  return total;
}

// Gamma(i | psi', psi) in closed form: Delta(i | psi') / Delta(i | psi).
inline double AdaptiveTpc(const AdaptiveModel& model, int i,
                          const PartialRealization& psi_prime,
                          const PartialRealization& psi) {
  internal::CheckPartial(model, psi_prime);
  if (!internal::Contained(psi, psi_prime)) {
    throw Error(ErrorKind::kInput, "adaptive Gamma needs psi <= psi'");
  }
  internal::CheckFreshItem(model, psi_prime, i);
  return GainRatio(ConditionalExpectedGain(model, i, psi_prime),
                   ConditionalExpectedGain(model, i, psi));
}

// Two readings of the sequence-expectation definition of adaptive Gamma,
// averaged uniformly over every ordering Q of the observations in
// psi' \ psi:
//   fixed_state_product   product of Delta ratios with each observed state
//                         held fixed; telescopes to the closed form
//   state_averaged_product  product of adaptive nabla values, each of which
//                         averages over the states of the next item
struct AdaptiveTpcReadings {
  double closed_form = 0.0;
  double fixed_state_product = 0.0;
  double state_averaged_product = 0.0;
  int orderings = 0;

  double fixed_state_discrepancy() const {
    return std::abs(fixed_state_product - closed_form);
  }
  double state_averaged_discrepancy() const {
    return std::abs(state_averaged_product - closed_form);
  }
};

inline AdaptiveTpcReadings AdaptiveTpcDebug(const AdaptiveModel& model, int i,
                                            const PartialRealization& psi_prime,
                                            const PartialRealization& psi) {
  AdaptiveTpcReadings out;
  out.closed_form = AdaptiveTpc(model, i, psi_prime, psi);
  std::vector<Observation> extra;
  for (const auto& o : psi_prime) {
    if (std::find(psi.begin(), psi.end(), o) == psi.end()) extra.push_back(o);
  }
  std::sort(extra.begin(), extra.end(), [](const auto& a, const auto& b) {
    return a.item < b.item;
  });
  double fixed_sum = 0.0;
  double averaged_sum = 0.0;
  do {
    PartialRealization current = psi;
    double fixed = 1.0;
    double averaged = 1.0;
    for (const auto& o : extra) {
      const PartialRealization next = Extended(current, o);
      fixed *= GainRatio(ConditionalExpectedGain(model, i, next),
                         ConditionalExpectedGain(model, i, current));
      averaged *= AdaptivePrimalCurvature(model, i, o.item, current);
      current = next;
    }
    fixed_sum += fixed;
    averaged_sum += averaged;
    ++out.orderings;
  } while (std::next_permutation(
      extra.begin(), extra.end(),
      [](const auto& a, const auto& b) { return a.item < b.item; }));
  out.fixed_state_product = fixed_sum / out.orderings;
  out.state_averaged_product = averaged_sum / out.orderings;
  return out;
}

struct PolicyNode {
  PartialRealization psi;
  double probability = 1.0;
  int depth = 0;
  int selected = -1;            // g_{l+1}; -1 at the last level
  double selected_gain = 0.0;   // Delta(g_{l+1} | psi)
  double expected_value = 0.0;  // E[f(dom(psi), Phi) | psi]
  std::vector<int> children;    // one per state of `selected`
};

// The greedy policy as a decision tree, nodes in breadth-first order.
struct PolicyTrace {
  int k = 0;
  std::vector<PolicyNode> nodes;
  std::vector<double> f_avg;      // f_avg(pi_l), l = 0..k
  std::vector<double> delta_avg;  // f_avg(pi_{l+1}) - f_avg(pi_l)

  // Indices of the nodes at depth l.
  std::vector<int> level(int l) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
      if (nodes[v].depth == l) out.push_back(v);
    }
    return out;
  }
};

inline PolicyTrace AdaptiveGreedy(const AdaptiveModel& model, int k) {
  if (k < 1 || k > model.size()) {
    throw Error(ErrorKind::kInput, "adaptive greedy needs 1 <= k <= items");
  }
  PolicyTrace trace;
  trace.k = k;
  trace.nodes.push_back(PolicyNode{});
  std::size_t head = 0;
  while (head < trace.nodes.size()) {
    if (static_cast<int64_t>(trace.nodes.size()) > model.cap()) {
      throw Error(ErrorKind::kInfeasible, "policy tree exceeds the node cap");
    }
    PolicyNode node = trace.nodes[head];
    node.expected_value = ExpectedValue(model, node.psi);
    if (node.depth < k) {
      int best = -1;
      double best_gain = 0.0;
      for (int i = 0; i < model.size(); ++i) {
        if (Contains(Domain(node.psi), i)) continue;
        const double gain = ConditionalExpectedGain(model, i, node.psi);
        if (best < 0 || gain > best_gain) {
          best = i;
          best_gain = gain;
        }
      }
      node.selected = best;
      node.selected_gain = best_gain;
      const auto& item = model.item(best);
      for (std::size_t s = 0; s < item.states.size(); ++s) {
        PolicyNode child;
        child.psi = Extended(node.psi, {best, static_cast<int>(s)});
        child.probability = node.probability * item.probs[s];
        child.depth = node.depth + 1;
        node.children.push_back(static_cast<int>(trace.nodes.size()));
        trace.nodes.push_back(std::move(child));
      }
    }
    trace.nodes[head] = std::move(node);
    ++head;
  }
  for (int l = 0; l <= k; ++l) {
    double total = 0.0;
    for (int v : trace.level(l)) {
      total += trace.nodes[v].probability * trace.nodes[v].expected_value;
    }
    trace.f_avg.push_back(total);
  }
  for (int l = 0; l < k; ++l) {
    trace.delta_avg.push_back(trace.f_avg[l + 1] - trace.f_avg[l]);
  }
  return trace;
}

// Gamma-hat(psi): max of Delta(i | psi') / Delta(i | psi) over psi' that
// extend psi by at most `budget` further observations of positive
// probability, and items i outside dom(psi'). The empty max is 0.
inline CurvatureCertificate AdaptiveGammaHat(const AdaptiveModel& model,
                                             const PartialRealization& psi,
                                             int budget) {
  internal::CheckPartial(model, psi);
  const Subset dom = Domain(psi);
  const std::vector<int> free = Difference(GroundSet(model.size()).all(), dom);
  CurvatureCertificate cert{0.0, Provenance::kExact, dom, budget, 0};
  std::vector<double> base_gain(model.size(), 0.0);
  for (int i : free) base_gain[i] = ConditionalExpectedGain(model, i, psi);

  std::vector<char> used(model.size(), 0);
  auto score = [&](const PartialRealization& extended) {
    for (int i : free) {
      if (used[i]) continue;
      ++cert.terms;
      if (cert.terms > model.cap()) {
        throw Error(ErrorKind::kInfeasible, "adaptive Gamma-hat cap exceeded");
      }
      cert.value = std::max(
          cert.value,
          GainRatio(ConditionalExpectedGain(model, i, extended), base_gain[i]));
    }
  };
  // Extensions are visited as sets: items in increasing id order.
  auto visit = [&](auto&& self, const PartialRealization& current,
                   std::size_t from, int left) -> void {
    score(current);
    if (left == 0) return;
    for (std::size_t a = from; a < free.size(); ++a) {
      const int j = free[a];
      used[j] = 1;
      const auto& item = model.item(j);
      for (std::size_t s = 0; s < item.states.size(); ++s) {
        if (item.probs[s] == 0.0) continue;
        self(self, Extended(current, {j, static_cast<int>(s)}), a + 1,
             left - 1);
      }
      used[j] = 0;
    }
  };
  visit(visit, psi, 0, budget);
  return cert;
}

struct PolicyCurvature {
  std::vector<double> per_level;  // Gamma-hat(pi_l), l = 0..k
  double gamma_hat_k = 0.0;       // max over levels
};

// Gamma-hat(pi_l) is the max of Gamma-hat(psi) over nodes reachable with
// positive probability at depth l.
inline PolicyCurvature PolicyGammaHat(const AdaptiveModel& model,
                                      const PolicyTrace& trace, int budget) {
  PolicyCurvature out;
  for (int l = 0; l <= trace.k; ++l) {
    double level_max = 0.0;
    for (int v : trace.level(l)) {
      if (trace.nodes[v].probability <= 0.0) continue;
      level_max = std::max(
          level_max, AdaptiveGammaHat(model, trace.nodes[v].psi, budget).value);
    }
    out.per_level.push_back(level_max);
    out.gamma_hat_k = std::max(out.gamma_hat_k, level_max);
  }
  return out;
}

// 1 - (1 - 1/(k * Gamma-hat_k))^k.
inline RatioValue AdaptiveRatio(double gamma_hat_k, int k) {
  RequireK(k);
  if (IsUnbounded(gamma_hat_k)) return Uninformative();
  if (!(gamma_hat_k > 0.0)) {
    throw Error(ErrorKind::kInput, "adaptive Gamma-hat must be > 0");
  }
  const double scaled = static_cast<double>(k) * gamma_hat_k;
  return Clamped(1.0 - std::pow(1.0 - 1.0 / scaled, k));
}

// Best expected value over all adaptive policies that select at most k
// items, by backward induction over the game tree.
inline double OptimalPolicyValue(const AdaptiveModel& model, int k) {
  if (k < 1 || k > model.size()) {
    throw Error(ErrorKind::kInput, "optimal policy needs 1 <= k <= items");
  }
  int64_t visited = 0;
  auto value = [&](auto&& self, const PartialRealization& psi,
                   int left) -> double {
    if (++visited > model.cap()) {
      throw Error(ErrorKind::kInfeasible, "game tree exceeds the node cap");
    }
    double best = ExpectedValue(model, psi);
    if (left == 0) return best;
    const Subset dom = Domain(psi);
    for (int i = 0; i < model.size(); ++i) {
      if (Contains(dom, i)) continue;
      const auto& item = model.item(i);
      double total = 0.0;
      for (std::size_t s = 0; s < item.states.size(); ++s) {
        total += item.probs[s] *
                 self(self, Extended(psi, {i, static_cast<int>(s)}), left - 1);
      }
      best = std::max(best, total);
    }
    return best;
  };
  return value(value, PartialRealization{}, k);
}

// ---------------------------------------------------------------------------
// Instances.

struct AdaptiveObjectiveSpec {
  std::string family;  // additive | power_additive | coverage | synergy
  std::vector<std::vector<double>> values;          // [item][state]
  std::vector<std::vector<std::vector<int>>> sets;  // [item][state] -> items
  std::vector<double> item_weights;
  std::vector<std::vector<double>> synergy;
  double p = 1.0;
  bool operator==(const AdaptiveObjectiveSpec&) const = default;
};

struct AdaptiveInstance {
  std::vector<StochasticItem> items;
  AdaptiveObjectiveSpec objective;
  bool operator==(const AdaptiveInstance&) const = default;
};

namespace internal {

inline void ValidateAdaptive(const AdaptiveInstance& inst) {
  const auto& obj = inst.objective;
  const std::size_t n = inst.items.size();
  if (n == 0) SchemaFail("items", "must be nonempty");
  for (const auto& item : inst.items) {
    if (item.states.empty() || item.states.size() != item.probs.size()) {
      SchemaFail("items", "each item needs states and matching probs");
    }
  }
  auto check_table = [&](const auto& table, const std::string& field) {
    if (table.size() != n) SchemaFail(field, "need one row per item");
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != inst.items[i].states.size()) {
        SchemaFail(field, "need one entry per state of item " +
                              std::to_string(i));
      }
    }
  };
  if (!std::isfinite(obj.p) || obj.p < 1.0) SchemaFail("p", "must be >= 1");
  if (obj.family == "additive" || obj.family == "power_additive" ||
      obj.family == "synergy") {
    check_table(obj.values, "values");
    for (const auto& row : obj.values) {
      for (double v : row) CheckWeight(v, "values");
    }
  }
  if (obj.family == "coverage") {
    check_table(obj.sets, "sets");
    for (const auto& row : obj.sets) {
      for (const auto& set : row) {
        for (int item : set) {
          if (item < 0) SchemaFail("sets", "item ids must be >= 0");
          if (!obj.item_weights.empty() &&
              item >= static_cast<int>(obj.item_weights.size())) {
            SchemaFail("sets", "item without an item_weights entry");
          }
        }
      }
    }
    for (double w : obj.item_weights) CheckWeight(w, "item_weights");
  } else if (obj.family == "synergy") {
    if (obj.synergy.size() != n) SchemaFail("synergy", "must be n x n");
    for (std::size_t x = 0; x < n; ++x) {
      if (obj.synergy[x].size() != n) SchemaFail("synergy", "must be n x n");
      if (obj.synergy[x][x] != 0.0) SchemaFail("synergy", "nonzero diagonal");
      for (std::size_t y = 0; y < n; ++y) {
        CheckWeight(obj.synergy[x][y], "synergy");
        if (obj.synergy[x][y] != obj.synergy[y][x]) {
          SchemaFail("synergy", "matrix must be symmetric");
        }
      }
    }
  } else if (obj.family != "additive" && obj.family != "power_additive") {
    throw Error(ErrorKind::kUnsupportedFamily,
                "adaptive objective family '" + obj.family + "'");
  }
}

}  // namespace internal

// Evaluates f(E, Phi) by resolving each item's parameters at its state and
// calling the deterministic kernels.
inline AdaptiveModel BuildAdaptive(const AdaptiveInstance& inst,
                                   int64_t cap = Caps{}.adaptive_nodes) {
  internal::ValidateAdaptive(inst);
  auto obj = std::make_shared<AdaptiveObjectiveSpec>(inst.objective);
  AdaptiveModel::Evaluator eval;
  if (obj->family == "coverage") {
    int max_item = -1;
    for (const auto& row : obj->sets) max_item = std::max(max_item, MaxItem(row));
    eval = [obj, max_item](std::span<const int> e, std::span<const int> phi) {
      const double cover = CoverageValue(
          e,
          [&](int x) -> const std::vector<int>& { return obj->sets[x][phi[x]]; },
          obj->item_weights, max_item);
      return obj->p == 1.0 ? cover : std::pow(cover, obj->p);
    };
  } else {
    eval = [obj](std::span<const int> e, std::span<const int> phi) {
      std::vector<double> w(phi.size());
      for (std::size_t i = 0; i < phi.size(); ++i) w[i] = obj->values[i][phi[i]];
      if (obj->family == "synergy") {
        return SynergyValue(e, w, [&](int x, int y) {
          return obj->synergy[x][y] * w[x] * w[y];
        });
      }
      const double total = ModularValue(e, w);
      if (obj->family == "power_additive" && obj->p != 1.0) {
        return std::pow(total, obj->p);
      }
      return total;
    };
  }
  return AdaptiveModel(inst.items, std::move(eval), cap);
}

// The deterministic instance an all-single-state adaptive instance reduces
// to, with identical floating-point evaluation.
inline InstanceDescription InducedDeterministic(const AdaptiveInstance& inst) {
  internal::ValidateAdaptive(inst);
  const int n = static_cast<int>(inst.items.size());
  for (const auto& item : inst.items) {
    if (item.states.size() != 1) {
      throw Error(ErrorKind::kInput,
                  "induced deterministic instance needs single-state items");
    }
  }
  const auto& obj = inst.objective;
  std::vector<double> w;
  for (const auto& row : obj.values) w.push_back(row[0]);
  if (obj.family == "additive") return ModularInstance{n, w};
  if (obj.family == "power_additive") {
    // One private universe item per element, weighted by its value.
    CoverageInstance cov{n, {}, w};
    for (int i = 0; i < n; ++i) cov.sets.push_back({i});
    if (obj.p == 1.0) return cov;
    return PowerCoverageInstance{cov, obj.p};
  }
  if (obj.family == "coverage") {
    CoverageInstance cov{n, {}, obj.item_weights};
    for (const auto& row : obj.sets) cov.sets.push_back(row[0]);
    if (obj.p == 1.0) return cov;
    return PowerCoverageInstance{cov, obj.p};
  }
  SynergyInstance syn{n, w,
                      std::vector<std::vector<double>>(
                          n, std::vector<double>(n, 0.0))};
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      syn.synergy[x][y] = syn.synergy[y][x] = obj.synergy[x][y] * w[x] * w[y];
    }
  }
  return syn;
}

inline AdaptiveInstance AdaptiveFromJson(const nlohmann::json& j) {
  using internal::Field;
  using internal::SchemaFail;
  if (!j.is_object()) SchemaFail("<root>", "expected an object");
  const auto& type = Field(j, "type");
  if (!type.is_string() || type.get<std::string>() != "adaptive") {
    throw Error(ErrorKind::kUnsupportedFamily,
                "expected type 'adaptive', got " + type.dump());
  }
  AdaptiveInstance inst;
  const auto& items = Field(j, "items");
  if (!items.is_array()) SchemaFail("items", "expected an array");
  for (const auto& item : items) {
    StochasticItem it;
    const auto& states = Field(item, "states");
    if (!states.is_array()) SchemaFail("states", "expected an array");
    for (const auto& s : states) {
      it.states.push_back(s.is_string() ? s.get<std::string>() : s.dump());
    }
    it.probs = internal::NumberList(Field(item, "probs"), "probs");
    inst.items.push_back(std::move(it));
  }
  const auto& obj = Field(j, "objective");
  if (!obj.is_object()) SchemaFail("objective", "expected an object");
  const auto& family = Field(obj, "family");
  if (!family.is_string()) SchemaFail("family", "expected a string");
  inst.objective.family = family.get<std::string>();
  if (obj.contains("values")) {
    const auto& rows = obj.at("values");
    if (!rows.is_array()) SchemaFail("values", "expected a table");
    for (const auto& row : rows) {
      inst.objective.values.push_back(internal::NumberList(row, "values"));
    }
  }
  if (obj.contains("sets")) {
    const auto& rows = obj.at("sets");
    if (!rows.is_array()) SchemaFail("sets", "expected a table");
    for (const auto& row : rows) {
      if (!row.is_array()) SchemaFail("sets", "expected per-state lists");
      std::vector<std::vector<int>> per_state;
      for (const auto& set : row) per_state.push_back(internal::IntList(set, "sets"));
      inst.objective.sets.push_back(std::move(per_state));
    }
  }
  if (obj.contains("item_weights")) {
    inst.objective.item_weights =
        internal::NumberList(obj.at("item_weights"), "item_weights");
  }
  if (obj.contains("synergy")) {
    const auto& rows = obj.at("synergy");
    if (!rows.is_array()) SchemaFail("synergy", "expected a matrix");
    for (const auto& row : rows) {
      inst.objective.synergy.push_back(internal::NumberList(row, "synergy"));
    }
  }
  if (obj.contains("p")) inst.objective.p = internal::NumberField(obj, "p");
  internal::ValidateAdaptive(inst);
  return inst;
}

inline nlohmann::json AdaptiveToJson(const AdaptiveInstance& inst) {
  nlohmann::json j;
  j["type"] = "adaptive";
  j["items"] = nlohmann::json::array();
  for (const auto& item : inst.items) {
    j["items"].push_back({{"states", item.states}, {"probs", item.probs}});
  }
  nlohmann::json obj;
  obj["family"] = inst.objective.family;
  if (!inst.objective.values.empty()) obj["values"] = inst.objective.values;
  if (!inst.objective.sets.empty()) obj["sets"] = inst.objective.sets;
  if (!inst.objective.item_weights.empty()) {
    obj["item_weights"] = inst.objective.item_weights;
  }
  if (!inst.objective.synergy.empty()) obj["synergy"] = inst.objective.synergy;
  obj["p"] = inst.objective.p;
  j["objective"] = obj;
  return j;
}

inline AdaptiveInstance LoadAdaptiveInstance(const std::string& path) {
  return AdaptiveFromJson(ReadJsonFile(path));
}

// A random adaptive instance with `items` items of one or two states each.
// States are "off"/"on"; an "off" item contributes nothing. `family` is one
// of additive, power_additive (p = 2), coverage or synergy.
inline AdaptiveInstance RandomAdaptiveInstance(const std::string& family,
                                               int items, uint64_t seed,
                                               int max_states = 2) {
  if (items < 1 || max_states < 1 || max_states > 2) {
    throw Error(ErrorKind::kInput, "random adaptive instance arguments");
  }
  Rng rng(seed);
  AdaptiveInstance inst;
  inst.objective.family = family;
  for (int i = 0; i < items; ++i) {
    const bool two = max_states == 2 && rng.Bernoulli(0.8);
    if (two) {
      // Probabilities on a 1/8 grid keep the sum exact.
      const double live = rng.UniformInt(1, 7) / 8.0;
      inst.items.push_back({{"off", "on"}, {1.0 - live, live}});
    } else {
      inst.items.push_back({{"on"}, {1.0}});
    }
  }
  auto on_value = [&](int i, double v) {
    return inst.items[i].states.size() == 2 ? std::vector<double>{0.0, v}
                                            : std::vector<double>{v};
  };
  if (family == "coverage") {
    const int universe = rng.UniformInt(items, 2 * items);
    for (int i = 0; i < items; ++i) {
      std::vector<int> set;
      for (int u = 0; u < universe; ++u) {
        if (rng.Bernoulli(0.4)) set.push_back(u);
      }
      inst.objective.sets.push_back(
          inst.items[i].states.size() == 2
              ? std::vector<std::vector<int>>{{}, set}
              : std::vector<std::vector<int>>{set});
    }
    for (int u = 0; u < universe; ++u) {
      inst.objective.item_weights.push_back(rng.UniformInt(1, 4));
    }
  } else {
    for (int i = 0; i < items; ++i) {
      inst.objective.values.push_back(on_value(i, rng.Uniform(0.5, 5.0)));
    }
    if (family == "power_additive") {
      inst.objective.p = 2.0;
    } else if (family == "synergy") {
      inst.objective.synergy.assign(items, std::vector<double>(items, 0.0));
      for (int x = 0; x < items; ++x) {
        for (int y = x + 1; y < items; ++y) {
          if (rng.Bernoulli(0.5)) {
            inst.objective.synergy[x][y] = inst.objective.synergy[y][x] =
                rng.Uniform(0.0, 3.0);
          }
        }
      }
    } else if (family != "additive") {
      throw Error(ErrorKind::kUnsupportedFamily,
                  "adaptive objective family '" + family + "'");
    }
  }
  internal::ValidateAdaptive(inst);
  return inst;
}

inline const std::vector<std::string>& AdaptiveFamilies() {
  static const std::vector<std::string> kFamilies = {
      "additive", "power_additive", "coverage", "synergy"};
  return kFamilies;
}

}  // namespace curvcert

#endif  // CURVCERT_ADAPTIVE_H_
