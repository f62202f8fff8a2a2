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
// Closed-form benchmark objectives and their JSON instance format.
//
//   coverage        f(S) = weight of the union of the sets chosen by S
//   modular         f(S) = sum of w_x over S
//   power_coverage  f(S) = coverage(S)^p, p >= 1
//   synergy         f(S) = sum of w_x + sum over pairs x<y in S of b_xy
//   subset_weights  f(S) = sum of w_R over listed sets R contained in S
//
// The evaluation kernels are free functions so the adaptive module can
// reuse them with state-resolved parameters and get bit-identical values.
//

#ifndef CURVCERT_OBJECTIVES_H_
#define CURVCERT_OBJECTIVES_H_

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "curvcert/errors.h"
#include "curvcert/setfn.h"
#include "json.hpp"

namespace curvcert {

struct CoverageInstance {
  int n = 0;
  std::vector<std::vector<int>> sets;
  std::vector<double> item_weights;  // empty means unit weights
  bool operator==(const CoverageInstance&) const = default;

  // Number of distinct items when unweighted, else len(item_weights).
  int universe_size() const;
};

struct ModularInstance {
  int n = 0;
  std::vector<double> weights;
  bool operator==(const ModularInstance&) const = default;
};

struct PowerCoverageInstance {
  CoverageInstance coverage;
  double p = 1.0;
  bool operator==(const PowerCoverageInstance&) const = default;
};

struct SynergyInstance {
  int n = 0;
  std::vector<double> weights;
  std::vector<std::vector<double>> synergy;
  bool operator==(const SynergyInstance&) const = default;
};

struct WeightedSubset {
  std::vector<int> set;
  double weight = 0.0;
  bool operator==(const WeightedSubset&) const = default;
};

// Nonnegative weights on subsets; the random-monotone test family.
struct SubsetWeightsInstance {
  int n = 0;
  std::vector<WeightedSubset> terms;
  bool operator==(const SubsetWeightsInstance&) const = default;
};

using InstanceDescription =
    std::variant<CoverageInstance, ModularInstance, PowerCoverageInstance,
                 SynergyInstance, SubsetWeightsInstance>;

// ---------------------------------------------------------------------------
// Kernels.

inline double ModularValue(std::span<const int> s,
                           std::span<const double> weights) {
  double total = 0.0;
  for (int x : s) total += weights[x];
  return total;
}

// `covered(x)` returns the item list of element x. Items are summed in
// increasing id order.
template <typename CoveredFn>
double CoverageValue(std::span<const int> s, CoveredFn&& covered,
                     std::span<const double> item_weights, int max_item) {
  std::vector<char> hit(static_cast<std::size_t>(max_item) + 1, 0);
  for (int x : s) {
    for (int item : covered(x)) hit[item] = 1;
  }
  double total = 0.0;
  for (int item = 0; item <= max_item; ++item) {
    if (hit[item]) {
      total += item_weights.empty() ? 1.0 : item_weights[item];
    }
  }
  return total;
}

template <typename PairFn>
double SynergyValue(std::span<const int> s, std::span<const double> weights,
                    PairFn&& pair) {
  double total = 0.0;
  for (int x : s) total += weights[x];
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      total += pair(s[a], s[b]);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

inline int MaxItem(const std::vector<std::vector<int>>& sets) {
  int max_item = -1;
  for (const auto& set : sets) {
    for (int item : set) max_item = std::max(max_item, item);
  }
  return max_item;
}

inline int CoverageInstance::universe_size() const {
  if (!item_weights.empty()) return static_cast<int>(item_weights.size());
  std::vector<int> items;
  for (const auto& set : sets) items.insert(items.end(), set.begin(), set.end());
  std::sort(items.begin(), items.end());
  return static_cast<int>(std::unique(items.begin(), items.end()) -
                          items.begin());
}

inline int InstanceSize(const InstanceDescription& desc) {
  return std::visit(
      [](const auto& d) -> int {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PowerCoverageInstance>) {
          return d.coverage.n;
        } else {
          return d.n;
        }
      },
      desc);
}

inline std::string FamilyName(const InstanceDescription& desc) {
  switch (desc.index()) {
    case 0:
      return "coverage";
    case 1:
      return "modular";
    case 2:
      return "power_coverage";
    case 3:
      return "synergy";
    default:
      return "subset_weights";
  }
}

namespace internal {

[[noreturn]] inline void SchemaFail(const std::string& field,
                                    const std::string& what) {
  throw Error(ErrorKind::kSchema, "field '" + field + "': " + what);
}

inline void CheckWeight(double w, const std::string& field) {
  if (!std::isfinite(w) || w < 0.0) {
    SchemaFail(field, "weights must be finite and >= 0");
  }
}

inline void ValidateCoverage(const CoverageInstance& d) {
  if (d.n < 1) SchemaFail("n", "must be >= 1");
  if (static_cast<int>(d.sets.size()) != d.n) {
    SchemaFail("sets", "expected " + std::to_string(d.n) + " sets, got " +
                           std::to_string(d.sets.size()));
  }
  for (const auto& set : d.sets) {
    for (int item : set) {
      if (item < 0) SchemaFail("sets", "item ids must be >= 0");
      if (!d.item_weights.empty() &&
          item >= static_cast<int>(d.item_weights.size())) {
        SchemaFail("sets", "item " + std::to_string(item) +
                               " has no entry in item_weights");
      }
    }
  }
  for (double w : d.item_weights) CheckWeight(w, "item_weights");
}

inline void ValidateWeights(int n, const std::vector<double>& weights) {
  if (n < 1) SchemaFail("n", "must be >= 1");
  if (static_cast<int>(weights.size()) != n) {
    SchemaFail("weights", "expected " + std::to_string(n) + " entries");
  }
  for (double w : weights) CheckWeight(w, "weights");
}

inline void Validate(const InstanceDescription& desc) {
  std::visit(
      [](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CoverageInstance>) {
          ValidateCoverage(d);
        } else if constexpr (std::is_same_v<T, ModularInstance>) {
          ValidateWeights(d.n, d.weights);
        } else if constexpr (std::is_same_v<T, PowerCoverageInstance>) {
          ValidateCoverage(d.coverage);
          if (!std::isfinite(d.p) || d.p < 1.0) SchemaFail("p", "must be >= 1");
        } else if constexpr (std::is_same_v<T, SynergyInstance>) {
          ValidateWeights(d.n, d.weights);
          if (static_cast<int>(d.synergy.size()) != d.n) {
            SchemaFail("synergy", "must be an n x n matrix");
          }
          for (int x = 0; x < d.n; ++x) {
            if (static_cast<int>(d.synergy[x].size()) != d.n) {
              SchemaFail("synergy", "must be an n x n matrix");
            }
            if (d.synergy[x][x] != 0.0) {
              SchemaFail("synergy", "diagonal must be zero");
            }
            for (int y = 0; y < d.n; ++y) {
              CheckWeight(d.synergy[x][y], "synergy");
              if (d.synergy[x][y] != d.synergy[y][x]) {
                SchemaFail("synergy", "matrix must be symmetric");
              }
            }
          }
        } else {
          if (d.n < 1) SchemaFail("n", "must be >= 1");
          if (d.n > 63) SchemaFail("n", "subset_weights supports n <= 63");
          for (const auto& term : d.terms) {
            CheckWeight(term.weight, "terms");
            if (term.set.empty()) SchemaFail("terms", "sets must be nonempty");
            for (int x : term.set) {
              if (x < 0 || x >= d.n) SchemaFail("terms", "element out of range");
            }
          }
        }
      },
      desc);
}

inline SetFunction BuildCoverage(const CoverageInstance& d, double p) {
  const int max_item = MaxItem(d.sets);
  auto sets = std::make_shared<std::vector<std::vector<int>>>(d.sets);
  auto weights = std::make_shared<std::vector<double>>(d.item_weights);
  const bool submodular = p == 1.0;
  SetFunction::Evaluator eval = [sets, weights, max_item,
                                 p](std::span<const int> s) {
    const double cover = CoverageValue(
        s, [&](int x) -> const std::vector<int>& { return (*sets)[x]; },
        *weights, max_item);
    return p == 1.0 ? cover : std::pow(cover, p);
  };
  return SetFunction(d.n, std::move(eval), submodular,
                     p == 1.0 ? "coverage" : "power_coverage");
}

}  // namespace internal

// Builds an evaluation handle for a validated description.
inline SetFunction Build(const InstanceDescription& desc) {
  internal::Validate(desc);
  return std::visit(
      [](const auto& d) -> SetFunction {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CoverageInstance>) {
          return internal::BuildCoverage(d, 1.0);
        } else if constexpr (std::is_same_v<T, PowerCoverageInstance>) {
          return internal::BuildCoverage(d.coverage, d.p);
        } else if constexpr (std::is_same_v<T, ModularInstance>) {
          auto w = std::make_shared<std::vector<double>>(d.weights);
          return SetFunction(
              d.n, [w](std::span<const int> s) { return ModularValue(s, *w); },
              true, "modular");
        } else if constexpr (std::is_same_v<T, SynergyInstance>) {
          auto w = std::make_shared<std::vector<double>>(d.weights);
          auto b = std::make_shared<std::vector<std::vector<double>>>(d.synergy);
          bool additive = true;
          for (const auto& row : d.synergy) {
            for (double v : row) additive = additive && v == 0.0;
          }
          return SetFunction(
              d.n,
              [w, b](std::span<const int> s) {
                return SynergyValue(s, *w,
                                    [&](int x, int y) { return (*b)[x][y]; });
              },
              additive, "synergy");
        } else {
          std::vector<std::pair<uint64_t, double>> terms;
          bool singletons_only = true;
          for (const auto& term : d.terms) {
            if (term.weight == 0.0) continue;
            terms.emplace_back(ToMask(Sorted(term.set)), term.weight);
            singletons_only = singletons_only && term.set.size() == 1;
          }
          auto shared = std::make_shared<decltype(terms)>(std::move(terms));
          return SetFunction(
              d.n,
              [shared](std::span<const int> s) {
                const uint64_t mask = ToMask(s);
                double total = 0.0;
                for (const auto& [r, w] : *shared) {
                  if ((r & ~mask) == 0) total += w;
                }
                return total;
              },
              singletons_only, "subset_weights");
        }
      },
      desc);
}

// ---------------------------------------------------------------------------
// JSON.

namespace internal {

using nlohmann::json;

inline const json& Field(const json& j, const std::string& key) {
  if (!j.contains(key)) SchemaFail(key, "missing");
  return j.at(key);
}

inline int IntField(const json& j, const std::string& key) {
  const json& v = Field(j, key);
  if (!v.is_number_integer()) SchemaFail(key, "expected an integer");
  return v.get<int>();
}

// "n" may be omitted; it then defaults to the length of the per-element list.
inline int SizeField(const json& j, std::size_t fallback) {
  return j.contains("n") ? IntField(j, "n") : static_cast<int>(fallback);
}

inline double NumberField(const json& j, const std::string& key) {
  const json& v = Field(j, key);
  if (!v.is_number()) SchemaFail(key, "expected a number");
  return v.get<double>();
}

inline std::vector<double> NumberList(const json& v, const std::string& key) {
  if (!v.is_array()) SchemaFail(key, "expected an array of numbers");
  std::vector<double> out;
  for (const json& e : v) {
    if (!e.is_number()) SchemaFail(key, "non-numeric entry");
    out.push_back(e.get<double>());
  }
  return out;
}

inline std::vector<int> IntList(const json& v, const std::string& key) {
  if (!v.is_array()) SchemaFail(key, "expected an array of integers");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) SchemaFail(key, "non-integer entry");
    out.push_back(e.get<int>());
  }
  return out;
}

inline CoverageInstance CoverageFromJson(const json& j) {
  CoverageInstance d;
  const json& sets = Field(j, "sets");
  if (!sets.is_array()) SchemaFail("sets", "expected an array of arrays");
  for (const json& set : sets) d.sets.push_back(IntList(set, "sets"));
  d.n = SizeField(j, d.sets.size());
  if (j.contains("item_weights")) {
    d.item_weights = NumberList(j.at("item_weights"), "item_weights");
  }
  return d;
}

inline void CoverageToJson(const CoverageInstance& d, json& j) {
  j["n"] = d.n;
  j["sets"] = d.sets;
  if (!d.item_weights.empty()) j["item_weights"] = d.item_weights;
}

}  // namespace internal

inline InstanceDescription InstanceFromJson(const nlohmann::json& j) {
  using internal::Field;
  using internal::SchemaFail;
  if (!j.is_object()) SchemaFail("<root>", "expected an object");
  const nlohmann::json& type = Field(j, "type");
  if (!type.is_string()) SchemaFail("type", "expected a string");
  const std::string tag = type.get<std::string>();
  InstanceDescription desc;
  if (tag == "coverage") {
    desc = internal::CoverageFromJson(j);
  } else if (tag == "power_coverage") {
    desc = PowerCoverageInstance{internal::CoverageFromJson(j),
                                 internal::NumberField(j, "p")};
  } else if (tag == "modular") {
    ModularInstance d;
    d.weights = internal::NumberList(Field(j, "weights"), "weights");
    d.n = internal::SizeField(j, d.weights.size());
    desc = d;
  } else if (tag == "synergy") {
    SynergyInstance d;
    d.weights = internal::NumberList(Field(j, "weights"), "weights");
    d.n = internal::SizeField(j, d.weights.size());
    const nlohmann::json& rows = Field(j, "synergy");
    if (!rows.is_array()) SchemaFail("synergy", "expected a matrix");
    for (const auto& row : rows) {
      d.synergy.push_back(internal::NumberList(row, "synergy"));
    }
    desc = d;
  } else if (tag == "subset_weights") {
    SubsetWeightsInstance d;
    d.n = internal::IntField(j, "n");
    const nlohmann::json& terms = Field(j, "terms");
    if (!terms.is_array()) SchemaFail("terms", "expected an array");
    for (const auto& term : terms) {
      if (!term.is_object()) SchemaFail("terms", "expected objects");
      d.terms.push_back({internal::IntList(Field(term, "set"), "terms.set"),
                         internal::NumberField(term, "weight")});
    }
    desc = d;
  } else {
    throw Error(ErrorKind::kUnsupportedFamily,
                "instance type '" + tag + "' is not supported");
  }
  internal::Validate(desc);
  return desc;
}

inline nlohmann::json InstanceToJson(const InstanceDescription& desc) {
  nlohmann::json j;
  j["type"] = FamilyName(desc);
  std::visit(
      [&j](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, CoverageInstance>) {
          internal::CoverageToJson(d, j);
        } else if constexpr (std::is_same_v<T, PowerCoverageInstance>) {
          internal::CoverageToJson(d.coverage, j);
          j["p"] = d.p;
        } else if constexpr (std::is_same_v<T, ModularInstance>) {
          j["n"] = d.n;
          j["weights"] = d.weights;
        } else if constexpr (std::is_same_v<T, SynergyInstance>) {
          j["n"] = d.n;
          j["weights"] = d.weights;
          j["synergy"] = d.synergy;
        } else {
          j["n"] = d.n;
          j["terms"] = nlohmann::json::array();
          for (const auto& term : d.terms) {
            j["terms"].push_back({{"set", term.set}, {"weight", term.weight}});
          }
        }
      },
      desc);
  return j;
}

inline nlohmann::json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kInput, "cannot open '" + path + "'");
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSchema, "'" + path + "' is not valid JSON: " +
                                        std::string(e.what()));
  }
}

inline InstanceDescription LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadJsonFile(path));
}

inline void SaveInstance(const std::string& path,
                         const InstanceDescription& desc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kInput, "cannot write '" + path + "'");
  out << InstanceToJson(desc).dump(2) << "\n";
}

}  // namespace curvcert

#endif  // CURVCERT_OBJECTIVES_H_
