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
// Subcommands of the curvcert tool. Each returns a process exit code:
// 0 success, 1 input error, 2 infeasible enumeration, 3 property violation.
//

#ifndef CURVCERT_TOOLS_COMMANDS_H_
#define CURVCERT_TOOLS_COMMANDS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curvcert.h"
#include "json.hpp"

namespace curvcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitViolation = 3;

inline int ExitCodeFor(const Error& e) {
  return e.kind() == ErrorKind::kInfeasible ? kExitInfeasible : kExitInput;
}

// Writes to `path`, or to stdout when the path is empty.
inline void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInput, "cannot write '" + path + "'");
  out << text;
}

struct CommonFlags {
  std::string instance;
  int k = 0;
  std::string mode = "exact";
  int trials = 1000;
  uint64_t seed = 1;
  int64_t cap = 0;  // 0 keeps the per-enumeration defaults
  std::string out;
  std::string format = "json";
};

inline Caps CapsFor(const CommonFlags& flags) {
  return flags.cap > 0 ? Caps::Uniform(flags.cap) : Caps{};
}

inline BoundOptions BoundOptionsFor(const CommonFlags& flags) {
  BoundOptions options;
  if (flags.mode == "sampled") {
    options.mode = CurvatureMode::kSampled;
  } else if (flags.mode != "exact") {
    throw Error(ErrorKind::kInput, "--mode must be exact or sampled");
  }
  if (flags.trials < 1) throw Error(ErrorKind::kInput, "--trials must be >= 1");
  options.trials = flags.trials;
  options.seed = flags.seed;
  options.caps = CapsFor(flags);
  return options;
}

inline void RequireFormat(const std::string& format) {
  if (format != "json" && format != "csv") {
    throw Error(ErrorKind::kInput, "--format must be json or csv");
  }
}

// ---------------------------------------------------------------------------
// bound

struct BoundFlags {
  CommonFlags common;
  bool lazy = false;
  bool wang_literal = false;
  bool no_oracle = false;
};

inline int CmdBound(const BoundFlags& flags, std::ostream& err) {
  RequireFormat(flags.common.format);
  BoundOptions options = BoundOptionsFor(flags.common);
  if (flags.lazy) options.greedy = GreedyMode::kLazy;
  if (flags.wang_literal) options.wang_indexing = WangIndexing::kLiteral;
  options.run_oracle = !flags.no_oracle;
  const InstanceDescription desc = LoadInstance(flags.common.instance);
  const SetFunction f = Build(desc);
  const UniformMatroid m(GroundSet(f.size()), flags.common.k);
  const RatioReport report = RunBound(f, m, options);
  WriteOutput(flags.common.out, flags.common.format == "csv"
                                    ? ReportToCsv(report)
                                    : ReportToJson(report).dump(2) + "\n");
  err << ReportSummary(report);
  if (report.partial) {
    err << "partial report: some certificates are sampled heuristics\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepFlags {
  std::vector<std::string> formulas = {"wang"};
  std::vector<std::string> params = {"1.0"};
  int k_min = 1;
  int k_max = 25;
  std::string out;
  std::string format = "csv";
  int threads = DefaultThreads();
};

struct SweepRow {
  std::string formula;
  int k = 0;
  std::string parameter;
  double ratio = 0.0;
};

// "k" stands for a parameter equal to the row's k.
inline double SweepParameter(const std::string& text, int k) {
  if (text == "k") return static_cast<double>(k);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) {
    throw Error(ErrorKind::kInput, "bad sweep parameter '" + text + "'");
  }
  return v;
}

inline double SweepRatio(const std::string& formula, double param, int k) {
  if (formula == "wang") return WangRatio(param, k).value;
  if (formula == "fixed_gamma") return FixedGammaRatio(param, k).value;
  if (formula == "adaptive") return AdaptiveRatio(param, k).value;
  if (formula == "classic") return ClassicRatio(k);
  throw Error(ErrorKind::kInput, "unknown formula '" + formula + "'");
}

inline std::vector<SweepRow> RunSweep(const SweepFlags& flags) {
  if (flags.formulas.empty() || flags.params.empty()) {
    throw Error(ErrorKind::kInput, "sweep grid is empty");
  }
  if (flags.k_min < 1 || flags.k_max < flags.k_min) {
    throw Error(ErrorKind::kInput, "sweep needs 1 <= k-min <= k-max");
  }
  std::vector<SweepRow> rows;
  for (const auto& formula : flags.formulas) {
    // The classic ratio has no parameter.
    const std::vector<std::string> params =
        formula == "classic" ? std::vector<std::string>{"-"} : flags.params;
    for (const auto& param : params) {
      for (int k = flags.k_min; k <= flags.k_max; ++k) {
        rows.push_back({formula, k, param, 0.0});
      }
    }
  }
  ParallelFor(
      rows.size(),
      [&](std::size_t i) {
        SweepRow& row = rows[i];
        const double param =
            row.parameter == "-" ? 0.0 : SweepParameter(row.parameter, row.k);
        row.ratio = SweepRatio(row.formula, param, row.k);
        if (row.parameter != "-" && row.parameter != "k") {
          row.parameter = FormatNumber(param);
        }
      },
      flags.threads);
  return rows;
}

inline std::string SweepToCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "formula,k,parameter,ratio\n";
  for (const auto& r : rows) {
    out << r.formula << "," << r.k << "," << r.parameter << ","
        << FormatNumber(r.ratio) << "\n";
  }
  return out.str();
}

inline int CmdSweep(const SweepFlags& flags) {
  RequireFormat(flags.format);
  const auto rows = RunSweep(flags);
  if (flags.format == "csv") {
    WriteOutput(flags.out, SweepToCsv(rows));
  } else {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"formula", r.formula},
                   {"k", r.k},
                   {"parameter", r.parameter},
                   {"ratio", r.ratio}});
    }
    WriteOutput(flags.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateFlags {
  uint64_t seed = 1;
  int count = 500;
  int max_n = 10;
  int max_k = 3;
  int property_count = 100;
  int triples = 20;
  int adaptive_count = 50;
  int adaptive_items = 5;
  int adaptive_k = 2;
  std::string replay_dir = "validate_replays";
  std::string out;
  bool inject_bug = false;
  int threads = DefaultThreads();
};

struct SuiteTally {
  std::string name;
  int64_t checked = 0;
  int64_t skipped = 0;
  int64_t violations = 0;
  double worst = 0.0;  // max error, or min slack for bound suites
  bool slack = false;

  void Error(double e) {
    ++checked;
    worst = std::max(worst, e);
    if (e > kValueTolerance) ++violations;
  }
  void Slack(double s) {
    worst = checked == 0 ? s : std::min(worst, s);
    ++checked;
    if (s < -kValueTolerance) ++violations;
  }
};

struct Replay {
  std::string name;
  nlohmann::json body;
};

struct ValidationResult {
  std::vector<SuiteTally> suites;
  std::vector<Replay> replays;
  double fixed_state_discrepancy = 0.0;
  double state_averaged_discrepancy = 0.0;

  int64_t violations() const {
    int64_t total = 0;
    for (const auto& s : suites) total += s.violations;
    return total;
  }
};

namespace internal {

// Per-instance seeds drawn sequentially so they do not depend on threading.
inline std::vector<uint64_t> SeedStream(uint64_t seed, uint64_t salt, int count) {
  Rng rng(seed ^ (salt * 0x9E3779B97F4A7C15ULL));
  std::vector<uint64_t> out(count);
  for (auto& s : out) s = rng.Next();
  return out;
}

struct PropertyOutcome {
  SuiteTally identity{"gamma_identity"};
  SuiteTally order{"order_independence"};
  SuiteTally telescoping{"telescoping"};
  std::optional<nlohmann::json> replay;
};

inline PropertyOutcome CheckProperties(int n, uint64_t seed, int triples) {
  PropertyOutcome out;
  const SubsetWeightsInstance desc = RandomMonotoneInstance(n, 0.6, seed);
  const SetFunction f = Build(desc);
  Rng rng(seed + 1);
  std::vector<nlohmann::json> failed;
  for (int t = 0; t < triples; ++t) {
    std::vector<int> order = GroundSet(n).all();
    rng.Shuffle(order);
    const int x = order[0];
    Subset s;
    std::vector<int> extra;
    for (int r = 1; r < n; ++r) {
      const double u = rng.Uniform();
      if (u < 0.3) {
        s.push_back(order[r]);
      } else if (u < 0.7 && extra.size() < 5) {
        extra.push_back(order[r]);
      }
    }
    s = Sorted(std::move(s));
    const Subset t_set = Union(s, extra);
    const int64_t before[3] = {out.identity.violations, out.order.violations,
                               out.telescoping.violations};

    const double base_gain = MarginalGain(f, x, s);
    if (base_gain > kZeroGain) {
      const double closed = TotalPrimalCurvature(f, x, t_set, s);
      out.identity.Error(
          std::abs(TotalPrimalCurvatureProduct(f, x, extra, s) - closed));
      std::vector<int> perm = Sorted(extra);
      double spread = 0.0;
      const double first = TotalPrimalCurvatureProduct(f, x, perm, s);
      while (std::next_permutation(perm.begin(), perm.end())) {
        spread = std::max(
            spread, std::abs(TotalPrimalCurvatureProduct(f, x, perm, s) - first));
      }
      out.order.Error(spread);
    } else {
      ++out.identity.skipped;
      ++out.order.skipped;
    }

    // f(T) - f(S) = sum_t Gamma(j_t | S_{t-1}, S) f_{j_t}(S).
    bool defined = true;
    for (int j : extra) defined = defined && MarginalGain(f, j, s) > kZeroGain;
    if (defined) {
      double sum = 0.0;
      Subset current = s;
      for (int j : extra) {
        sum += TotalPrimalCurvature(f, j, current, s) * MarginalGain(f, j, s);
        current = With(current, j);
      }
      out.telescoping.Error(std::abs(f(t_set) - f(s) - sum));
    } else {
      ++out.telescoping.skipped;
    }

    if (out.identity.violations > before[0] || out.order.violations > before[1] ||
        out.telescoping.violations > before[2]) {
      failed.push_back({{"x", x}, {"S", s}, {"T", t_set}, {"ordering", extra}});
    }
  }
  if (!failed.empty()) {
    nlohmann::json j = InstanceToJson(desc);
    j["replay"] = {{"suite", "properties"}, {"seed", seed}, {"triples", failed}};
    out.replay = j;
  }
  return out;
}

struct BoundOutcome {
  double primal_slack = 0.0;
  bool primal_present = false;
  double certified_slack = 0.0;
  int64_t certified_checked = 0;
  double oracle_slack = 0.0;
  std::optional<nlohmann::json> replay;
};

inline BoundOutcome CheckBound(Family family, int n, int k, uint64_t seed,
                               bool inject_bug) {
  BoundOutcome out;
  const InstanceDescription desc = RandomInstance(family, n, seed);
  const SetFunction f = Build(desc);
  const UniformMatroid m(GroundSet(n), k);
  RatioReport report = RunBound(f, m);
  if (inject_bug && report.primal_ratio.present) {
    // Mutation: the leading 1 dropped from the primal denominator.
    const GreedyChain& c = report.chain;
    const double excess =
        (c.extension_value / c.value() - 1.0) * report.gamma_hat->value;
    report.primal_ratio.value = excess > 1.0 ? 1.0 / excess : 1.0;
  }
  const double fs = report.chain.value();
  const double opt = report.oracle->value;
  out.oracle_slack = opt - fs;
  std::vector<std::string> failed;
  if (report.primal_ratio.present && report.primal_ratio.certified) {
    out.primal_present = true;
    out.primal_slack = fs - report.primal_ratio.value * opt;
    if (out.primal_slack < -kValueTolerance) failed.push_back("primal_ratio");
  }
  out.certified_slack = 0.0;
  for (const auto& [name, e] : report.entries()) {
    if (!e->present || !e->certified || name == "exact_ratio") continue;
    const double s = fs - e->value * opt;
    out.certified_slack =
        out.certified_checked == 0 ? s : std::min(out.certified_slack, s);
    ++out.certified_checked;
    if (s < -kValueTolerance && name != "primal_ratio") failed.push_back(name);
  }
  if (out.oracle_slack < -kValueTolerance) failed.push_back("oracle_dominance");
  if (!failed.empty()) {
    nlohmann::json j = InstanceToJson(desc);
    j["replay"] = {{"suite", "main_bound"}, {"k", k},     {"seed", seed},
                   {"failed", failed},      {"f_S", fs},  {"f_opt", opt},
                   {"primal_ratio", report.primal_ratio.value}};
    out.replay = j;
  }
  return out;
}

struct AdaptiveOutcome {
  double slack = 0.0;
  double fixed_state_discrepancy = 0.0;
  double state_averaged_discrepancy = 0.0;
  std::optional<nlohmann::json> replay;
};

inline AdaptiveOutcome CheckAdaptive(const std::string& family, int items, int k,
                                     uint64_t seed) {
  AdaptiveOutcome out;
  const AdaptiveInstance inst = RandomAdaptiveInstance(family, items, seed);
  const AdaptiveModel model = BuildAdaptive(inst);
  const PolicyTrace trace = AdaptiveGreedy(model, k);
  const PolicyCurvature curvature = PolicyGammaHat(model, trace, k);
  const RatioValue ratio = AdaptiveRatio(curvature.gamma_hat_k, k);
  const double opt = OptimalPolicyValue(model, k);
  out.slack = trace.f_avg.back() - ratio.value * opt;

  // Both readings of the sequence definition on psi' = every other item in
  // its last state, against psi = {}, for the first greedy pick.
  const int i = trace.nodes[0].selected;
  PartialRealization psi_prime;
  for (int j = 0; j < items && psi_prime.size() < 2; ++j) {
    if (j == i) continue;
    const auto& probs = inst.items[j].probs;
    psi_prime.push_back({j, static_cast<int>(probs.size()) - 1});
  }
  const double base = ConditionalExpectedGain(model, i, {});
  if (base > kZeroGain && !psi_prime.empty()) {
    const auto readings = AdaptiveTpcDebug(model, i, psi_prime, {});
    if (!IsUnbounded(readings.closed_form)) {
      out.fixed_state_discrepancy = readings.fixed_state_discrepancy();
      out.state_averaged_discrepancy = readings.state_averaged_discrepancy();
    }
  }
  if (out.slack < -kValueTolerance) {
    nlohmann::json j = AdaptiveToJson(inst);
    j["replay"] = {{"suite", "adaptive_bound"}, {"k", k},
                   {"seed", seed},              {"f_avg", trace.f_avg.back()},
                   {"optimal", opt},            {"ratio", ratio.value}};
    out.replay = j;
  }
  return out;
}

}  // namespace internal

inline ValidationResult RunValidation(const ValidateFlags& flags) {
  if (flags.count < 0 || flags.property_count < 0 || flags.adaptive_count < 0) {
    throw Error(ErrorKind::kInput, "counts must be >= 0");
  }
  if (flags.max_n < 3 || flags.max_n > 12 || flags.max_k < 1) {
    throw Error(ErrorKind::kInput, "validate needs 3 <= max-n <= 12, max-k >= 1");
  }
  if (flags.adaptive_items < 2 || flags.adaptive_k < 1) {
    throw Error(ErrorKind::kInput, "validate needs adaptive items >= 2, k >= 1");
  }
  ValidationResult result;

  // Identity, order independence and telescoping.
  const auto prop_seeds = internal::SeedStream(flags.seed, 1, flags.property_count);
  std::vector<internal::PropertyOutcome> props(flags.property_count);
  const int prop_max_n = std::min(flags.max_n, 8);
  ParallelFor(
      props.size(),
      [&](std::size_t i) {
        const int n = 2 + static_cast<int>(prop_seeds[i] % (prop_max_n - 1));
        props[i] = internal::CheckProperties(n, prop_seeds[i], flags.triples);
      },
      flags.threads);
  SuiteTally identity{"gamma_identity"}, order{"order_independence"},
      telescoping{"telescoping"};
  for (std::size_t i = 0; i < props.size(); ++i) {
    for (auto [total, part] : {std::pair{&identity, &props[i].identity},
                               std::pair{&order, &props[i].order},
                               std::pair{&telescoping, &props[i].telescoping}}) {
      total->checked += part->checked;
      total->skipped += part->skipped;
      total->violations += part->violations;
      total->worst = std::max(total->worst, part->worst);
    }
    if (props[i].replay) {
      result.replays.push_back({"properties_" + std::to_string(i), *props[i].replay});
    }
  }
  result.suites = {identity, order, telescoping};

  // Main bound and certified-ratio soundness against brute force.
  const auto bound_seeds = internal::SeedStream(flags.seed, 2, flags.count);
  std::vector<internal::BoundOutcome> bounds(flags.count);
  ParallelFor(
      bounds.size(),
      [&](std::size_t i) {
        const uint64_t s = bound_seeds[i];
        const Family family = kAllFamilies[i % 5];
        const int n = 3 + static_cast<int>(s % (flags.max_n - 2));
        const int k = 1 + static_cast<int>((s >> 8) % std::min(flags.max_k, n - 1));
        bounds[i] = internal::CheckBound(family, n, k, s, flags.inject_bug);
      },
      flags.threads);
  SuiteTally primal{"main_bound"}, certified{"certified_ratios"},
      dominance{"oracle_dominance"};
  primal.slack = certified.slack = dominance.slack = true;
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    const auto& b = bounds[i];
    if (b.primal_present) {
      primal.Slack(b.primal_slack);
    } else {
      ++primal.skipped;
    }
    if (b.certified_checked > 0) {
      certified.Slack(b.certified_slack);
      certified.checked += b.certified_checked - 1;
    }
    dominance.Slack(b.oracle_slack);
    if (b.replay) {
      result.replays.push_back({"main_bound_" + std::to_string(i), *b.replay});
    }
  }
  result.suites.push_back(primal);
  result.suites.push_back(certified);
  result.suites.push_back(dominance);

  // Adaptive bound against the backward-induction optimum.
  const auto adaptive_seeds =
      internal::SeedStream(flags.seed, 3, flags.adaptive_count);
  std::vector<internal::AdaptiveOutcome> adaptive(flags.adaptive_count);
  ParallelFor(
      adaptive.size(),
      [&](std::size_t i) {
        const uint64_t s = adaptive_seeds[i];
        const auto& family = AdaptiveFamilies()[i % AdaptiveFamilies().size()];
        const int items =
            2 + static_cast<int>(s % static_cast<uint64_t>(flags.adaptive_items - 1));
        const int k = 1 + static_cast<int>((s >> 8) % std::min(flags.adaptive_k, items));
        adaptive[i] = internal::CheckAdaptive(family, items, k, s);
      },
      flags.threads);
  SuiteTally adaptive_bound{"adaptive_bound"};
  adaptive_bound.slack = true;
  for (std::size_t i = 0; i < adaptive.size(); ++i) {
    adaptive_bound.Slack(adaptive[i].slack);
    result.fixed_state_discrepancy =
        std::max(result.fixed_state_discrepancy, adaptive[i].fixed_state_discrepancy);
    result.state_averaged_discrepancy = std::max(
        result.state_averaged_discrepancy, adaptive[i].state_averaged_discrepancy);
    if (adaptive[i].replay) {
      result.replays.push_back(
          {"adaptive_bound_" + std::to_string(i), *adaptive[i].replay});
    }
  }
  result.suites.push_back(adaptive_bound);
  return result;
}

inline std::string ValidationSummary(const ValidateFlags& flags,
                                     const ValidationResult& result) {
  std::ostringstream out;
  out << "validate seed=" << flags.seed << " count=" << flags.count
      << " max_n=" << flags.max_n << " max_k=" << flags.max_k
      << " properties=" << flags.property_count << "x" << flags.triples
      << " adaptive_count=" << flags.adaptive_count
      << (flags.inject_bug ? " inject_bug" : "") << "\n";
  for (const auto& s : result.suites) {
    out << s.name << ": checked=" << s.checked << " skipped=" << s.skipped
        << " violations=" << s.violations << " "
        << (s.slack ? "min_slack=" : "max_error=") << FormatNumber(s.worst)
        << "\n";
  }
  out << "adaptive_gamma_readings: fixed_state_max_discrepancy="
      << FormatNumber(result.fixed_state_discrepancy)
      << " state_averaged_max_discrepancy="
      << FormatNumber(result.state_averaged_discrepancy) << "\n";
  for (const auto& r : result.replays) {
    out << "replay: " << r.name << ".json\n";
  }
  out << "result: " << (result.violations() == 0 ? "PASS" : "FAIL") << "\n";
  return out.str();
}

inline int CmdValidate(const ValidateFlags& flags) {
  const ValidationResult result = RunValidation(flags);
  if (!result.replays.empty()) {
    std::filesystem::create_directories(flags.replay_dir);
    for (const auto& r : result.replays) {
      const auto path = std::filesystem::path(flags.replay_dir) / (r.name + ".json");
      WriteOutput(path.string(), r.body.dump(2) + "\n");
    }
  }
  WriteOutput(flags.out, ValidationSummary(flags, result));
  return result.violations() == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// adaptive

inline nlohmann::json RatioToJson(const RatioValue& r) {
  return {{"value", r.value}, {"raw", r.raw}, {"uninformative", r.uninformative}};
}

inline int CmdAdaptive(const CommonFlags& flags, std::ostream& err) {
  RequireFormat(flags.format);
  const AdaptiveInstance inst = LoadAdaptiveInstance(flags.instance);
  const Caps caps = CapsFor(flags);
  const AdaptiveModel model = BuildAdaptive(inst, caps.adaptive_nodes);
  const int k = flags.k;
  const PolicyTrace trace = AdaptiveGreedy(model, k);
  const PolicyCurvature curvature = PolicyGammaHat(model, trace, k);
  const RatioValue ratio = AdaptiveRatio(curvature.gamma_hat_k, k);
  const double opt = OptimalPolicyValue(model, k);
  const double lhs = ratio.value * opt;
  const double rhs = trace.f_avg.back();
  const bool holds = lhs <= rhs + kValueTolerance;

  nlohmann::json j;
  j["k"] = k;
  j["items"] = model.size();
  j["f_avg"] = trace.f_avg;
  j["delta_avg"] = trace.delta_avg;
  j["gamma_hat_levels"] = nlohmann::json::array();
  for (double g : curvature.per_level) {
    j["gamma_hat_levels"].push_back(NumberOrUnbounded(g));
  }
  j["gamma_hat_k"] = NumberOrUnbounded(curvature.gamma_hat_k);
  j["adaptive_ratio"] = RatioToJson(ratio);
  j["optimal_policy_value"] = opt;
  j["bound_check"] = {{"lhs", lhs}, {"rhs", rhs},
                      {"verdict", holds ? "holds" : "violated"}};
  j["policy_nodes"] = trace.nodes.size();
  j["root_selection"] = trace.nodes[0].selected;
  if (model.deterministic()) {
    BoundOptions options = BoundOptionsFor(flags);
    const SetFunction f = Build(InducedDeterministic(inst));
    j["deterministic_report"] =
        ReportToJson(RunBound(f, UniformMatroid(GroundSet(f.size()), k), options));
  }

  if (flags.format == "csv") {
    std::ostringstream csv;
    csv << "level,f_avg,gamma_hat\n";
    for (int l = 0; l <= k; ++l) {
      csv << l << "," << FormatNumber(trace.f_avg[l]) << ","
          << FormatNumber(curvature.per_level[l]) << "\n";
    }
    WriteOutput(flags.out, csv.str());
  } else {
    WriteOutput(flags.out, j.dump(2) + "\n");
  }
  err << "adaptive greedy, k=" << k << ": f_avg=" << FormatNumber(rhs)
      << " Gamma-hat_k=" << FormatNumber(curvature.gamma_hat_k)
      << " ratio=" << FormatNumber(ratio.value)
      << " optimal=" << FormatNumber(opt) << " bound "
      << (holds ? "holds" : "violated") << "\n";
  return holds ? kExitOk : kExitViolation;
}

}  // namespace curvcert::cli

#endif  // CURVCERT_TOOLS_COMMANDS_H_
