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
// RatioReport: every ratio the library can compute for one greedy run, with
// provenance, plus the end-to-end pipeline that fills it.
//

#ifndef CURVCERT_REPORT_H_
#define CURVCERT_REPORT_H_

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curvcert/curvature.h"
#include "curvcert/errors.h"
#include "curvcert/greedy.h"
#include "curvcert/oracle.h"
#include "curvcert/ratios.h"
#include "curvcert/setfn.h"
#include "json.hpp"

namespace curvcert {

struct RatioEntry {
  bool present = false;
  double value = 0.0;
  double raw = 0.0;
  // True when the value is a proven lower bound for this instance; false for
  // empirical (sampled) or assumption-violating values.
  bool certified = false;
  std::string provenance;
  std::string note;  // reason when absent; flags such as "uninformative"

  static RatioEntry Absent(std::string reason) {
    RatioEntry e;
    e.note = std::move(reason);
    return e;
  }
  static RatioEntry From(const RatioValue& v, bool certified,
                         std::string provenance) {
    RatioEntry e;
    e.present = true;
    e.value = v.value;
    e.raw = v.raw;
    e.certified = certified;
    e.provenance = std::move(provenance);
    if (v.uninformative) e.note = "uninformative";
    return e;
  }
};

struct RatioReport {
  std::string family;
  int n = 0;
  int k = 0;
  GreedyChain chain;
  bool submodular = false;

  std::optional<CurvatureCertificate> gamma_hat;  // at S_k
  std::optional<CurvatureCertificate> gamma_hat_max;  // over S_0..S_{k-1}
  std::optional<ElementalCurvature> alpha;
  std::optional<TotalCurvature> total_curvature;
  std::optional<OracleResult> oracle;

  RatioEntry primal_ratio;
  RatioEntry fixed_gamma_ratio;
  RatioEntry wang_ratio;
  RatioEntry conforti_ratio;
  RatioEntry conforti_uniform_ratio;
  RatioEntry classic_ratio;
  RatioEntry exact_ratio;

  std::vector<std::string> warnings;
  bool partial = false;  // some enumeration fell back to sampling

  // Name/entry pairs in a fixed order.
  std::vector<std::pair<std::string, const RatioEntry*>> entries() const {
    return {{"primal_ratio", &primal_ratio},
            {"fixed_gamma_ratio", &fixed_gamma_ratio},
            {"wang_ratio", &wang_ratio},
            {"conforti_ratio", &conforti_ratio},
            {"conforti_uniform_ratio", &conforti_uniform_ratio},
            {"classic_ratio", &classic_ratio},
            {"exact_ratio", &exact_ratio}};
  }
};

struct ReportInputs {
  GreedyChain chain;
  std::string family = "custom";
  bool submodular_flag = false;
  std::optional<CurvatureCertificate> gamma_hat;
  std::vector<CurvatureCertificate> prefix_certificates;
  std::optional<ElementalCurvature> alpha;
  std::optional<TotalCurvature> total_curvature;
  std::optional<OracleResult> oracle;
  WangIndexing wang_indexing = WangIndexing::kFromZero;
};

inline constexpr double kSubmodularAlphaTolerance = 1e-12;

// Assembles every computable ratio; missing ones carry a reason.
inline RatioReport BuildReport(const ReportInputs& in) {
  RatioReport r;
  r.family = in.family;
  r.chain = in.chain;
  r.n = in.chain.n;
  r.k = in.chain.k();
  r.gamma_hat = in.gamma_hat;
  r.alpha = in.alpha;
  r.total_curvature = in.total_curvature;
  r.oracle = in.oracle;
  r.warnings = in.chain.warnings;
  r.submodular = in.submodular_flag ||
                 (in.alpha && in.alpha->exact &&
                  in.alpha->value <= 1.0 + kSubmodularAlphaTolerance);

  const double fs = in.chain.value();
  if (!in.chain.has_extension()) {
    r.primal_ratio = RatioEntry::Absent("supermatroid undefined");
  } else if (!in.gamma_hat) {
    r.primal_ratio = RatioEntry::Absent("no Gamma-hat certificate");
  } else if (!(fs > 0.0)) {
    r.primal_ratio = RatioEntry::Absent("degenerate instance: f(S) = 0");
  } else {
    r.primal_ratio =
        RatioEntry::From(PrimalRatio(in.chain, *in.gamma_hat),
                         in.gamma_hat->certified(),
                         ProvenanceName(in.gamma_hat->provenance));
  }

  if (!in.prefix_certificates.empty()) {
    CurvatureCertificate worst = in.prefix_certificates.front();
    worst.terms = 0;
    for (const auto& cert : in.prefix_certificates) {
      worst.value = std::max(worst.value, cert.value);
      if (!cert.certified()) worst.provenance = cert.provenance;
      worst.terms += cert.terms;
    }
    worst.base.clear();
    r.gamma_hat_max = worst;
    r.fixed_gamma_ratio =
        RatioEntry::From(FixedGammaRatio(worst.value, r.k), worst.certified(),
                         ProvenanceName(worst.provenance));
  } else {
    r.fixed_gamma_ratio = RatioEntry::Absent("no prefix certificates");
  }

  if (in.alpha) {
    r.wang_ratio = RatioEntry::From(
        WangRatio(in.alpha->value, r.k, in.wang_indexing), in.alpha->exact,
        in.alpha->exact ? "exact" : "sampled-heuristic");
    if (in.wang_indexing == WangIndexing::kLiteral) {
      r.wang_ratio.note += r.wang_ratio.note.empty() ? "" : "; ";
      r.wang_ratio.note += "literal index range";
      r.wang_ratio.certified = false;
    }
  } else {
    r.wang_ratio = RatioEntry::Absent("elemental curvature not computed");
  }

  if (!in.total_curvature || !in.total_curvature->defined) {
    r.conforti_ratio = RatioEntry::Absent("total curvature undefined");
    r.conforti_uniform_ratio = r.conforti_ratio;
  } else if (in.total_curvature->value < 0.0 ||
             in.total_curvature->value > 1.0) {
    r.conforti_ratio = RatioEntry::Absent("total curvature outside [0,1]");
    r.conforti_uniform_ratio = r.conforti_ratio;
  } else {
    const ConfortiRatios c = ComputeConfortiRatios(in.total_curvature->value);
    r.conforti_ratio =
        RatioEntry::From(Clamped(c.general), r.submodular, "formula");
    r.conforti_uniform_ratio =
        RatioEntry::From(Clamped(c.uniform), r.submodular, "formula");
    if (!r.submodular) {
      const char* flag = "requires submodular f";
      r.conforti_ratio.note = flag;
      r.conforti_uniform_ratio.note = flag;
    }
  }

  r.classic_ratio =
      RatioEntry::From(Clamped(ClassicRatio(r.k)), r.submodular, "formula");
  if (!r.submodular) r.classic_ratio.note = "requires submodular f";

  if (!in.oracle) {
    r.exact_ratio = RatioEntry::Absent("brute force not run");
  } else if (!(in.oracle->value > 0.0)) {
    r.exact_ratio = RatioEntry::Absent("degenerate instance: f(S*) = 0");
  } else {
    const double ratio = ExactRatio(in.chain, *in.oracle);
    r.exact_ratio = RatioEntry::From(Clamped(ratio), true, "brute-force");
  }
  return r;
}

struct BoundOptions {
  CurvatureMode mode = CurvatureMode::kExact;
  int trials = 1000;
  uint64_t seed = 1;
  Caps caps;
  GreedyMode greedy = GreedyMode::kExhaustive;
  WangIndexing wang_indexing = WangIndexing::kFromZero;
  bool run_oracle = true;
};

namespace internal {

inline CurvatureCertificate Certify(const SetFunction& f, const Subset& s,
                                    const UniformMatroid& m,
                                    const BoundOptions& options,
                                    RatioReport* notes, uint64_t salt) {
  if (options.mode == CurvatureMode::kExact) {
    try {
      return GammaHatExact(f, s, m, options.caps.gamma_terms);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
      if (f.submodular()) return SubmodularGammaHat(s, m.k());
      notes->partial = true;
      notes->warnings.push_back(std::string(e.what()) +
                                "; using the sampled estimator");
    }
  }
  return GammaHatSampled(f, s, m, options.trials, options.seed + salt);
}

}  // namespace internal

// Greedy, certificates, curvature baselines and (when feasible) the brute
// force optimum for one instance.
inline RatioReport RunBound(const SetFunction& f, const UniformMatroid& m,
                            const BoundOptions& options = {}) {
  RatioReport scratch;
  ReportInputs in;
  in.family = f.family();
  in.submodular_flag = f.submodular();
  in.wang_indexing = options.wang_indexing;
  in.chain = GreedyMaximize(f, m, {options.greedy, true});

  if (in.chain.has_extension()) {
    in.gamma_hat = internal::Certify(f, in.chain.solution(), m, options,
                                     &scratch, m.k());
  }
  for (int l = 0; l < m.k(); ++l) {
    in.prefix_certificates.push_back(
        internal::Certify(f, in.chain.prefix(l), m, options, &scratch, l));
  }

  try {
    in.alpha = ComputeElementalCurvature(f, m.ground(), options.mode,
                                         options.caps.alpha_triples,
                                         options.trials, options.seed);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInfeasible) throw;
    scratch.partial = true;
    scratch.warnings.push_back(std::string(e.what()) +
                               "; alpha estimated by sampling");
    in.alpha = ComputeElementalCurvature(f, m.ground(), CurvatureMode::kSampled,
                                         0, options.trials, options.seed);
  }

  in.total_curvature = ComputeTotalCurvature(f, m.ground());

  if (options.run_oracle) {
    try {
      in.oracle = BruteForceOptimum(f, m, options.caps.oracle_subsets);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInfeasible) throw;
      scratch.warnings.push_back(std::string(e.what()) +
                                 "; exact ratio unavailable");
    }
  }

  RatioReport report = BuildReport(in);
  report.partial = scratch.partial;
  report.warnings.insert(report.warnings.end(), scratch.warnings.begin(),
                         scratch.warnings.end());
  if (in.total_curvature && !in.total_curvature->excluded.empty()) {
    report.warnings.push_back(
        "total curvature skips elements with zero singleton gain: " +
        SubsetToString(in.total_curvature->excluded));
  }
  if (report.alpha && report.alpha->value > 1.0 + kSubmodularAlphaTolerance) {
    report.warnings.push_back(
        "alpha > 1: f is not submodular; total-curvature and classic ratios "
        "are not certificates");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization.

inline nlohmann::json NumberOrUnbounded(double v) {
  if (IsUnbounded(v)) return "unbounded";
  return v;
}

inline nlohmann::json CertificateToJson(const CurvatureCertificate& c) {
  return {{"value", NumberOrUnbounded(c.value)},
          {"provenance", ProvenanceName(c.provenance)},
          {"base", c.base},
          {"k", c.k},
          {"terms", c.terms}};
}

inline nlohmann::json EntryToJson(const RatioEntry& e) {
  nlohmann::json j;
  j["present"] = e.present;
  if (e.present) {
    j["value"] = e.value;
    j["raw"] = e.raw;
    j["certified"] = e.certified;
    j["provenance"] = e.provenance;
    if (!e.note.empty()) j["note"] = e.note;
  } else {
    j["reason"] = e.note;
  }
  return j;
}

inline nlohmann::json ReportToJson(const RatioReport& r) {
  nlohmann::json j;
  j["family"] = r.family;
  j["n"] = r.n;
  j["k"] = r.k;
  j["submodular"] = r.submodular;
  j["picks"] = r.chain.picks;
  j["solution"] = r.chain.solution();
  j["chain_values"] = r.chain.values;
  j["chain_gains"] = r.chain.gains;
  j["f_solution"] = r.chain.value();
  if (r.chain.has_extension()) {
    j["extension"] = *r.chain.extension;
    j["f_extension"] = r.chain.extension_value;
  }
  if (r.gamma_hat) j["gamma_hat"] = CertificateToJson(*r.gamma_hat);
  if (r.gamma_hat_max) j["gamma_hat_max"] = CertificateToJson(*r.gamma_hat_max);
  if (r.alpha) {
    j["alpha"] = {{"value", NumberOrUnbounded(r.alpha->value)},
                  {"exact", r.alpha->exact}};
  }
  if (r.total_curvature) {
    j["total_curvature"] = {{"defined", r.total_curvature->defined},
                            {"value", r.total_curvature->value},
                            {"excluded", r.total_curvature->excluded}};
  }
  if (r.oracle) {
    j["optimum"] = {{"set", r.oracle->optimum},
                    {"value", r.oracle->value},
                    {"enumerated", r.oracle->enumerated}};
  }
  for (const auto& [name, entry] : r.entries()) j[name] = EntryToJson(*entry);
  j["warnings"] = r.warnings;
  j["partial"] = r.partial;
  return j;
}

inline std::string FormatNumber(double v) {
  if (IsUnbounded(v)) return "unbounded";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

inline std::string ReportToCsv(const RatioReport& r) {
  std::ostringstream out;
  out << "ratio,present,value,raw,certified,provenance,note\n";
  for (const auto& [name, e] : r.entries()) {
    out << name << "," << (e->present ? 1 : 0) << ","
        << (e->present ? FormatNumber(e->value) : "") << ","
        << (e->present ? FormatNumber(e->raw) : "") << ","
        << (e->certified ? 1 : 0) << "," << e->provenance << ","
        << e->note << "\n";
  }
  return out.str();
}

inline std::string ReportSummary(const RatioReport& r) {
  std::ostringstream out;
  out << "family " << r.family << ", n=" << r.n << ", k=" << r.k
      << (r.submodular ? " (submodular)" : "") << "\n";
  out << "greedy solution " << SubsetToString(r.chain.solution())
      << " f(S)=" << FormatNumber(r.chain.value());
  if (r.chain.has_extension()) {
    out << ", f(S+)=" << FormatNumber(r.chain.extension_value);
  }
  out << "\n";
  if (r.gamma_hat) {
    out << "Gamma-hat(S) = " << FormatNumber(r.gamma_hat->value) << " ("
        << ProvenanceName(r.gamma_hat->provenance) << ")\n";
  }
  if (r.alpha) {
    out << "alpha = " << FormatNumber(r.alpha->value)
        << (r.alpha->exact ? "" : " (sampled lower estimate)") << "\n";
  }
  for (const auto& [name, e] : r.entries()) {
    out << "  " << name << ": ";
    if (!e->present) {
      out << "absent (" << e->note << ")\n";
      continue;
    }
    out << FormatNumber(e->value)
        << (e->certified ? " certified" : " empirical");
    if (!e->note.empty()) out << " [" << e->note << "]";
    out << "\n";
  }
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace curvcert

#endif  // CURVCERT_REPORT_H_
