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
// Closed-form approximation ratios for greedy on a k-uniform matroid.
//
//   primal        [1 + (f(S+)/f(S) - 1) * Gamma-hat(S)]^-1
//   fixed gamma   1 - (1 - 1/Gamma-hat)^k, Gamma-hat bounding every prefix
//   wang          1 - (1 - 1/A_k)^k, A_k = sum_{i=0}^{k-1} alpha^i
//   conforti      1/(1+c) and (1/c)(1 - e^-c)
//   classic       1 - (1 - 1/k)^k
//

#ifndef CURVCERT_RATIOS_H_
#define CURVCERT_RATIOS_H_

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "curvcert/curvature.h"
#include "curvcert/errors.h"
#include "curvcert/greedy.h"

namespace curvcert {

struct RatioValue {
  double value = 0.0;  // clamped to [0, 1]
  double raw = 0.0;    // before clamping
  bool uninformative = false;
};

inline RatioValue Clamped(double raw) {
  return {std::clamp(raw, 0.0, 1.0), raw, false};
}

inline RatioValue Uninformative() { return {0.0, 0.0, true}; }

inline void RequireK(int k) {
  if (k < 1) throw Error(ErrorKind::kInput, "k must be >= 1");
}

// Instance-specific ratio from the greedy chain and its extension.
inline RatioValue PrimalRatio(const GreedyChain& chain,
                              const CurvatureCertificate& cert) {
  if (!chain.has_extension()) {
    throw Error(ErrorKind::kSupermatroidUndefined,
                "primal ratio needs the (k+1)-th greedy element");
  }
  if (cert.base != chain.solution()) {
    throw Error(ErrorKind::kInput,
                "certificate base " + SubsetToString(cert.base) +
                    " is not the greedy solution " +
                    SubsetToString(chain.solution()));
  }
  const double fs = chain.value();
  if (!(fs > 0.0)) {
    throw Error(ErrorKind::kDegenerate, "f(S) = 0; the primal ratio is undefined");
  }
  if (cert.unbounded()) return Uninformative();
  return Clamped(
      1.0 / (1.0 + (chain.extension_value / fs - 1.0) * cert.value));
}

inline RatioValue FixedGammaRatio(double gamma_hat, int k) {
  RequireK(k);
  if (IsUnbounded(gamma_hat)) return Uninformative();
  if (!(gamma_hat >= 1.0 - kZeroGain)) {
    throw Error(ErrorKind::kInput, "Gamma-hat must be >= 1, got " +
                                       std::to_string(gamma_hat));
  }
  const double g = std::max(gamma_hat, 1.0);
  return Clamped(1.0 - std::pow(1.0 - 1.0 / g, k));
}

inline double ClassicRatio(int k) {
  RequireK(k);
  const double g = static_cast<double>(k);
  return 1.0 - std::pow(1.0 - 1.0 / g, k);
}

enum class WangIndexing {
  kFromZero,  // A_k = sum_{i=0}^{k-1} alpha^i; alpha = 1 gives A_k = k
  kLiteral,   // A_k = sum_{i=1}^{k-1} alpha^i
};

inline double WangA(double alpha, int k, WangIndexing indexing) {
  const int first = indexing == WangIndexing::kFromZero ? 0 : 1;
  const int terms = k - first;
  if (terms <= 0) return 0.0;
  if (alpha == 1.0) return static_cast<double>(terms);
  // alpha^first * (alpha^terms - 1) / (alpha - 1)
  return std::pow(alpha, first) * (std::pow(alpha, terms) - 1.0) /
         (alpha - 1.0);
}

inline RatioValue WangRatio(double alpha, int k,
                            WangIndexing indexing = WangIndexing::kFromZero) {
  RequireK(k);
  if (IsUnbounded(alpha)) return Uninformative();
  if (!(alpha >= 0.0)) throw Error(ErrorKind::kInput, "alpha must be >= 0");
  const double a = WangA(alpha, k, indexing);
  // The literal sum is empty at k = 1 and the bound degenerates to 1.
  if (a <= 0.0) return Clamped(1.0);
  return Clamped(1.0 - std::pow(1.0 - 1.0 / a, k));
}

struct ConfortiRatios {
  double general = 0.0;  // 1/(1+c)
  double uniform = 0.0;  // (1/c)(1 - e^-c), 1 at c = 0
};

inline ConfortiRatios ComputeConfortiRatios(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorKind::kInput,
                "total curvature must lie in [0,1], got " + std::to_string(c));
  }
  ConfortiRatios out;
  out.general = 1.0 / (1.0 + c);
  out.uniform = c == 0.0 ? 1.0 : -std::expm1(-c) / c;
  return out;
}

}  // namespace curvcert

#endif  // CURVCERT_RATIOS_H_
