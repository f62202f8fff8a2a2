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

#ifndef CURVCERT_ERRORS_H_
#define CURVCERT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace curvcert {

enum class ErrorKind {
  kInput,
  kSchema,
  kUnsupportedFamily,
  kObjectiveFault,
  kSupermatroidUndefined,
  kInfeasible,
  kDegenerate,
};

inline const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return "input error";
    case ErrorKind::kSchema:
      return "schema error";
    case ErrorKind::kUnsupportedFamily:
      return "unsupported family";
    case ErrorKind::kObjectiveFault:
      return "objective fault";
    case ErrorKind::kSupermatroidUndefined:
      return "supermatroid undefined";
    case ErrorKind::kInfeasible:
      return "enumeration infeasible";
    case ErrorKind::kDegenerate:
      return "degenerate instance";
  }
  return "error";
}

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace curvcert

#endif  // CURVCERT_ERRORS_H_
