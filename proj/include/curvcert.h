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


#ifndef CURVCERT_H_
#define CURVCERT_H_

#include "curvcert/adaptive.h"
#include "curvcert/curvature.h"
#include "curvcert/errors.h"
#include "curvcert/greedy.h"
#include "curvcert/objectives.h"
#include "curvcert/oracle.h"
#include "curvcert/parallel.h"
#include "curvcert/ratios.h"
#include "curvcert/report.h"
#include "curvcert/rng.h"
#include "curvcert/setfn.h"

#endif  // CURVCERT_H_
