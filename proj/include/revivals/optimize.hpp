// Copyright 2026 The Revivals Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "revivals/linalg.hpp"

namespace revivals {

// Multi-restart local descent with central finite-difference gradients.
// Restarts are mutually independent and reduced deterministically, so the
// result depends only on (seed, restarts), never on execution order.
struct OptimOptions {
  int restarts = 8;
  int max_iters = 2000;
  double fd_step = 1e-5;
  double tol_bits = 1e-9;  // improvement threshold for the patience window
  int patience = 50;
  std::uint64_t seed = 0;
  std::optional<RealVector> warm_start;
};

struct DescentOutcome {
  RealVector params;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

using Objective = std::function<double(const RealVector&)>;

// Minimizes `f` from `init` with backtracking line search along the
// negative finite-difference gradient.
DescentOutcome descend(const Objective& f, const RealVector& init,
                       const OptimOptions& opts);

// Full multi-restart drive: restart 0 starts from opts.warm_start (zeros if
// absent), later restarts from seeded Gaussian initial points. Returns the
// best outcome; `maximize` flips the objective sign internally.
DescentOutcome multi_restart(const Objective& f, int param_count,
                             const OptimOptions& opts, bool maximize);

}  // namespace revivals
