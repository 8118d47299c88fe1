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

#include "revivals/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "revivals/random.hpp"

namespace revivals {

namespace {

RealVector fd_gradient(const Objective& f, const RealVector& x, double h) {
  RealVector g(x.size());
  RealVector probe = x;
  for (int i = 0; i < x.size(); ++i) {
    double orig = probe[i];
    probe[i] = orig + h;
    double up = f(probe);
    probe[i] = orig - h;
    double down = f(probe);
    probe[i] = orig;
    g[i] = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace

DescentOutcome descend(const Objective& f, const RealVector& init,
                       const OptimOptions& opts) {
  DescentOutcome out;
  out.params = init;
  out.value = f(init);
  if (init.size() == 0) {
    out.converged = true;
    return out;
  }

  double step = 0.1;
  double window_best = out.value;
  int since_improvement = 0;

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    out.iterations = iter + 1;
    RealVector g = fd_gradient(f, out.params, opts.fd_step);
    double gnorm = g.norm();
    if (gnorm < 1e-14) {
      out.converged = true;
      break;
    }
    // Backtracking (with one expansion on success) along -g.
    bool moved = false;
    double trial_step = step;
    for (int bt = 0; bt < 40; ++bt) {
      RealVector cand = out.params - (trial_step / gnorm) * g;
      double v = f(cand);
      if (v < out.value) {
        out.params = std::move(cand);
        out.value = v;
        step = std::min(trial_step * 2.0, 10.0);
        moved = true;
        break;
      }
      trial_step *= 0.5;
      if (trial_step < 1e-16) break;
    }
    if (!moved) {
      out.converged = true;
      break;
    }
    if (window_best - out.value > opts.tol_bits) {
      window_best = out.value;
      since_improvement = 0;
    } else {
      ++since_improvement;
      if (since_improvement >= opts.patience) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

DescentOutcome multi_restart(const Objective& f, int param_count,
                             const OptimOptions& opts, bool maximize) {
  Objective signed_f =
      maximize ? Objective([&f](const RealVector& x) { return -f(x); }) : f;

  if (opts.warm_start && opts.warm_start->size() != param_count) {
    throw std::invalid_argument("multi_restart: warm start size mismatch");
  }
  DescentOutcome best;
  bool have_best = false;
  for (int r = 0; r < std::max(opts.restarts, 1); ++r) {
    RealVector init;
    if (r == 0) {
      init = opts.warm_start.value_or(RealVector::Zero(param_count));
    } else {
      Prng rng = Prng::substream(opts.seed, static_cast<std::uint64_t>(r));
      init.resize(param_count);
      double scale = 0.4 + 0.4 * static_cast<double>(r % 4);
      for (int i = 0; i < param_count; ++i) init[i] = scale * rng.gaussian();
    }
    DescentOutcome outcome = descend(signed_f, init, opts);
    if (!have_best || outcome.value < best.value) {
      best = outcome;
      have_best = true;
    }
  }
  if (maximize) best.value = -best.value;
  return best;
}

}  // namespace revivals
