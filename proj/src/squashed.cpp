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

#include "revivals/squashed.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "revivals/entropy.hpp"
#include "revivals/errors.hpp"

namespace revivals {

namespace {

constexpr double kMarginalTol = 1e-9;

std::string fresh_label(const SystemLayout& layout, const std::string& stem) {
  if (!layout.contains(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string candidate = fmt::format("{}{}", stem, i);
    if (!layout.contains(candidate)) return candidate;
  }
}

}  // namespace

ExtensionSpec::ExtensionSpec(DensityMatrix base_state, int extension_dim)
    : base_(std::move(base_state)),
      purification_(purify(base_, fresh_label(base_.layout(), "P"))),
      ext_dim_(extension_dim),
      purifying_dim_(0),
      ext_label_(),
      purifier_label_() {
  purifier_label_ = purification_.layout().factors().back().label;
  purifying_dim_ = purification_.layout().dim_of(purifier_label_);
  if (ext_dim_ == 0) ext_dim_ = purifying_dim_;
  if (ext_dim_ < 1) {
    throw std::invalid_argument("extension: extension_dim must be >= 1");
  }
  ext_label_ = fresh_label(purification_.layout(), "X");
  std::int64_t total = static_cast<std::int64_t>(base_.dim()) *
                       purifying_dim_ * ext_dim_;
  if (total > kMaxTotalDim) {
    throw std::invalid_argument(fmt::format(
        "extension: search space dim {} exceeds desk-scale cap {}", total,
        kMaxTotalDim));
  }
}

int ExtensionSpec::param_count() const {
  return skew_param_count(purifying_dim_ * ext_dim_);
}

PureState ExtensionSpec::extended_pure(const RealVector& params) const {
  const int r = purifying_dim_;
  const int k = ext_dim_;
  const int m = r * k;
  Matrix w = expm_skew(skew_from_params(params, m));
  // Only the ancilla-|0> columns of W act on the input.
  Matrix w0(m, r);
  for (int p = 0; p < r; ++p) w0.col(p) = w.col(static_cast<std::int64_t>(p) * k);
  const int d = base_.dim();
  Vector out(static_cast<std::int64_t>(d) * m);
  const Vector& phi = purification_.vector();
  for (int b = 0; b < d; ++b) {
    out.segment(static_cast<std::int64_t>(b) * m, m) =
        w0 * phi.segment(static_cast<std::int64_t>(b) * r, r);
  }
  SystemLayout layout = purification_.layout().append(ext_label_, k);
  return PureState(std::move(layout), std::move(out));
}

DensityMatrix ExtensionSpec::extension(const RealVector& params) const {
  PureState psi = extended_pure(params);
  std::vector<std::string> keep = base_.layout().labels();
  keep.push_back(ext_label_);
  DensityMatrix omega = partial_trace(psi.to_density(), keep);
  DensityMatrix marginal = partial_trace(omega, base_.layout().labels());
  double dev = (marginal.matrix() - base_.matrix()).cwiseAbs().maxCoeff();
  if (dev > kMarginalTol) {
    throw invariant_violation(fmt::format(
        "extension: marginal constraint violated by {:.3e}", dev));
  }
  return omega;
}

double ExtensionSpec::half_conditional_qmi(
    const RealVector& params, const std::vector<std::string>& a,
    const std::vector<std::string>& c,
    const std::vector<std::string>& cond) const {
  PureState psi = extended_pure(params);

  // Marginal constraint: the base-factor Gram of the extended vector must
  // reproduce the base state.
  const std::int64_t rk =
      static_cast<std::int64_t>(purifying_dim_) * ext_dim_;
  Eigen::Map<const Matrix> m(psi.vector().data(), rk, base_.dim());
  Matrix marginal = (m.adjoint() * m).conjugate();
  double dev = (marginal - base_.matrix()).cwiseAbs().maxCoeff();
  if (dev > kMarginalTol) {
    throw invariant_violation(fmt::format(
        "extension: marginal constraint violated by {:.3e}", dev));
  }

  std::vector<std::string> cond_ext = cond;
  cond_ext.push_back(ext_label_);
  return 0.5 * qcmi(psi, a, c, cond_ext);
}

RealVector ExtensionSpec::purifying_params() const {
  const int r = purifying_dim_;
  const int k = ext_dim_;
  if (k < r) {
    throw std::invalid_argument(
        "extension: purifying swap needs extension_dim >= purifying dim");
  }
  const int m = r * k;
  Matrix w = Matrix::Zero(m, m);
  for (int p = 0; p < r; ++p) {
    for (int a = 0; a < k; ++a) {
      if (a < r) {
        w(a * k + p, p * k + a) = 1.0;  // (p, a) -> (a, p)
      } else {
        w(p * k + a, p * k + a) = 1.0;
      }
    }
  }
  return params_from_skew(logm_unitary(w));
}

RealVector ExtensionSpec::embed_params(const RealVector& params,
                                       int purifying_dim, int from_ext_dim,
                                       int to_ext_dim) {
  if (to_ext_dim < from_ext_dim) {
    throw std::invalid_argument("embed_params: target dim smaller");
  }
  const int m_from = purifying_dim * from_ext_dim;
  const int m_to = purifying_dim * to_ext_dim;
  Matrix small = skew_from_params(params, m_from);
  Matrix big = Matrix::Zero(m_to, m_to);
  auto map = [&](int idx) {
    int p = idx / from_ext_dim, a = idx % from_ext_dim;
    return p * to_ext_dim + a;
  };
  for (int i = 0; i < m_from; ++i) {
    for (int j = 0; j < m_from; ++j) {
      big(map(i), map(j)) = small(i, j);
    }
  }
  return params_from_skew(big);
}

namespace {

SquashedEstimate run_estimate(const DensityMatrix& rho,
                              const std::vector<std::string>& a,
                              const std::vector<std::string>& c,
                              const std::vector<std::string>& cond,
                              int extension_dim, const OptimOptions& opts,
                              bool maximize) {
  ExtensionSpec spec(rho, extension_dim);
  Objective objective = [&](const RealVector& params) {
    return spec.half_conditional_qmi(params, a, c, cond);
  };

  DescentOutcome best = multi_restart(objective, spec.param_count(), opts,
                                      maximize);

  // Structured starting point: the purifying swap, refined by descent.
  if (spec.extension_dim() >= spec.purifying_dim()) {
    OptimOptions pur_opts = opts;
    pur_opts.restarts = 1;
    pur_opts.warm_start = spec.purifying_params();
    DescentOutcome from_purifying =
        multi_restart(objective, spec.param_count(), pur_opts, maximize);
    bool better = maximize ? from_purifying.value > best.value
                           : from_purifying.value < best.value;
    if (better) best = from_purifying;
  }

  // Closed-form candidates: the trivial extension (always in-family at
  // params = 0) and the purification itself (in-family only when the
  // extension factor is large enough, but sound as a bound regardless).
  double trivial =
      0.5 * (cond.empty() ? qmi(rho, a, c) : qcmi(rho, a, c, cond));
  std::vector<std::string> cond_purifier = cond;
  cond_purifier.push_back(spec.purifier_label());
  double purification_value =
      0.5 * qcmi(spec.purification(), a, c, cond_purifier);

  SquashedEstimate estimate;
  estimate.kind = maximize ? BoundKind::kLowerBoundOnSup
                           : BoundKind::kUpperBoundOnInf;
  estimate.extension_dim = spec.extension_dim();
  estimate.restarts = opts.restarts;
  estimate.converged = best.converged;
  estimate.value_bits = best.value;
  estimate.best_params = best.params;
  auto consider = [&](double value) {
    bool better = maximize ? value > estimate.value_bits
                           : value < estimate.value_bits;
    if (better) {
      estimate.value_bits = value;
      estimate.converged = true;
      estimate.best_params = RealVector();
    }
  };
  consider(trivial);
  consider(purification_value);
  if (estimate.value_bits < 0.0 && estimate.value_bits > -1e-9) {
    estimate.value_bits = 0.0;
  }
  return estimate;
}

}  // namespace

SquashedEstimate estimate_squashed_entanglement(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& b, int extension_dim,
    const OptimOptions& opts) {
  return run_estimate(rho, a, b, {}, extension_dim, opts, false);
}

SquashedEstimate estimate_squashed_nonmarkovianity(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& c, const std::vector<std::string>& b,
    int extension_dim, const OptimOptions& opts) {
  return run_estimate(rho, a, c, b, extension_dim, opts, false);
}

SquashedEstimate estimate_puffed_entanglement(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& b, int extension_dim,
    const OptimOptions& opts) {
  SquashedEstimate estimate =
      run_estimate(rho, a, b, {}, extension_dim, opts, true);
  double ceiling = std::min(von_neumann_entropy(rho, a),
                            von_neumann_entropy(rho, b));
  if (estimate.value_bits > ceiling + 1e-9) {
    throw invariant_violation(fmt::format(
        "puffed entanglement estimate {:.12f} exceeds min-entropy ceiling "
        "{:.12f}",
        estimate.value_bits, ceiling));
  }
  return estimate;
}

std::pair<double, double> nsq_trivial_upper_bounds(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& c, const std::vector<std::string>& b) {
  double from_trivial = 0.5 * qcmi(rho, a, c, b);
  double from_purification = 0.5 * qmi(rho, a, c);
  return {from_trivial, from_purification};
}

}  // namespace revivals
