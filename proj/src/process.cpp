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

#include "revivals/process.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "revivals/entropy.hpp"
#include "revivals/errors.hpp"

namespace revivals {

std::vector<std::string> InteractionModel::inert_labels() const {
  std::vector<std::string> out;
  for (const auto& f : env_state.layout().factors()) {
    if (std::find(dynamic_labels.begin(), dynamic_labels.end(), f.label) ==
        dynamic_labels.end()) {
      out.push_back(f.label);
    }
  }
  return out;
}

DensityMatrix InteractionModel::dynamic_env_marginal() const {
  if (dynamic_labels.empty()) {
    throw std::invalid_argument("model: no dynamic environment factors");
  }
  return partial_trace(env_state, dynamic_labels);
}

void InteractionModel::validate() const {
  if (d_system < 1) {
    throw std::invalid_argument("model: d_system must be positive");
  }
  const SystemLayout& env = env_state.layout();
  if (env.contains(kReferenceLabel) || env.contains(kSystemLabel)) {
    throw std::invalid_argument(
        "model: environment labels must not include R or Q");
  }
  if (dynamic_labels.empty()) {
    throw std::invalid_argument("model: dynamic label set is empty");
  }
  // U input must be [Q, dynamic...] in order, with matching dims.
  std::vector<std::string> expected = {kSystemLabel};
  expected.insert(expected.end(), dynamic_labels.begin(),
                  dynamic_labels.end());
  if (U.input_layout().labels() != expected) {
    throw std::invalid_argument(
        "model: U input layout must be [Q, dynamic factors...]");
  }
  if (U.input_layout().dim_of(kSystemLabel) != d_system) {
    throw std::invalid_argument(fmt::format(
        "model: U expects d_system {} but model declares {}",
        U.input_layout().dim_of(kSystemLabel), d_system));
  }
  for (const auto& lbl : dynamic_labels) {
    if (U.input_layout().dim_of(lbl) != env.dim_of(lbl)) {
      throw std::invalid_argument(fmt::format(
          "model: U input dim for '{}' is {} but environment has {}", lbl,
          U.input_layout().dim_of(lbl), env.dim_of(lbl)));
    }
  }
  if (V.input_layout() != U.output_layout()) {
    throw std::invalid_argument(
        "model: V input layout must equal U output layout");
  }
}

InteractionModel InteractionModel::with_extension(
    DensityMatrix extended) const {
  constexpr double kMarginalTol = 1e-9;
  std::vector<std::string> original = env_state.layout().labels();
  for (const auto& lbl : original) {
    if (!extended.layout().contains(lbl)) {
      throw std::invalid_argument(fmt::format(
          "with_extension: extended state misses factor '{}'", lbl));
    }
  }
  DensityMatrix marginal =
      permute_factors(partial_trace(extended, original), original);
  double dev = (marginal.matrix() - env_state.matrix()).cwiseAbs().maxCoeff();
  if (dev > kMarginalTol) {
    throw invariant_violation(fmt::format(
        "with_extension: marginal deviates from base environment by {:.3e}",
        dev));
  }
  InteractionModel out = *this;
  out.env_state = std::move(extended);
  return out;
}

const DensityMatrix& Snapshot::state(int t) const {
  switch (t) {
    case 0: return state_t0;
    case 1: return state_t1;
    default: return state_t2;
  }
}

const DensityMatrix& Snapshot::reduced(int t) const {
  switch (t) {
    case 0: return reduced_t0;
    case 1: return reduced_t1;
    default: return reduced_t2;
  }
}

int Snapshot::system_dim(int t) const {
  return state(t).layout().dim_of(kSystemLabel);
}

std::vector<std::string> Snapshot::env_labels() const {
  return model.env_state.layout().labels();
}

Snapshot run_snapshot(const InteractionModel& model) {
  model.validate();
  PureState phi =
      PureState::max_entangled(kReferenceLabel, kSystemLabel, model.d_system);
  DensityMatrix t0 = tensor(phi.to_density(), model.env_state);
  DensityMatrix t1 = apply_unitary(t0, model.U);
  DensityMatrix t2 = apply_unitary(t1, model.V);
  std::vector<std::string> rq = {kReferenceLabel, kSystemLabel};
  return Snapshot{model,
                  t0,
                  t1,
                  t2,
                  partial_trace(t0, rq),
                  partial_trace(t1, rq),
                  partial_trace(t2, rq)};
}

RevivalReport detect_revival(const Snapshot& snapshot, double tol_bits) {
  RevivalReport report;
  report.tolerance_bits = tol_bits;
  report.qmi_t0 = qmi(snapshot.reduced_t0, {kReferenceLabel}, {kSystemLabel});
  report.qmi_t1 = qmi(snapshot.reduced_t1, {kReferenceLabel}, {kSystemLabel});
  report.qmi_t2 = qmi(snapshot.reduced_t2, {kReferenceLabel}, {kSystemLabel});
  report.revival_magnitude = report.qmi_t2 - report.qmi_t1;
  report.revived = report.revival_magnitude > tol_bits;
  return report;
}

namespace {

QuantumChannel channel_from_reduced(const DensityMatrix& reduced,
                                    int d_system) {
  // reduced = (id (x) E)(Phi+), so the Choi matrix is d * reduced with the
  // reference index as the channel input index.
  SystemLayout in = SystemLayout::single(kSystemLabel, d_system);
  SystemLayout out = SystemLayout::single(
      kSystemLabel, reduced.layout().dim_of(kSystemLabel));
  Matrix choi = static_cast<double>(d_system) * reduced.matrix();
  return QuantumChannel::from_choi(in, out, choi);
}

}  // namespace

std::pair<QuantumChannel, QuantumChannel> reduced_channels(
    const InteractionModel& model) {
  Snapshot snap = run_snapshot(model);
  return {channel_from_reduced(snap.reduced_t1, model.d_system),
          channel_from_reduced(snap.reduced_t2, model.d_system)};
}

}  // namespace revivals
