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

#include <optional>
#include <string>
#include <vector>

#include "revivals/channel.hpp"
#include "revivals/states.hpp"
#include "revivals/unitary.hpp"

namespace revivals {

inline const std::string kReferenceLabel = "R";
inline const std::string kSystemLabel = "Q";

// Epistemic model of a two-step system-environment interaction.
//
// The environment state may span several labeled factors. The factors named
// in `dynamic_labels` are the ones the interaction unitaries act on; every
// other environment factor is inert by construction (acted on by identity
// only), which is how causal separation is represented here.
//
// U maps [Q, dynamic...] at t0 to [Q, dynamic...] at t1; V continues from
// U's output partition. The reference R is created internally as half of a
// maximally entangled pair with Q and is never supplied by callers.
struct InteractionModel {
  int d_system = 0;
  DensityMatrix env_state;
  std::vector<std::string> dynamic_labels;
  UnitaryInteraction U;
  UnitaryInteraction V;

  // Environment factors untouched by both unitaries.
  std::vector<std::string> inert_labels() const;
  // Marginal of the environment on the dynamic factors.
  DensityMatrix dynamic_env_marginal() const;

  // Throws std::invalid_argument when layouts do not chain (U input must be
  // [Q, dynamic...] with matching dims, V input must equal U output, labels
  // R/Q must not collide with environment labels).
  void validate() const;

  // Same model with the environment replaced by `extended`, whose marginal
  // on the original environment labels must reproduce env_state to 1e-9.
  // Fresh factors become inert.
  InteractionModel with_extension(DensityMatrix extended) const;
};

// The three joint states and their reference-system marginals.
struct Snapshot {
  InteractionModel model;
  DensityMatrix state_t0, state_t1, state_t2;
  DensityMatrix reduced_t0, reduced_t1, reduced_t2;

  const DensityMatrix& state(int t) const;
  const DensityMatrix& reduced(int t) const;
  // System label dims can change across times; these report them.
  int system_dim(int t) const;
  std::vector<std::string> env_labels() const;
  std::vector<std::string> dynamic_labels() const { return model.dynamic_labels; }
  std::vector<std::string> inert_labels() const { return model.inert_labels(); }
};

struct RevivalReport {
  double qmi_t0 = 0.0;
  double qmi_t1 = 0.0;
  double qmi_t2 = 0.0;
  double revival_magnitude = 0.0;  // qmi_t2 - qmi_t1
  bool revived = false;
  double tolerance_bits = 0.0;
};

inline constexpr double kRevivalTolBits = 1e-7;

Snapshot run_snapshot(const InteractionModel& model);

RevivalReport detect_revival(const Snapshot& snapshot,
                             double tol_bits = kRevivalTolBits);

// The two channels E: Q->Q' and F: Q->Q'' induced by the model, recovered
// from the Choi states of the reduced dynamics.
std::pair<QuantumChannel, QuantumChannel> reduced_channels(
    const InteractionModel& model);

}  // namespace revivals
