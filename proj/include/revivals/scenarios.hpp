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
#include <string>
#include <vector>

#include "revivals/process.hpp"

namespace revivals {

inline const std::string kMixRegisterLabel = "X";   // control register
inline const std::string kMixCopyLabel = "Xc";      // its inert classical copy

// How the 4-dimensional environment of the control-unitary model is
// extended with an ancilla Et that never touches the system.
enum class PauliControlExtension {
  kNone,           // gamma_E = I/4, no ancilla
  kEntangledCopy,  // Et purifies I/4 (maximally entangled with E)
  kClassicalCopy,  // Et classically copies the control basis of E
};

// Qubit system, 4-dim environment, U = V = sum_i pauli_i (x) |i><i|.
// The reduced process is a complete loss and complete revival of the
// reference-system correlations.
InteractionModel pauli_control_model(
    PauliControlExtension ext = PauliControlExtension::kNone);

// Perfect swap between Q and a d-dimensional environment, undone in the
// second step. If H(gamma_E) >= log2(d) the model is still built (useful at
// the witness boundary); `entropy_warning`, when given, is set in that case.
InteractionModel swap_model(int d, const DensityMatrix& gamma_E,
                            bool* entropy_warning = nullptr);

// Diagonal qubit environment diag(p, 1-p) with binary entropy `bits`.
DensityMatrix env_with_binary_entropy(double bits, const std::string& label);

// Fully random model: Haar U and V on (Q, E), environment of given rank.
InteractionModel random_model(int d_system, int d_env, int env_rank,
                              std::uint64_t seed);

// Random model whose second step acts on Q' alone (V = W_Q (x) I_E), so the
// component process can never revive.
InteractionModel random_markovian_model(int d_system, int d_env, int env_rank,
                                        std::uint64_t seed);

// Convex mixture of interaction models, realized exactly (not sampled) by a
// control register X correlated with an inert copy Xc, and controlled
// unitaries acting block-diagonally on the embedded environments.
struct MixtureSpec {
  std::vector<std::pair<double, InteractionModel>> components;

  void validate() const;
};

InteractionModel build_convex_mixture(const MixtureSpec& spec);

struct ExtendedDpiReport {
  // I(R; Q' F)_1 - I(R; Q'' F)_2 over all inert factors F of the mixture.
  double value_bits = 0.0;
  // Decomposition of I(R;Q'|Xc)_1 into the component QMIs.
  double conditional_qmi_t1 = 0.0;
  double component_average_t1 = 0.0;
};

// Evaluates the extended data-processing quantity for a mixture snapshot and
// cross-checks the classical decomposition of the conditional QMI against
// per-component runs.
ExtendedDpiReport verify_extended_dpi(const Snapshot& mixture_snapshot,
                                      const MixtureSpec& spec);

}  // namespace revivals
