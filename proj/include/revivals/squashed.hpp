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

#include <string>
#include <vector>

#include "revivals/optimize.hpp"
#include "revivals/states.hpp"

namespace revivals {

// Parameterized family of extensions of a base state.
//
// The base state is purified (factor P of dimension rank), a fresh ancilla
// of dimension `extension_dim` is attached in |0>, a unitary exp(skew(params))
// acts on P (x) ancilla, and P is traced out. Purification plus a channel on
// the purifying factor reaches every extension of bounded dimension, so the
// search space is sound by construction: the marginal on the base factors is
// the base state for every parameter value (checked on each evaluation).
class ExtensionSpec {
 public:
  ExtensionSpec(DensityMatrix base_state, int extension_dim);

  const DensityMatrix& base_state() const { return base_; }
  const PureState& purification() const { return purification_; }
  int extension_dim() const { return ext_dim_; }
  int purifying_dim() const { return purifying_dim_; }
  int param_count() const;
  const std::string& extension_label() const { return ext_label_; }
  const std::string& purifier_label() const { return purifier_label_; }

  // Pure state on [base factors..., P, ext] for the given parameters.
  PureState extended_pure(const RealVector& params) const;
  // The extension omega = Tr_P of the above; marginal re-checked.
  DensityMatrix extension(const RealVector& params) const;

  // 0.5 * I(a; c | cond + ext) of the extension, evaluated through subset
  // entropies of the pure state. Throws invariant_violation if the marginal
  // constraint drifts beyond 1e-9.
  double half_conditional_qmi(const RealVector& params,
                              const std::vector<std::string>& a,
                              const std::vector<std::string>& c,
                              const std::vector<std::string>& cond) const;

  // Parameters realizing the swap of P into the extension factor (requires
  // extension_dim >= purifying_dim); the resulting extension is the
  // purification itself.
  RealVector purifying_params() const;

  // Re-embed parameters from a smaller extension dimension, preserving the
  // realized extension (for warm starts across dims).
  static RealVector embed_params(const RealVector& params, int purifying_dim,
                                 int from_ext_dim, int to_ext_dim);

 private:
  DensityMatrix base_;
  PureState purification_;
  int ext_dim_;
  int purifying_dim_;
  std::string ext_label_;
  std::string purifier_label_;
};

enum class BoundKind { kUpperBoundOnInf, kLowerBoundOnSup };

struct SquashedEstimate {
  double value_bits = 0.0;
  BoundKind kind = BoundKind::kUpperBoundOnInf;
  int extension_dim = 0;
  int restarts = 0;
  bool converged = false;
  RealVector best_params;
};

// E_sq(A;B) upper bound: (1/2) inf over extensions of I(A;B|ext), searched
// over the bounded-dimension family plus the trivial and purifying
// extensions. extension_dim = 0 picks the purifying dimension.
SquashedEstimate estimate_squashed_entanglement(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& b, int extension_dim,
    const OptimOptions& opts);

// N_sq(A;C|B) upper bound: (1/2) inf of I(A;C|B,ext).
SquashedEstimate estimate_squashed_nonmarkovianity(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& c, const std::vector<std::string>& b,
    int extension_dim, const OptimOptions& opts);

// E_puff(A;B) lower bound: (1/2) sup of I(A;B|ext). The report value is
// hard-checked against the min{H(A), H(B)} ceiling.
SquashedEstimate estimate_puffed_entanglement(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& b, int extension_dim,
    const OptimOptions& opts);

// The two closed-form upper bounds on the squashed non-Markovianity
// infimum, already halved: (I(A;C|B)/2 from the trivial extension,
// I(A;C)/2 from the purifying one).
std::pair<double, double> nsq_trivial_upper_bounds(
    const DensityMatrix& rho, const std::vector<std::string>& a,
    const std::vector<std::string>& c, const std::vector<std::string>& b);

}  // namespace revivals
