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

#include "revivals/layout.hpp"
#include "revivals/linalg.hpp"

namespace revivals {

// Density operator attached to a SystemLayout. Construction enforces:
//   * Hermitian to 1e-10 (operator norm of the anti-Hermitian part),
//   * eigenvalues >= -1e-10, with negatives inside that band clamped to 0
//     and the state renormalized (anything lower is a hard error),
//   * trace within 1e-10 of 1.
// Instances are immutable after construction.
class DensityMatrix {
 public:
  DensityMatrix(SystemLayout layout, Matrix matrix);

  static DensityMatrix maximally_mixed(const SystemLayout& layout);
  // diag(spectrum) on a single factor; spectrum must already sum to 1.
  static DensityMatrix from_spectrum(const SystemLayout& layout,
                                     const RealVector& spectrum);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return mat_; }
  int dim() const { return layout_.total_dim(); }

  // Number of eigenvalues above `cutoff`.
  int rank(double cutoff = 1e-10) const;

 private:
  SystemLayout layout_;
  Matrix mat_;
};

// Unit vector attached to a SystemLayout (norm 1 to 1e-12).
class PureState {
 public:
  PureState(SystemLayout layout, Vector vector);

  // (1/sqrt(d)) sum_i |ii> on two same-dimension factors.
  static PureState max_entangled(const std::string& label_a,
                                 const std::string& label_b, int dim);
  static PureState basis_state(const SystemLayout& layout, std::int64_t index);

  const SystemLayout& layout() const { return layout_; }
  const Vector& vector() const { return vec_; }
  int dim() const { return layout_.total_dim(); }

  DensityMatrix to_density() const;

 private:
  SystemLayout layout_;
  Vector vec_;
};

// --- labeled multipartite operations -------------------------------------

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
PureState tensor(const PureState& a, const PureState& b);

// Marginal on `keep` (kept factors stay in their original order).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep);

DensityMatrix permute_factors(const DensityMatrix& rho,
                              const std::vector<std::string>& new_order);
PureState permute_factors(const PureState& psi,
                          const std::vector<std::string>& new_order);

// Purification with a fresh factor `env_label` of dimension rank(rho);
// eigenvalues below 1e-12 are dropped so the environment stays minimal.
PureState purify(const DensityMatrix& rho, const std::string& env_label);

// Squared fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2, in [0, 1].
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace revivals
