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

#include "revivals/states.hpp"

namespace revivals {

// All entropic quantities are in bits (base-2 logarithms). Eigenvalues
// below 1e-14 are excluded from entropy sums.

enum class EntropyQuantity { kH, kQmi, kQcmi, kCohInfo };

struct EntropyReport {
  EntropyQuantity quantity;
  std::vector<std::vector<std::string>> subsystems;
  double value_bits = 0.0;
};

// Entropy of a spectrum (values assumed nonnegative, summing to ~1).
double spectrum_entropy_bits(const RealVector& spectrum);

// H of the marginal on `subset`.
double von_neumann_entropy(const DensityMatrix& rho,
                           const std::vector<std::string>& subset);
double von_neumann_entropy(const DensityMatrix& rho);

// Marginal entropy of a pure state computed through the Gram matrix of the
// smaller side of the bipartition; no density matrix is materialized.
double subset_entropy_bits(const PureState& psi,
                           const std::vector<std::string>& subset);

// I(A;B) = H(A) + H(B) - H(AB).
double qmi(const DensityMatrix& rho, const std::vector<std::string>& a,
           const std::vector<std::string>& b);

// I(A;C|B) = H(AB) + H(BC) - H(B) - H(ABC), always computed from the four
// entropies of the joint state.
double qcmi(const DensityMatrix& rho, const std::vector<std::string>& a,
            const std::vector<std::string>& c,
            const std::vector<std::string>& b);

// Same quantities for a globally pure state, via subset entropies.
double qmi(const PureState& psi, const std::vector<std::string>& a,
           const std::vector<std::string>& b);
double qcmi(const PureState& psi, const std::vector<std::string>& a,
            const std::vector<std::string>& c,
            const std::vector<std::string>& b);

// max{H(B) - H(AB), H(A) - H(AB), 0}: the hashing lower bound on distillable
// entanglement, used as a computable floor under squashed entanglement.
double coherent_information(const DensityMatrix& rho,
                            const std::vector<std::string>& a,
                            const std::vector<std::string>& b);

// Binary entropy h(p) in bits, and its inverse on [0, 1/2] by bisection.
double binary_entropy(double p);
double binary_entropy_inverse(double bits);

}  // namespace revivals
