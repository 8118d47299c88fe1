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
#include "revivals/states.hpp"
#include "revivals/unitary.hpp"

namespace revivals {

// CPTP map in Kraus form. Input and output layouts may differ in both labels
// and dimensions. Construction enforces sum K^dag K = I to 1e-9.
class QuantumChannel {
 public:
  QuantumChannel(SystemLayout input_layout, SystemLayout output_layout,
                 std::vector<Matrix> kraus_ops);

  static QuantumChannel identity(const SystemLayout& layout);
  static QuantumChannel from_unitary(const UnitaryInteraction& u);
  // Kraus operators from the eigendecomposition of a Choi matrix indexed as
  // J[(i,o),(j,p)] = <o| E(|i><j|) |p>; eigenvalues below `cutoff` dropped.
  static QuantumChannel from_choi(const SystemLayout& input_layout,
                                  const SystemLayout& output_layout,
                                  const Matrix& choi, double cutoff = 1e-12);

  const SystemLayout& input_layout() const { return input_; }
  const SystemLayout& output_layout() const { return output_; }
  const std::vector<Matrix>& kraus_ops() const { return kraus_; }

  // Raw action on an input-space matrix.
  Matrix apply_matrix(const Matrix& x) const;

  // Choi matrix J = sum_ij |i><j| (x) E(|i><j|).
  Matrix choi() const;

  // Sequential composition other(this(x)); layouts must chain.
  QuantumChannel then(const QuantumChannel& other) const;

 private:
  SystemLayout input_;
  SystemLayout output_;
  std::vector<Matrix> kraus_;
};

// Apply a channel to the factors named in chan.input_layout (identity on the
// rest). The result's factors are [chan outputs..., spectators...] in that
// order; callers permute as needed.
DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& chan);

// Random CPTP map via a Haar-random Stinespring dilation with environment
// dimension `env_dim`.
QuantumChannel random_channel(const SystemLayout& input_layout,
                              const SystemLayout& output_layout, int env_dim,
                              std::uint64_t seed);

}  // namespace revivals
