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

#include "revivals/layout.hpp"
#include "revivals/linalg.hpp"
#include "revivals/states.hpp"

namespace revivals {

// Unitary interaction between labeled factors. Input and output layouts
// carry the same label sequence but may repartition the dimensions (e.g.
// [Q:2, E:4] -> [Q:8, E:1]); only the total dimension must match.
class UnitaryInteraction {
 public:
  UnitaryInteraction(SystemLayout input_layout, SystemLayout output_layout,
                     Matrix matrix);
  // Square case: output layout equals input layout.
  UnitaryInteraction(SystemLayout layout, Matrix matrix);

  static UnitaryInteraction identity(const SystemLayout& layout);
  static UnitaryInteraction haar(const SystemLayout& input_layout,
                                 const SystemLayout& output_layout,
                                 std::uint64_t seed);

  const SystemLayout& input_layout() const { return input_; }
  const SystemLayout& output_layout() const { return output_; }
  const Matrix& matrix() const { return mat_; }

  UnitaryInteraction adjoint() const;

 private:
  SystemLayout input_;
  SystemLayout output_;
  Matrix mat_;
};

// Conjugate a state by `u` acting on the factors named in u.input_layout
// (identity on everything else). Factor dims are updated from u's output
// layout; the factor order of the result is unchanged.
DensityMatrix apply_unitary(const DensityMatrix& rho,
                            const UnitaryInteraction& u);
PureState apply_unitary(const PureState& psi, const UnitaryInteraction& u);

// The full-space matrix of `u` acting on a subset of `layout`'s factors,
// together with the layout after application. Row/column order follows
// `layout` (spectators in place).
std::pair<Matrix, SystemLayout> embed_unitary(const SystemLayout& layout,
                                              const UnitaryInteraction& u);

}  // namespace revivals
