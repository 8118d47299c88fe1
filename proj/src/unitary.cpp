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

#include "revivals/unitary.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "revivals/errors.hpp"
#include "revivals/random.hpp"

namespace revivals {

namespace {

constexpr double kUnitaryTol = 1e-10;

std::vector<std::int64_t> basis_permutation(
    const SystemLayout& layout, const std::vector<std::string>& new_order) {
  SystemLayout new_layout = layout.reordered(new_order);
  std::vector<int> source_pos;
  source_pos.reserve(new_order.size());
  for (const auto& lbl : new_order) source_pos.push_back(layout.position(lbl));
  std::vector<std::int64_t> new_strides = new_layout.strides();
  std::vector<std::int64_t> map(layout.total_dim());
  for (std::int64_t i = 0; i < layout.total_dim(); ++i) {
    std::vector<int> d = layout.digits(i);
    std::int64_t ni = 0;
    for (size_t k = 0; k < source_pos.size(); ++k) {
      ni += static_cast<std::int64_t>(d[source_pos[k]]) * new_strides[k];
    }
    map[i] = ni;
  }
  return map;
}

}  // namespace

UnitaryInteraction::UnitaryInteraction(SystemLayout input_layout,
                                       SystemLayout output_layout,
                                       Matrix matrix)
    : input_(std::move(input_layout)),
      output_(std::move(output_layout)),
      mat_(std::move(matrix)) {
  if (input_.labels() != output_.labels()) {
    throw std::invalid_argument(
        "unitary: input and output layouts must carry the same labels");
  }
  if (input_.total_dim() != output_.total_dim()) {
    throw std::invalid_argument(fmt::format(
        "unitary: input dim {} != output dim {}", input_.total_dim(),
        output_.total_dim()));
  }
  if (mat_.rows() != output_.total_dim() || mat_.cols() != input_.total_dim()) {
    throw std::invalid_argument("unitary: matrix shape does not match layout");
  }
  Matrix dev = mat_.adjoint() * mat_ -
               Matrix::Identity(mat_.cols(), mat_.cols());
  RealVector lam = hermitian_eigenvalues(dev);
  double op_norm =
      std::max(std::abs(lam.minCoeff()), std::abs(lam.maxCoeff()));
  if (op_norm > kUnitaryTol) {
    throw invariant_violation(fmt::format(
        "unitary: U^dag U deviates from identity by {:.3e}", op_norm));
  }
}

UnitaryInteraction::UnitaryInteraction(SystemLayout layout, Matrix matrix)
    : UnitaryInteraction(layout, layout, std::move(matrix)) {}

UnitaryInteraction UnitaryInteraction::identity(const SystemLayout& layout) {
  int d = layout.total_dim();
  return UnitaryInteraction(layout, layout, Matrix::Identity(d, d));
}

UnitaryInteraction UnitaryInteraction::haar(const SystemLayout& input_layout,
                                            const SystemLayout& output_layout,
                                            std::uint64_t seed) {
  return UnitaryInteraction(input_layout, output_layout,
                            haar_unitary_matrix(input_layout.total_dim(),
                                                seed));
}

UnitaryInteraction UnitaryInteraction::adjoint() const {
  return UnitaryInteraction(output_, input_, mat_.adjoint());
}

std::pair<Matrix, SystemLayout> embed_unitary(const SystemLayout& layout,
                                              const UnitaryInteraction& u) {
  // Move the target factors to the front (in u's input order), apply
  // u (x) identity, then restore the original factor order with the target
  // dims replaced by u's output dims.
  std::vector<std::string> targets = u.input_layout().labels();
  for (const auto& t : targets) {
    if (layout.dim_of(t) != u.input_layout().dim_of(t)) {
      throw std::invalid_argument(
          fmt::format("apply_unitary: factor '{}' has dim {} but unitary "
                      "expects {}",
                      t, layout.dim_of(t), u.input_layout().dim_of(t)));
    }
  }
  std::vector<std::string> front_order = targets;
  for (const auto& f : layout.factors()) {
    if (std::find(targets.begin(), targets.end(), f.label) == targets.end()) {
      front_order.push_back(f.label);
    }
  }
  SystemLayout rest = layout.complement(targets);
  std::vector<std::int64_t> in_map = basis_permutation(layout, front_order);

  SystemLayout front_out = u.output_layout().concat(rest);
  std::vector<std::string> canonical;  // original order, new dims
  for (const auto& f : layout.factors()) canonical.push_back(f.label);
  SystemLayout out_layout = front_out.reordered(canonical);
  std::vector<std::int64_t> out_map = basis_permutation(front_out, canonical);

  const std::int64_t du = u.matrix().rows();
  const std::int64_t dr = rest.total_dim();
  const std::int64_t n = layout.total_dim();
  Matrix full = Matrix::Zero(n, n);
  // full[out_map[o*dr + r], in_map^{-1}... ] -- fill column by column.
  for (std::int64_t c = 0; c < n; ++c) {
    std::int64_t fc = in_map[c];           // column in front basis
    std::int64_t ci = fc / dr, cr = fc % dr;
    for (std::int64_t oi = 0; oi < du; ++oi) {
      Complex val = u.matrix()(oi, ci);
      if (val == Complex(0, 0)) continue;
      full(out_map[oi * dr + cr], c) = val;
    }
  }
  return {std::move(full), std::move(out_layout)};
}

DensityMatrix apply_unitary(const DensityMatrix& rho,
                            const UnitaryInteraction& u) {
  auto [full, out_layout] = embed_unitary(rho.layout(), u);
  Matrix m = full * rho.matrix() * full.adjoint();
  return DensityMatrix(std::move(out_layout), std::move(m));
}

PureState apply_unitary(const PureState& psi, const UnitaryInteraction& u) {
  auto [full, out_layout] = embed_unitary(psi.layout(), u);
  Vector v = full * psi.vector();
  return PureState(std::move(out_layout), std::move(v));
}

}  // namespace revivals
