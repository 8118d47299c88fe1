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

#include "revivals/states.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "revivals/errors.hpp"

namespace revivals {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kEigFloor = -1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kNormTol = 1e-12;
constexpr double kPurifyCutoff = 1e-12;

// Flat-index offsets of every sub-basis combination for the factors at
// `positions`, holding all other factors at digit 0.
std::vector<std::int64_t> subindex_offsets(const SystemLayout& layout,
                                           const std::vector<int>& positions) {
  std::vector<std::int64_t> strides = layout.strides();
  std::int64_t count = 1;
  for (int p : positions) count *= layout.factors()[p].dim;
  std::vector<std::int64_t> offsets(count, 0);
  std::int64_t repeat = count;
  // Positions earlier in the list are the more significant digits.
  for (int p : positions) {
    int d = layout.factors()[p].dim;
    repeat /= d;
    for (std::int64_t i = 0; i < count; ++i) {
      int digit = static_cast<int>((i / repeat) % d);
      offsets[i] += digit * strides[p];
    }
  }
  return offsets;
}

}  // namespace

DensityMatrix::DensityMatrix(SystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), mat_(std::move(matrix)) {
  const int d = layout_.total_dim();
  if (mat_.rows() != d || mat_.cols() != d) {
    throw std::invalid_argument(
        fmt::format("density matrix: shape {}x{} does not match layout dim {}",
                    mat_.rows(), mat_.cols(), d));
  }
  double herm = anti_hermitian_norm(mat_);
  if (herm > kHermTol) {
    throw invariant_violation(
        fmt::format("density matrix: anti-Hermitian norm {:.3e}", herm));
  }
  double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw invariant_violation(
        fmt::format("density matrix: trace {:.12f} != 1", tr));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mat_ + mat_.adjoint()));
  double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < kEigFloor) {
    throw invariant_violation(
        fmt::format("density matrix: eigenvalue {:.3e} below hard floor",
                    min_eig));
  }
  if (min_eig < 0.0) {
    // Clamp roundoff negatives and renormalize.
    RealVector lam = es.eigenvalues().cwiseMax(0.0);
    lam /= lam.sum();
    mat_ = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
  }
}

DensityMatrix DensityMatrix::maximally_mixed(const SystemLayout& layout) {
  int d = layout.total_dim();
  return DensityMatrix(layout, Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::from_spectrum(const SystemLayout& layout,
                                           const RealVector& spectrum) {
  if (spectrum.size() != layout.total_dim()) {
    throw std::invalid_argument("from_spectrum: spectrum length != dim");
  }
  Matrix m = Matrix::Zero(spectrum.size(), spectrum.size());
  for (int i = 0; i < spectrum.size(); ++i) m(i, i) = spectrum[i];
  return DensityMatrix(layout, std::move(m));
}

int DensityMatrix::rank(double cutoff) const {
  RealVector lam = hermitian_eigenvalues(mat_);
  int r = 0;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] > cutoff) ++r;
  }
  return r;
}

PureState::PureState(SystemLayout layout, Vector vector)
    : layout_(std::move(layout)), vec_(std::move(vector)) {
  if (vec_.size() != layout_.total_dim()) {
    throw std::invalid_argument(
        fmt::format("pure state: length {} does not match layout dim {}",
                    vec_.size(), layout_.total_dim()));
  }
  double norm = vec_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    throw invariant_violation(
        fmt::format("pure state: norm {:.15f} != 1", norm));
  }
  vec_ /= norm;
}

PureState PureState::max_entangled(const std::string& label_a,
                                   const std::string& label_b, int dim) {
  SystemLayout layout({{label_a, dim}, {label_b, dim}});
  Vector v = Vector::Zero(dim * dim);
  double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int i = 0; i < dim; ++i) v[i * dim + i] = amp;
  return PureState(std::move(layout), std::move(v));
}

PureState PureState::basis_state(const SystemLayout& layout,
                                 std::int64_t index) {
  Vector v = Vector::Zero(layout.total_dim());
  v[index] = 1.0;
  return PureState(layout, std::move(v));
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix(layout_, vec_ * vec_.adjoint());
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.layout().concat(b.layout()),
                       kron(a.matrix(), b.matrix()));
}

PureState tensor(const PureState& a, const PureState& b) {
  return PureState(a.layout().concat(b.layout()),
                   kron(a.vector(), b.vector()));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  const SystemLayout& layout = rho.layout();
  positions_of(layout, keep);  // validates
  SystemLayout kept_layout = layout.subset(keep);
  if (kept_layout.num_factors() == layout.num_factors()) {
    return rho;
  }
  std::vector<int> kept_pos, traced_pos;
  for (int i = 0; i < layout.num_factors(); ++i) {
    const std::string& lbl = layout.factors()[i].label;
    if (std::find(keep.begin(), keep.end(), lbl) != keep.end()) {
      kept_pos.push_back(i);
    } else {
      traced_pos.push_back(i);
    }
  }
  std::vector<std::int64_t> kept_off = subindex_offsets(layout, kept_pos);
  std::vector<std::int64_t> traced_off = subindex_offsets(layout, traced_pos);
  const std::int64_t dk = static_cast<std::int64_t>(kept_off.size());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (std::int64_t r = 0; r < dk; ++r) {
    for (std::int64_t c = 0; c < dk; ++c) {
      Complex sum = 0;
      for (std::int64_t t : traced_off) {
        sum += m(kept_off[r] + t, kept_off[c] + t);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(kept_layout), std::move(out));
}

namespace {

// new_flat[i] = flat index of basis vector i after reordering factors.
std::vector<std::int64_t> permutation_map(
    const SystemLayout& layout, const std::vector<std::string>& new_order) {
  SystemLayout new_layout = layout.reordered(new_order);
  std::vector<int> source_pos;  // new factor k comes from old factor
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

DensityMatrix permute_factors(const DensityMatrix& rho,
                              const std::vector<std::string>& new_order) {
  SystemLayout new_layout = rho.layout().reordered(new_order);
  std::vector<std::int64_t> map = permutation_map(rho.layout(), new_order);
  const Matrix& m = rho.matrix();
  Matrix out(m.rows(), m.cols());
  for (std::int64_t i = 0; i < m.rows(); ++i) {
    for (std::int64_t j = 0; j < m.cols(); ++j) {
      out(map[i], map[j]) = m(i, j);
    }
  }
  return DensityMatrix(std::move(new_layout), std::move(out));
}

PureState permute_factors(const PureState& psi,
                          const std::vector<std::string>& new_order) {
  SystemLayout new_layout = psi.layout().reordered(new_order);
  std::vector<std::int64_t> map = permutation_map(psi.layout(), new_order);
  Vector out(psi.vector().size());
  for (std::int64_t i = 0; i < out.size(); ++i) {
    out[map[i]] = psi.vector()[i];
  }
  return PureState(std::move(new_layout), std::move(out));
}

PureState purify(const DensityMatrix& rho, const std::string& env_label) {
  if (rho.layout().contains(env_label)) {
    throw std::invalid_argument(
        fmt::format("purify: label '{}' already used", env_label));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      0.5 * (rho.matrix() + rho.matrix().adjoint()));
  std::vector<int> kept;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()[i] > kPurifyCutoff) kept.push_back(i);
  }
  const int r = static_cast<int>(kept.size());
  const int d = rho.dim();
  Vector v = Vector::Zero(static_cast<std::int64_t>(d) * r);
  for (int k = 0; k < r; ++k) {
    double amp = std::sqrt(es.eigenvalues()[kept[k]]);
    for (int i = 0; i < d; ++i) {
      v[static_cast<std::int64_t>(i) * r + k] =
          amp * es.eigenvectors()(i, kept[k]);
    }
  }
  v /= v.norm();  // dropped tail mass, if any, is below 1e-12 per eigenvalue
  return PureState(rho.layout().append(env_label, r), std::move(v));
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.layout() != b.layout()) {
    throw std::invalid_argument("fidelity: layouts differ");
  }
  // (Tr sqrt(sqrt(a) b sqrt(a)))^2 == (trace norm of sqrt(a) sqrt(b))^2;
  // the singular-value form is stable for rank-deficient inputs.
  Matrix prod = sqrtm_psd(a.matrix()) * sqrtm_psd(b.matrix());
  Eigen::JacobiSVD<Matrix> svd(prod);
  double root_sum = svd.singularValues().sum();
  double f = root_sum * root_sum;
  return std::min(f, 1.0 + 1e-12);
}

}  // namespace revivals
