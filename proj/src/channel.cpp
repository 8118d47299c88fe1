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

#include "revivals/channel.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "revivals/errors.hpp"
#include "revivals/random.hpp"

namespace revivals {

namespace {
constexpr double kTpTol = 1e-9;
}

QuantumChannel::QuantumChannel(SystemLayout input_layout,
                               SystemLayout output_layout,
                               std::vector<Matrix> kraus_ops)
    : input_(std::move(input_layout)),
      output_(std::move(output_layout)),
      kraus_(std::move(kraus_ops)) {
  if (kraus_.empty()) {
    throw std::invalid_argument("channel: empty Kraus list");
  }
  const int din = input_.total_dim();
  const int dout = output_.total_dim();
  Matrix sum = Matrix::Zero(din, din);
  for (const auto& k : kraus_) {
    if (k.rows() != dout || k.cols() != din) {
      throw std::invalid_argument(
          fmt::format("channel: Kraus op shape {}x{}, expected {}x{}",
                      k.rows(), k.cols(), dout, din));
    }
    sum += k.adjoint() * k;
  }
  RealVector lam =
      hermitian_eigenvalues(sum - Matrix::Identity(din, din));
  double dev = std::max(std::abs(lam.minCoeff()), std::abs(lam.maxCoeff()));
  if (dev > kTpTol) {
    throw invariant_violation(fmt::format(
        "channel: sum K^dag K deviates from identity by {:.3e}", dev));
  }
}

QuantumChannel QuantumChannel::identity(const SystemLayout& layout) {
  int d = layout.total_dim();
  return QuantumChannel(layout, layout, {Matrix::Identity(d, d)});
}

QuantumChannel QuantumChannel::from_unitary(const UnitaryInteraction& u) {
  return QuantumChannel(u.input_layout(), u.output_layout(), {u.matrix()});
}

QuantumChannel QuantumChannel::from_choi(const SystemLayout& input_layout,
                                         const SystemLayout& output_layout,
                                         const Matrix& choi, double cutoff) {
  const int din = input_layout.total_dim();
  const int dout = output_layout.total_dim();
  if (choi.rows() != static_cast<std::int64_t>(din) * dout) {
    throw std::invalid_argument("from_choi: Choi matrix shape mismatch");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (choi + choi.adjoint()));
  std::vector<Matrix> kraus;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    double lam = es.eigenvalues()[k];
    if (lam < cutoff) continue;
    Matrix op(dout, din);
    double s = std::sqrt(lam);
    for (int i = 0; i < din; ++i) {
      for (int o = 0; o < dout; ++o) {
        op(o, i) = s * es.eigenvectors()(static_cast<std::int64_t>(i) * dout + o, k);
      }
    }
    kraus.push_back(std::move(op));
  }
  return QuantumChannel(input_layout, output_layout, std::move(kraus));
}

Matrix QuantumChannel::apply_matrix(const Matrix& x) const {
  Matrix out = Matrix::Zero(output_.total_dim(), output_.total_dim());
  for (const auto& k : kraus_) {
    out += k * x * k.adjoint();
  }
  return out;
}

Matrix QuantumChannel::choi() const {
  const int din = input_.total_dim();
  const int dout = output_.total_dim();
  Matrix j = Matrix::Zero(static_cast<std::int64_t>(din) * dout,
                          static_cast<std::int64_t>(din) * dout);
  for (const auto& k : kraus_) {
    // vec(K) with the input index as the most significant digit.
    Vector v(static_cast<std::int64_t>(din) * dout);
    for (int i = 0; i < din; ++i) {
      for (int o = 0; o < dout; ++o) {
        v[static_cast<std::int64_t>(i) * dout + o] = k(o, i);
      }
    }
    j += v * v.adjoint();
  }
  return j;
}

QuantumChannel QuantumChannel::then(const QuantumChannel& other) const {
  if (output_.total_dim() != other.input_.total_dim()) {
    throw std::invalid_argument("channel composition: dimension mismatch");
  }
  // Compose via Choi to keep the Kraus count minimal.
  std::vector<Matrix> composed;
  composed.reserve(kraus_.size() * other.kraus_.size());
  for (const auto& k2 : other.kraus_) {
    for (const auto& k1 : kraus_) {
      composed.push_back(k2 * k1);
    }
  }
  QuantumChannel direct(input_, other.output_, std::move(composed));
  if (direct.kraus_ops().size() >
      static_cast<size_t>(input_.total_dim()) * other.output_.total_dim()) {
    return from_choi(input_, other.output_, direct.choi());
  }
  return direct;
}

DensityMatrix apply_channel(const DensityMatrix& rho,
                            const QuantumChannel& chan) {
  const SystemLayout& layout = rho.layout();
  std::vector<std::string> targets = chan.input_layout().labels();
  for (const auto& t : targets) {
    if (layout.dim_of(t) != chan.input_layout().dim_of(t)) {
      throw std::invalid_argument(
          fmt::format("apply_channel: factor '{}' dim mismatch", t));
    }
  }
  std::vector<std::string> front_order = targets;
  for (const auto& f : layout.factors()) {
    if (std::find(targets.begin(), targets.end(), f.label) == targets.end()) {
      front_order.push_back(f.label);
    }
  }
  DensityMatrix permuted = permute_factors(rho, front_order);
  SystemLayout rest = layout.complement(targets);
  const std::int64_t dr = rest.total_dim();
  const std::int64_t dout = chan.output_layout().total_dim();
  Matrix out = Matrix::Zero(dout * dr, dout * dr);
  Matrix id_rest = Matrix::Identity(dr, dr);
  for (const auto& k : chan.kraus_ops()) {
    Matrix kk = kron(k, id_rest);
    out += kk * permuted.matrix() * kk.adjoint();
  }
  SystemLayout out_layout = chan.output_layout().concat(rest);
  return DensityMatrix(std::move(out_layout), std::move(out));
}

QuantumChannel random_channel(const SystemLayout& input_layout,
                              const SystemLayout& output_layout, int env_dim,
                              std::uint64_t seed) {
  const int din = input_layout.total_dim();
  const int dout = output_layout.total_dim();
  if (env_dim < 1 || static_cast<std::int64_t>(dout) * env_dim < din) {
    throw std::invalid_argument(
        "random_channel: need env_dim >= 1 and dout*env_dim >= din");
  }
  // Haar isometry din -> dout*env: first din columns of a Haar unitary.
  Matrix w = haar_unitary_matrix(dout * env_dim, seed);
  std::vector<Matrix> kraus(env_dim, Matrix(dout, din));
  for (int e = 0; e < env_dim; ++e) {
    for (int o = 0; o < dout; ++o) {
      for (int i = 0; i < din; ++i) {
        // Output index (o, e) with env least significant.
        kraus[e](o, i) = w(static_cast<std::int64_t>(o) * env_dim + e, i);
      }
    }
  }
  return QuantumChannel(input_layout, output_layout, std::move(kraus));
}

}  // namespace revivals
