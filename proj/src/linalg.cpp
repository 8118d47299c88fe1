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

#include "revivals/linalg.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace revivals {

double anti_hermitian_norm(const Matrix& m) {
  Matrix anti = 0.5 * (m - m.adjoint());
  // anti is skew-Hermitian, so i*anti is Hermitian with the same singular
  // values; its spectral norm is the largest |eigenvalue|.
  Matrix herm = Complex(0, 1) * anti;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (herm + herm.adjoint()),
                                           Eigen::EigenvaluesOnly);
  if (es.eigenvalues().size() == 0) return 0.0;
  return std::max(std::abs(es.eigenvalues().minCoeff()),
                  std::abs(es.eigenvalues().maxCoeff()));
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix sqrtm_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  RealVector lam = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * lam.asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix pinv_sqrt_psd(const Matrix& m, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  RealVector lam = es.eigenvalues();
  RealVector inv = RealVector::Zero(lam.size());
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] > cutoff) inv[i] = 1.0 / std::sqrt(lam[i]);
  }
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix support_projector(const Matrix& m, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  RealVector lam = es.eigenvalues();
  RealVector mask = RealVector::Zero(lam.size());
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] > cutoff) mask[i] = 1.0;
  }
  return es.eigenvectors() * mask.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix expm_skew(const Matrix& skew) {
  // S = iH with H Hermitian, so exp(S) = Q exp(i diag) Q^dag.
  Matrix herm = Complex(0, -1) * skew;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (herm + herm.adjoint()));
  Vector phases(es.eigenvalues().size());
  for (int i = 0; i < phases.size(); ++i) {
    phases[i] = std::exp(Complex(0, es.eigenvalues()[i]));
  }
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

Matrix logm_unitary(const Matrix& u) {
  // Schur form of a unitary is diagonal up to roundoff, and the Schur basis
  // is orthonormal even inside degenerate eigenvalue clusters.
  Eigen::ComplexSchur<Matrix> schur(u);
  if (schur.info() != Eigen::Success) {
    throw std::runtime_error("logm_unitary: Schur decomposition failed");
  }
  const Matrix& t = schur.matrixT();
  const Matrix& z = schur.matrixU();
  Vector diag_logs(t.rows());
  for (int i = 0; i < t.rows(); ++i) {
    diag_logs[i] = Complex(0, std::arg(t(i, i)));
  }
  return z * diag_logs.asDiagonal() * z.adjoint();
}

int skew_param_count(int m) { return m * m; }

Matrix skew_from_params(const RealVector& params, int m) {
  if (params.size() != skew_param_count(m)) {
    throw std::invalid_argument("skew_from_params: wrong parameter count");
  }
  Matrix s = Matrix::Zero(m, m);
  int idx = 0;
  for (int i = 0; i < m; ++i) {
    s(i, i) = Complex(0, params[idx++]);
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      double re = params[idx++];
      double im = params[idx++];
      s(i, j) = Complex(re, im);
      s(j, i) = Complex(-re, im);
    }
  }
  return s;
}

RealVector params_from_skew(const Matrix& skew) {
  const int m = static_cast<int>(skew.rows());
  RealVector params(skew_param_count(m));
  int idx = 0;
  for (int i = 0; i < m; ++i) {
    params[idx++] = skew(i, i).imag();
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      params[idx++] = skew(i, j).real();
      params[idx++] = skew(i, j).imag();
    }
  }
  return params;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

}  // namespace revivals
