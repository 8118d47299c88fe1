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

#include <complex>

#include <Eigen/Dense>

namespace revivals {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Operator (spectral) norm of the anti-Hermitian part of M.
double anti_hermitian_norm(const Matrix& m);

// Eigenvalues of a Hermitian matrix, ascending. Input is symmetrized first
// so that accumulated roundoff in the strictly-upper part cannot leak in.
RealVector hermitian_eigenvalues(const Matrix& m);

// Principal square root of a PSD Hermitian matrix; eigenvalues below zero
// are clamped to zero before the root is taken.
Matrix sqrtm_psd(const Matrix& m);

// Pseudo-inverse square root on the numerical support: eigenvalues below
// `cutoff` are treated as exact zeros.
Matrix pinv_sqrt_psd(const Matrix& m, double cutoff);

// Projector onto the numerical support (eigenvalues > cutoff).
Matrix support_projector(const Matrix& m, double cutoff);

// exp(S) for skew-Hermitian S, always exactly unitary up to roundoff.
Matrix expm_skew(const Matrix& skew);

// Principal matrix logarithm of a unitary, returned as a skew-Hermitian
// matrix S with expm_skew(S) == u.
Matrix logm_unitary(const Matrix& u);

// Skew-Hermitian m x m matrix assembled from m^2 real parameters:
// the first m entries fill i*diag, the rest fill the off-diagonal
// (re, im) pairs row by row.
Matrix skew_from_params(const RealVector& params, int m);
// Inverse of skew_from_params.
RealVector params_from_skew(const Matrix& skew);
int skew_param_count(int m);

// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

}  // namespace revivals
