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

// Brute-force oracles for the test suites. Everything in here works on raw
// index arithmetic, independent of the library's layout/stride machinery, so
// the two paths can check each other.

#pragma once

#include <complex>
#include <vector>

#include "revivals/linalg.hpp"
#include "revivals/states.hpp"

namespace revivals::testing {

// Kronecker product by explicit double loop over index pairs.
inline Matrix kron_oracle(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Partial trace over one factor of a three-factor system, by explicit
// summation over the traced basis indices. `which` is 0, 1 or 2.
inline Matrix trace_out_oracle(const Matrix& m, int d0, int d1, int d2,
                               int which) {
  auto idx = [&](int a, int b, int c) { return (a * d1 + b) * d2 + c; };
  int dims[3] = {d0, d1, d2};
  int dk1 = dims[(which + 1) % 3], dk2 = dims[(which + 2) % 3];
  // Kept factors stay in their original order.
  int ka = (which == 0) ? 1 : 0;
  int kb = (which == 2) ? 1 : 2;
  int da = dims[ka], db = dims[kb];
  (void)dk1;
  (void)dk2;
  Matrix out = Matrix::Zero(da * db, da * db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int ap = 0; ap < da; ++ap)
        for (int bp = 0; bp < db; ++bp)
          for (int t = 0; t < dims[which]; ++t) {
            int digits[3], digits_p[3];
            digits[ka] = a;
            digits[kb] = b;
            digits[which] = t;
            digits_p[ka] = ap;
            digits_p[kb] = bp;
            digits_p[which] = t;
            out(a * db + b, ap * db + bp) +=
                m(idx(digits[0], digits[1], digits[2]),
                  idx(digits_p[0], digits_p[1], digits_p[2]));
          }
  return out;
}

// Shannon entropy in bits of a raw eigenvalue list.
inline double entropy_oracle_bits(const RealVector& lam) {
  double h = 0;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] > 1e-14) h -= lam[i] * std::log2(lam[i]);
  }
  return h;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// 2x2 Pauli matrices.
inline Matrix pauli(int i) {
  Matrix m(2, 2);
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace revivals::testing
