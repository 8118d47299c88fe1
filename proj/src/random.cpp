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

#include "revivals/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace revivals {

double Prng::uniform() {
  // 53 random bits into [0, 1).
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Prng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Prng::complex_gaussian() {
  return Complex(gaussian(), gaussian()) / std::sqrt(2.0);
}

Prng Prng::substream(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of (seed, index); decorrelates consecutive seeds.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return Prng(z);
}

Matrix haar_unitary_matrix(int dim, Prng& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity so Q is Haar, not just uniform-column.
  Vector phases(dim);
  for (int i = 0; i < dim; ++i) {
    Complex rii = r(i, i);
    phases[i] = (std::abs(rii) > 0) ? rii / std::abs(rii) : Complex(1, 0);
  }
  return q * phases.asDiagonal();
}

Matrix haar_unitary_matrix(int dim, std::uint64_t seed) {
  Prng rng(seed);
  return haar_unitary_matrix(dim, rng);
}

DensityMatrix random_density(const SystemLayout& layout, int rank,
                             std::uint64_t seed) {
  const int dim = layout.total_dim();
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument(
        fmt::format("random_density: rank {} out of range [1, {}]", rank,
                    dim));
  }
  Prng rng(seed);
  Matrix g(dim, rank);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < rank; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(layout, std::move(rho));
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  return random_density(SystemLayout::single("A", dim), rank, seed);
}

PureState random_pure(const SystemLayout& layout, std::uint64_t seed) {
  Prng rng(seed);
  Vector v(layout.total_dim());
  for (int i = 0; i < v.size(); ++i) v[i] = rng.complex_gaussian();
  v /= v.norm();
  return PureState(layout, std::move(v));
}

}  // namespace revivals
